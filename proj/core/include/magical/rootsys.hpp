#ifndef MAGICAL_ROOTSYS_HPP
#define MAGICAL_ROOTSYS_HPP

// Root-system combinatorics for the simple complex Lie algebras.
//
// Roots are stored as integer coordinate tuples in the simple-root basis;
// lengths and inner products are derived from the Cartan matrix together
// with a fixed symmetrizer (short roots are normalized to squared length 2).
// Positive roots are generated by breadth-first closure from the simple
// roots using root-string data, and are kept in a deterministic order:
// by height, then lexicographically on coordinates.  Downstream code
// (structure-constant signs, rendering) relies on this order.
//
// Simple-root numbering conventions (one place, used by every table):
//   A_n, B_n, C_n, D_n : standard chain; B_n ends short, C_n ends long,
//                        D_n forks at the last two nodes.
//   E6/E7/E8           : in-line nodes left to right are a1,a2,a3,a5,...;
//                        the branch node attached to a3 is a4.
//   F4                 : a1,a2 short; a3,a4 long.
//   G2                 : a1 short; a2 long.

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace magical {

/// Simple-type family tag.
enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

/// A simple Lie algebra type: family plus rank.
struct AlgebraType {
  Family family;
  int rank;

  /// Validating constructor helper; throws std::invalid_argument on a rank
  /// that is not admissible for the family (A: >=1, B/C: >=2, D: >=3,
  /// exceptional ranks fixed).
  static AlgebraType make(Family family, int rank);

  /// Number of positive roots (A_n: n(n+1)/2, B_n/C_n: n^2, D_n: n(n-1),
  /// G2: 6, F4: 24, E6: 36, E7: 63, E8: 120).
  int num_positive_roots() const;

  /// Complex dimension: rank + 2 * num_positive_roots().
  int dimension() const;

  /// Display name, e.g. "A3", "F4".
  std::string name() const;

  auto operator<=>(const AlgebraType&) const = default;
};

/// Coordinates of a root in the simple-root basis (all >= 0 for positive
/// roots).
using RootCoords = std::vector<int>;

/// A simple root system: Cartan matrix, symmetrizer, and the closed list of
/// positive roots in (height, lex) order with the simple roots first.
struct RootSystem {
  AlgebraType type;
  /// cartan[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i,alpha_j)/(alpha_j,alpha_j).
  std::vector<std::vector<int>> cartan;
  /// norm2[i] = (alpha_i, alpha_i); short roots have norm2 = 2.
  std::vector<int> norm2;
  /// Positive roots, ordered by (height, lexicographic on coordinates).
  std::vector<RootCoords> positive_roots;

  int rank() const { return type.rank; }

  /// Height of a root: sum of its coordinates.
  static int height(const RootCoords& a);

  /// Index of a positive root in positive_roots, or -1.
  int index_of(const RootCoords& a) const;

  /// True iff a or -a is a positive root.
  bool is_root(const RootCoords& a) const;

  /// Inner product (a, b) from the symmetrized Cartan matrix (always an
  /// integer with the chosen normalization).
  int inner(const RootCoords& a, const RootCoords& b) const;

  /// Squared length (a, a).
  int norm2_of(const RootCoords& a) const { return inner(a, a); }

  /// Pairing <a, alpha_i^vee> = 2(a,alpha_i)/(alpha_i,alpha_i).
  int pair_with_coroot(const RootCoords& a, int i) const;

  /// The highest root (last element in the deterministic order).
  const RootCoords& highest_root() const { return positive_roots.back(); }

 private:
  std::map<RootCoords, int> m_index;  // filled by build_root_system
  friend RootSystem build_root_system(AlgebraType);
};

/// A weighted Dynkin diagram: one label per simple root, each in {0,1,2},
/// in the fixed node order above.
struct DynkinLabels {
  std::vector<int> labels;

  bool operator==(const DynkinLabels&) const = default;
};

/// Dimensions of the ad_h weight spaces g_j of a diagram's grading.
struct GradedDims {
  /// j -> dim g_j, for every j with dim g_j > 0 (negative j included).
  std::map<int, int> dims;
  /// dim g.
  int total = 0;

  int dim(int j) const {
    auto it = dims.find(j);
    return it == dims.end() ? 0 : it->second;
  }
};

/// Multiplicities of the irreducible summands of an even sl2-grading:
/// pairs (m_j, n_{2m_j}) with m_j > 0 strictly increasing, plus n_0.
struct Sl2Data {
  /// (m_j, n_{2m_j}): n_{2m_j} summands of highest weight 2 m_j, m_j > 0.
  std::vector<std::pair<int, int>> summands;
  /// Multiplicity of the trivial summand.
  int n0 = 0;

  /// Multiplicity n_{2m} for a given m >= 0.
  int multiplicity(int m) const;

  /// The set {m_j : n_{2m_j} > 0, m_j > 0}.
  std::vector<int> m_values() const;

  bool operator==(const Sl2Data&) const = default;
};

/// Weighted root poset: positive roots annotated with their ad_h weight,
/// with an edge beta -> beta + alpha_i for every pair of positive roots
/// differing by a simple root.
struct WeightedPoset {
  struct Node {
    RootCoords root;
    int height = 0;
    int weight = 0;
  };
  struct Edge {
    int from = 0;   // node index
    int to = 0;     // node index
    int simple = 0; // 0-based simple-root index labeling the edge
  };
  std::vector<Node> nodes;  // in the root system's deterministic order
  std::vector<Edge> edges;  // sorted by (from, simple)
};

/// Builds the root system of a simple type.  The positive roots are closed
/// under the root-addition poset and satisfy the classical count.
RootSystem build_root_system(AlgebraType type);

/// Grading dimensions dim g_j for the diagram's semisimple element h:
/// each root alpha contributes to j = sum a_i * labels_i, and g_0 gains
/// the Cartan subalgebra (rank).
GradedDims graded_dimensions(const RootSystem& rs, const DynkinLabels& labels);

/// Multiplicities n_j = dim g_j - dim g_{j+2} (j >= 0) of an even grading.
/// Throws std::domain_error if some n_j is negative ("inconsistent
/// grading": the labels do not come from an sl2-triple) or if odd weights
/// occur (the pair representation requires an even grading).
Sl2Data sl2_multiplicities(const GradedDims& gd);

/// Exponents of the simple type, computed as the dual partition of the
/// height distribution of the positive roots.  Weakly increasing (D_n with
/// n even repeats n-1), length = rank, sum(2 m_i + 1) = dim g.
std::vector<int> exponents(const RootSystem& rs);

/// The weighted root poset of a diagram (see WeightedPoset).
WeightedPoset root_poset(const RootSystem& rs, const DynkinLabels& labels);

}  // namespace magical

#endif  // MAGICAL_ROOTSYS_HPP
