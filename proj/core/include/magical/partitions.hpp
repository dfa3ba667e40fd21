#ifndef MAGICAL_PARTITIONS_HPP
#define MAGICAL_PARTITIONS_HPP

// Partition and signed-Young-diagram combinatorics for nilpotent orbits.
//
// Partitions are stored as multiplicity maps (length -> number of rows of
// that length), since every formula used downstream (dual partitions,
// centralizer dimensions, validity constraints) is naturally expressed in
// multiplicities.  Signed Young diagrams additionally record, per row
// length i, how many rows lead with '+' (p_i) and how many with '-' (q_i);
// signs alternate along a row, so the leading sign determines the row.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "magical/rootsys.hpp"

namespace magical {

/// A partition n = sum r_i * i, stored as multiplicities i -> r_i.
class Partition {
 public:
  Partition() = default;

  /// From row lengths, e.g. {5,1,1,1,1}; order irrelevant.  Throws
  /// std::invalid_argument on nonpositive lengths or an empty list.
  static Partition from_rows(const std::vector<int>& row_lengths);

  /// From a multiplicity map i -> r_i (zero entries allowed and dropped).
  static Partition from_multiplicities(const std::map<int, int>& mult);

  /// n = sum r_i * i.
  int total() const;

  /// r_i (0 if absent).
  int multiplicity(int i) const;

  /// Number of rows, sum r_i.
  int row_count() const;

  /// Nonzero multiplicities, keyed by row length.
  const std::map<int, int>& multiplicities() const { return m_mult; }

  /// Row lengths, weakly decreasing.
  std::vector<int> rows() const;

  /// Dual partition: s_j = sum_{i >= j} r_i, re-encoded as multiplicities.
  Partition dual() const;

  /// Multiplicities doubled (every row duplicated): r_i -> 2 r_i.
  Partition doubled() const;

  /// True iff r_i = 0 for all odd i (every row length even).
  bool all_row_lengths_even() const;

  /// Sum of r_i over odd i.
  int odd_length_row_count() const;

  /// Display form, e.g. "[5,1,1,1,1]".
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::map<int, int> m_mult;
};

/// Dual partition as a free function (same as p.dual()).
Partition dual_partition(const Partition& p);

/// All partitions of n, in deterministic order.
std::vector<Partition> all_partitions(int n);

/// Leading sign of a row of a signed Young diagram.
enum class Sign { plus, minus };

Sign opposite(Sign s);
char sign_char(Sign s);  // '+' or '-'

/// A signed Young diagram: rows with alternating signs, recorded per row
/// length i as the counts p_i (rows leading '+') and q_i (leading '-').
class SignedYoungDiagram {
 public:
  SignedYoungDiagram() = default;

  /// From (length, leading sign) pairs; order irrelevant.
  static SignedYoungDiagram from_rows(
      const std::vector<std::pair<int, Sign>>& rows);

  /// From counts i -> (p_i, q_i); zero pairs dropped.
  static SignedYoungDiagram from_counts(
      const std::map<int, std::pair<int, int>>& counts);

  /// Total number of boxes.
  int total_boxes() const;

  /// Signature (p, q): total '+' boxes and '-' boxes.
  std::pair<int, int> signature() const;

  /// p_i (leading == plus) or q_i (leading == minus).
  int rows_with(int length, Sign leading) const;

  /// r_i = p_i + q_i.
  int multiplicity(int length) const;

  /// Counts i -> (p_i, q_i), nonzero rows only.
  const std::map<int, std::pair<int, int>>& row_counts() const {
    return m_rows;
  }

  /// Rows as (length, leading sign), sorted by length descending with '+'
  /// rows before '-' rows.
  std::vector<std::pair<int, Sign>> rows() const;

  /// Underlying partition (signs forgotten).
  Partition unsigned_partition() const;

  /// Partition with every row duplicated (signs forgotten); the complex
  /// orbit datum for the quaternionic-indexed families.
  Partition doubled_partition() const;

  /// Diagram with every leading sign flipped (p_i and q_i swapped).
  SignedYoungDiagram flipped() const;

  /// True iff every row length is even.
  bool all_row_lengths_even() const;

  /// Display form, e.g. "[5+,1-,1-]".
  std::string to_string() const;

  auto operator<=>(const SignedYoungDiagram&) const = default;

 private:
  std::map<int, std::pair<int, int>> m_rows;
};

/// Real-form families whose nilpotent orbits this library classifies by
/// partitions / signed Young diagrams, plus the exceptional forms by label.
enum class RealFamily {
  sl_R,      // sl(n,R)
  su_star,   // su*(2m)
  su_pq,     // su(p,q)
  so_pq,     // so(p,q)
  so_star,   // so*(2m)
  sp_R,      // sp(2m,R)
  sp_pq,     // sp(2p,2q)
  exceptional
};

/// Identifier of a noncompact real form of a simple complex Lie algebra.
struct RealFormId {
  RealFamily family = RealFamily::sl_R;
  /// Family parameters: sl_R: (n,0); su_star: (m,0) for su*(2m);
  /// su_pq/so_pq: (p,q); so_star: (m,0) for so*(2m); sp_R: (m,0) for
  /// sp(2m,R); sp_pq: (p,q) for sp(2p,2q).  Unused for exceptional.
  int p = 0;
  int q = 0;
  /// Cartan label for exceptional forms, e.g. "e7^-5".
  std::string label;

  static RealFormId sl_real(int n);             // n >= 2
  static RealFormId su_quaternionic(int m);     // su*(2m), m >= 1
  static RealFormId su(int p, int q);           // p+q >= 2
  static RealFormId so(int p, int q);           // p+q in {5,7,...} or {6,8,...}
  static RealFormId so_quaternionic(int m);     // so*(2m), m >= 3
  static RealFormId sp_real(int m);             // sp(2m,R), m >= 2
  static RealFormId sp(int p, int q);           // sp(2p,2q), p+q >= 2
  /// One of: g2^2, f4^4, f4^-20, e6^6, e6^2, e6^-14, e6^-26, e7^7, e7^-5,
  /// e7^-25, e8^8, e8^-24.
  static RealFormId exceptional(const std::string& label);

  bool is_classical() const { return family != RealFamily::exceptional; }

  /// Type of the complexified algebra.
  AlgebraType complexification() const;

  /// dim m - dim h for the Cartan decomposition g^R = h + m; closed forms
  /// per family, and the Cartan-label superscript for exceptional forms.
  int delta() const;

  /// Real dimension of g^R (= complex dimension of the complexification).
  int real_dimension() const;

  /// Number of boxes in this form's (signed) Young diagrams: n for
  /// sl(n,R), m for su*(2m) and so*(2m), p+q for su/so/sp(2p,2q), 2m for
  /// sp(2m,R).
  int diagram_size() const;

  std::string name() const;

  auto operator<=>(const RealFormId&) const = default;
};

/// Simple or abelian building blocks of centralizer types.  Real kinds
/// carry real dimensions, complex kinds complex dimensions.
enum class FactorKind {
  gl_R,     // gl(a, R)
  u_star,   // u*(a), a even
  u_pq,     // u(a, b)
  sp_R,     // sp(a, R), a even
  so_pq,    // so(a, b)
  so_star,  // so*(a), a even
  sp_pq,    // sp(a, b) quaternionic, a and b even
  gl_C,     // gl(a, C)
  sl_C,     // sl(a, C)
  so_C,     // so(a, C)
  sp_C,     // sp(a, C), a even
  sl_R,     // sl(a, R)
  su_star,  // su*(a), a even
  sl_CR,    // sl(a, C) viewed as a real Lie algebra
  exc_C,    // complex exceptional; a = 2, 4, 6, 7, 8 for g2, f4, e6, e7, e8
  exc_real  // real exceptional form; a as in exc_C, b = Cartan index
};

struct ReductiveFactor {
  FactorKind kind;
  int a = 0;
  int b = 0;

  /// Real dimension for real kinds, complex dimension for complex kinds.
  int dimension() const;

  /// For real kinds: whether the factor is the Lie algebra of a compact
  /// group modulo its center, and how many noncompact (R, not u(1))
  /// central directions it carries.  The split-center count matters inside
  /// a determinant-one wrapper, which removes one central direction.
  bool semisimple_part_compact() const;
  int split_center_count() const;

  std::string name() const;

  auto operator<=>(const ReductiveFactor&) const = default;
};

/// A reductive Lie algebra presented as central torus + simple-or-small
/// factors, optionally inside a determinant-one ("s(...)") wrapper that
/// removes one central direction.
struct ReductiveType {
  int torus_rank = 0;
  std::vector<ReductiveFactor> factors;  // sorted canonically
  bool determinant_one = false;

  /// torus_rank + sum of factor dimensions - (determinant_one ? 1 : 0).
  int dimension() const;

  /// For all-real-kind types: compact iff every factor has compact
  /// semisimple part and the split central directions are all removed by
  /// the determinant-one condition.  (The torus_rank summand counts
  /// compact u(1) directions.)
  bool compact() const;

  /// Display form, e.g. "s(gl(1,R))", "sp(2,C) + t^1", "0".
  std::string name() const;

  /// Canonical construction: drops zero-dimensional factors, converts
  /// so(2,C) factors to torus directions, sorts.
  static ReductiveType make(std::vector<ReductiveFactor> factors,
                            bool determinant_one = false, int torus_rank = 0);

  auto operator<=>(const ReductiveType&) const = default;
};

/// Validity verdict for a (signed) partition as an orbit datum.
struct OrbitValidity {
  bool valid = false;
  /// True when the datum corresponds to two distinct orbits (the "very
  /// even" phenomenon: all row lengths even, for the families where the
  /// classification says so).
  bool very_even = false;
  std::string reason;  // set when invalid
};

/// Validity of a partition as a complex nilpotent orbit of the given
/// classical type.  A: any partition of rank+1.  B (so_{2n+1}): even
/// lengths have even multiplicity.  C (sp_{2n}): odd lengths have even
/// multiplicity.  D (so_{2n}): like B, with the two-orbit flag when every
/// row length is even.  A size mismatch yields an invalid verdict (with
/// reason); a non-classical type throws std::invalid_argument.
OrbitValidity validate_complex_orbit(AlgebraType type, const Partition& p);

/// Validity of a signed Young diagram as a nilpotent orbit of a classical
/// real form:
///   sl(n,R):  unsigned partitions of n (signs ignored; by convention the
///             canonical representative leads every row with '+'); two
///             orbits when every row length is even.
///   su*(2m):  unsigned partitions of m (likewise sign-free).
///   su(p,q):  signature (p,q); no further constraint.
///   so(p,q):  signature (p,q); even rows have even multiplicity and lead
///             with '+'; two orbits when every row length is even.
///   so*(2m):  m boxes, any signature; odd rows lead with '+'.
///   sp(2m,R): 2m boxes, any signature; odd rows have even multiplicity
///             and lead with '+'.
///   sp(2p,2q): signature (p,q); even rows lead with '+'.
/// Throws std::invalid_argument for exceptional forms.
OrbitValidity validate_real_orbit(const RealFormId& rf,
                                  const SignedYoungDiagram& d);

/// All valid signed Young diagrams for a classical real form, in
/// deterministic order.  (For the sign-free families, the all-'+'
/// canonical representatives.)
std::vector<SignedYoungDiagram> all_valid_diagrams(const RealFormId& rf);

/// Centralizer data of a complex nilpotent orbit: the dimension of
/// V(e) = ker(ad_e) and the centralizer c of an associated sl2-subalgebra.
struct ComplexCentralizer {
  int dim_v = 0;
  ReductiveType c;
};

/// dim V(e) and c for a valid complex orbit:
///   sl_n: dim V = sum s_j^2 - 1,              c = s(+ gl_{r_i} C);
///   so_N: dim V = (sum s_j^2 - #odd rows)/2,  c = +_{i even} sp_{r_i}C
///                                                 +_{i odd} so_{r_i}C;
///   sp_N: dim V = (sum s_j^2 + #odd rows)/2,  c = +_{i odd} sp_{r_i}C
///                                                 +_{i even} so_{r_i}C.
/// Throws std::invalid_argument if the orbit is invalid.
ComplexCentralizer complex_centralizer(AlgebraType type, const Partition& p);

/// Centralizer c^R of an sl2(R)-subalgebra associated to a real orbit:
///   sl(n,R):   s(+ gl_{r_i} R)
///   su*(2m):   s(+ u*(2 r_i))
///   su(p,q):   s(+ u(p_i, q_i))
///   so(p,q):   +_{i even} sp(r_i, R)      +_{i odd} so(p_i, q_i)
///   so*(2m):   +_{i even} sp(2p_i, 2q_i)  +_{i odd} so*(2 r_i)
///   sp(2m,R):  +_{i odd} sp(r_i, R)       +_{i even} so(p_i, q_i)
///   sp(2p,2q): +_{i odd} sp(2p_i, 2q_i)   +_{i even} so*(2 r_i)
/// Throws std::invalid_argument if the orbit is invalid.
ReductiveType real_triple_centralizer(const RealFormId& rf,
                                      const SignedYoungDiagram& d);

}  // namespace magical

#endif  // MAGICAL_PARTITIONS_HPP
