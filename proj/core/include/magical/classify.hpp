#ifndef MAGICAL_CLASSIFY_HPP
#define MAGICAL_CLASSIFY_HPP

// The classification engine for magical nilpotent orbits: the
// compactness-plus-dimension criterion, per-real-form enumeration,
// partition -> weighted-Dynkin-diagram conversion, and the closed-form
// catalog of labeled diagrams with their canonical real forms.

#include <string>
#include <vector>

#include "magical/partitions.hpp"
#include "magical/rootsys.hpp"

namespace magical {

/// Verdict of the magical criterion on one real nilpotent orbit.
struct CriterionReport {
  /// 2 dim_R c^R - dim_C V(e) + (dim m - dim h), always an integer (and in
  /// fact always even); parts of the literature display twice this value for
  /// the so/sp families.
  long long criterion_value = 0;
  /// Whether c^R is the Lie algebra of a compact group.
  bool compact_centralizer = false;
  /// criterion_value == 0 and compact_centralizer, excluding the zero orbit
  /// (e = 0 belongs to no sl2-triple; on a compact form the zero orbit would
  /// otherwise qualify vacuously).
  bool magical = false;

  bool operator==(const CriterionReport&) const = default;
};

/// Evaluate the criterion on a valid orbit of a classical real form.
/// Throws std::invalid_argument on an invalid orbit or an exceptional form
/// (exceptional forms are handled by the structure-constant oracle).
CriterionReport magical_criterion(const RealFormId& rf,
                                  const SignedYoungDiagram& d);

/// All magical orbits of a classical real form, in the deterministic order
/// of all_valid_diagrams.  Exhaustive criterion evaluation; no closed-form
/// shortcuts.  Throws std::length_error when the form's diagram size
/// exceeds `cap` (enumeration cost guard), std::invalid_argument on an
/// exceptional form.
std::vector<SignedYoungDiagram> enumerate_magical(const RealFormId& rf,
                                                  int cap = 18);

/// Weighted Dynkin diagram of a valid complex nilpotent orbit of a
/// classical type.  Each row of length k contributes eigenvalues
/// k-1, k-3, ..., 1-k; the sorted eigenvalue list is converted to node
/// labels through the simple-root conventions of this library (A: adjacent
/// differences; B/C/D: epsilon-coordinates, with 2*eps_n on the long C
/// node and eps_{n-1} -/+ eps_n on the D fork).  For the two-orbit ("very
/// even") D partitions this returns the class-I representative; the class-II
/// labels swap the two fork nodes.  Throws std::invalid_argument on an
/// invalid orbit or a non-classical type.
DynkinLabels weighted_dynkin_from_partition(AlgebraType type,
                                            const Partition& p);

/// The four closed-form families of magical complex orbits.
enum class MagicalCase { case1, case2, case3, case4 };

/// Identifier of one catalog family member: the case tag, the ambient
/// simple type, (for case 3 only) the signature parameter p, and (for the
/// case-2 D_{2m} rows only) a flag separating the fork-node family from
/// the first-node family of the same rank.
struct MagicalCaseId {
  MagicalCase which = MagicalCase::case1;
  AlgebraType type{Family::A, 1};
  int p = 0;
  bool fork = false;

  /// E.g. "Case 1 (A4)", "Case 3 (B4, p=3)", "Case 2 (D4, fork)".
  std::string to_string() const;

  auto operator<=>(const MagicalCaseId&) const = default;
};

/// One catalog row: a labeled diagram plus the canonical real form — the
/// unique noncompact real form in which the orbit's triples are magical.
struct CatalogEntry {
  MagicalCaseId id;
  DynkinLabels labels;
  RealFormId canonical_form;
  /// True on the second of the two D_{2m} case-2 rows (the fork-swapped
  /// labeling; the two rows are the two orbits lying over the doubled
  /// very-even partition).
  bool fork_twin = false;

  bool operator==(const CatalogEntry&) const = default;
};

/// The catalog of magical orbits, all cases, for every admissible type of
/// rank <= max_rank (exceptional types included once their rank fits):
///   case 1: every simple type, all labels 2 (the principal orbit; split
///           canonical form);
///   case 2: A_{2n-1} (middle node), B_n (first node), C_n (last node),
///           D_n (first node), D_{2m} (one fork node, both labelings),
///           E7 (last in-line node); Hermitian canonical forms;
///   case 3: B_n with 3 <= p <= n and D_n with 3 <= p <= n-1, nodes
///           1..p-1 labeled 2; canonical form so(p, N-p).  (p = 2 rows
///           coincide with case 2, and D_n p = n with case 1, so they are
///           not repeated here.)
///   case 4: F4, E6, E7, E8 with the two-node-pair labelings; quaternionic
///           canonical forms.
/// Duplicate low-rank types are listed once (C from rank 3, D from rank 4;
/// A_1 case 2 coincides with case 1).  Throws std::invalid_argument when
/// max_rank < 1.
std::vector<CatalogEntry> magical_catalog(int max_rank = 8);

}  // namespace magical

#endif  // MAGICAL_CLASSIFY_HPP
