#pragma once

/// Closed-form structural data for the magical-orbit catalog: for each
/// family of the catalog, the decomposition of the ambient algebra under
/// the orbit's sl2, the centralizer subalgebra and its compact real form,
/// the zero-block of the even grading, the invariant subalgebra spanned by
/// the highest-weight lines, and the real form reached by the Cayley
/// transform, together with the parabolic datum carrying the family's
/// positivity structure.  All of it is stored, parameterized by rank and
/// signature; nothing here is re-derived from root systems.  check_record
/// cross-checks the stored tables against the root-system layer.

#include <string>
#include <vector>

#include "magical/classify.hpp"
#include "magical/partitions.hpp"
#include "magical/rootsys.hpp"

namespace magical {

/// The parabolic subgroup underlying the positivity structure of one
/// catalog family: the Borel (case 1), the maximal parabolic with abelian
/// nilradical (case 2), the stabilizer of a partial isotropic flag
/// (case 3), or the restricted-root parabolic of the quaternionic forms
/// (case 4).
struct ThetaDescriptor {
  MagicalCase which = MagicalCase::case1;

  /// Case 3 only: dimensions of the subspaces of the stabilized isotropic
  /// flag, 1, ..., p-1, q+1, ..., p+q inside R^{p+q} (with q = N - p).
  std::vector<int> flag_dims;

  /// One-line printable description of the parabolic.
  std::string description() const;

  bool operator==(const ThetaDescriptor&) const = default;
};

/// The stored structural record of one catalog family member.
///
/// Reductive types double as descriptors of complex and of real algebras:
/// in the complex descriptors (g0_type, c_type, ge_type) the factors are
/// the complex kinds and torus_rank counts one-dimensional complex torus
/// directions; in the real descriptors (c_real, cayley_real_form) the
/// factors are real kinds and split line factors appear as gl(1,R).
struct MagicalRecord {
  MagicalCaseId case_id;
  /// Weighted labeling of the orbit.  For the fork families of even
  /// orthogonal type this is the first of the two mirror labelings.
  DynkinLabels diagram;
  /// The noncompact real form in which the orbit's triples are magical.
  RealFormId canonical_real_form;

  /// Multiplicities (m_j, n_{2m_j}) of the sl2-decomposition of g, plus
  /// the trivial multiplicity n_0 (= the dimension of c_type).
  Sl2Data sl2_data;
  /// The zero-block of the even grading defined by the orbit.
  ReductiveType g0_type;
  /// The centralizer c of the decorated subalgebra (complex descriptor).
  ReductiveType c_type;
  /// The compact real form of c_type.
  ReductiveType c_real;
  /// The invariant subalgebra g(e) spanned by the lowest vectors and their
  /// sl2-orbits; a simple complex descriptor.
  ReductiveType ge_type;
  /// Exponents l_j of ge_type (with multiplicity), so that the dimension
  /// of ge_type equals the sum of 2 l_j + 1.
  std::vector<int> ge_exponents;
  /// The distinguished weight: 0 in case 1, otherwise the unique m_j whose
  /// multiplicity n_{2m_j} exceeds one (1, p-1, 3 in cases 2, 3, 4).
  int m_c = 0;

  /// The real form R^k + (g_0)^R produced by the Cayley transform; its
  /// real rank equals the real rank of canonical_real_form.
  ReductiveType cayley_real_form;

  /// Parabolic datum of the family's positivity structure.
  ThetaDescriptor theta;

  /// True when the centralizer c has a one-dimensional center (exactly the
  /// B2 row of case 2 and the odd-orthogonal rows of case 3 with p equal
  /// to the rank, where c itself is a line).
  bool c_has_central_line = false;

  bool operator==(const MagicalRecord&) const = default;
};

/// The stored record for a catalog family member.  For the two mirror
/// fork labelings (even orthogonal type, case 2, id.fork set) the record
/// is shared and carries the first labeling as its diagram.  Throws
/// std::invalid_argument when no catalog family has this id.
MagicalRecord magical_record(const MagicalCaseId& id);

/// Real rank (dimension of a maximal split abelian subalgebra) of a simple
/// noncompact real form.
int real_rank(const RealFormId& form);

/// Real rank of a reductive type, additive over factors; compact torus
/// directions count zero, split gl(1,R) lines count one, and a
/// determinant-one wrapper removes one split central direction when a
/// factor supplies one.  Complex factor kinds count their complex rank
/// (the real rank of the underlying real algebra).
int real_rank(const ReductiveType& type);

/// One named consistency check of a record.
struct RecordCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // numbers behind a failure; empty when passed
};

/// Outcome of cross-checking one record.
struct RecordReport {
  std::vector<RecordCheck> checks;

  bool all_passed() const;
  /// The first failed check's "name: detail", or "" when all passed.
  std::string first_failure() const;
};

/// Cross-checks a stored record against the root-system layer: the sl2
/// multiplicities recomputed from the record's diagram, the dimension
/// identity dim g = dim c + sum n_{2m}(2m + 1), the zero-block dimension,
/// the real-rank equality of the canonical and Cayley forms, the exponent
/// sum for ge_type, and the internal coherence of the remaining fields.
RecordReport check_record(const MagicalRecord& rec);

/// The parabolic datum of a catalog family (also stored on its record).
ThetaDescriptor theta_structure(const MagicalCaseId& id);

}  // namespace magical
