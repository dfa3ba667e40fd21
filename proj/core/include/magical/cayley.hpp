#pragma once

/// Bookkeeping for the Cayley side of the correspondence: the group the
/// transform lands in, the twisting degrees of the associated bundles of
/// differentials, the Riemann-Roch dimensions of the resulting spaces on a
/// compact curve of genus g >= 2, an exact dimension identity each record
/// must satisfy, and the known component counts of the image.

#include <optional>
#include <string>
#include <vector>

#include "magical/partitions.hpp"
#include "magical/sl2data.hpp"

namespace magical {

/// A compact curve of genus g >= 2 fixing the Riemann-Roch arithmetic.
struct GenusContext {
  int genus = 2;
};

/// Dimension of the space of sections of the d-th power of the canonical
/// bundle on a curve of genus ctx.genus: g for d = 1, (2d-1)(g-1) for
/// d >= 2.  Throws std::invalid_argument for d < 1 or genus < 2.
int h0_dim(int d, const GenusContext& ctx);

/// The domain of the correspondence attached to one catalog record: a
/// product of a split torus of rank rk g(e) with the semisimple part of
/// the Cayley real form, twisted sections of degree m_c + 1, and one space
/// of differentials of degree l_j + 1 per exponent of g(e).
struct CayleyDomainDescriptor {
  /// Rank of g(e), the number of split torus directions.
  int split_torus_rank = 0;
  /// The semisimple part of the Cayley real form (split lines removed).
  ReductiveType semisimple_factor;
  /// m_c + 1, the twisting degree of the bundle the pair lives in.
  int twist_degree = 0;
  /// l_j + 1 for each exponent l_j of g(e), ascending; a repeated exponent
  /// (even orthogonal g(e)) repeats its degree.
  std::vector<int> differential_degrees;
  /// Noncompact dimension of semisimple_factor: the dimension of the (-1)-
  /// eigenspace of a Cartan involution (equivalently, the complex dimension
  /// of the associated symmetric space slice).
  int m0ss_dim = 0;

  /// The genus the dimensions below were computed for.
  int genus = 2;
  /// h0_dim(degree) for each entry of differential_degrees.
  std::vector<int> differential_dims;
  /// Sum of differential_dims.
  int total_differential_dim = 0;

  bool operator==(const CayleyDomainDescriptor&) const = default;
};

/// The domain descriptor of a record on a curve of the given genus.
CayleyDomainDescriptor cayley_domain(const MagicalRecord& rec,
                                     const GenusContext& ctx);

/// Both sides of the exact identity
///   dim g = 2 (m_c + 1) m0ss + (dim c - m0ss) + sum_j (2 l_j + 1)
/// which every consistent record satisfies (an Euler-characteristic count
/// of the deformation space against the ambient algebra).
struct DimensionIdentity {
  int ambient_dim = 0;    // dim g
  int assembled_dim = 0;  // the right-hand side

  bool holds() const { return ambient_dim == assembled_dim; }
  bool operator==(const DimensionIdentity&) const = default;
};

/// Evaluates the identity above on one record.
DimensionIdentity dimension_consistency(const MagicalRecord& rec);

/// Isogeny form of the group a component count refers to.
enum class GroupForm { simply_connected, adjoint };

/// Number of connected components of the image of the correspondence,
/// where known; count is empty when unknown, and note carries the
/// expectation when there is one.
struct ComponentCount {
  std::optional<int> count;
  std::string note;

  bool operator==(const ComponentCount&) const = default;
};

/// Known component counts: quaternionic rows only (F4: 3 for either form;
/// E6: 1 simply connected, 3 adjoint; E7: 1 simply connected, 2 adjoint;
/// E8: unknown, expected 1).  Every other record reports unknown.
ComponentCount component_count(const MagicalRecord& rec, GroupForm form);

}  // namespace magical
