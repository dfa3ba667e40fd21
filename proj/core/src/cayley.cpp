#include "magical/cayley.hpp"

#include <stdexcept>

namespace magical {

namespace {

void require_genus(const GenusContext& ctx) {
  if (ctx.genus < 2)
    throw std::invalid_argument("the curve must have genus >= 2");
}

/// Dimension of the (-1)-eigenspace of a Cartan involution of the factor.
/// Complex kinds are read as real algebras (the eigenspace is i times the
/// compact form, of dimension equal to the complex dimension).
int noncompact_dimension(const ReductiveFactor& f) {
  switch (f.kind) {
    case FactorKind::gl_R: return f.a * (f.a + 1) / 2;
    case FactorKind::u_star: return f.a / 2 * (f.a - 1);
    case FactorKind::u_pq: return 2 * f.a * f.b;
    case FactorKind::sp_R: return f.a / 2 * (f.a / 2 + 1);
    case FactorKind::so_pq: return f.a * f.b;
    case FactorKind::so_star: return f.a / 2 * (f.a / 2 - 1);
    case FactorKind::sp_pq: return f.a * f.b;
    case FactorKind::gl_C: return f.a * f.a;
    case FactorKind::sl_C: return f.a * f.a - 1;
    case FactorKind::so_C: return f.a * (f.a - 1) / 2;
    case FactorKind::sp_C: return f.a * (f.a + 1) / 2;
    case FactorKind::sl_R: return (f.a - 1) * (f.a + 2) / 2;
    case FactorKind::su_star: return (f.a / 2 - 1) * (f.a + 1);
    case FactorKind::sl_CR: return f.a * f.a - 1;
    case FactorKind::exc_C: return f.dimension();
    case FactorKind::exc_real:
      // The index b is dim(-1 eigenspace) - dim(+1 eigenspace).
      return (f.dimension() + f.b) / 2;
  }
  throw std::logic_error("unknown factor kind");
}

/// The Cayley real form with its split gl(1,R) lines removed.
ReductiveType semisimple_part(const ReductiveType& type) {
  std::vector<ReductiveFactor> rest;
  for (const ReductiveFactor& f : type.factors)
    if (!(f.kind == FactorKind::gl_R && f.a == 1)) rest.push_back(f);
  return ReductiveType::make(std::move(rest), type.determinant_one);
}

/// Noncompact dimension of the semisimple part of a real reductive type
/// (split central lines excluded factor by factor).
int semisimple_noncompact_dim(const ReductiveType& type) {
  int total = 0;
  for (const ReductiveFactor& f : type.factors)
    total += noncompact_dimension(f) - f.split_center_count();
  return total;
}

}  // namespace

int h0_dim(int d, const GenusContext& ctx) {
  require_genus(ctx);
  if (d < 1) throw std::invalid_argument("sections need a degree >= 1");
  return d == 1 ? ctx.genus : (2 * d - 1) * (ctx.genus - 1);
}

CayleyDomainDescriptor cayley_domain(const MagicalRecord& rec,
                                     const GenusContext& ctx) {
  require_genus(ctx);
  CayleyDomainDescriptor dom;
  dom.split_torus_rank = static_cast<int>(rec.ge_exponents.size());
  dom.semisimple_factor = semisimple_part(rec.cayley_real_form);
  dom.twist_degree = rec.m_c + 1;
  dom.m0ss_dim = semisimple_noncompact_dim(dom.semisimple_factor);
  dom.genus = ctx.genus;
  for (int l : rec.ge_exponents) {
    const int degree = l + 1;
    const int dim = h0_dim(degree, ctx);
    dom.differential_degrees.push_back(degree);
    dom.differential_dims.push_back(dim);
    dom.total_differential_dim += dim;
  }
  return dom;
}

DimensionIdentity dimension_consistency(const MagicalRecord& rec) {
  DimensionIdentity identity;
  identity.ambient_dim = rec.case_id.type.dimension();
  const int m0ss = semisimple_noncompact_dim(rec.cayley_real_form);
  int rhs = 2 * (rec.m_c + 1) * m0ss + (rec.c_type.dimension() - m0ss);
  for (int l : rec.ge_exponents) rhs += 2 * l + 1;
  identity.assembled_dim = rhs;
  return identity;
}

ComponentCount component_count(const MagicalRecord& rec, GroupForm form) {
  if (rec.case_id.which != MagicalCase::case4)
    return {std::nullopt, "no component count is established for this family"};
  const bool adjoint = form == GroupForm::adjoint;
  switch (rec.case_id.type.family) {
    case Family::F4: return {3, ""};  // F4 carries a unique isogeny form
    case Family::E6: return {adjoint ? 3 : 1, ""};
    case Family::E7: return {adjoint ? 2 : 1, ""};
    case Family::E8: return {std::nullopt, "expected 1"};
    default: break;
  }
  throw std::logic_error("family without a quaternionic row");
}

}  // namespace magical
