#include "magical/sl2data.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace magical {

namespace {

ReductiveFactor factor(FactorKind kind, int a, int b = 0) {
  return ReductiveFactor{kind, a, b};
}

/// Exceptional rank code used by the exc_C / exc_real factor kinds.
int exc_code(Family f) {
  switch (f) {
    case Family::G2: return 2;
    case Family::F4: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    default: throw std::logic_error("not an exceptional family");
  }
}

/// The exponent multiset of a simple type (ascending; the repeated
/// exponent of D_{2m} appears twice).
std::vector<int> family_exponents(AlgebraType t) {
  std::vector<int> e;
  switch (t.family) {
    case Family::A:
      e.resize(t.rank);
      std::iota(e.begin(), e.end(), 1);
      break;
    case Family::B:
    case Family::C:
      for (int k = 1; k <= 2 * t.rank - 1; k += 2) e.push_back(k);
      break;
    case Family::D:
      for (int k = 1; k <= 2 * t.rank - 3; k += 2) e.push_back(k);
      e.push_back(t.rank - 1);
      std::sort(e.begin(), e.end());
      break;
    case Family::G2: e = {1, 5}; break;
    case Family::F4: e = {1, 5, 7, 11}; break;
    case Family::E6: e = {1, 4, 5, 7, 8, 11}; break;
    case Family::E7: e = {1, 5, 7, 9, 11, 13, 17}; break;
    case Family::E8: e = {1, 7, 11, 13, 17, 19, 23, 29}; break;
  }
  return e;
}

/// The ambient simple algebra as a one-factor complex descriptor.
ReductiveType simple_complex(AlgebraType t) {
  switch (t.family) {
    case Family::A: return ReductiveType::make({factor(FactorKind::sl_C, t.rank + 1)});
    case Family::B: return ReductiveType::make({factor(FactorKind::so_C, 2 * t.rank + 1)});
    case Family::C: return ReductiveType::make({factor(FactorKind::sp_C, 2 * t.rank)});
    case Family::D: return ReductiveType::make({factor(FactorKind::so_C, 2 * t.rank)});
    default:
      return ReductiveType::make({factor(FactorKind::exc_C, exc_code(t.family))});
  }
}

ReductiveType compact_su(int n) {
  return ReductiveType::make({factor(FactorKind::u_pq, n, 0)}, true);
}
ReductiveType compact_so(int n) {
  return ReductiveType::make({factor(FactorKind::so_pq, n, 0)});
}
ReductiveType compact_sp(int half) {
  return ReductiveType::make({factor(FactorKind::sp_pq, 2 * half, 0)});
}
ReductiveType compact_f4() {
  return ReductiveType::make({factor(FactorKind::exc_real, 4, -52)});
}

/// R^k plus the given real factors.
ReductiveType split_lines_plus(int k, std::vector<ReductiveFactor> rest) {
  for (int i = 0; i < k; ++i) rest.push_back(factor(FactorKind::gl_R, 1));
  return ReductiveType::make(std::move(rest));
}

Sl2Data sl2_from_multiset(const std::vector<int>& ms, int n0) {
  std::map<int, int> counts;
  for (int m : ms) counts[m] += 1;
  Sl2Data d;
  d.n0 = n0;
  for (auto [m, n] : counts) d.summands.push_back({m, n});
  return d;
}

void fill_case1(MagicalRecord& r) {
  const AlgebraType t = r.case_id.type;
  std::vector<int> exps = family_exponents(t);
  r.sl2_data = sl2_from_multiset(exps, 0);
  r.g0_type = ReductiveType::make({}, false, t.rank);
  r.c_type = ReductiveType::make({});
  r.c_real = ReductiveType::make({});
  r.ge_type = simple_complex(t);
  r.ge_exponents = exps;
  r.m_c = 0;
  r.cayley_real_form = split_lines_plus(t.rank, {});
}

void fill_case2(MagicalRecord& r) {
  const AlgebraType t = r.case_id.type;
  int n0 = 0, n2 = 0;
  switch (t.family) {
    case Family::A: {
      const int n = (t.rank + 1) / 2;
      n0 = n * n - 1;
      n2 = n * n;
      r.g0_type = ReductiveType::make(
          {factor(FactorKind::sl_C, n), factor(FactorKind::sl_C, n)}, false, 1);
      r.c_type = ReductiveType::make({factor(FactorKind::sl_C, n)});
      r.c_real = compact_su(n);
      r.cayley_real_form = split_lines_plus(1, {factor(FactorKind::sl_CR, n)});
      break;
    }
    case Family::B: {
      const int n = t.rank;
      n0 = 2 * n * n - 5 * n + 3;
      n2 = 2 * n - 1;
      r.g0_type = ReductiveType::make({factor(FactorKind::so_C, 2 * n - 1)}, false, 1);
      r.c_type = ReductiveType::make({factor(FactorKind::so_C, 2 * n - 2)});
      r.c_real = compact_so(2 * n - 2);
      r.cayley_real_form =
          split_lines_plus(1, {factor(FactorKind::so_pq, 1, 2 * n - 2)});
      r.c_has_central_line = n == 2;  // c = so(2,C), a line
      break;
    }
    case Family::C: {
      const int n = t.rank;
      n0 = n * (n - 1) / 2;
      n2 = n * (n + 1) / 2;
      r.g0_type = ReductiveType::make({factor(FactorKind::sl_C, n)}, false, 1);
      r.c_type = ReductiveType::make({factor(FactorKind::so_C, n)});
      r.c_real = compact_so(n);
      r.cayley_real_form = split_lines_plus(1, {factor(FactorKind::sl_R, n)});
      break;
    }
    case Family::D: {
      if (r.case_id.fork) {
        const int m = t.rank / 2;  // rank = 2m; label on a fork node
        n0 = m * (2 * m + 1);
        n2 = m * (2 * m - 1);
        r.g0_type = ReductiveType::make({factor(FactorKind::sl_C, 2 * m)}, false, 1);
        r.c_type = ReductiveType::make({factor(FactorKind::sp_C, 2 * m)});
        r.c_real = compact_sp(m);
        r.cayley_real_form =
            split_lines_plus(1, {factor(FactorKind::su_star, 2 * m)});
      } else {
        const int n = t.rank;  // label on the first node
        n0 = 2 * n * n - 7 * n + 6;
        n2 = 2 * n - 2;
        r.g0_type = ReductiveType::make({factor(FactorKind::so_C, 2 * n - 2)}, false, 1);
        r.c_type = ReductiveType::make({factor(FactorKind::so_C, 2 * n - 3)});
        r.c_real = compact_so(2 * n - 3);
        r.cayley_real_form =
            split_lines_plus(1, {factor(FactorKind::so_pq, 1, 2 * n - 3)});
      }
      break;
    }
    case Family::E7:
      n0 = 52;
      n2 = 27;
      r.g0_type = ReductiveType::make({factor(FactorKind::exc_C, 6)}, false, 1);
      r.c_type = ReductiveType::make({factor(FactorKind::exc_C, 4)});
      r.c_real = compact_f4();
      r.cayley_real_form =
          split_lines_plus(1, {factor(FactorKind::exc_real, 6, -26)});
      break;
    default:
      throw std::logic_error("family without a case-2 row");
  }
  r.sl2_data.n0 = n0;
  r.sl2_data.summands = {{1, n2}};
  r.ge_type = ReductiveType::make({factor(FactorKind::sl_C, 2)});
  r.ge_exponents = {1};
  r.m_c = 1;
}

void fill_case3(MagicalRecord& r) {
  const AlgebraType t = r.case_id.type;
  const int p = r.case_id.p;
  const int N = t.family == Family::B ? 2 * t.rank + 1 : 2 * t.rank;
  const int big = p % 2 == 0 ? N - 2 * p + 2 : N - 2 * p + 1;

  r.sl2_data.n0 = (N - 2 * p) * (N - 2 * p + 1) / 2;
  std::map<int, int> counts;
  for (int m = 1; m <= 2 * p - 3; m += 2) counts[m] = 1;
  counts[p - 1] = big;  // absorbs the odd-chain copy when p - 1 is odd
  r.sl2_data.summands.assign(counts.begin(), counts.end());

  r.g0_type = ReductiveType::make({factor(FactorKind::so_C, N - 2 * p + 2)},
                                  false, p - 1);
  r.c_type = ReductiveType::make({factor(FactorKind::so_C, N - 2 * p + 1)});
  r.c_real = compact_so(N - 2 * p + 1);
  r.ge_type = ReductiveType::make({factor(FactorKind::so_C, 2 * p - 1)});
  for (int m = 1; m <= 2 * p - 3; m += 2) r.ge_exponents.push_back(m);
  r.m_c = p - 1;
  r.cayley_real_form =
      split_lines_plus(p - 1, {factor(FactorKind::so_pq, 1, N - 2 * p + 1)});
  r.c_has_central_line = N == 2 * p + 1;  // c = so(2,C), a line
}

void fill_case4(MagicalRecord& r) {
  const AlgebraType t = r.case_id.type;
  int n0 = 0, n6 = 0;
  switch (t.family) {
    case Family::F4:
      n0 = 3;
      n6 = 5;
      r.g0_type = ReductiveType::make({factor(FactorKind::sl_C, 3)}, false, 2);
      r.c_type = ReductiveType::make({factor(FactorKind::so_C, 3)});
      r.c_real = compact_so(3);
      r.cayley_real_form = split_lines_plus(2, {factor(FactorKind::sl_R, 3)});
      break;
    case Family::E6:
      n0 = 8;
      n6 = 8;
      r.g0_type = ReductiveType::make(
          {factor(FactorKind::sl_C, 3), factor(FactorKind::sl_C, 3)}, false, 2);
      r.c_type = ReductiveType::make({factor(FactorKind::sl_C, 3)});
      r.c_real = compact_su(3);
      r.cayley_real_form = split_lines_plus(2, {factor(FactorKind::sl_CR, 3)});
      break;
    case Family::E7:
      n0 = 21;
      n6 = 14;
      r.g0_type = ReductiveType::make({factor(FactorKind::sl_C, 6)}, false, 2);
      r.c_type = ReductiveType::make({factor(FactorKind::sp_C, 6)});
      r.c_real = compact_sp(3);
      r.cayley_real_form = split_lines_plus(2, {factor(FactorKind::su_star, 6)});
      break;
    case Family::E8:
      n0 = 52;
      n6 = 26;
      r.g0_type = ReductiveType::make({factor(FactorKind::exc_C, 6)}, false, 2);
      r.c_type = ReductiveType::make({factor(FactorKind::exc_C, 4)});
      r.c_real = compact_f4();
      r.cayley_real_form =
          split_lines_plus(2, {factor(FactorKind::exc_real, 6, -26)});
      break;
    default:
      throw std::logic_error("family without a case-4 row");
  }
  r.sl2_data.n0 = n0;
  r.sl2_data.summands = {{1, 1}, {3, n6}, {5, 1}};
  r.ge_type = ReductiveType::make({factor(FactorKind::exc_C, 2)});
  r.ge_exponents = {1, 5};
  r.m_c = 3;
}

ThetaDescriptor make_theta(const MagicalCaseId& id) {
  ThetaDescriptor th;
  th.which = id.which;
  if (id.which == MagicalCase::case3) {
    const int N = id.type.family == Family::B ? 2 * id.type.rank + 1
                                              : 2 * id.type.rank;
    const int p = id.p, q = N - p;
    for (int d = 1; d <= p - 1; ++d) th.flag_dims.push_back(d);
    for (int d = q + 1; d <= N; ++d) th.flag_dims.push_back(d);
  }
  return th;
}

}  // namespace

std::string ThetaDescriptor::description() const {
  std::ostringstream os;
  switch (which) {
    case MagicalCase::case1:
      os << "Borel subgroup";
      break;
    case MagicalCase::case2:
      os << "maximal parabolic with abelian nilradical";
      break;
    case MagicalCase::case3: {
      os << "stabilizer of an isotropic flag of dimensions (";
      for (size_t i = 0; i < flag_dims.size(); ++i)
        os << (i ? ", " : "") << flag_dims[i];
      os << ")";
      break;
    }
    case MagicalCase::case4:
      os << "parabolic marking the two long simple roots of the restricted "
            "f4 system";
      break;
  }
  return os.str();
}

MagicalRecord magical_record(const MagicalCaseId& id) {
  AlgebraType t = AlgebraType::make(id.type.family, id.type.rank);
  MagicalCaseId key{id.which, t, id.p, id.fork};
  const std::vector<CatalogEntry> cat = magical_catalog(t.rank);
  const CatalogEntry* row = nullptr;
  for (const CatalogEntry& e : cat)
    if (e.id == key && !e.fork_twin) {
      row = &e;
      break;
    }
  if (!row)
    throw std::invalid_argument("no magical family with id " + key.to_string());

  MagicalRecord r;
  r.case_id = key;
  r.diagram = row->labels;
  r.canonical_real_form = row->canonical_form;
  switch (key.which) {
    case MagicalCase::case1: fill_case1(r); break;
    case MagicalCase::case2: fill_case2(r); break;
    case MagicalCase::case3: fill_case3(r); break;
    case MagicalCase::case4: fill_case4(r); break;
  }
  r.theta = make_theta(key);
  return r;
}

int real_rank(const RealFormId& form) {
  switch (form.family) {
    case RealFamily::sl_R: return form.p - 1;
    case RealFamily::su_star: return form.p - 1;   // su*(2p)
    case RealFamily::su_pq: return std::min(form.p, form.q);
    case RealFamily::so_pq: return std::min(form.p, form.q);
    case RealFamily::so_star: return form.p / 2;   // so*(2p)
    case RealFamily::sp_R: return form.p;          // sp(2p,R)
    case RealFamily::sp_pq: return std::min(form.p, form.q);
    case RealFamily::exceptional: {
      static const std::map<std::string, int> ranks = {
          {"g2^2", 2},   {"f4^4", 4},   {"f4^-20", 1}, {"e6^6", 6},
          {"e6^2", 4},   {"e6^-14", 2}, {"e6^-26", 2}, {"e7^7", 7},
          {"e7^-5", 4},  {"e7^-25", 3}, {"e8^8", 8},   {"e8^-24", 4}};
      auto it = ranks.find(form.label);
      if (it == ranks.end())
        throw std::invalid_argument("unknown exceptional label " + form.label);
      return it->second;
    }
  }
  throw std::logic_error("unknown real family");
}

int real_rank(const ReductiveType& type) {
  int rank = 0;
  int split_center = 0;
  for (const ReductiveFactor& f : type.factors) {
    switch (f.kind) {
      case FactorKind::gl_R: rank += f.a; break;
      case FactorKind::u_star: rank += f.a / 2; break;
      case FactorKind::u_pq: rank += std::min(f.a, f.b); break;
      case FactorKind::sp_R: rank += f.a / 2; break;
      case FactorKind::so_pq: rank += std::min(f.a, f.b); break;
      case FactorKind::so_star: rank += f.a / 4; break;
      case FactorKind::sp_pq: rank += std::min(f.a, f.b) / 2; break;
      case FactorKind::gl_C: rank += f.a; break;
      case FactorKind::sl_C: rank += f.a - 1; break;
      case FactorKind::so_C: rank += f.a / 2; break;
      case FactorKind::sp_C: rank += f.a / 2; break;
      case FactorKind::sl_R: rank += f.a - 1; break;
      case FactorKind::su_star: rank += f.a / 2 - 1; break;
      case FactorKind::sl_CR: rank += f.a - 1; break;
      case FactorKind::exc_C: rank += f.a; break;
      case FactorKind::exc_real:
        // Compact forms have rank zero; the noncompact labels are exactly
        // the ones RealFormId::exceptional accepts.
        if (!f.semisimple_part_compact())
          rank += real_rank(RealFormId::exceptional(f.name()));
        break;
    }
    split_center += f.split_center_count();
  }
  if (type.determinant_one && split_center > 0) rank -= 1;
  return rank;
}

bool RecordReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const RecordCheck& c) { return c.passed; });
}

std::string RecordReport::first_failure() const {
  for (const RecordCheck& c : checks)
    if (!c.passed) return c.name + ": " + c.detail;
  return "";
}

RecordReport check_record(const MagicalRecord& rec) {
  RecordReport report;
  auto add = [&report](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed,
                             passed ? std::string{} : std::move(detail)});
  };
  const AlgebraType t = rec.case_id.type;

  {
    const int n0 = rec.sl2_data.n0, dc = rec.c_type.dimension();
    add("trivial multiplicity matches the centralizer", n0 == dc,
        "n_0 = " + std::to_string(n0) + ", dim c = " + std::to_string(dc));
  }
  {
    int total = rec.c_type.dimension();
    for (auto [m, n] : rec.sl2_data.summands) total += n * (2 * m + 1);
    add("module dimensions", total == t.dimension(),
        "dim c + sum n(2m+1) = " + std::to_string(total) + ", dim g = " +
            std::to_string(t.dimension()));
  }
  {
    const int canon = real_rank(rec.canonical_real_form);
    const int cayley = real_rank(rec.cayley_real_form);
    add("real rank", canon == cayley,
        rec.canonical_real_form.name() + " has rank " + std::to_string(canon) +
            ", " + rec.cayley_real_form.name() + " has rank " +
            std::to_string(cayley));
  }

  const RootSystem rs = build_root_system(t);
  const GradedDims gd = graded_dimensions(rs, rec.diagram);
  {
    const Sl2Data derived = sl2_multiplicities(gd);
    add("diagram multiplicities", derived == rec.sl2_data,
        "recomputed n_0 = " + std::to_string(derived.n0) + " with " +
            std::to_string(derived.summands.size()) + " distinct weights");
  }
  {
    const int want = rec.g0_type.dimension(), got = gd.dim(0);
    add("level-zero block", want == got,
        "stored " + std::to_string(want) + ", graded " + std::to_string(got));
  }
  {
    int total = 0;
    for (int l : rec.ge_exponents) total += 2 * l + 1;
    add("invariant subalgebra dimension", total == rec.ge_type.dimension(),
        "sum (2l+1) = " + std::to_string(total) + ", dim " +
            rec.ge_type.name() + " = " +
            std::to_string(rec.ge_type.dimension()));
  }
  {
    const int g0 = rec.g0_type.dimension(), cay = rec.cayley_real_form.dimension();
    add("cayley form dimension", g0 == cay,
        "dim g_0 = " + std::to_string(g0) + ", dim of the Cayley form = " +
            std::to_string(cay));
  }
  {
    const bool compact = rec.c_real.compact();
    const bool dims = rec.c_real.dimension() == rec.c_type.dimension();
    add("compact centralizer form", compact && dims,
        rec.c_real.name() + (compact ? " has dimension " : " is not compact; ") +
            std::to_string(rec.c_real.dimension()) + " vs " +
            std::to_string(rec.c_type.dimension()));
  }
  {
    std::vector<int> repeated;
    for (auto [m, n] : rec.sl2_data.summands)
      if (n > 1) repeated.push_back(m);
    const bool ok = rec.case_id.which == MagicalCase::case1
                        ? rec.m_c == 0
                        : repeated.size() == 1 && repeated[0] == rec.m_c;
    add("distinguished weight", ok,
        "m_c = " + std::to_string(rec.m_c) + " with " +
            std::to_string(repeated.size()) + " repeated weights");
  }
  {
    bool ok = rec.theta.which == rec.case_id.which;
    if (rec.case_id.which == MagicalCase::case3) {
      const int N = t.family == Family::B ? 2 * t.rank + 1 : 2 * t.rank;
      const auto& d = rec.theta.flag_dims;
      ok = ok && static_cast<int>(d.size()) == 2 * rec.case_id.p - 1 &&
           std::is_sorted(d.begin(), d.end()) &&
           std::adjacent_find(d.begin(), d.end()) == d.end() && !d.empty() &&
           d.front() == 1 && d.back() == N;
    } else {
      ok = ok && rec.theta.flag_dims.empty();
    }
    add("positivity data", ok, "flag shape or case tag mismatch");
  }
  return report;
}

ThetaDescriptor theta_structure(const MagicalCaseId& id) {
  return magical_record(id).theta;
}

}  // namespace magical
