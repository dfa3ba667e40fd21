#include "magical/classify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace magical {

namespace {

// Families whose complex orbit is indexed by the doubled partition.
bool doubles_partition(RealFamily f) {
  return f == RealFamily::su_star || f == RealFamily::so_star ||
         f == RealFamily::sp_pq;
}

bool is_zero_orbit(const SignedYoungDiagram& d) {
  return d.row_counts().rbegin()->first == 1;  // longest row has length 1
}

}  // namespace

CriterionReport magical_criterion(const RealFormId& rf,
                                  const SignedYoungDiagram& d) {
  if (!rf.is_classical())
    throw std::invalid_argument(
        "the dimension criterion applies to classical real forms; " +
        rf.name() + " needs the structure-constant oracle");
  OrbitValidity v = validate_real_orbit(rf, d);
  if (!v.valid)
    throw std::invalid_argument("invalid orbit for " + rf.name() + ": " +
                                v.reason);
  Partition cp = doubles_partition(rf.family) ? d.doubled_partition()
                                              : d.unsigned_partition();
  ComplexCentralizer cc = complex_centralizer(rf.complexification(), cp);
  ReductiveType cr = real_triple_centralizer(rf, d);
  CriterionReport rep;
  rep.criterion_value = 2LL * cr.dimension() - cc.dim_v + rf.delta();
  rep.compact_centralizer = cr.compact();
  rep.magical = rep.criterion_value == 0 && rep.compact_centralizer &&
                !is_zero_orbit(d);
  return rep;
}

std::vector<SignedYoungDiagram> enumerate_magical(const RealFormId& rf,
                                                  int cap) {
  if (!rf.is_classical())
    throw std::invalid_argument(
        "enumeration applies to classical real forms; " + rf.name() +
        " is covered by the closed-form catalog and the oracle");
  if (rf.diagram_size() > cap)
    throw std::length_error("enumeration cap exceeded: " + rf.name() +
                            " needs diagrams of size " +
                            std::to_string(rf.diagram_size()) + " > cap " +
                            std::to_string(cap));
  std::vector<SignedYoungDiagram> out;
  for (const SignedYoungDiagram& d : all_valid_diagrams(rf))
    if (magical_criterion(rf, d).magical) out.push_back(d);
  return out;
}

DynkinLabels weighted_dynkin_from_partition(AlgebraType type,
                                            const Partition& p) {
  OrbitValidity v = validate_complex_orbit(type, p);
  if (!v.valid)
    throw std::invalid_argument("invalid orbit for " + type.name() + ": " +
                                v.reason);
  // Eigenvalues of the triple's semisimple element on the defining
  // representation: a row of length k contributes k-1, k-3, ..., 1-k.
  std::vector<int> ev;
  for (const auto& [len, r] : p.multiplicities())
    for (int i = 0; i < r; ++i)
      for (int val = len - 1; val >= 1 - len; val -= 2) ev.push_back(val);
  std::sort(ev.begin(), ev.end(), std::greater<>());

  int n = type.rank;
  DynkinLabels out;
  out.labels.assign(n, 0);
  switch (type.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) out.labels[i] = ev[i] - ev[i + 1];
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) out.labels[i] = ev[i] - ev[i + 1];
      out.labels[n - 1] = ev[n - 1];
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) out.labels[i] = ev[i] - ev[i + 1];
      out.labels[n - 1] = 2 * ev[n - 1];
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) out.labels[i] = ev[i] - ev[i + 1];
      out.labels[n - 2] = ev[n - 2] - ev[n - 1];
      out.labels[n - 1] = ev[n - 2] + ev[n - 1];
      break;
    default:
      throw std::logic_error("unreachable: non-classical type survived validation");
  }
  for (int l : out.labels)
    if (l < 0 || l > 2)
      throw std::logic_error("weighted Dynkin label out of range for " +
                             type.name() + " " + p.to_string());
  return out;
}

std::string MagicalCaseId::to_string() const {
  std::ostringstream os;
  os << "Case " << static_cast<int>(which) + 1 << " (" << type.name();
  if (which == MagicalCase::case3) os << ", p=" << p;
  if (fork) os << ", fork";
  os << ")";
  return os.str();
}

namespace {

DynkinLabels all_twos(int rank) {
  DynkinLabels l;
  l.labels.assign(rank, 2);
  return l;
}

DynkinLabels one_two(int rank, int index) {
  DynkinLabels l;
  l.labels.assign(rank, 0);
  l.labels[index] = 2;
  return l;
}

DynkinLabels leading_twos(int rank, int count) {
  DynkinLabels l;
  l.labels.assign(rank, 0);
  std::fill_n(l.labels.begin(), count, 2);
  return l;
}

DynkinLabels two_at(int rank, int i, int j) {
  DynkinLabels l;
  l.labels.assign(rank, 0);
  l.labels[i] = l.labels[j] = 2;
  return l;
}

}  // namespace

std::vector<CatalogEntry> magical_catalog(int max_rank) {
  if (max_rank < 1)
    throw std::invalid_argument("catalog needs max_rank >= 1");
  std::vector<CatalogEntry> out;
  auto add = [&out](MagicalCase which, AlgebraType type, DynkinLabels labels,
                    RealFormId canonical, int p = 0, bool twin = false,
                    bool fork = false) {
    out.push_back({{which, type, p, fork}, std::move(labels),
                   std::move(canonical), twin});
  };
  auto type = [](Family f, int n) { return AlgebraType::make(f, n); };

  // Case 1: the principal orbit of every simple type; split canonical form.
  // (C from rank 3 and D from rank 4: C2 = B2 and D3 = A3 are already listed.)
  for (int n = 1; n <= max_rank; ++n)
    add(MagicalCase::case1, type(Family::A, n), all_twos(n),
        RealFormId::sl_real(n + 1));
  for (int n = 2; n <= max_rank; ++n)
    add(MagicalCase::case1, type(Family::B, n), all_twos(n),
        RealFormId::so(n, n + 1));
  for (int n = 3; n <= max_rank; ++n)
    add(MagicalCase::case1, type(Family::C, n), all_twos(n),
        RealFormId::sp_real(n));
  for (int n = 4; n <= max_rank; ++n)
    add(MagicalCase::case1, type(Family::D, n), all_twos(n),
        RealFormId::so(n, n));
  if (max_rank >= 2)
    add(MagicalCase::case1, type(Family::G2, 0), all_twos(2),
        RealFormId::exceptional("g2^2"));
  if (max_rank >= 4)
    add(MagicalCase::case1, type(Family::F4, 0), all_twos(4),
        RealFormId::exceptional("f4^4"));
  if (max_rank >= 6)
    add(MagicalCase::case1, type(Family::E6, 0), all_twos(6),
        RealFormId::exceptional("e6^6"));
  if (max_rank >= 7)
    add(MagicalCase::case1, type(Family::E7, 0), all_twos(7),
        RealFormId::exceptional("e7^7"));
  if (max_rank >= 8)
    add(MagicalCase::case1, type(Family::E8, 0), all_twos(8),
        RealFormId::exceptional("e8^8"));

  // Case 2: one node labeled 2; Hermitian tube-type canonical form.
  // A_1 is omitted (its single-node diagram is already the case-1 row).
  for (int n = 2; 2 * n - 1 <= max_rank; ++n)
    add(MagicalCase::case2, type(Family::A, 2 * n - 1),
        one_two(2 * n - 1, n - 1), RealFormId::su(n, n));
  for (int n = 2; n <= max_rank; ++n)
    add(MagicalCase::case2, type(Family::B, n), one_two(n, 0),
        RealFormId::so(2, 2 * n - 1));
  for (int n = 3; n <= max_rank; ++n)
    add(MagicalCase::case2, type(Family::C, n), one_two(n, n - 1),
        RealFormId::sp_real(n));
  for (int n = 4; n <= max_rank; ++n)
    add(MagicalCase::case2, type(Family::D, n), one_two(n, 0),
        RealFormId::so(2, 2 * n - 2));
  // D_{2m}: the label sits on a fork node; both labelings occur (the two
  // orbits over the doubled very-even partition), with the quaternionic
  // orthogonal canonical form.
  for (int m = 2; 2 * m <= max_rank; ++m) {
    int rank = 2 * m;
    int primary = rank % 4 == 2 ? rank - 1 : rank - 2;
    int other = primary == rank - 1 ? rank - 2 : rank - 1;
    add(MagicalCase::case2, type(Family::D, rank), one_two(rank, primary),
        RealFormId::so_quaternionic(rank), 0, /*twin=*/false, /*fork=*/true);
    add(MagicalCase::case2, type(Family::D, rank), one_two(rank, other),
        RealFormId::so_quaternionic(rank), 0, /*twin=*/true, /*fork=*/true);
  }
  if (max_rank >= 7)
    add(MagicalCase::case2, type(Family::E7, 0), one_two(7, 6),
        RealFormId::exceptional("e7^-25"));

  // Case 3: nodes 1..p-1 labeled 2; canonical form so(p, N-p).  Rows start
  // at p = 3: the p = 2 diagrams coincide with case 2, and D_n's p = n
  // diagram with case 1.
  for (int n = 3; n <= max_rank; ++n)
    for (int p = 3; p <= n; ++p)
      add(MagicalCase::case3, type(Family::B, n), leading_twos(n, p - 1),
          RealFormId::so(p, 2 * n + 1 - p), p);
  for (int n = 4; n <= max_rank; ++n)
    for (int p = 3; p <= n - 1; ++p)
      add(MagicalCase::case3, type(Family::D, n), leading_twos(n, p - 1),
          RealFormId::so(p, 2 * n - p), p);

  // Case 4: two adjacent nodes labeled 2; quaternionic canonical form.
  if (max_rank >= 4)
    add(MagicalCase::case4, type(Family::F4, 0), two_at(4, 2, 3),
        RealFormId::exceptional("f4^4"));
  if (max_rank >= 6)
    add(MagicalCase::case4, type(Family::E6, 0), two_at(6, 2, 3),
        RealFormId::exceptional("e6^2"));
  if (max_rank >= 7)
    add(MagicalCase::case4, type(Family::E7, 0), two_at(7, 0, 1),
        RealFormId::exceptional("e7^-5"));
  if (max_rank >= 8)
    add(MagicalCase::case4, type(Family::E8, 0), two_at(8, 6, 7),
        RealFormId::exceptional("e8^-24"));

  return out;
}

}  // namespace magical
