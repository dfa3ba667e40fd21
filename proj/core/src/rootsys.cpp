#include "magical/rootsys.hpp"

#include <algorithm>
#include <set>

namespace magical {

namespace {

const char* family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

int fixed_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return 0;
  }
}

}  // namespace

AlgebraType AlgebraType::make(Family family, int rank) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2)
        throw std::invalid_argument(std::string("type ") + family_letter(family) +
                                    " requires rank >= 2");
      break;
    case Family::D:
      if (rank < 3) throw std::invalid_argument("type D requires rank >= 3");
      break;
    default: {
      int fr = fixed_rank(family);
      if (rank != 0 && rank != fr)
        throw std::invalid_argument(std::string("type ") + family_letter(family) +
                                    " has fixed rank " + std::to_string(fr));
      rank = fr;
      break;
    }
  }
  return AlgebraType{family, rank};
}

int AlgebraType::num_positive_roots() const {
  switch (family) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::B:
    case Family::C: return rank * rank;
    case Family::D: return rank * (rank - 1);
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
    case Family::F4: return 24;
    case Family::G2: return 6;
  }
  throw std::logic_error("unknown family");
}

int AlgebraType::dimension() const { return rank + 2 * num_positive_roots(); }

std::string AlgebraType::name() const {
  if (fixed_rank(family) > 0) return family_letter(family);
  return std::string(family_letter(family)) + std::to_string(rank);
}

int RootSystem::height(const RootCoords& a) {
  int h = 0;
  for (int c : a) h += c;
  return h;
}

int RootSystem::index_of(const RootCoords& a) const {
  auto it = m_index.find(a);
  return it == m_index.end() ? -1 : it->second;
}

bool RootSystem::is_root(const RootCoords& a) const {
  if (index_of(a) >= 0) return true;
  RootCoords neg(a.size());
  for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
  return index_of(neg) >= 0;
}

int RootSystem::inner(const RootCoords& a, const RootCoords& b) const {
  // (a,b) = sum_{i,j} a_i b_j (alpha_i, alpha_j), with
  // (alpha_i, alpha_j) = cartan[i][j] * norm2[j] / 2 (integral by the
  // normalization norm2 in {2,4,6}).
  int n = rank();
  long long s = 0;
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      s += static_cast<long long>(a[i]) * b[j] * cartan[i][j] * norm2[j] / 2;
    }
  }
  return static_cast<int>(s);
}

int RootSystem::pair_with_coroot(const RootCoords& a, int i) const {
  // <a, alpha_i^vee> = sum_j a_j <alpha_j, alpha_i^vee> = sum_j a_j cartan[j][i].
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += a[j] * cartan[j][i];
  return s;
}

namespace {

// Cartan matrix (cartan[i][j] = <alpha_i, alpha_j^vee>) and squared lengths
// for the fixed node order documented in the header.
void cartan_and_norms(AlgebraType t, std::vector<std::vector<int>>& cartan,
                      std::vector<int>& norm2) {
  int n = t.rank;
  cartan.assign(n, std::vector<int>(n, 0));
  norm2.assign(n, 2);
  for (int i = 0; i < n; ++i) cartan[i][i] = 2;
  auto bond = [&](int i, int j) {  // simply-laced edge (0-based)
    cartan[i][j] = -1;
    cartan[j][i] = -1;
  };
  switch (t.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      // Chain, last root short: <alpha_{n-1}, alpha_n^vee> = -2.
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      cartan[n - 2][n - 1] = -2;
      for (int i = 0; i + 1 < n; ++i) norm2[i] = 4;
      norm2[n - 1] = 2;
      break;
    case Family::C:
      // Chain, last root long: <alpha_n, alpha_{n-1}^vee> = -2.
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      cartan[n - 1][n - 2] = -2;
      norm2[n - 1] = 4;
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      // In-line nodes a1,a2,a3,a5,a6(,a7,a8); branch a4 attached to a3.
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);  // branch
      bond(2, 4);
      for (int i = 4; i + 1 < n; ++i) bond(i, i + 1);
      break;
    }
    case Family::F4:
      // a1,a2 short; a3,a4 long; double bond between a2 and a3.
      bond(0, 1);
      bond(2, 3);
      cartan[1][2] = -1;
      cartan[2][1] = -2;
      norm2[0] = norm2[1] = 2;
      norm2[2] = norm2[3] = 4;
      break;
    case Family::G2:
      // a1 short, a2 long, triple bond.
      cartan[0][1] = -1;
      cartan[1][0] = -3;
      norm2[0] = 2;
      norm2[1] = 6;
      break;
  }
}

}  // namespace

RootSystem build_root_system(AlgebraType type) {
  type = AlgebraType::make(type.family, type.rank);  // re-validate
  RootSystem rs;
  rs.type = type;
  cartan_and_norms(type, rs.cartan, rs.norm2);

  int n = type.rank;
  std::set<RootCoords> known;
  std::vector<RootCoords> frontier;
  for (int i = 0; i < n; ++i) {
    RootCoords a(n, 0);
    a[i] = 1;
    known.insert(a);
    frontier.push_back(a);
  }

  // Breadth-first closure by height.  For a positive root b and simple root
  // alpha_i, b + alpha_i is a root iff the alpha_i-string b - p alpha_i ...
  // b + q alpha_i has q > 0, where q = p - <b, alpha_i^vee>.  Every root
  // strictly below b in the string is a positive root of smaller height
  // (subtracting alpha_i can only drive coordinate i negative, and the zero
  // vector is reached only from b = alpha_i), so p is computable from the
  // already-known levels.
  while (!frontier.empty()) {
    std::vector<RootCoords> next;
    for (const RootCoords& b : frontier) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += b[j] * rs.cartan[j][i];
        int p = 0;
        RootCoords down = b;
        for (;;) {
          down[i] -= 1;
          if (down[i] < 0) break;
          bool is_zero = true;
          for (int c : down)
            if (c != 0) { is_zero = false; break; }
          if (is_zero) break;  // below alpha_i itself; 0 is not a root
          if (!known.count(down)) break;
          p += 1;
        }
        int q = p - pairing;
        if (q > 0) {
          RootCoords up = b;
          up[i] += 1;
          if (!known.count(up)) {
            known.insert(up);
            next.push_back(up);
          }
        }
      }
    }
    frontier = std::move(next);
  }

  rs.positive_roots.assign(known.begin(), known.end());
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(),
            [](const RootCoords& a, const RootCoords& b) {
              int ha = RootSystem::height(a), hb = RootSystem::height(b);
              if (ha != hb) return ha < hb;
              return a < b;
            });
  for (size_t k = 0; k < rs.positive_roots.size(); ++k)
    rs.m_index[rs.positive_roots[k]] = static_cast<int>(k);

  if (static_cast<int>(rs.positive_roots.size()) != type.num_positive_roots())
    throw std::logic_error("root closure produced a wrong count for " + type.name());
  return rs;
}

GradedDims graded_dimensions(const RootSystem& rs, const DynkinLabels& labels) {
  if (static_cast<int>(labels.labels.size()) != rs.rank())
    throw std::invalid_argument("label vector length must equal the rank");
  GradedDims gd;
  gd.dims[0] = rs.rank();  // Cartan subalgebra
  for (const RootCoords& a : rs.positive_roots) {
    int w = 0;
    for (int i = 0; i < rs.rank(); ++i) w += a[i] * labels.labels[i];
    gd.dims[w] += 1;   // root space of a
    gd.dims[-w] += 1;  // root space of -a
  }
  gd.total = rs.type.dimension();
  return gd;
}

Sl2Data sl2_multiplicities(const GradedDims& gd) {
  for (const auto& [j, d] : gd.dims)
    if (j % 2 != 0 && d > 0)
      throw std::domain_error(
          "grading has odd weights; sl2-multiplicity pairs require an even grading");
  Sl2Data out;
  int top = gd.dims.empty() ? 0 : gd.dims.rbegin()->first;
  for (int j = 0; j <= top; j += 2) {
    int nj = gd.dim(j) - gd.dim(j + 2);
    if (nj < 0)
      throw std::domain_error(
          "inconsistent grading: dim g_" + std::to_string(j) + " < dim g_" +
          std::to_string(j + 2) + " (labels do not come from an sl2-triple)");
    if (j == 0)
      out.n0 = nj;
    else if (nj > 0)
      out.summands.emplace_back(j / 2, nj);
  }
  return out;
}

int Sl2Data::multiplicity(int m) const {
  if (m == 0) return n0;
  for (const auto& [mj, nj] : summands)
    if (mj == m) return nj;
  return 0;
}

std::vector<int> Sl2Data::m_values() const {
  std::vector<int> ms;
  for (const auto& [mj, nj] : summands) ms.push_back(mj);
  return ms;
}

std::vector<int> exponents(const RootSystem& rs) {
  // Kostant: the exponents are the dual partition of the height
  // distribution of the positive roots.
  std::map<int, int> by_height;
  for (const RootCoords& a : rs.positive_roots) by_height[RootSystem::height(a)] += 1;
  int max_h = by_height.rbegin()->first;
  std::vector<int> exps;
  for (int k = 1; k <= by_height[1]; ++k) {
    int count = 0;
    for (int h = 1; h <= max_h; ++h)
      if (by_height.count(h) && by_height[h] >= k) count += 1;
    exps.push_back(count);
  }
  std::sort(exps.begin(), exps.end());
  return exps;
}

WeightedPoset root_poset(const RootSystem& rs, const DynkinLabels& labels) {
  if (static_cast<int>(labels.labels.size()) != rs.rank())
    throw std::invalid_argument("label vector length must equal the rank");
  WeightedPoset poset;
  for (const RootCoords& a : rs.positive_roots) {
    int w = 0;
    for (int i = 0; i < rs.rank(); ++i) w += a[i] * labels.labels[i];
    poset.nodes.push_back({a, RootSystem::height(a), w});
  }
  for (size_t k = 0; k < rs.positive_roots.size(); ++k) {
    for (int i = 0; i < rs.rank(); ++i) {
      RootCoords up = rs.positive_roots[k];
      up[i] += 1;
      int j = rs.index_of(up);
      if (j >= 0)
        poset.edges.push_back({static_cast<int>(k), j, i});
    }
  }
  return poset;
}

}  // namespace magical
