// Chevalley-basis models: integer structure constants for every simple
// type, with the N_{alpha,beta} signs fixed by extraspecial pairs in the
// root system's deterministic positive-root order.

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "magical/matlie.hpp"

namespace magical {
namespace {

RootCoords subtract(const RootCoords& a, const RootCoords& b) {
  RootCoords out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool is_zero(const RootCoords& a) {
  for (int v : a)
    if (v != 0) return false;
  return true;
}

// Computes the structure constants N_{alpha,beta} ([e_a, e_b] =
// N_{a,b} e_{a+b}) by the extraspecial-pair recursion: the extraspecial
// pair of a non-simple positive root gamma is (alpha_0, gamma - alpha_0)
// with alpha_0 earliest in the root order; it receives N = +(p+1) from the
// root string, and every other special pair is resolved through the
// four-root Jacobi relation, which only involves constants of smaller
// height.
class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs) : m_rs(rs) {
    const int num_pos = static_cast<int>(rs.positive_roots.size());
    m_extraspecial.assign(num_pos, {-1, -1});
    for (int g = 0; g < num_pos; ++g) {
      if (RootSystem::height(rs.positive_roots[g]) < 2) continue;
      for (int a = 0; a < g; ++a) {
        int b = rs.index_of(subtract(rs.positive_roots[g],
                                     rs.positive_roots[a]));
        if (b >= 0) {
          m_extraspecial[g] = {a, b};
          break;
        }
      }
      if (m_extraspecial[g].first < 0)
        throw std::logic_error("positive root without a special pair in " +
                               rs.type.name());
    }
  }

  // N_{a,b} for positive roots with a + b a positive root.
  Rational positive_pair(int ia, int ib) {
    if (ia == ib)
      throw std::logic_error("doubled root requested in " + m_rs.type.name());
    if (ia > ib) return -positive_pair(ib, ia);
    auto it = m_memo.find({ia, ib});
    if (it != m_memo.end()) return it->second;

    const RootCoords& a = m_rs.positive_roots[ia];
    const RootCoords& b = m_rs.positive_roots[ib];
    RootCoords gamma = a;
    for (std::size_t i = 0; i < gamma.size(); ++i) gamma[i] += b[i];
    const int ig = m_rs.index_of(gamma);
    if (ig < 0)
      throw std::logic_error("pair sum is not a root in " + m_rs.type.name());

    Rational value;
    const auto [ia0, ib0] = m_extraspecial[ig];
    if (ia == ia0 && ib == ib0) {
      // Root string: p + 1 where p counts how far b - k a stays a root.
      int p = 0;
      while (true) {
        RootCoords probe = b;
        for (std::size_t i = 0; i < probe.size(); ++i)
          probe[i] -= (p + 1) * a[i];
        if (!m_rs.is_root(probe)) break;
        ++p;
      }
      value = p + 1;
    } else {
      const RootCoords& a0 = m_rs.positive_roots[ia0];
      const RootCoords& b0 = m_rs.positive_roots[ib0];
      Rational sum(0);
      RootCoords s1 = subtract(a0, a);
      if (!is_zero(s1) && m_rs.is_root(s1))
        sum += positive_negative(ia0, ia) * positive_negative(ib0, ib) /
               Rational(m_rs.norm2_of(s1));
      RootCoords s2 = subtract(b0, a);
      if (!is_zero(s2) && m_rs.is_root(s2))
        sum += -positive_negative(ib0, ia) * positive_negative(ia0, ib) /
               Rational(m_rs.norm2_of(s2));
      value = -Rational(m_rs.norm2_of(gamma)) / positive_pair(ia0, ib0) * sum;
    }
    if (value == 0 || value.get_den() != 1)
      throw std::logic_error("structure constant recursion broke in " +
                             m_rs.type.name());
    m_memo.emplace(std::make_pair(ia, ib), value);
    return value;
  }

  // N_{x,-z} for distinct positive roots x, z; 0 when x - z is not a root.
  // Reduced to positive pairs through the rotation identity
  // N_{p,q}/(r,r) = N_{q,r}/(p,p) = N_{r,p}/(q,q) for p + q + r = 0.
  Rational positive_negative(int ix, int iz) {
    if (ix == iz)
      throw std::logic_error("opposite roots requested in " +
                             m_rs.type.name());
    const RootCoords& x = m_rs.positive_roots[ix];
    const RootCoords& z = m_rs.positive_roots[iz];
    RootCoords s = subtract(x, z);
    int is = m_rs.index_of(s);
    if (is >= 0)  // N_{x,-z} = -(s,s)/(x,x) N_{z,s}
      return -Rational(m_rs.norm2_of(s)) / Rational(m_rs.norm2_of(x)) *
             positive_pair(iz, is);
    RootCoords u = subtract(z, x);
    int iu = m_rs.index_of(u);
    if (iu >= 0)  // N_{x,-z} = (u,u)/(z,z) N_{u,x}
      return Rational(m_rs.norm2_of(u)) / Rational(m_rs.norm2_of(z)) *
             positive_pair(iu, ix);
    return 0;
  }

 private:
  const RootSystem& m_rs;
  std::vector<std::pair<int, int>> m_extraspecial;
  std::map<std::pair<int, int>, Rational> m_memo;
};

std::string root_label(char head, const RootCoords& a) {
  std::ostringstream out;
  out << head << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ",";
    out << a[i];
  }
  out << ")";
  return out.str();
}

}  // namespace

ChevalleyModel chevalley_algebra(AlgebraType type) {
  RootSystem rs = build_root_system(type);
  const int r = rs.rank();
  const int num_pos = static_cast<int>(rs.positive_roots.size());
  const int dim = r + 2 * num_pos;
  const int e0 = r;           // first e index
  const int f0 = r + num_pos; // first f index

  StructureConstants nc(rs);

  std::vector<std::string> labels;
  labels.reserve(dim);
  for (int i = 1; i <= r; ++i) labels.push_back("h" + std::to_string(i));
  for (int k = 0; k < num_pos; ++k)
    labels.push_back(root_label('e', rs.positive_roots[k]));
  for (int k = 0; k < num_pos; ++k)
    labels.push_back(root_label('f', rs.positive_roots[k]));

  std::vector<std::vector<SparseElement>> table(
      dim, std::vector<SparseElement>(dim));
  auto put = [&table](int i, int j, int idx, Rational c) {
    table[i][j].emplace_back(idx, std::move(c));
  };

  // [h_i, e_k] and [h_i, f_k]: coroot pairings.
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < num_pos; ++k) {
      const int pairing = rs.pair_with_coroot(rs.positive_roots[k], i);
      if (pairing == 0) continue;
      put(i, e0 + k, e0 + k, pairing);
      put(e0 + k, i, e0 + k, -pairing);
      put(i, f0 + k, f0 + k, -pairing);
      put(f0 + k, i, f0 + k, pairing);
    }

  // [e_k, f_k] = the coroot of alpha_k expanded over the simple coroots.
  for (int k = 0; k < num_pos; ++k) {
    const RootCoords& alpha = rs.positive_roots[k];
    const Rational norm(rs.norm2_of(alpha));
    for (int i = 0; i < r; ++i) {
      if (alpha[i] == 0) continue;
      Rational c = Rational(alpha[i] * rs.norm2[i]) / norm;
      put(e0 + k, f0 + k, i, c);
      put(f0 + k, e0 + k, i, -c);
    }
  }

  // Root-space pairs through the structure constants.
  for (int k = 0; k < num_pos; ++k)
    for (int l = 0; l < num_pos; ++l) {
      if (k == l) continue;
      RootCoords sum = rs.positive_roots[k];
      for (int i = 0; i < r; ++i) sum[i] += rs.positive_roots[l][i];
      int isum = rs.index_of(sum);
      if (isum >= 0) {
        Rational n = nc.positive_pair(k, l);
        put(e0 + k, e0 + l, e0 + isum, n);   // [e_k, e_l] = N e_{k+l}
        put(f0 + k, f0 + l, f0 + isum, -n);  // [f_k, f_l] = -N f_{k+l}
      }
      // [e_k, f_l] = N_{k,-l} on the root space of alpha_k - alpha_l.
      RootCoords diff = subtract(rs.positive_roots[k], rs.positive_roots[l]);
      int idiff = rs.index_of(diff);
      int ineg = idiff >= 0 ? -1 : rs.index_of(subtract(rs.positive_roots[l],
                                                        rs.positive_roots[k]));
      if (idiff >= 0 || ineg >= 0) {
        Rational n = nc.positive_negative(k, l);
        if (n != 0) {
          const int target = idiff >= 0 ? e0 + idiff : f0 + ineg;
          put(e0 + k, f0 + l, target, n);
          put(f0 + l, e0 + k, target, -n);
        }
      }
    }

  std::vector<int> cartan;
  for (int i = 0; i < r; ++i) cartan.push_back(i);
  std::vector<int> generators;
  for (int k = 0; k < r; ++k) {  // simple roots come first in the order
    generators.push_back(e0 + k);
    generators.push_back(f0 + k);
  }

  LieModel model(type.name(), std::move(labels), std::move(table),
                 std::move(cartan), std::move(generators));
  return ChevalleyModel{std::move(rs), std::move(model)};
}

}  // namespace magical
