// The linear involution attached to an sl2-triple (fix the centralizer
// piece, scale ad_f^k of a highest-weight space by (-1)^{k+1}) and the
// bracket-preservation sweep that decides magicality.

#include <map>
#include <sstream>
#include <stdexcept>

#include "magical/matlie.hpp"
#include "matlie_internal.hpp"

namespace magical {
namespace detail {

TripleChains build_triple_chains(const LieModel& g, const Sl2Triple& t) {
  if (!is_sl2_triple(g, t))
    throw std::invalid_argument("not an sl2-triple in " + g.name());
  const int d = g.dimension();
  TripleChains out;
  out.weights.resize(d);
  for (int k = 0; k < d; ++k) {
    LieModel::Element v = g.bracket(t.h, g.basis_element(k));
    for (int j = 0; j < d; ++j)
      if (j != k && v[j] != 0)
        throw std::invalid_argument(
            "the triple's h does not act diagonally on the basis of " +
            g.name());
    if (v[k].get_den() != 1)
      throw std::invalid_argument(
          "the triple's h has a non-integer eigenvalue on the basis of " +
          g.name());
    out.weights[k] = static_cast<int>(v[k].get_num().get_si());
    out.blocks[out.weights[k]].push_back(k);
  }

  // V_j = ker(ad_e : g_j -> g_{j+2}); every basis vector of V_j heads a
  // lowering chain ad_f^k, k = 0..j.
  long long total = 0;
  for (const auto& [j, idxs] : out.blocks) {
    if (j < 0) continue;
    const std::vector<int>* up = nullptr;
    auto it = out.blocks.find(j + 2);
    if (it != out.blocks.end()) up = &it->second;
    const int rows = up ? static_cast<int>(up->size()) : 0;
    const int cols = static_cast<int>(idxs.size());
    RationalMatrix a = linalg::zero_matrix<Rational>(rows, cols);
    for (int c = 0; c < cols; ++c) {
      LieModel::Element img = g.bracket(t.e, g.basis_element(idxs[c]));
      for (int r = 0; r < rows; ++r) a[r][c] = img[(*up)[r]];
    }
    std::vector<std::vector<LieModel::Element>> jchains;
    for (const auto& kappa : linalg::kernel_basis(std::move(a), cols)) {
      LieModel::Element v = g.zero();
      for (int l = 0; l < cols; ++l) v[idxs[l]] = kappa[l];
      std::vector<LieModel::Element> chain{std::move(v)};
      for (int k = 1; k <= j; ++k)
        chain.push_back(g.bracket(t.f, chain.back()));
      jchains.push_back(std::move(chain));
    }
    total += static_cast<long long>(j + 1) * jchains.size();
    if (!jchains.empty()) out.chains[j] = std::move(jchains);
  }
  if (total != d)
    throw std::invalid_argument(
        "sl2 lowering chains do not span " + g.name() +
        "; the input is not a genuine triple");
  return out;
}

}  // namespace detail

LieModel::Element InvolutionMap::apply(const LieModel::Element& x) const {
  return linalg::matrix_times_vector(matrix, x);
}

LieModel::GaussianElement InvolutionMap::apply(
    const LieModel::GaussianElement& x) const {
  if (matrix.size() != x.size())
    throw std::invalid_argument("involution size mismatch");
  LieModel::GaussianElement out(x.size(), Gaussian(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (matrix[i][j] != 0 && !x[j].is_zero())
        out[i] += Gaussian(matrix[i][j]) * x[j];
  return out;
}

int InvolutionMap::fixed_dimension() const {
  Rational trace(0);
  for (std::size_t i = 0; i < matrix.size(); ++i) trace += matrix[i][i];
  Rational fixed = (Rational(static_cast<long>(matrix.size())) + trace) / 2;
  if (fixed.get_den() != 1)
    throw std::logic_error("involution trace has wrong parity");
  return static_cast<int>(fixed.get_num().get_si());
}

InvolutionMap sigma_involution(const LieModel& g, const Sl2Triple& t) {
  detail::TripleChains tc = detail::build_triple_chains(g, t);
  const int d = g.dimension();

  // Adapted vectors per weight: ad_f^k of a highest-weight vector of V_j
  // carries the sign +1 on V_0 and (-1)^{k+1} elsewhere.
  std::map<int, std::vector<std::pair<const LieModel::Element*, int>>> adapted;
  for (const auto& [j, chains] : tc.chains)
    for (const auto& chain : chains)
      for (int k = 0; k <= j; ++k) {
        const int sign = j == 0 ? 1 : (k % 2 == 0 ? -1 : 1);
        adapted[j - 2 * k].emplace_back(&chain[k], sign);
      }

  InvolutionMap out;
  out.matrix = linalg::zero_matrix<Rational>(d, d);
  out.basis_weights = tc.weights;
  for (const auto& [j, chains] : tc.chains)
    out.kernel_dims.emplace_back(j, static_cast<int>(chains.size()));

  // The involution is block-diagonal across ad_h weights: on each block,
  // conjugate the sign pattern by the adapted basis.
  for (const auto& [w, block] : tc.blocks) {
    const int bs = static_cast<int>(block.size());
    auto it = adapted.find(w);
    if (it == adapted.end() || static_cast<int>(it->second.size()) != bs)
      throw std::invalid_argument(
          "sl2 lowering chains do not fill weight block " +
          std::to_string(w) + " of " + g.name());
    RationalMatrix c = linalg::zero_matrix<Rational>(bs, bs);
    RationalMatrix c_signed = linalg::zero_matrix<Rational>(bs, bs);
    for (int col = 0; col < bs; ++col) {
      const auto& [vec, sign] = it->second[col];
      for (int row = 0; row < bs; ++row) {
        c[row][col] = (*vec)[block[row]];
        c_signed[row][col] = sign * c[row][col];
      }
    }
    RationalMatrix c_inv;
    try {
      c_inv = linalg::inverse(c);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument(
          "sl2 lowering chains are dependent in weight block " +
          std::to_string(w) + " of " + g.name());
    }
    RationalMatrix s = linalg::matrix_product(c_signed, c_inv);
    if (linalg::matrix_product(s, s) != linalg::identity_matrix<Rational>(bs))
      throw std::logic_error("involution block fails to square to one in " +
                             g.name());
    for (int row = 0; row < bs; ++row)
      for (int col = 0; col < bs; ++col)
        out.matrix[block[row]][block[col]] = s[row][col];
  }

  // The triple itself must transform as f -> -f, h -> h, e -> -e.
  LieModel::Element sf = out.apply(t.f);
  LieModel::Element sh = out.apply(t.h);
  LieModel::Element se = out.apply(t.e);
  for (int k = 0; k < d; ++k)
    if (sf[k] != -t.f[k] || sh[k] != t.h[k] || se[k] != -t.e[k])
      throw std::logic_error("involution mishandles the triple in " +
                             g.name());
  return out;
}

OracleReport is_magical_oracle(const LieModel& g, const Sl2Triple& t,
                               OracleSweep sweep) {
  InvolutionMap sigma = sigma_involution(g, t);
  const int d = g.dimension();

  // Weight blocks make sigma's columns sparse.
  std::vector<SparseElement> scol(d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i)
      if (sigma.matrix[i][j] != 0) scol[j].emplace_back(i, sigma.matrix[i][j]);

  std::vector<Rational> scratch(d, Rational(0));
  std::vector<int> touched;
  auto bump = [&](int idx, const Rational& v) {
    if (scratch[idx] == 0) touched.push_back(idx);
    scratch[idx] += v;
  };
  // sigma([b_i, b_j]) - [sigma(b_i), sigma(b_j)] == 0?
  auto pair_preserved = [&](int i, int j) {
    for (const auto& [mid, c] : g.bracket(i, j))
      for (const auto& [out, s] : scol[mid]) bump(out, c * s);
    for (const auto& [a, ca] : scol[i])
      for (const auto& [b, cb] : scol[j]) {
        Rational prod = ca * cb;
        for (const auto& [out, c] : g.bracket(a, b)) bump(out, -prod * c);
      }
    bool ok = true;
    for (int idx : touched) {
      if (scratch[idx] != 0) ok = false;
      scratch[idx] = 0;
    }
    touched.clear();
    return ok;
  };

  bool use_generators;
  switch (sweep) {
    case OracleSweep::full_pairs:
      use_generators = false;
      break;
    case OracleSweep::generators:
      use_generators = true;
      break;
    default:
      use_generators = d > 133 && !g.generator_indices().empty();
      break;
  }
  if (use_generators && g.generator_indices().empty())
    throw std::invalid_argument(
        "generator sweep needs a declared generating set in " + g.name());

  OracleReport rep;
  if (use_generators) {
    for (int x : g.generator_indices())
      for (int j = 0; j < d; ++j) {
        ++rep.pairs_checked;
        if (!pair_preserved(x, j)) {
          rep.witness_i = x;
          rep.witness_j = j;
          return rep;
        }
      }
  } else {
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        ++rep.pairs_checked;
        if (!pair_preserved(i, j)) {
          rep.witness_i = i;
          rep.witness_j = j;
          return rep;
        }
      }
  }
  rep.magical = true;
  return rep;
}

}  // namespace magical
