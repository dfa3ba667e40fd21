// Lie algebra models with exact structure constants: construction-time
// verification (antisymmetry + Jacobi), classical matrix realizations,
// nilpotents with prescribed Jordan type, sl2-triple completion, and the
// Cayley transform on triples.

#include "magical/matlie.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>

#include "matlie_internal.hpp"

namespace magical {
namespace {

// Jacobi policy: exhaustive up to this dimension, seeded sampling beyond.
constexpr int kExhaustiveJacobiLimit = 52;
constexpr long long kSampledJacobiTriples = 100000;
constexpr std::uint64_t kJacobiSeed = 0x6d61676963616cULL;

using Table = std::vector<std::vector<SparseElement>>;

// Sorts by basis index, merges duplicates, drops zeros, checks bounds.
void normalize_sparse(SparseElement& x, int dim, const std::string& name) {
  std::sort(x.begin(), x.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseElement merged;
  for (auto& [idx, coeff] : x) {
    if (idx < 0 || idx >= dim)
      throw std::invalid_argument("bracket table entry out of range in " +
                                  name);
    if (!merged.empty() && merged.back().first == idx)
      merged.back().second += coeff;
    else
      merged.emplace_back(idx, coeff);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& e) { return e.second == 0; }),
               merged.end());
  x = std::move(merged);
}

// Accumulates [[b_a, b_b], b_c] into scratch, tracking touched indices.
void add_double_bracket(const Table& table, int a, int b, int c,
                        std::vector<Rational>& scratch,
                        std::vector<int>& touched) {
  for (const auto& [mid, coeff] : table[a][b])
    for (const auto& [out, inner] : table[mid][c]) {
      if (scratch[out] == 0) touched.push_back(out);
      scratch[out] += coeff * inner;
    }
}

bool jacobi_triple_holds(const Table& table, int i, int j, int k,
                         std::vector<Rational>& scratch,
                         std::vector<int>& touched) {
  add_double_bracket(table, i, j, k, scratch, touched);
  add_double_bracket(table, j, k, i, scratch, touched);
  add_double_bracket(table, k, i, j, scratch, touched);
  bool ok = true;
  for (int idx : touched) {
    if (scratch[idx] != 0) ok = false;
    scratch[idx] = 0;
  }
  touched.clear();
  return ok;
}

[[noreturn]] void jacobi_failure(const std::string& name, int i, int j,
                                 int k) {
  std::ostringstream out;
  out << "Jacobi identity fails in " << name << " on basis triple (" << i
      << ", " << j << ", " << k << ")";
  throw std::logic_error(out.str());
}

// Runs the model's Jacobi sweep; returns the number of triples checked.
long long run_jacobi_sweep(const Table& table, int dim,
                           const std::string& name) {
  std::vector<Rational> scratch(dim, Rational(0));
  std::vector<int> touched;
  if (dim <= kExhaustiveJacobiLimit) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
          if (!jacobi_triple_holds(table, i, j, k, scratch, touched))
            jacobi_failure(name, i, j, k);
    return static_cast<long long>(dim) * dim * dim;
  }
  std::mt19937_64 rng(kJacobiSeed ^ static_cast<std::uint64_t>(dim));
  for (long long t = 0; t < kSampledJacobiTriples; ++t) {
    int i = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
    int j = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
    int k = static_cast<int>(rng() % static_cast<std::uint64_t>(dim));
    if (!jacobi_triple_holds(table, i, j, k, scratch, touched))
      jacobi_failure(name, i, j, k);
  }
  return kSampledJacobiTriples;
}

}  // namespace

namespace detail {

void add_scaled(LieModel::Element& dst, const LieModel::Element& src,
                const Rational& c) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += c * src[k];
}

bool is_zero_element(const LieModel::Element& x) {
  return std::all_of(x.begin(), x.end(),
                     [](const Rational& v) { return v == 0; });
}

}  // namespace detail

LieModel::LieModel(std::string name, std::vector<std::string> basis_labels,
                   std::vector<std::vector<SparseElement>> table,
                   std::vector<int> cartan, std::vector<int> generators)
    : m_name(std::move(name)),
      m_labels(std::move(basis_labels)),
      m_table(std::move(table)),
      m_cartan(std::move(cartan)),
      m_generators(std::move(generators)) {
  const int d = dimension();
  if (d == 0) throw std::invalid_argument("empty basis for " + m_name);
  if (static_cast<int>(m_table.size()) != d)
    throw std::invalid_argument("bracket table has wrong row count in " +
                                m_name);
  for (auto& row : m_table) {
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("bracket table has wrong column count in " +
                                  m_name);
    for (auto& entry : row) normalize_sparse(entry, d, m_name);
  }
  for (int idx : m_cartan)
    if (idx < 0 || idx >= d)
      throw std::invalid_argument("Cartan index out of range in " + m_name);
  for (int idx : m_generators)
    if (idx < 0 || idx >= d)
      throw std::invalid_argument("generator index out of range in " + m_name);

  // Antisymmetry on every ordered pair ([b_i, b_j] == -[b_j, b_i]).
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j) {
      const SparseElement& a = m_table[i][j];
      const SparseElement& b = m_table[j][i];
      bool ok = a.size() == b.size();
      for (std::size_t k = 0; ok && k < a.size(); ++k)
        ok = a[k].first == b[k].first && a[k].second == -b[k].second;
      if (!ok) {
        std::ostringstream out;
        out << "bracket table is not antisymmetric in " << m_name << " at ("
            << m_labels[i] << ", " << m_labels[j] << ")";
        throw std::logic_error(out.str());
      }
    }

  // The declared Cartan must be abelian.
  for (std::size_t a = 0; a < m_cartan.size(); ++a)
    for (std::size_t b = a + 1; b < m_cartan.size(); ++b)
      if (!m_table[m_cartan[a]][m_cartan[b]].empty())
        throw std::logic_error("declared Cartan elements do not commute in " +
                               m_name);

  run_jacobi_sweep(m_table, d, m_name);
}

LieModel::Element LieModel::basis_element(int i) const {
  if (i < 0 || i >= dimension())
    throw std::invalid_argument("basis index out of range in " + m_name);
  Element x = zero();
  x[i] = 1;
  return x;
}

LieModel::Element LieModel::bracket(const Element& x, const Element& y) const {
  const int d = dimension();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::invalid_argument("element size mismatch in " + m_name);
  Element out = zero();
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j] == 0) continue;
      Rational prod = x[i] * y[j];
      for (const auto& [k, c] : m_table[i][j]) out[k] += prod * c;
    }
  }
  return out;
}

LieModel::GaussianElement LieModel::bracket(const GaussianElement& x,
                                            const GaussianElement& y) const {
  const int d = dimension();
  if (static_cast<int>(x.size()) != d || static_cast<int>(y.size()) != d)
    throw std::invalid_argument("element size mismatch in " + m_name);
  GaussianElement out(d, Gaussian(0));
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Gaussian prod = x[i] * y[j];
      for (const auto& [k, c] : m_table[i][j]) out[k] += prod * Gaussian(c);
    }
  }
  return out;
}

RationalMatrix LieModel::ad_matrix(const Element& x) const {
  const int d = dimension();
  if (static_cast<int>(x.size()) != d)
    throw std::invalid_argument("element size mismatch in " + m_name);
  RationalMatrix m = linalg::zero_matrix<Rational>(d, d);
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : m_table[i][j]) m[k][j] += x[i] * c;
  }
  return m;
}

long long LieModel::verify_jacobi() const {
  return run_jacobi_sweep(m_table, dimension(), m_name);
}

namespace {

template <class S>
bool triple_brackets_hold(const LieModel& g, const Sl2TripleOver<S>& t) {
  const std::size_t d = static_cast<std::size_t>(g.dimension());
  if (t.f.size() != d || t.h.size() != d || t.e.size() != d) return false;
  auto he = g.bracket(t.h, t.e);
  auto hf = g.bracket(t.h, t.f);
  auto ef = g.bracket(t.e, t.f);
  for (std::size_t k = 0; k < d; ++k) {
    if (!(he[k] == S(2) * t.e[k])) return false;
    if (!(hf[k] == S(-2) * t.f[k])) return false;
    if (!(ef[k] == t.h[k])) return false;
  }
  return true;
}

}  // namespace

bool is_sl2_triple(const LieModel& g, const Sl2Triple& t) {
  return triple_brackets_hold(g, t);
}

bool is_sl2_triple(const LieModel& g, const GaussianSl2Triple& t) {
  return triple_brackets_hold(g, t);
}

GaussianSl2Triple to_gaussian(const Sl2Triple& t) {
  GaussianSl2Triple out;
  auto lift = [](const LieModel::Element& x) {
    LieModel::GaussianElement v;
    v.reserve(x.size());
    for (const Rational& c : x) v.emplace_back(c);
    return v;
  };
  out.f = lift(t.f);
  out.h = lift(t.h);
  out.e = lift(t.e);
  return out;
}

// ---------------------------------------------------------------------------
// Classical matrix models
// ---------------------------------------------------------------------------

namespace {

// 1-based mirror position for the antidiagonal form.
int mirror(int i, int n) { return n + 1 - i; }

// Sign epsilon_i of the symplectic form's antidiagonal: +1 in the upper
// half, -1 in the lower half.
int sp_sign(int i, int n) { return i <= n / 2 ? 1 : -1; }

std::string position_label(char head, int i, int j) {
  std::ostringstream out;
  out << head << "(" << i << "," << j << ")";
  return out.str();
}

// Reads the coordinates of a matrix on the model basis by looking at the
// leading entry of each basis matrix; the caller verifies by reconstruction.
LieModel::Element matrix_coordinates(MatrixKind kind, int n,
                                     const RationalMatrix& m) {
  LieModel::Element out;
  if (kind == MatrixKind::sl) {
    // Cartan coordinates are partial sums of the diagonal.
    Rational sum(0);
    for (int a = 1; a <= n - 1; ++a) {
      sum += m[a - 1][a - 1];
      out.push_back(sum);
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) out.push_back(m[i - 1][j - 1]);
    return out;
  }
  for (int i = 1; i <= n / 2; ++i) out.push_back(m[i - 1][i - 1]);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j && i + j < n + 1) out.push_back(m[i - 1][j - 1]);
  if (kind == MatrixKind::sp)
    for (int i = 1; i <= n; ++i) out.push_back(m[i - 1][mirror(i, n) - 1]);
  return out;
}

}  // namespace

RationalMatrix MatrixModel::to_matrix(const LieModel::Element& x) const {
  if (static_cast<int>(x.size()) != model.dimension())
    throw std::invalid_argument("element size mismatch in " + model.name());
  RationalMatrix m = linalg::zero_matrix<Rational>(n, n);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m[r][c] += x[k] * basis_matrices[k][r][c];
  }
  return m;
}

LieModel::Element MatrixModel::from_matrix(const RationalMatrix& m) const {
  if (static_cast<int>(m.size()) != n)
    throw std::invalid_argument("matrix size mismatch for " + model.name());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("matrix size mismatch for " + model.name());
  LieModel::Element coords = matrix_coordinates(kind, n, m);
  if (to_matrix(coords) != m)
    throw std::invalid_argument("matrix does not lie in " + model.name());
  return coords;
}

MatrixModel classical_algebra(MatrixKind kind, int n) {
  if (n < 2)
    throw std::invalid_argument("classical algebra needs n >= 2, got " +
                                std::to_string(n));
  if (kind == MatrixKind::sp && n % 2 != 0)
    throw std::invalid_argument("sp(n) needs even n, got " +
                                std::to_string(n));

  std::vector<std::string> labels;
  std::vector<RationalMatrix> mats;
  auto unit = [n](int i, int j) {  // E_ij, 1-based
    RationalMatrix m = linalg::zero_matrix<Rational>(n, n);
    m[i - 1][j - 1] = 1;
    return m;
  };
  auto minus = [n](RationalMatrix a, const RationalMatrix& b) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) a[r][c] -= b[r][c];
    return a;
  };

  std::string name;
  RationalMatrix form;
  if (kind == MatrixKind::sl) {
    name = "sl(" + std::to_string(n) + ")";
    for (int a = 1; a <= n - 1; ++a) {
      labels.push_back("h" + std::to_string(a));
      mats.push_back(minus(unit(a, a), unit(a + 1, a + 1)));
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) {
          labels.push_back(position_label('E', i, j));
          mats.push_back(unit(i, j));
        }
  } else {
    const bool symmetric = kind == MatrixKind::so;
    name = (symmetric ? "so(" : "sp(") + std::to_string(n) + ")";
    form = linalg::zero_matrix<Rational>(n, n);
    for (int i = 1; i <= n; ++i)
      form[i - 1][mirror(i, n) - 1] = symmetric ? 1 : sp_sign(i, n);
    // F_ij = E_ij - (form signs) E_{j',i'} is skew-adjoint for the form.
    auto skew_adjoint = [&](int i, int j) {
      Rational scale = symmetric ? Rational(1)
                                 : Rational(sp_sign(i, n) * sp_sign(j, n));
      RationalMatrix m = unit(i, j);
      m[mirror(j, n) - 1][mirror(i, n) - 1] -= scale;
      return m;
    };
    for (int i = 1; i <= n / 2; ++i) {
      labels.push_back("h" + std::to_string(i));
      mats.push_back(skew_adjoint(i, i));
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j && i + j < n + 1) {
          labels.push_back(position_label('F', i, j));
          mats.push_back(skew_adjoint(i, j));
        }
    if (kind == MatrixKind::sp)
      for (int i = 1; i <= n; ++i) {
        labels.push_back(position_label('F', i, mirror(i, n)));
        mats.push_back(unit(i, mirror(i, n)));
      }
  }

  const int dim = static_cast<int>(mats.size());
  std::vector<int> cartan;
  for (int i = 0; i < (kind == MatrixKind::sl ? n - 1 : n / 2); ++i)
    cartan.push_back(i);

  std::vector<std::vector<SparseElement>> table(
      dim, std::vector<SparseElement>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      RationalMatrix prod = linalg::matrix_product(mats[i], mats[j]);
      RationalMatrix rev = linalg::matrix_product(mats[j], mats[i]);
      LieModel::Element coords = matrix_coordinates(kind, n, minus(prod, rev));
      SparseElement sparse;
      for (std::size_t k = 0; k < coords.size(); ++k)
        if (coords[k] != 0) sparse.emplace_back(static_cast<int>(k),
                                                coords[k]);
      table[i][j] = std::move(sparse);
    }

  MatrixModel out{kind, n,
                  LieModel(name, std::move(labels), std::move(table),
                           std::move(cartan)),
                  std::move(mats), std::move(form)};
  return out;
}

// ---------------------------------------------------------------------------
// Nilpotents with prescribed Jordan type
// ---------------------------------------------------------------------------

namespace {

// One irreducible summand of the sought sl2 representation: `base` is the
// first primitive basis index of its weight-descending chain, `partner` the
// block it is cross-paired with under the invariant form (-1 when the form
// restricts to the block itself), `sign` the scale of a self-paired block's
// form.
struct JordanBlock {
  int len = 0;
  int base = 0;
  int partner = -1;
  int sign = 1;
};

}  // namespace

LieModel::Element nilpotent_from_partition(const MatrixModel& mm,
                                           const Partition& p) {
  const int n = mm.n;
  const std::string& name = mm.model.name();
  if (p.total() != n)
    throw std::invalid_argument("partition " + p.to_string() + " has " +
                                std::to_string(p.total()) +
                                " boxes, expected " + std::to_string(n) +
                                " for " + name);
  if (mm.kind == MatrixKind::so) {
    for (auto [len, mult] : p.multiplicities())
      if (len % 2 == 0 && mult % 2 != 0)
        throw std::invalid_argument(
            "invalid orbit for " + name + ": even row " +
            std::to_string(len) + " has odd multiplicity in " + p.to_string());
  } else if (mm.kind == MatrixKind::sp) {
    for (auto [len, mult] : p.multiplicities())
      if (len % 2 != 0 && mult % 2 != 0)
        throw std::invalid_argument(
            "invalid orbit for " + name + ": odd row " + std::to_string(len) +
            " has odd multiplicity in " + p.to_string());
  }

  // Lay out one weight-descending chain per row.  Rows whose intrinsic form
  // has the wrong parity are consumed in consecutive equal-length pairs and
  // cross-paired; odd so rows carry alternating middle signs so consecutive
  // middles combine into hyperbolic planes.
  const std::vector<int> rows = p.rows();
  std::vector<JordanBlock> blocks;
  int next = 0;
  int odd_so_count = 0;
  for (std::size_t i = 0; i < rows.size();) {
    const int len = rows[i];
    const bool cross_paired = (mm.kind == MatrixKind::so && len % 2 == 0) ||
                              (mm.kind == MatrixKind::sp && len % 2 != 0);
    if (mm.kind != MatrixKind::sl && cross_paired) {
      const int x = static_cast<int>(blocks.size());
      blocks.push_back({len, next, x + 1, 1});
      next += len;
      blocks.push_back({len, next, x, 1});
      next += len;
      i += 2;
    } else {
      JordanBlock b{len, next, -1, 1};
      if (mm.kind == MatrixKind::so) {
        ++odd_so_count;
        const int middle = (len - 1) / 2;
        const int want = odd_so_count % 2 == 1 ? 1 : -1;  // middle value
        b.sign = want * (middle % 2 == 0 ? 1 : -1);
      }
      blocks.push_back(b);
      next += len;
      i += 1;
    }
  }
  const int N = next;

  // Primitive shift matrix: each chain maps v_a -> v_{a-1}.
  RationalMatrix shift = linalg::zero_matrix<Rational>(N, N);
  for (const JordanBlock& b : blocks)
    for (int a = 1; a < b.len; ++a) shift[b.base + a - 1][b.base + a] = 1;

  if (mm.kind == MatrixKind::sl) {
    // Sort all chain positions by descending weight; the change of basis is
    // a permutation.
    std::vector<std::pair<int, int>> order;  // (-weight, primitive index)
    for (const JordanBlock& b : blocks)
      for (int a = 0; a < b.len; ++a)
        order.emplace_back(-(b.len - 1 - 2 * a), b.base + a);
    std::sort(order.begin(), order.end());
    RationalMatrix m = linalg::zero_matrix<Rational>(N, N);
    for (int col = 0; col < N; ++col) m[order[col].second][col] = 1;
    RationalMatrix e = linalg::matrix_product(
        linalg::matrix_product(linalg::inverse(m), shift), m);
    return mm.from_matrix(e);
  }

  // Invariant form on the primitive basis.  Self-paired blocks pair position
  // a with len-1-a inside the block; cross-paired blocks pair across.
  const bool symmetric = mm.kind == MatrixKind::so;
  RationalMatrix bform = linalg::zero_matrix<Rational>(N, N);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const JordanBlock& b = blocks[bi];
    if (b.partner < 0) {
      for (int a = 0; a < b.len; ++a)
        bform[b.base + a][b.base + b.len - 1 - a] =
            b.sign * (a % 2 == 0 ? 1 : -1);
    } else if (b.partner > static_cast<int>(bi)) {
      const JordanBlock& y = blocks[b.partner];
      for (int a = 0; a < b.len; ++a) {
        Rational v = a % 2 == 0 ? 1 : -1;
        bform[b.base + a][y.base + b.len - 1 - a] = v;
        bform[y.base + b.len - 1 - a][b.base + a] = symmetric ? v : -v;
      }
    }
  }

  // Positive-weight slots in descending weight order; their form partners
  // fill the mirrored positions, so the Gram matrix comes out antidiagonal.
  struct Slot {
    int weight = 0;
    int prim = 0;
    int partner_prim = 0;  // form partner (opposite weight)
  };
  std::vector<Slot> positive;
  std::vector<std::pair<int, int>> middles;  // (prim, partner prim)
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const JordanBlock& b = blocks[bi];
    const int pbase = b.partner < 0 ? b.base : blocks[b.partner].base;
    for (int a = 0; a < b.len; ++a) {
      const int w = b.len - 1 - 2 * a;
      const int prim = b.base + a;
      const int partner = pbase + b.len - 1 - a;
      if (w > 0)
        positive.push_back({w, prim, partner});
      else if (w == 0 && (b.partner < 0 || b.partner > static_cast<int>(bi)))
        middles.emplace_back(prim, partner);
    }
  }
  std::sort(positive.begin(), positive.end(), [](const Slot& a,
                                                 const Slot& b) {
    return a.weight != b.weight ? a.weight > b.weight : a.prim < b.prim;
  });
  const int P = static_cast<int>(positive.size());

  RationalMatrix basis = linalg::zero_matrix<Rational>(N, N);
  for (int i = 0; i < P; ++i) {
    const Slot& s = positive[i];
    basis[s.prim][i] = 1;
    // Mirrored column: the form partner, rescaled so the pairing from the
    // positive side is exactly +1.
    basis[s.partner_prim][N - 1 - i] =
        Rational(1) / bform[s.prim][s.partner_prim];
  }
  if (symmetric) {
    // Middles are self-paired with alternating signs +1, -1, ...; combine
    // consecutive pairs into hyperbolic planes, keep a lone +1 in the
    // center.
    const int t = static_cast<int>(middles.size());
    for (int i = 0; 2 * i + 1 < t; ++i) {
      const int x = middles[2 * i].first;
      const int y = middles[2 * i + 1].first;
      if (bform[x][x] != 1 || bform[y][y] != -1)
        throw std::logic_error("middle sign alternation broke in " + name);
      basis[x][P + i] = 1;
      basis[y][P + i] = 1;
      basis[x][N - 1 - P - i] = Rational(1, 2);
      basis[y][N - 1 - P - i] = Rational(-1, 2);
    }
    if (t % 2 != 0) {
      const int z = middles[t - 1].first;
      if (bform[z][z] != 1)
        throw std::logic_error("central middle sign broke in " + name);
      basis[z][P + t / 2] = 1;
    }
  } else {
    // Symplectic middles arrive as cross-paired couples; scale the second
    // member so the pairing from the first is +1.
    const int s = static_cast<int>(middles.size());
    for (int i = 0; i < s; ++i) {
      const auto [x, y] = middles[i];
      basis[x][P + i] = 1;
      basis[y][N - 1 - P - i] = Rational(1) / bform[x][y];
    }
  }

  // The construction promises Gram(basis) == the model's antidiagonal form.
  RationalMatrix gram = linalg::zero_matrix<Rational>(N, N);
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) {
      Rational sum(0);
      for (int a = 0; a < N; ++a) {
        if (basis[a][r] == 0) continue;
        for (int b = 0; b < N; ++b)
          if (bform[a][b] != 0 && basis[b][c] != 0)
            sum += basis[a][r] * bform[a][b] * basis[b][c];
      }
      gram[r][c] = sum;
    }
  if (gram != mm.form)
    throw std::logic_error("chain pairing does not reproduce the form of " +
                           name);

  RationalMatrix e = linalg::matrix_product(
      linalg::matrix_product(linalg::inverse(basis), shift), basis);
  return mm.from_matrix(e);
}

// ---------------------------------------------------------------------------
// Triple completion
// ---------------------------------------------------------------------------

Sl2Triple jm_complete(const LieModel& g, const LieModel::Element& e) {
  const int d = g.dimension();
  if (static_cast<int>(e.size()) != d)
    throw std::invalid_argument("element size mismatch in " + g.name());
  if (detail::is_zero_element(e))
    throw std::invalid_argument("cannot complete e = 0 to an sl2-triple in " +
                                g.name());
  const std::vector<int>& cartan = g.cartan_indices();
  const int r = static_cast<int>(cartan.size());
  if (r == 0)
    throw std::invalid_argument(g.name() + " declares no Cartan subalgebra");

  // Unknowns: h-coordinates on the Cartan basis, then a full candidate f'.
  // Equations: [h, e] = 2e and [e, f'] = h.
  RationalMatrix sys = linalg::zero_matrix<Rational>(2 * d, r + d);
  linalg::Vector<Rational> rhs(2 * d, Rational(0));
  for (int a = 0; a < r; ++a) {
    LieModel::Element col = g.bracket(g.basis_element(cartan[a]), e);
    for (int row = 0; row < d; ++row) sys[row][a] = col[row];
  }
  for (int row = 0; row < d; ++row) rhs[row] = Rational(2) * e[row];
  RationalMatrix ade = g.ad_matrix(e);
  for (int b = 0; b < d; ++b)
    for (int row = 0; row < d; ++row) sys[d + row][r + b] = ade[row][b];
  for (int a = 0; a < r; ++a) sys[d + cartan[a]][a] = -1;

  auto sol = linalg::solve(sys, rhs);
  if (!sol)
    throw std::runtime_error("no sl2-triple completes the element in " +
                             g.name());

  Sl2Triple t;
  t.h = g.zero();
  for (int a = 0; a < r; ++a) t.h[cartan[a]] = (*sol)[a];
  LieModel::Element raw_f(sol->begin() + r, sol->end());

  // Keep only the ad_h-weight -2 component of f'; the discarded components
  // have other weights, so [e, f] = h survives weight by weight.
  t.f = g.zero();
  for (int k = 0; k < d; ++k) {
    if (raw_f[k] == 0) continue;
    LieModel::Element v = g.bracket(t.h, g.basis_element(k));
    bool diagonal = true;
    for (int j = 0; j < d; ++j)
      if (j != k && v[j] != 0) diagonal = false;
    if (!diagonal)
      throw std::runtime_error(
          "completion needs h to act diagonally on the basis of " + g.name());
    if (v[k] == -2) t.f[k] = raw_f[k];
  }
  t.e = e;

  if (!is_sl2_triple(g, t))
    throw std::runtime_error("sl2 completion failed for the element in " +
                             g.name());
  return t;
}

Sl2Triple triple_from_diagram(const ChevalleyModel& cm,
                              const DynkinLabels& labels) {
  const RootSystem& rs = cm.roots;
  const int r = rs.rank();
  const LieModel& g = cm.model;
  if (static_cast<int>(labels.labels.size()) != r)
    throw std::invalid_argument("expected " + std::to_string(r) +
                                " labels for " + g.name());
  for (int l : labels.labels)
    if (l < 0 || l % 2 != 0)
      throw std::invalid_argument(
          "not realizable in " + g.name() +
          ": labels must be even and nonnegative");

  // h solves alpha_i(h) = label_i over the coroot basis.
  RationalMatrix sys = linalg::zero_matrix<Rational>(r, r);
  linalg::Vector<Rational> rhs(r, Rational(0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) sys[i][j] = rs.cartan[i][j];
    rhs[i] = labels.labels[i];
  }
  auto hsol = linalg::solve(sys, rhs);
  if (!hsol)
    throw std::invalid_argument("not realizable in " + g.name() +
                                ": Cartan system is inconsistent");
  Sl2Triple t;
  t.h = g.zero();
  for (int j = 0; j < r; ++j) t.h[j] = (*hsol)[j];

  // Root weights under h.
  const int num_pos = static_cast<int>(rs.positive_roots.size());
  std::vector<int> weight(num_pos, 0);
  std::vector<int> plus2;
  for (int k = 0; k < num_pos; ++k) {
    int w = 0;
    for (int i = 0; i < r; ++i)
      w += rs.positive_roots[k][i] * labels.labels[i];
    weight[k] = w;
    if (w == 2) plus2.push_back(k);
  }
  if (plus2.empty())
    throw std::invalid_argument("not realizable in " + g.name() +
                                ": no weight-2 root spaces");

  // Deterministic seed from the type and the labels.
  std::uint64_t seed = 0xcbf29ce484222325ULL;
  auto mix = [&seed](std::uint64_t v) {
    seed ^= v;
    seed *= 0x100000001b3ULL;
  };
  for (char c : g.name()) mix(static_cast<unsigned char>(c));
  for (int l : labels.labels) mix(static_cast<std::uint64_t>(l) + 1);

  for (int attempt = 0; attempt < 32; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    t.e = g.zero();
    for (int k : plus2)
      t.e[cm.e_index(k)] = Rational(1 + static_cast<long>(rng() % 97));

    // Solve [e, f] = h with f supported on the opposite root spaces.
    RationalMatrix cols = linalg::zero_matrix<Rational>(
        g.dimension(), static_cast<int>(plus2.size()));
    for (std::size_t c = 0; c < plus2.size(); ++c) {
      LieModel::Element img =
          g.bracket(t.e, g.basis_element(cm.f_index(plus2[c])));
      for (int row = 0; row < g.dimension(); ++row)
        cols[row][static_cast<int>(c)] = img[row];
    }
    auto fsol = linalg::solve(cols, t.h);
    if (!fsol) continue;
    t.f = g.zero();
    for (std::size_t c = 0; c < plus2.size(); ++c)
      t.f[cm.f_index(plus2[c])] = (*fsol)[c];
    if (is_sl2_triple(g, t)) return t;
  }
  throw std::invalid_argument("not realizable in " + g.name() +
                              ": no sl2-triple matches the labels");
}

// ---------------------------------------------------------------------------
// Cayley transform
// ---------------------------------------------------------------------------

namespace {

LieModel::GaussianElement combine(const LieModel::GaussianElement& a,
                                  const Gaussian& ca,
                                  const LieModel::GaussianElement& b,
                                  const Gaussian& cb,
                                  const LieModel::GaussianElement& c,
                                  const Gaussian& cc) {
  LieModel::GaussianElement out(a.size(), Gaussian(0));
  for (std::size_t k = 0; k < a.size(); ++k)
    out[k] = ca * a[k] + cb * b[k] + cc * c[k];
  return out;
}

}  // namespace

GaussianSl2Triple cayley_transform(const LieModel& g,
                                   const GaussianSl2Triple& t) {
  if (!is_sl2_triple(g, t))
    throw std::invalid_argument("Cayley transform needs an sl2-triple in " +
                                g.name());
  const Gaussian half(Rational(1, 2));
  const Gaussian half_i(Rational(0), Rational(1, 2));
  const Gaussian i = Gaussian::i();
  GaussianSl2Triple out;
  out.f = combine(t.f, half, t.e, half, t.h, half_i);
  out.h = combine(t.f, i, t.e, -i, t.h, Gaussian(0));
  out.e = combine(t.f, half, t.e, half, t.h, -half_i);
  if (!is_sl2_triple(g, out))
    throw std::logic_error("Cayley transform broke the bracket relations in " +
                           g.name());
  return out;
}

GaussianSl2Triple cayley_transform(const LieModel& g, const Sl2Triple& t) {
  return cayley_transform(g, to_gaussian(t));
}

GaussianSl2Triple inverse_cayley_transform(const LieModel& g,
                                           const GaussianSl2Triple& t) {
  if (!is_sl2_triple(g, t))
    throw std::invalid_argument(
        "inverse Cayley transform needs an sl2-triple in " + g.name());
  const Gaussian half(Rational(1, 2));
  const Gaussian half_i(Rational(0), Rational(1, 2));
  const Gaussian i = Gaussian::i();
  GaussianSl2Triple out;
  out.f = combine(t.f, half, t.e, half, t.h, -half_i);
  out.h = combine(t.e, i, t.f, -i, t.h, Gaussian(0));
  out.e = combine(t.f, half, t.e, half, t.h, half_i);
  if (!is_sl2_triple(g, out))
    throw std::logic_error(
        "inverse Cayley transform broke the bracket relations in " +
        g.name());
  return out;
}

}  // namespace magical
