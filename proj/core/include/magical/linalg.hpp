#ifndef MAGICAL_LINALG_HPP
#define MAGICAL_LINALG_HPP

// Exact dense linear algebra over a field scalar (rationals or Gaussian
// rationals).  Elimination uses the fraction-free one-step update
// a'[i][j] = (a[p][cp] * a[i][j] - a[i][cp] * a[p][j]) / previous_pivot,
// which keeps intermediate entries as small products instead of letting
// numerators and denominators compound row by row; every division is exact.
// Everything here is deterministic: pivots are chosen as the first nonzero
// entry in column order.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace magical::linalg {

template <class S>
using Vector = std::vector<S>;

/// Row-major dense matrix; all rows must have equal length.
template <class S>
using Matrix = std::vector<std::vector<S>>;

template <class S>
Matrix<S> zero_matrix(int rows, int cols) {
  return Matrix<S>(rows, Vector<S>(cols, S(0)));
}

template <class S>
Matrix<S> identity_matrix(int n) {
  Matrix<S> m = zero_matrix<S>(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = S(1);
  return m;
}

template <class S>
Vector<S> matrix_times_vector(const Matrix<S>& m, const Vector<S>& v) {
  if (!m.empty() && m.front().size() != v.size())
    throw std::invalid_argument("matrix/vector size mismatch");
  Vector<S> out(m.size(), S(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j)
      if (!(v[j] == S(0))) out[i] += m[i][j] * v[j];
  return out;
}

template <class S>
Matrix<S> matrix_product(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.empty() || b.empty()) return {};
  if (a.front().size() != b.size())
    throw std::invalid_argument("matrix product size mismatch");
  Matrix<S> out = zero_matrix<S>(a.size(), b.front().size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k)
      if (!(a[i][k] == S(0)))
        for (size_t j = 0; j < b.front().size(); ++j)
          if (!(b[k][j] == S(0))) out[i][j] += a[i][k] * b[k][j];
  return out;
}

/// In-place fraction-free reduction to row echelon form.  Returns the pivot
/// columns (their count is the rank).  After the call, row k has its pivot
/// in column pivot_cols[k] and zeros below every pivot.
template <class S>
std::vector<int> row_echelon(Matrix<S>& m) {
  std::vector<int> pivot_cols;
  if (m.empty()) return pivot_cols;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m.front().size());
  int row = 0;
  S prev(1);
  for (int col = 0; col < cols && row < rows; ++col) {
    int p = -1;
    for (int i = row; i < rows; ++i)
      if (!(m[i][col] == S(0))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]) / prev;
      m[i][col] = S(0);
    }
    prev = m[row][col];
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

/// Reduced row echelon form: echelon, then unit pivots and zeros above them.
template <class S>
std::vector<int> reduced_row_echelon(Matrix<S>& m) {
  std::vector<int> pivots = row_echelon(m);
  int cols = m.empty() ? 0 : static_cast<int>(m.front().size());
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    int pc = pivots[k];
    S inv = S(1) / m[k][pc];
    for (int j = pc; j < cols; ++j) m[k][j] = m[k][j] * inv;
    for (int i = 0; i < k; ++i) {
      if (m[i][pc] == S(0)) continue;
      S factor = m[i][pc];
      for (int j = pc; j < cols; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return pivots;
}

template <class S>
int rank(Matrix<S> m) {
  return static_cast<int>(row_echelon(m).size());
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column, in
/// ascending free-column order.  The basis vectors have a 1 in their free
/// column and zeros in the other free columns.
template <class S>
std::vector<Vector<S>> kernel_basis(Matrix<S> m, int cols_hint = -1) {
  int cols = cols_hint;
  if (cols < 0) cols = m.empty() ? 0 : static_cast<int>(m.front().size());
  std::vector<int> pivots = reduced_row_echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int pc : pivots) is_pivot[pc] = true;
  std::vector<Vector<S>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vector<S> v(cols, S(0));
    v[free] = S(1);
    for (size_t k = 0; k < pivots.size(); ++k)
      if (pivots[k] < free) v[pivots[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
template <class S>
std::optional<Vector<S>> solve(Matrix<S> m, const Vector<S>& b) {
  if (m.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  int cols = m.empty() ? 0 : static_cast<int>(m.front().size());
  for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  std::vector<int> pivots = reduced_row_echelon(m);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vector<S> x(cols, S(0));
  for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = m[k][cols];
  return x;
}

/// Inverse of a square matrix; throws std::invalid_argument when singular.
template <class S>
Matrix<S> inverse(const Matrix<S>& m) {
  int n = static_cast<int>(m.size());
  Matrix<S> aug = m;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n)
      throw std::invalid_argument("inverse: matrix not square");
    for (int j = 0; j < n; ++j) aug[i].push_back(i == j ? S(1) : S(0));
  }
  std::vector<int> pivots = reduced_row_echelon(aug);
  if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1))
    throw std::invalid_argument("inverse: singular matrix");
  Matrix<S> out = zero_matrix<S>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

/// Basis of the span of the given vectors (a maximal independent subset,
/// kept in input order).
template <class S>
std::vector<Vector<S>> span_basis(const std::vector<Vector<S>>& vectors) {
  std::vector<Vector<S>> basis;
  Matrix<S> rows;
  for (const Vector<S>& v : vectors) {
    rows.push_back(v);
    Matrix<S> copy = rows;
    if (static_cast<int>(row_echelon(copy).size()) ==
        static_cast<int>(rows.size()))
      basis.push_back(v);
    else
      rows.pop_back();
  }
  return basis;
}

/// Whether v lies in the span of the given (column) vectors.
template <class S>
bool in_span(const std::vector<Vector<S>>& span, const Vector<S>& v) {
  if (span.empty()) {
    for (const S& x : v)
      if (!(x == S(0))) return false;
    return true;
  }
  Matrix<S> m = zero_matrix<S>(v.size(), span.size());
  for (size_t j = 0; j < span.size(); ++j) {
    if (span[j].size() != v.size())
      throw std::invalid_argument("in_span: size mismatch");
    for (size_t i = 0; i < v.size(); ++i) m[i][j] = span[j][i];
  }
  return solve(m, v).has_value();
}

/// Basis of the intersection of two spans (vectors of equal length).
template <class S>
std::vector<Vector<S>> intersect_spans(const std::vector<Vector<S>>& a,
                                       const std::vector<Vector<S>>& b) {
  if (a.empty() || b.empty()) return {};
  size_t dim = a.front().size();
  // Solve sum x_i a_i = sum y_j b_j: kernel of [A | -B] columns.
  Matrix<S> m = zero_matrix<S>(dim, a.size() + b.size());
  for (size_t j = 0; j < a.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m[i][j] = a[j][i];
  for (size_t j = 0; j < b.size(); ++j)
    for (size_t i = 0; i < dim; ++i) m[i][a.size() + j] = -b[j][i];
  std::vector<Vector<S>> out;
  for (const Vector<S>& k : kernel_basis(std::move(m))) {
    Vector<S> v(dim, S(0));
    for (size_t j = 0; j < a.size(); ++j)
      if (!(k[j] == S(0)))
        for (size_t i = 0; i < dim; ++i) v[i] += k[j] * a[j][i];
    out.push_back(std::move(v));
  }
  return span_basis(out);
}

}  // namespace magical::linalg

#endif  // MAGICAL_LINALG_HPP
