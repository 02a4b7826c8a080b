#include "ringforge/matrix.hpp"

#include <algorithm>

#include "ringforge/error.hpp"

namespace ringforge {

Matrix Matrix::identity(PrimeField f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(PrimeField f, std::size_t ncols,
                         const std::vector<std::vector<scalar>>& rows) {
  Matrix m(f, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols)
      raise(errc::dimension_mismatch, "row " + std::to_string(r) + " has wrong length");
    for (std::size_t c = 0; c < ncols; ++c) m.at(r, c) = rows[r][c] % f.p;
  }
  return m;
}

std::vector<scalar> Matrix::row(std::size_t r) const {
  return std::vector<scalar>(a.begin() + r * cols, a.begin() + (r + 1) * cols);
}

void Matrix::append_row(const std::vector<scalar>& v) {
  if (v.size() != cols) raise(errc::dimension_mismatch, "appended row has wrong length");
  a.insert(a.end(), v.begin(), v.end());
  ++rows;
}

bool Matrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](scalar x) { return x == 0; });
}

Matrix rref(Matrix m) {
  const PrimeField f = m.field;
  std::size_t pivot = 0;
  for (std::size_t col = 0; col < m.cols && pivot < m.rows; ++col) {
    std::size_t sel = pivot;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(pivot, c));
    const scalar s = f.inv(m.at(pivot, col));
    for (std::size_t c = 0; c < m.cols; ++c) m.at(pivot, c) = f.mul(s, m.at(pivot, c));
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == pivot) continue;
      const scalar factor = m.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = 0; c < m.cols; ++c)
        m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(pivot, c)));
    }
    ++pivot;
  }
  m.rows = pivot;
  m.a.resize(pivot * m.cols);
  return m;
}

std::size_t rank(const Matrix& m) { return rref(m).rows; }

bool membership(const Matrix& space, const std::vector<scalar>& v) {
  if (v.size() != space.cols)
    raise(errc::dimension_mismatch, "vector length " + std::to_string(v.size()) +
                                        " does not match " + std::to_string(space.cols) +
                                        " columns");
  const Matrix r = rref(space);
  const PrimeField f = r.field;
  std::vector<scalar> w = v;
  for (auto& x : w) x %= f.p;
  for (std::size_t i = 0; i < r.rows; ++i) {
    std::size_t piv = 0;
    while (piv < r.cols && r.at(i, piv) == 0) ++piv;
    const scalar factor = w[piv];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < r.cols; ++c) w[c] = f.sub(w[c], f.mul(factor, r.at(i, c)));
  }
  return std::all_of(w.begin(), w.end(), [](scalar x) { return x == 0; });
}

Matrix stack(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols || !(a.field == b.field))
    raise(errc::dimension_mismatch, "stacked matrices must share column count and field");
  Matrix m(a.field, a.rows + b.rows, a.cols);
  std::copy(a.a.begin(), a.a.end(), m.a.begin());
  std::copy(b.a.begin(), b.a.end(), m.a.begin() + a.a.size());
  return m;
}

Matrix kernel(const Matrix& m) {
  const Matrix r = rref(m);
  const PrimeField f = r.field;
  std::vector<std::size_t> pivot_col(r.rows);
  std::vector<bool> is_pivot(r.cols, false);
  for (std::size_t i = 0; i < r.rows; ++i) {
    std::size_t c = 0;
    while (c < r.cols && r.at(i, c) == 0) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  std::vector<std::vector<scalar>> basis;
  for (std::size_t free = 0; free < r.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<scalar> v(r.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rows; ++i) v[pivot_col[i]] = f.neg(r.at(i, free));
    basis.push_back(std::move(v));
  }
  return rref(Matrix::from_rows(f, r.cols, basis));
}

Matrix combine(const Matrix& a, const Matrix& b, SpanOp op) {
  if (a.cols != b.cols || !(a.field == b.field))
    raise(errc::dimension_mismatch, "combined spaces must share column count and field");
  if (op == SpanOp::sum) return rref(stack(a, b));

  // lambda*A = -mu*B solutions: kernel of the cols x (ra+rb) matrix [A^T B^T]
  Matrix t(a.field, a.cols, a.rows + b.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t c = 0; c < a.cols; ++c) t.at(c, i) = a.at(i, c);
  for (std::size_t j = 0; j < b.rows; ++j)
    for (std::size_t c = 0; c < b.cols; ++c) t.at(c, a.rows + j) = b.at(j, c);
  const Matrix k = kernel(t);
  const PrimeField f = a.field;
  std::vector<std::vector<scalar>> rows;
  for (std::size_t i = 0; i < k.rows; ++i) {
    std::vector<scalar> v(a.cols, 0);
    for (std::size_t r = 0; r < a.rows; ++r) {
      const scalar lambda = k.at(i, r);
      if (lambda == 0) continue;
      for (std::size_t c = 0; c < a.cols; ++c)
        v[c] = f.add(v[c], f.mul(lambda, a.at(r, c)));
    }
    rows.push_back(std::move(v));
  }
  return rref(Matrix::from_rows(f, a.cols, rows));
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows || !(a.field == b.field))
    raise(errc::dimension_mismatch, "matrix product shape mismatch");
  const PrimeField f = a.field;
  Matrix m(f, a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const scalar x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        m.at(i, j) = f.add(m.at(i, j), f.mul(x, b.at(k, j)));
    }
  return m;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

std::vector<scalar> mat_vec(const Matrix& m, const std::vector<scalar>& v) {
  if (v.size() != m.cols) raise(errc::dimension_mismatch, "vector length does not match columns");
  std::vector<scalar> out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      out[i] = m.field.add(out[i], m.field.mul(m.at(i, j), v[j]));
  return out;
}

bool next_vector(std::vector<scalar>& v, unsigned p) {
  for (auto& x : v) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

std::optional<std::vector<scalar>> solve(const Matrix& a, const std::vector<scalar>& b) {
  if (b.size() != a.rows) raise(errc::dimension_mismatch, "rhs length does not match rows");
  Matrix aug(a.field, a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols) = b[i] % a.field.p;
  }
  const Matrix r = rref(std::move(aug));
  std::vector<scalar> x(a.cols, 0);
  for (std::size_t i = 0; i < r.rows; ++i) {
    std::size_t piv = 0;
    while (piv < r.cols && r.at(i, piv) == 0) ++piv;
    if (piv == a.cols) return std::nullopt;  // 0 = 1 row
    x[piv] = r.at(i, a.cols);
  }
  return x;
}

}  // namespace ringforge
