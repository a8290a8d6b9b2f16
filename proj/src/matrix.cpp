#include "leflab/matrix.hpp"

#include <stdexcept>

namespace leflab {

Matrix Matrix::identity(std::size_t n)
{
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vec& d)
{
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols)
{
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged row list");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const
{
  Vec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

Vec Matrix::col(std::size_t j) const
{
  Vec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

Matrix Matrix::operator+(const Matrix& o) const
{
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in +");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] + o.entries_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const
{
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch in -");
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] - o.entries_[i];
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const
{
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in *");
  Matrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& b = o(k, j);
        if (b != 0) m(i, j) += a * b;
      }
    }
  return m;
}

Matrix Matrix::operator*(const Rational& c) const
{
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] * c;
  return m;
}

Vec Matrix::apply(const Vec& v) const
{
  if (v.size() != cols_) throw std::invalid_argument("shape mismatch in apply");
  Vec r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = (*this)(i, j);
      if (a != 0 && v[j] != 0) r[i] += a * v[j];
    }
  return r;
}

Matrix Matrix::transpose() const
{
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Rational Matrix::trace() const
{
  if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
  Rational t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const
{
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const
{
  return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom)
{
  if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
    throw std::invalid_argument("shape mismatch in vstack");
  std::size_t cols = top.rows() ? top.cols() : bottom.cols();
  Matrix m(top.rows() + bottom.rows(), cols);
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(top.rows() + i, j) = bottom(i, j);
  return m;
}

Vec flatten(const Matrix& m)
{
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols)
{
  if (v.size() != rows * cols) throw std::invalid_argument("shape mismatch in unflatten");
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

RrefResult rref(const Matrix& m)
{
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m)
{
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), Rational(0));
    v[c] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, c);
    rows.push_back(std::move(v));
  }
  return Matrix::from_rows(rows, m.cols());
}

namespace {

// Row-reduces [a | b]; returns reduced augmented matrix and pivots of the
// a-part, plus a consistency flag.
struct AugResult {
  RrefResult r;
  bool consistent;
};

AugResult reduce_augmented(const Matrix& a, const Vec& b)
{
  if (b.size() != a.rows()) throw std::invalid_argument("shape mismatch in solve");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  RrefResult r = rref(aug);
  bool consistent = r.pivots.empty() || r.pivots.back() != a.cols();
  return {std::move(r), consistent};
}

}  // namespace

std::optional<Vec> solve_any(const Matrix& a, const Vec& b)
{
  AugResult ar = reduce_augmented(a, b);
  if (!ar.consistent) return std::nullopt;
  Vec x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < ar.r.pivots.size(); ++i) x[ar.r.pivots[i]] = ar.r.reduced(i, a.cols());
  return x;
}

std::optional<Vec> solve_unique(const Matrix& a, const Vec& b)
{
  AugResult ar = reduce_augmented(a, b);
  if (!ar.consistent) return std::nullopt;
  if (ar.r.pivots.size() < a.cols()) throw std::logic_error("underdetermined system in solve_unique");
  Vec x(a.cols(), Rational(0));
  for (std::size_t i = 0; i < ar.r.pivots.size(); ++i) x[ar.r.pivots[i]] = ar.r.reduced(i, a.cols());
  return x;
}

Rational determinant(const Matrix& m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix a = m;
  Rational det(1);
  std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    Rational inv = 1 / a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult r = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= r.pivots.size() || r.pivots[i] != i) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

Signature signature(const Matrix& m)
{
  if (m.rows() != m.cols()) throw std::invalid_argument("signature of non-square matrix");
  if (m != m.transpose()) throw std::invalid_argument("signature of non-symmetric matrix");
  Matrix a = m;
  std::size_t n = a.rows();
  Signature sig;
  // Symmetric Gaussian reduction: congruence operations only, so the count of
  // positive/negative/zero pivots is the Sylvester signature.
  for (std::size_t c = 0; c < n; ++c) {
    if (a(c, c) == 0) {
      // Look for a later nonzero diagonal entry to swap in.
      std::size_t p = c + 1;
      while (p < n && a(p, p) == 0) ++p;
      if (p < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, c));
      } else {
        // All remaining diagonal entries vanish; create one from an
        // off-diagonal entry via row/col addition.
        std::size_t i = c, j = c;
        bool found = false;
        for (i = c; i < n && !found; ++i)
          for (j = c; j < n; ++j)
            if (i != j && a(i, j) != 0) {
              found = true;
              break;
            }
        if (!found) {
          sig.zero += n - c;
          return sig;
        }
        --i;  // undo the loop increment after break
        for (std::size_t t = 0; t < n; ++t) a(i, t) += a(j, t);
        for (std::size_t t = 0; t < n; ++t) a(t, i) += a(t, j);
        if (i != c) {
          for (std::size_t t = 0; t < n; ++t) std::swap(a(i, t), a(c, t));
          for (std::size_t t = 0; t < n; ++t) std::swap(a(t, i), a(t, c));
        }
      }
    }
    Rational d = a(c, c);
    if (d > 0)
      ++sig.positive;
    else
      ++sig.negative;
    Rational inv = 1 / d;
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) * inv;
      for (std::size_t t = 0; t < n; ++t) a(i, t) -= f * a(c, t);
      for (std::size_t t = 0; t < n; ++t) a(t, i) -= f * a(t, c);
    }
  }
  return sig;
}

}  // namespace leflab
