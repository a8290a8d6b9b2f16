#ifndef LEFLAB_MATRIX_HPP
#define LEFLAB_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "leflab/rational.hpp"

namespace leflab {

/// Dense matrix over Q, row-major.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vec& d);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator*(const Rational& c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  Matrix transpose() const;
  Rational trace() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  /// Row-concatenation of two matrices with equal column counts.
  static Matrix vstack(const Matrix& top, const Matrix& bottom);

private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

inline Matrix bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Flattens an n x n matrix to a length n^2 row vector (row-major).
Vec flatten(const Matrix& m);
Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols);

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column per pivot row, increasing
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per row; rows are in the canonical
/// order induced by free columns (not RREF-canonical; see Subspace for that).
Matrix kernel_basis(const Matrix& m);

/// Unique solution of a x = b if a has full column rank; nullopt when
/// inconsistent; throws std::logic_error when underdetermined.
std::optional<Vec> solve_unique(const Matrix& a, const Vec& b);

/// One solution of a x = b, or nullopt if inconsistent.
std::optional<Vec> solve_any(const Matrix& a, const Vec& b);

Rational determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
  bool operator==(const Signature&) const = default;
};

/// Sylvester signature of a symmetric matrix by exact congruence
/// diagonalization. Throws std::invalid_argument on non-symmetric input.
Signature signature(const Matrix& m);

}  // namespace leflab

#endif
