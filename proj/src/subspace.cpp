#include "leflab/subspace.hpp"

#include <stdexcept>

namespace leflab {

Subspace Subspace::span_rows(const Matrix& m)
{
  Subspace s(m.cols());
  RrefResult r = rref(m);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) rows.push_back(r.reduced.row(i));
  s.basis_ = Matrix::from_rows(rows, m.cols());
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim)
{
  return span_rows(Matrix::identity(ambient_dim));
}

bool Subspace::contains(const Vec& v) const
{
  if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
  // Reduce v against the RREF basis: subtract the row owning each pivot.
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const Rational& c = w[pivots_[i]];
    if (c == 0) continue;
    Rational f = c;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_(i, j);
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const
{
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  for (std::size_t i = 0; i < other.basis_.rows(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& o) const
{
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace Subspace::sum(const Subspace& other) const
{
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  return span_rows(Matrix::vstack(basis_, other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const
{
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
  // x in both spans iff x = Bᵀa = Cᵀb; solve [Bᵀ | −Cᵀ] (a,b) = 0 and map a
  // back through B.
  std::size_t nb = basis_.rows(), nc = other.basis_.rows();
  if (nb == 0 || nc == 0) return Subspace(ambient_);
  Matrix sys(ambient_, nb + nc);
  for (std::size_t i = 0; i < ambient_; ++i) {
    for (std::size_t j = 0; j < nb; ++j) sys(i, j) = basis_(j, i);
    for (std::size_t j = 0; j < nc; ++j) sys(i, nb + j) = -other.basis_(j, i);
  }
  Matrix ker = kernel_basis(sys);
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vec x(ambient_, Rational(0));
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t i = 0; i < ambient_; ++i) x[i] += ker(r, j) * basis_(j, i);
    rows.push_back(std::move(x));
  }
  return span_rows(Matrix::from_rows(rows, ambient_));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const
{
  if (v.size() != ambient_) throw std::invalid_argument("ambient mismatch");
  Vec w = v;
  Vec coords(basis_.rows(), Rational(0));
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    Rational c = w[pivots_[i]];
    if (c == 0) continue;
    coords[i] = c;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_(i, j);
  }
  for (const auto& x : w)
    if (x != 0) return std::nullopt;
  return coords;
}

}  // namespace leflab
