#include "leflab/graded.hpp"

#include <stdexcept>

namespace leflab {

int GradedSpace::total_dim() const
{
  int t = 0;
  for (const auto& [d, n] : pieces) t += n;
  return t;
}

std::vector<int> GradedSpace::degrees() const
{
  std::vector<int> ds;
  for (const auto& [d, n] : pieces)
    if (n > 0) ds.push_back(d);
  return ds;
}

int GradedSpace::min_degree() const
{
  if (pieces.empty()) throw std::logic_error("empty graded space");
  return pieces.begin()->first;
}

int GradedSpace::max_degree() const
{
  if (pieces.empty()) throw std::logic_error("empty graded space");
  return pieces.rbegin()->first;
}

int GradedSpace::offset(int degree) const
{
  int off = 0;
  for (const auto& [d, n] : pieces) {
    if (d == degree) return off;
    if (d > degree) break;
    off += n;
  }
  throw std::out_of_range("degree not present in graded space");
}

GradedMap GradedMap::zero(const GradedSpace& space, int degree)
{
  GradedMap m;
  m.space = space;
  m.degree = degree;
  return m;
}

Matrix GradedMap::block(int k) const
{
  auto it = blocks.find(k);
  if (it != blocks.end()) return it->second;
  return Matrix(space.dim(k + degree), space.dim(k));
}

GradedMap GradedMap::compose(const GradedMap& inner) const
{
  if (space != inner.space) throw std::invalid_argument("graded map space mismatch");
  GradedMap out = zero(space, degree + inner.degree);
  for (const auto& [k, b] : inner.blocks) {
    if (space.dim(k + inner.degree) == 0 || space.dim(k + out.degree) == 0) continue;
    Matrix prod = block(k + inner.degree) * b;
    if (!prod.is_zero()) out.blocks[k] = std::move(prod);
  }
  return out;
}

GradedMap GradedMap::operator+(const GradedMap& o) const
{
  if (space != o.space || degree != o.degree)
    throw std::invalid_argument("graded map mismatch in +");
  GradedMap out = zero(space, degree);
  for (int k : space.degrees()) {
    if (space.dim(k + degree) == 0) continue;
    Matrix s = block(k) + o.block(k);
    if (!s.is_zero()) out.blocks[k] = std::move(s);
  }
  return out;
}

GradedMap GradedMap::operator-(const GradedMap& o) const { return *this + o * Rational(-1); }

GradedMap GradedMap::operator*(const Rational& c) const
{
  GradedMap out = zero(space, degree);
  if (c == 0) return out;
  for (const auto& [k, b] : blocks) {
    Matrix s = b * c;
    if (!s.is_zero()) out.blocks[k] = std::move(s);
  }
  return out;
}

GradedMap GradedMap::power(unsigned k) const
{
  GradedMap out = zero(space, 0);
  for (int d : space.degrees()) out.blocks[d] = Matrix::identity(space.dim(d));
  for (unsigned i = 0; i < k; ++i) out = compose(out);
  return out;
}

Vec GradedMap::apply(const Vec& flat) const
{
  if ((int)flat.size() != space.total_dim()) throw std::invalid_argument("vector size mismatch");
  Vec out(flat.size(), Rational(0));
  for (const auto& [k, b] : blocks) {
    if (space.dim(k + degree) == 0) continue;
    int src = space.offset(k), dst = space.offset(k + degree);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(i, j) != 0) out[dst + i] += b(i, j) * flat[src + j];
  }
  return out;
}

bool GradedMap::is_zero() const
{
  for (const auto& [k, b] : blocks)
    if (!b.is_zero()) return false;
  return true;
}

bool GradedMap::operator==(const GradedMap& o) const
{
  if (space != o.space || degree != o.degree) return false;
  for (int k : space.degrees())
    if (space.dim(k + degree) != 0 && block(k) != o.block(k)) return false;
  return (*this - o).is_zero();
}

Matrix GradedMap::to_full() const
{
  int n = space.total_dim();
  Matrix full(n, n);
  for (const auto& [k, b] : blocks) {
    if (space.dim(k + degree) == 0) continue;
    int src = space.offset(k), dst = space.offset(k + degree);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) full(dst + i, src + j) = b(i, j);
  }
  return full;
}

GradedMap GradedMap::from_full(const GradedSpace& space, int degree, const Matrix& full)
{
  if ((int)full.rows() != space.total_dim() || (int)full.cols() != space.total_dim())
    throw std::invalid_argument("full matrix size mismatch");
  GradedMap out = zero(space, degree);
  std::map<int, Matrix> parts = homogeneous_parts(space, full);
  for (auto& [d, m] : parts) {
    if (d != degree) throw std::invalid_argument("matrix is not homogeneous of the stated degree");
  }
  auto it = parts.find(degree);
  if (it == parts.end()) return out;
  for (int k : space.degrees()) {
    if (space.dim(k + degree) == 0) continue;
    int src = space.offset(k), dst = space.offset(k + degree);
    Matrix b(space.dim(k + degree), space.dim(k));
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = it->second(dst + i, src + j);
    if (!b.is_zero()) out.blocks[k] = std::move(b);
  }
  return out;
}

GradedMap h_of(const GradedSpace& space)
{
  GradedMap h = GradedMap::zero(space, 0);
  for (int d : space.degrees()) {
    if (d == 0) continue;
    h.blocks[d] = Matrix::identity(space.dim(d)) * Rational(d);
  }
  return h;
}

std::map<int, Matrix> homogeneous_parts(const GradedSpace& space, const Matrix& full)
{
  std::map<int, Matrix> parts;
  for (int ks : space.degrees())
    for (int kd : space.degrees()) {
      int src = space.offset(ks), dst = space.offset(kd);
      Matrix b(space.dim(kd), space.dim(ks));
      bool nonzero = false;
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
          b(i, j) = full(dst + i, src + j);
          if (b(i, j) != 0) nonzero = true;
        }
      if (!nonzero) continue;
      int d = kd - ks;
      auto [it, inserted] = parts.try_emplace(d, Matrix(space.total_dim(), space.total_dim()));
      if (inserted) it->second = Matrix((std::size_t)space.total_dim(), (std::size_t)space.total_dim());
      for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) it->second(dst + i, src + j) = b(i, j);
    }
  return parts;
}

}  // namespace leflab
