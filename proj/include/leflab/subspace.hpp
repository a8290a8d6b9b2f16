#ifndef LEFLAB_SUBSPACE_HPP
#define LEFLAB_SUBSPACE_HPP

#include <optional>

#include "leflab/matrix.hpp"

namespace leflab {

/// Linear subspace of Q^n in canonical form: the basis matrix is in reduced
/// row-echelon form with no zero rows, so two equal subspaces compare equal
/// as matrices.
class Subspace {
public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of m (m.cols() is the ambient dimension).
  static Subspace span_rows(const Matrix& m);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero() const { return basis_.rows() == 0; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Coordinates of v in the canonical basis, or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace leflab

#endif
