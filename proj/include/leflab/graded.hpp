#ifndef LEFLAB_GRADED_HPP
#define LEFLAB_GRADED_HPP

#include <map>
#include <string>
#include <vector>

#include "leflab/matrix.hpp"

namespace leflab {

/// Finite-dimensional Z-graded vector space over Q. Flattened coordinates run
/// through the degrees in increasing order.
struct GradedSpace {
  std::map<int, int> pieces;  // degree -> dimension (> 0)
  std::map<int, std::vector<std::string>> labels;  // optional basis names

  int dim(int degree) const
  {
    auto it = pieces.find(degree);
    return it == pieces.end() ? 0 : it->second;
  }
  int total_dim() const;
  std::vector<int> degrees() const;
  int min_degree() const;
  int max_degree() const;

  /// Offset of the degree-d block in flattened coordinates.
  int offset(int degree) const;
  int flat_index(int degree, int i) const { return offset(degree) + i; }

  bool operator==(const GradedSpace&) const = default;
};

/// Degree-homogeneous linear endomorphism of a GradedSpace, stored blockwise:
/// blocks[k] maps the degree-k piece to the degree-(k+degree) piece.
struct GradedMap {
  GradedSpace space;
  int degree = 0;
  std::map<int, Matrix> blocks;  // source degree -> matrix

  static GradedMap zero(const GradedSpace& space, int degree);

  /// Block for source degree k; a correctly-shaped zero matrix if absent.
  Matrix block(int k) const;

  GradedMap compose(const GradedMap& inner) const;  // this after inner
  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator-(const GradedMap& o) const;
  GradedMap operator*(const Rational& c) const;
  GradedMap power(unsigned k) const;
  Vec apply(const Vec& flat) const;

  bool is_zero() const;
  bool operator==(const GradedMap& o) const;

  Matrix to_full() const;
  /// Slices a full matrix into blocks; throws if any entry falls outside the
  /// degree-d block pattern.
  static GradedMap from_full(const GradedSpace& space, int degree, const Matrix& full);
};

inline GradedMap bracket(const GradedMap& a, const GradedMap& b)
{
  return a.compose(b) - b.compose(a);
}

/// The grading operator: multiplication by k on the degree-k piece.
GradedMap h_of(const GradedSpace& space);

/// Splits a full matrix into its degree-homogeneous parts (only nonzero parts
/// are returned).
std::map<int, Matrix> homogeneous_parts(const GradedSpace& space, const Matrix& full);

}  // namespace leflab

#endif
