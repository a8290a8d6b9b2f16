#ifndef LEFLAB_LIE_HPP
#define LEFLAB_LIE_HPP

#include <optional>

#include "leflab/graded.hpp"
#include "leflab/subspace.hpp"

namespace leflab {

/// Bracket-closed subspace of gl(M), graded by ad h of the ambient grading.
/// Per degree, the basis is canonical: rows of the RREF of the flattened span.
struct GradedLieAlgebra {
  GradedSpace ambient;
  std::map<int, std::vector<Matrix>> basis;  // degree -> full matrices
  std::map<int, Subspace> spans;             // degree -> span of flattened matrices

  int dim() const;
  std::map<int, int> adh_grading() const;
  std::vector<std::pair<int, Matrix>> flat_basis() const;  // ordered by (degree, index)

  bool contains(int degree, const Matrix& full) const;
  /// Membership for a not-necessarily-homogeneous matrix.
  bool contains(const Matrix& full) const;

  /// Coordinates in the per-degree canonical basis, or nullopt if outside.
  std::optional<Vec> coordinates(int degree, const Matrix& full) const;
  /// Coordinates in the flat basis (degree blocks concatenated).
  std::optional<Vec> coordinates(const Matrix& full) const;
  Matrix from_coordinates(const Vec& coords) const;
};

/// Minimal bracket-closed subspace containing the generators. Generators must
/// be ad-h homogeneous; the result is canonical (independent of generator
/// order).
GradedLieAlgebra lie_closure(const std::vector<GradedMap>& generators);
GradedLieAlgebra lie_closure(const GradedSpace& ambient,
                             const std::vector<std::pair<int, Matrix>>& generators);

struct KillingResult {
  Matrix killing;
  bool semisimple;  // Cartan: Killing form nondegenerate
  Signature sig;
};

KillingResult killing_semisimple(const GradedLieAlgebra& g);

/// All results below are subspaces of the coordinate space Q^{dim g} in the
/// flat basis.
Subspace lie_center(const GradedLieAlgebra& g);
Subspace minimal_ideal(const GradedLieAlgebra& g, const Vec& x_coords);
bool is_simple(const GradedLieAlgebra& g);

struct LieFingerprint {
  int dim = 0;
  std::map<int, int> adh;
  int dim_g0 = 0;
  Signature killing_sig;
  int center_dim = 0;
  bool semisimple = false;
  bool operator==(const LieFingerprint&) const = default;
};

LieFingerprint fingerprint(const GradedLieAlgebra& g);

}  // namespace leflab

#endif
