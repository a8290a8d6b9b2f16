#ifndef LEFLAB_POLYQUOT_HPP
#define LEFLAB_POLYQUOT_HPP

#include "leflab/algebra.hpp"
#include "leflab/subspace.hpp"

namespace leflab {

/// Polynomials as exponent-vector -> coefficient maps.
using Exponents = std::vector<int>;
using Poly = std::map<Exponents, Rational>;

/// Degree-d monomial exponent vectors in nvars variables, lexicographically
/// increasing.
std::vector<Exponents> monomials_of_degree(int nvars, int degree);

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, int k);
Poly linear_poly(const Vec& coeffs);

/// Graded quotient of the polynomial ring by the ideal generated by
/// homogeneous relations, computed degree by degree. Variables get algebra
/// degree 2; the quotient basis in each degree is the set of non-pivot
/// monomials of the reduced ideal.
struct QuotientAlgebra {
  int nvars = 0;
  int top = 0;  // largest polynomial degree with a nonzero quotient
  GradedAlgebra algebra;                      // algebra degrees 0, 2, ..., 2*top
  std::vector<std::vector<Exponents>> basis;  // per polynomial degree
  std::vector<int> ideal_dims;                // per polynomial degree
  std::vector<Subspace> ideal;                // per degree, monomial coordinates
  std::vector<std::vector<int>> pivots;       // pivot monomial positions per degree

  /// Quotient-basis coordinates of a full monomial-coordinate vector.
  Vec reduce(int degree, const Vec& monomial_coords) const;
  Vec reduce(const Poly& p) const;  // p homogeneous
  /// Coordinates of an operator variable acting on the algebra (for cup).
  Vec variable(int i) const;  // coordinates of x_i in the degree-1 basis
};

/// Throws if the quotient is still nonzero in max_degree (so every returned
/// algebra is a finite-dimensional fixture).
QuotientAlgebra quotient_algebra(int nvars, const std::vector<Poly>& relations, int max_degree);

/// Per-degree span of the subalgebra generated by 1 and the given elements
/// of A_2 (coordinate subspaces of the host's pieces).
std::map<int, Subspace> generated_subspaces(const GradedAlgebra& host,
                                            const std::vector<Vec>& gens2);

/// The generated subalgebra as a standalone algebra on the canonical bases
/// of the generated subspaces.
GradedAlgebra subalgebra_algebra(const GradedAlgebra& host, const std::vector<Vec>& gens2);

/// Tensor product of two evenly graded algebras (basis: pairs ordered by
/// left degree, then left index, then right index).
GradedAlgebra tensor_algebra(const GradedAlgebra& a, const GradedAlgebra& b);

}  // namespace leflab

#endif
