#ifndef LEFLAB_ALGEBRA_HPP
#define LEFLAB_ALGEBRA_HPP

#include <functional>
#include <map>
#include <utility>

#include "leflab/graded.hpp"

namespace leflab {

/// Element of a graded space: degree -> dense coefficient vector.
using GradedVec = std::map<int, Vec>;

GradedVec gv_add(const GradedVec& a, const GradedVec& b);
GradedVec gv_scale(const GradedVec& a, const Rational& c);
bool gv_is_zero(const GradedVec& a);

/// Graded-commutative associative algebra with A_0 one-dimensional, given by
/// multiplication tensors on the canonical basis. Degrees are >= 0; the
/// centered Lefschetz view shifts by the depth.
struct GradedAlgebra {
  GradedSpace space;
  /// tensors[{p,q}][i * dim(q) + j] = coefficients of (basis p,i)·(basis q,j)
  /// in degree p+q. Missing entries mean zero product.
  std::map<std::pair<int, int>, std::vector<Vec>> tensors;

  void set_product(int p, int i, int q, int j, Vec value);
  Vec basis_product(int p, int i, int q, int j) const;  // in degree p+q
  GradedVec multiply(const GradedVec& a, const GradedVec& b) const;

  /// Fills every tensor entry from a callback (used by model builders).
  void fill_products(const std::function<Vec(int, int, int, int)>& product);

  bool check_unit() const;
  bool check_graded_commutative() const;
  bool check_associative() const;

  int top_degree() const { return space.max_degree(); }
  /// Depth n of the centered module view; requires even top degree.
  int depth() const;
  GradedSpace centered_space() const;

  /// Cup product with the degree-2 element of coefficients a2, as a degree-2
  /// operator on the centered space.
  GradedMap cup(const Vec& a2) const;

  /// Evaluates a linear functional on the top piece against the top component
  /// of a product.
  Rational integrate(const Vec& integral, const GradedVec& x) const;
};

/// Pairing on a centered graded space, nonzero only between opposite degrees.
struct PairingForm {
  GradedSpace space;               // centered
  std::map<int, Matrix> blocks;    // c -> dim(c) x dim(-c) block

  Matrix block(int c) const;
  Rational value(int c, const Vec& x, const Vec& y) const;  // x in M_c, y in M_{-c}
  bool is_zero() const;
  /// phi(a,b) = (-1)^n phi(b,a)?
  bool sign_symmetric(int n) const;
  bool nondegenerate() const;
};

/// The pairing phi(a,b) = (-1)^q \int(ab) for a of algebra degree n+2q or
/// n+2q+1, on the centered space. Throws if the result violates
/// (-1)^n-symmetry.
PairingForm poincare_form(const GradedAlgebra& alg, const Vec& integral);

/// phi(op m, m') + phi(m, op m') = 0 on all basis pairs.
bool infinitesimal_invariance(const GradedMap& op, const PairingForm& phi);

/// Convenience fixtures used widely in tests: the truncated polynomial
/// algebra Q[x]/(x^{d+1}) with deg x = 2 (projective d-space), and the
/// product of two such lines.
GradedAlgebra projective_space_algebra(int d);
GradedAlgebra product_of_lines_algebra();

}  // namespace leflab

#endif
