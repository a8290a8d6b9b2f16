#ifndef LEFLAB_EXT_HPP
#define LEFLAB_EXT_HPP

#include "leflab/algebra.hpp"
#include "leflab/graded.hpp"

namespace leflab {

/// Sign of x_A wedge x_B for bitmask monomials (generators ascending by bit
/// position); 0 when the masks overlap.
int wedge_sign(int a, int b);

/// Exterior algebra on m degree-1 generators as a graded-commutative algebra
/// with degrees 0..m; the degree-k basis is the bitmasks of popcount k in
/// increasing numeric order.
GradedAlgebra exterior_algebra(int m);

/// Centered view of the exterior algebra on m generators (m even): the
/// popcount-k piece sits in degree k - m/2. Provides the standard operator
/// matrices on the flattened space.
struct Ext {
  int m = 0;
  GradedSpace space;  // centered

  int degree_of(int mask) const;
  int index_of(int mask) const;  // position within its degree block
  int flat_of(int mask) const;
  int mask_of(int degree, int index) const;

  /// Left exterior multiplication by the basis monomial x_A.
  Matrix wedge_monomial(int mask) const;
  /// Left exterior multiplication by a general element (mask -> coefficient).
  Matrix wedge(const std::map<int, Rational>& element) const;
  /// Contraction with the basis vector dual to generator i.
  Matrix contract_gen(int i) const;
  /// Star operator of the orthonormal basis: x_S -> +- x_{S^c}.
  Matrix star() const;
};

Ext make_ext(int m);

}  // namespace leflab

#endif
