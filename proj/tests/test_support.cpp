#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leflab/ext.hpp"
#include "leflab/polyquot.hpp"
#include "leflab/sl2.hpp"

using namespace leflab;

TEST_CASE("exterior algebra on two generators")
{
  GradedAlgebra e = exterior_algebra(2);
  CHECK(e.space.dim(0) == 1);
  CHECK(e.space.dim(1) == 2);
  CHECK(e.space.dim(2) == 1);
  CHECK(e.check_unit());
  CHECK(e.check_graded_commutative());
  CHECK(e.check_associative());
  // x*x = 0 and x*y = -y*x = top.
  CHECK(e.basis_product(1, 0, 1, 0) == Vec{rat(0)});
  CHECK(e.basis_product(1, 0, 1, 1) == Vec{rat(1)});
  CHECK(e.basis_product(1, 1, 1, 0) == Vec{rat(-1)});
}

TEST_CASE("a symplectic two-form is a Lefschetz element of the exterior 4-space")
{
  GradedAlgebra e = exterior_algebra(4);
  CHECK(e.check_graded_commutative());
  CHECK(e.check_associative());
  // omega = x0 x1 + x2 x3; the degree-2 basis is masks 3,5,6,9,10,12.
  Vec omega(6, Rational(0));
  omega[0] = 1;  // mask 3
  omega[5] = 1;  // mask 12
  CHECK(lefschetz_check(e.cup(omega)));
  Vec decomposable(6, Rational(0));
  decomposable[0] = 1;
  CHECK(!lefschetz_check(e.cup(decomposable)));
}

TEST_CASE("wedge and contraction operators")
{
  Ext x = make_ext(4);
  GradedAlgebra e = exterior_algebra(4);
  // Anticommutator i_a e_alpha + e_alpha i_a = alpha(a) * identity.
  int nt = x.space.total_dim();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Matrix w = x.wedge_monomial(1 << j);
      Matrix c = x.contract_gen(i);
      Matrix anti = c * w + w * c;
      CHECK(anti == (i == j ? Matrix::identity(nt) : Matrix(nt, nt)));
    }
  // The flat layout agrees with the algebra's (degree, index) layout.
  for (int mask = 0; mask < 16; ++mask) {
    int deg = x.degree_of(mask);
    CHECK(x.flat_of(mask) == x.space.offset(deg) + x.index_of(mask));
    CHECK(x.mask_of(deg, x.index_of(mask)) == mask);
  }
  // Star swaps 1 and the volume form.
  Matrix s = x.star();
  Vec one(nt, Rational(0)), vol(nt, Rational(0));
  one[x.flat_of(0)] = 1;
  vol[x.flat_of(15)] = 1;
  CHECK(s.apply(one) == vol);
  CHECK(s.apply(vol) == one);
}

TEST_CASE("univariate quotient reproduces the truncated polynomial algebra")
{
  Poly x3{{Exponents{3}, Rational(1)}};
  QuotientAlgebra q = quotient_algebra(1, {x3}, 5);
  CHECK(q.top == 2);
  GradedAlgebra p2 = projective_space_algebra(2);
  CHECK(q.algebra.space.pieces == p2.space.pieces);
  CHECK(q.algebra.basis_product(2, 0, 2, 0) == p2.basis_product(2, 0, 2, 0));
  CHECK(q.algebra.basis_product(2, 0, 4, 0) == p2.basis_product(2, 0, 4, 0));
}

TEST_CASE("symmetric-function quotient has the A2 coinvariant dimensions")
{
  // Sym(Q^3) modulo the elementary symmetric functions.
  Poly e1 = linear_poly(Vec{rat(1), rat(1), rat(1)});
  Poly e2{{Exponents{1, 1, 0}, Rational(1)},
          {Exponents{1, 0, 1}, Rational(1)},
          {Exponents{0, 1, 1}, Rational(1)}};
  Poly e3{{Exponents{1, 1, 1}, Rational(1)}};
  QuotientAlgebra q = quotient_algebra(3, {e1, e2, e3}, 6);
  CHECK(q.top == 3);
  CHECK(q.algebra.space.pieces == std::map<int, int>{{0, 1}, {2, 2}, {4, 2}, {6, 1}});
  CHECK(q.algebra.check_associative());
  CHECK(q.algebra.check_graded_commutative());
}

TEST_CASE("quotient nonzero at the cap is rejected")
{
  CHECK_THROWS(quotient_algebra(2, {}, 4));
}

TEST_CASE("tensor product of two lines matches the product algebra")
{
  GradedAlgebra p1 = projective_space_algebra(1);
  GradedAlgebra t = tensor_algebra(p1, p1);
  GradedAlgebra lines = product_of_lines_algebra();
  CHECK(t.space.pieces == lines.space.pieces);
  CHECK(t.check_unit());
  CHECK(t.check_associative());
  CHECK(t.check_graded_commutative());
  // (x tensor 1)(1 tensor x) is the top class; squares vanish.
  CHECK(t.basis_product(2, 0, 2, 1) == Vec{rat(1)});
  CHECK(t.basis_product(2, 0, 2, 0) == Vec{rat(0)});
}

TEST_CASE("generated subalgebra of the diagonal line")
{
  GradedAlgebra lines = product_of_lines_algebra();
  GradedAlgebra sub = subalgebra_algebra(lines, {Vec{rat(1), rat(1)}});
  CHECK(sub.space.pieces == std::map<int, int>{{0, 1}, {2, 1}, {4, 1}});
  CHECK(sub.check_unit());
  CHECK(sub.check_associative());
  auto spans = generated_subspaces(lines, {Vec{rat(1), rat(1)}});
  CHECK(spans.at(2).dim() == 1);
  CHECK(spans.at(4).dim() == 1);
}
