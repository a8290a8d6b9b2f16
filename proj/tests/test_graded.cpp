#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leflab/algebra.hpp"
#include "leflab/graded.hpp"

using namespace leflab;

TEST_CASE("h_of")
{
  GradedSpace s;
  s.pieces = {{-2, 1}, {0, 1}, {2, 1}};
  GradedMap h = h_of(s);
  CHECK(h.to_full() == Matrix::diagonal({rat(-2), rat(0), rat(2)}));

  GradedSpace s2;
  s2.pieces = {{0, 5}};
  CHECK(h_of(s2).is_zero());

  GradedSpace s3;
  s3.pieces = {{-1, 2}, {1, 2}};
  CHECK(h_of(s3).to_full() == Matrix::diagonal({rat(-1), rat(-1), rat(1), rat(1)}));
}

TEST_CASE("graded map algebra: compose, bracket, full round-trip")
{
  GradedSpace s;
  s.pieces = {{-2, 1}, {0, 1}, {2, 1}};
  GradedMap e = GradedMap::zero(s, 2);
  e.blocks[-2] = Matrix::identity(1);
  e.blocks[0] = Matrix::identity(1);
  GradedMap f = GradedMap::zero(s, -2);
  f.blocks[0] = Matrix::identity(1) * rat(2);
  f.blocks[2] = Matrix::identity(1) * rat(2);

  GradedMap h = bracket(e, f);
  CHECK(h.degree == 0);
  CHECK(h == h_of(s));

  CHECK(e.power(2).block(-2) == Matrix::identity(1));
  CHECK(e.power(3).is_zero());

  Matrix full = e.to_full();
  GradedMap back = GradedMap::from_full(s, 2, full);
  CHECK(back == e);
  CHECK_THROWS(GradedMap::from_full(s, 0, full));

  auto parts = homogeneous_parts(s, e.to_full() + f.to_full());
  CHECK(parts.size() == 2);
  CHECK(parts.count(2) == 1);
  CHECK(parts.count(-2) == 1);
}

TEST_CASE("fixture algebras are unital, commutative, associative")
{
  for (const GradedAlgebra& a : {projective_space_algebra(2), product_of_lines_algebra()}) {
    CHECK(a.check_unit());
    CHECK(a.check_graded_commutative());
    CHECK(a.check_associative());
  }
}

TEST_CASE("poincare form on the projective plane")
{
  GradedAlgebra a = projective_space_algebra(2);
  PairingForm phi = poincare_form(a, Vec{rat(1)});
  // centered degrees -2, 0, 2; phi(x, x) = 1 and phi(1, x^2) = -1
  CHECK(phi.block(0)(0, 0) == 1);
  CHECK(phi.block(-2)(0, 0) == -1);
  CHECK(phi.block(2)(0, 0) == -1);
  CHECK(phi.sign_symmetric(2));
  CHECK(phi.nondegenerate());
}

TEST_CASE("poincare form on the line is skew")
{
  GradedAlgebra a = projective_space_algebra(1);
  PairingForm phi = poincare_form(a, Vec{rat(1)});
  CHECK(phi.block(1)(0, 0) == 1);
  CHECK(phi.block(-1)(0, 0) == -1);
  CHECK(phi.sign_symmetric(1));
}

TEST_CASE("poincare form on the point")
{
  GradedAlgebra a = projective_space_algebra(0);
  PairingForm phi = poincare_form(a, Vec{rat(1)});
  CHECK(phi.block(0)(0, 0) == 1);
}

TEST_CASE("cup operators")
{
  GradedAlgebra plane = projective_space_algebra(2);
  CHECK(plane.cup(Vec{rat(0)}).is_zero());
  GradedMap cx = plane.cup(Vec{rat(1)});
  CHECK(cx.degree == 2);
  CHECK(cx.block(-2) == Matrix::identity(1));
  CHECK(cx.block(0) == Matrix::identity(1));

  GradedAlgebra lines = product_of_lines_algebra();
  GradedMap cxy = lines.cup(Vec{rat(1), rat(1)});
  CHECK(rank(cxy.block(-2)) == 1);
  CHECK(rank(cxy.block(0)) == 1);
  CHECK(cxy.block(0).rows() == 1);
  CHECK(cxy.block(0).cols() == 2);

  // cup operators commute for all degree-2 pairs
  GradedMap cx2 = lines.cup(Vec{rat(1), rat(0)});
  GradedMap cy2 = lines.cup(Vec{rat(0), rat(1)});
  CHECK(bracket(cx2, cy2).is_zero());
}

TEST_CASE("infinitesimal invariance")
{
  GradedAlgebra plane = projective_space_algebra(2);
  PairingForm phi = poincare_form(plane, Vec{rat(1)});
  CHECK(infinitesimal_invariance(plane.cup(Vec{rat(1)}), phi));

  // identity in every degree is not graded-invariant
  GradedMap id = GradedMap::zero(phi.space, 0);
  for (int d : phi.space.degrees()) id.blocks[d] = Matrix::identity(phi.space.dim(d));
  CHECK(!infinitesimal_invariance(id, phi));

  CHECK(infinitesimal_invariance(GradedMap::zero(phi.space, 2), phi));
}

TEST_CASE("cup invariance across fixtures")
{
  GradedAlgebra lines = product_of_lines_algebra();
  PairingForm phi = poincare_form(lines, Vec{rat(1)});
  CHECK(phi.sign_symmetric(2));
  CHECK(infinitesimal_invariance(lines.cup(Vec{rat(1), rat(0)}), phi));
  CHECK(infinitesimal_invariance(lines.cup(Vec{rat(0), rat(1)}), phi));
  CHECK(infinitesimal_invariance(lines.cup(Vec{rat(2), rat(-3)}), phi));
}
