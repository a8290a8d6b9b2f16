#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leflab/lefmod.hpp"

using namespace leflab;

namespace {

LefschetzModule lines_module()
{
  return module_from_algebra(product_of_lines_algebra(), Vec{rat(1)});
}

LefschetzModule line_module()
{
  return module_from_algebra(projective_space_algebra(1), Vec{rat(1)});
}

}  // namespace

TEST_CASE("on the product of two lines, x + y is accepted and x alone is not")
{
  LefschetzModule L = lines_module();
  CHECK(!lefschetz_check(L.op(Vec{rat(1), rat(0)})));
  CHECK(!lefschetz_check(L.op(Vec{rat(0), rat(1)})));
  CHECK(lefschetz_check(L.op(Vec{rat(1), rat(1)})));
  CHECK(lefschetz_check(L.op(Vec{rat(1), rat(-1)})));

  auto found = find_lefschetz_element(L);
  REQUIRE(found.has_value());
  CHECK(lefschetz_check(L.op(*found)));
}

TEST_CASE("a single generator of square zero admits no Lefschetz element")
{
  GradedAlgebra lines = product_of_lines_algebra();
  LefschetzModule L = module_from_algebra(lines, Vec{rat(1)}, {Vec{rat(1), rat(0)}});
  CHECK(!find_lefschetz_element(L).has_value());
  CHECK_THROWS(generate_g(L));
}

TEST_CASE("generated algebra of the product of two lines is sl2 x sl2")
{
  LefschetzModule L = lines_module();
  GenerateResult gen = generate_g(L);
  CHECK(gen.g.dim() == 6);
  CHECK(gen.g.adh_grading() == std::map<int, int>{{-2, 2}, {0, 2}, {2, 2}});
  CHECK(gen.saturated);
  CHECK(gen.has_h);
  auto k = killing_semisimple(gen.g);
  CHECK(k.semisimple);
  CHECK(!is_simple(gen.g));

  // The attached pairing is invariant under everything generated.
  REQUIRE(L.phi.has_value());
  for (const auto& [deg, m] : gen.g.flat_basis())
    CHECK(infinitesimal_invariance(GradedMap::from_full(L.M, deg, m), *L.phi));
}

TEST_CASE("primitive subspace of the product of two lines sits in the bottom degree")
{
  LefschetzModule L = lines_module();
  GenerateResult gen = generate_g(L);
  auto prim = primitive_subspace(gen.g);
  REQUIRE(prim.size() == 1);
  CHECK(prim.count(-2) == 1);
  CHECK(prim.at(-2).dim() == 1);
}

TEST_CASE("jordan check passes on the product of two lines")
{
  LefschetzModule L = lines_module();
  GenerateResult gen = generate_g(L);
  JordanCheck jc = jordan_check(L, gen);
  CHECK(jc.degrees_202);
  CHECK(jc.f_commute);
}

TEST_CASE("frobenius order of the product of two lines is full")
{
  LefschetzModule L = lines_module();
  FrobeniusRecord rec = frobenius_order(L, L.depth());
  CHECK(rec.dim_lowest == 1);
  CHECK(rec.map_iso);
  CHECK(rec.order == 2);
  CHECK(rec.full);
}

TEST_CASE("frobenius order collapses when a generator is dropped")
{
  GradedAlgebra lines = product_of_lines_algebra();
  LefschetzModule L = module_from_algebra(lines, Vec{rat(1)}, {Vec{rat(1), rat(0)}});
  FrobeniusRecord rec = frobenius_order(L, L.depth());
  CHECK(!rec.map_iso);
  CHECK(rec.order == 0);
  CHECK(!rec.full);
}

TEST_CASE("invariant form on the projective plane matches the cup-product pairing up to scale")
{
  GradedAlgebra p2 = projective_space_algebra(2);
  LefschetzModule L = module_from_algebra(p2, Vec{rat(1)});
  PairingForm psi = invariant_form(L, Vec{rat(1)}, Vec{rat(1)});
  REQUIRE(L.phi.has_value());
  CHECK(psi.nondegenerate());
  CHECK(psi.sign_symmetric(2));
  // Fix the ratio on the middle block, then check it is the global ratio.
  Rational ratio = psi.block(0)(0, 0) / L.phi->block(0)(0, 0);
  for (int c : {-2, 0, 2}) CHECK(psi.block(c) == L.phi->block(c) * ratio);
  // Invariance under the generator and its dual.
  GradedMap e = L.a_basis[0];
  CHECK(infinitesimal_invariance(e, psi));
  CHECK(infinitesimal_invariance(jm_dual(e), psi));
}

TEST_CASE("box plus of two lines needs a mixed Lefschetz element")
{
  LefschetzModule p1 = line_module();
  LefschetzModule sum = box_plus(p1, p1);
  CHECK(sum.M.pieces == std::map<int, int>{{-1, 2}, {1, 2}});
  CHECK(!lefschetz_check(sum.op(Vec{rat(1), rat(0)})));
  CHECK(lefschetz_check(sum.op(Vec{rat(1), rat(1)})));
  GenerateResult gen = generate_g(sum);
  CHECK(gen.g.dim() == 6);
  CHECK(gen.has_h);
}

TEST_CASE("box times of two lines reproduces the product of two lines")
{
  LefschetzModule p1 = line_module();
  LefschetzModule prod = box_times(p1, p1);
  CHECK(prod.M.pieces == std::map<int, int>{{-2, 1}, {0, 2}, {2, 1}});
  CHECK(lefschetz_check(prod.op(Vec{rat(1), rat(1)})));
  CHECK(!lefschetz_check(prod.op(Vec{rat(1), rat(0)})));
  GenerateResult gen = generate_g(prod);
  LefschetzModule lines = lines_module();
  GenerateResult gen2 = generate_g(lines);
  CHECK(fingerprint(gen.g) == fingerprint(gen2.g));
  CHECK(gen.g.dim() == 6);
}

TEST_CASE("the non-reductive example fails Cartan's criterion")
{
  LefschetzModule L = nonreductive_example();
  REQUIRE(L.phi.has_value());
  CHECK(L.phi->nondegenerate());
  CHECK(L.phi->sign_symmetric(2));
  for (const GradedMap& a : L.a_basis) CHECK(infinitesimal_invariance(a, *L.phi));

  CHECK(lefschetz_check(L.op(Vec{rat(1), rat(0)})));
  CHECK(!lefschetz_check(L.op(Vec{rat(0), rat(1)})));

  GenerateResult gen = generate_g(L);
  CHECK(gen.has_h);
  auto k = killing_semisimple(gen.g);
  CHECK(!k.semisimple);
  CHECK(k.sig.zero > 0);
  CHECK(!is_simple(gen.g));
}

TEST_CASE("operator coefficient count is checked")
{
  LefschetzModule L = lines_module();
  CHECK_THROWS(L.op(Vec{rat(1)}));
}
