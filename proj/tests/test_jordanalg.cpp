#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leflab/jordanalg.hpp"
#include "leflab/lie.hpp"

using namespace leflab;

namespace {

GenerateResult closure_of(const FrobeniusModel& model)
{
  LefschetzModule mod = model_module(model);
  return generate_g(mod, SearchOptions{});
}

}  // namespace

TEST_CASE("dimensions of the four fundamental models")
{
  CHECK(frobenius_model_A(2).algebra.space.pieces ==
        std::map<int, int>{{0, 1}, {2, 4}, {4, 1}});
  CHECK(frobenius_model_C(2).algebra.space.pieces ==
        std::map<int, int>{{0, 1}, {2, 3}, {4, 1}});
  CHECK(frobenius_model_D(2).algebra.space.pieces ==
        std::map<int, int>{{0, 1}, {2, 6}, {4, 1}});
  CHECK(frobenius_model_BD(Vec{rat(1), rat(1), rat(1)}).algebra.space.pieces ==
        std::map<int, int>{{0, 1}, {2, 3}, {4, 1}});
  CHECK(frobenius_model_A(3).algebra.space.pieces ==
        std::map<int, int>{{0, 1}, {2, 9}, {4, 9}, {6, 1}});
  CHECK_THROWS(frobenius_model_BD(Vec{rat(1), rat(0)}));
}

TEST_CASE("the models are unital commutative associative Frobenius algebras")
{
  for (const FrobeniusModel& model :
       {frobenius_model_A(2), frobenius_model_C(2), frobenius_model_D(2),
        frobenius_model_BD(Vec{rat(1), rat(2), rat(-1)})}) {
    CHECK(model.algebra.check_unit());
    CHECK(model.algebra.check_graded_commutative());
    CHECK(model.algebra.check_associative());
    // Frobenius: the multiplication pairing into the top piece is perfect.
    PairingForm phi = poincare_form(model.algebra, Vec{rat(1)});
    CHECK(phi.nondegenerate());
  }
}

TEST_CASE("presentations by quadratic relations")
{
  CHECK(presentation_check(frobenius_model_A(1)));
  CHECK(presentation_check(frobenius_model_A(2)));
  CHECK(presentation_check(frobenius_model_A(3)));
  CHECK(presentation_check(frobenius_model_C(1)));
  CHECK(presentation_check(frobenius_model_C(2)));
  CHECK(presentation_check(frobenius_model_C(3)));
  CHECK(presentation_check(frobenius_model_D(2)));
  CHECK(presentation_check(frobenius_model_BD(Vec{rat(1), rat(1), rat(1)})));
  CHECK(presentation_check(frobenius_model_BD(Vec{rat(1), rat(2), rat(-1), rat(3)})));
}

TEST_CASE("Lie closures of the models have the classical dimensions")
{
  struct Row {
    FrobeniusModel model;
    int expected_dim;
  };
  std::vector<Row> rows;
  rows.push_back({frobenius_model_A(2), 4 * 2 * 2 - 1});            // sl(4)
  rows.push_back({frobenius_model_C(2), 2 * (2 * 2 + 1)});          // sp(4)
  rows.push_back({frobenius_model_D(2), 2 * 2 * (4 * 2 - 1)});      // so(8)
  rows.push_back({frobenius_model_BD(Vec{rat(1), rat(1), rat(1)}), 10});  // so(5)
  for (const Row& row : rows) {
    LefschetzModule mod = model_module(row.model);
    GenerateResult gen = generate_g(mod, SearchOptions{});
    CHECK(gen.g.dim() == row.expected_dim);
    CHECK(gen.has_h);
    CHECK(gen.saturated);
    JordanCheck jc = jordan_check(mod, gen);
    CHECK(jc.degrees_202);
    CHECK(jc.f_commute);
  }
}

TEST_CASE("degree-zero closure elements killing the unit are derivations")
{
  for (const FrobeniusModel& model :
       {frobenius_model_A(2), frobenius_model_C(2),
        frobenius_model_BD(Vec{rat(1), rat(1), rat(1)})}) {
    GenerateResult gen = closure_of(model);
    CHECK(derivation_property(model.algebra, gen.g));
  }
}

TEST_CASE("level one returns the model itself")
{
  FrobeniusModel bd = frobenius_model_BD(Vec{rat(1), rat(1), rat(-1)});
  GradedAlgebra l1 = level_k(bd, 1);
  CHECK(l1.space.pieces == bd.algebra.space.pieces);
  CHECK(l1.basis_product(2, 0, 2, 0) == bd.algebra.basis_product(2, 0, 2, 0));
}

TEST_CASE("higher levels of the smallest quadric model")
{
  FrobeniusModel bd = frobenius_model_BD(Vec{rat(1), rat(1), rat(-1)});
  GradedAlgebra l2 = level_k(bd, 2);
  CHECK(l2.space.pieces ==
        std::map<int, int>{{0, 1}, {2, 3}, {4, 6}, {6, 3}, {8, 1}});
  CHECK(l2.check_unit());
  CHECK(l2.check_graded_commutative());
  CHECK(l2.check_associative());
  int total = 0;
  for (int d : l2.space.degrees()) total += l2.space.dim(d);
  CHECK(total == 14);
}

TEST_CASE("levels of the one-variable model are truncated polynomial rings")
{
  FrobeniusModel a1 = frobenius_model_A(1);
  for (int k = 1; k <= 3; ++k) {
    GradedAlgebra lk = level_k(a1, k);
    CHECK(lk.top_degree() == 2 * k);
    for (int d = 0; d <= 2 * k; d += 2) CHECK(lk.space.dim(d) == 1);
    GradedAlgebra pk = projective_space_algebra(k);
    for (int d = 0; d <= 2 * k; d += 2)
      for (int e = 0; d + e <= 2 * k; e += 2) {
        Vec lhs = lk.basis_product(d, 0, e, 0);
        Vec rhs = pk.basis_product(d, 0, e, 0);
        // Both are one-dimensional; compare up to the generator scaling.
        CHECK((lhs.empty() ? rhs.empty() : (lhs[0] == 0) == (rhs[0] == 0)));
      }
  }
}

TEST_CASE("direct quadric quotient at level two")
{
  BdLevelKResult r = bd_level_k_direct(Vec{rat(1), rat(1), rat(-1)}, 2);
  CHECK(r.powers_certified);
  CHECK(r.quotient.top == 4);
  CHECK(r.quotient.algebra.space.pieces ==
        std::map<int, int>{{0, 1}, {2, 3}, {4, 6}, {6, 3}, {8, 1}});
  CHECK(r.invariants_total == 3);
  CHECK(r.invariant_dims == std::vector<int>{1, 0, 1, 0, 1});
  CHECK(r.invariants_are_u_powers);
  CHECK(r.soccle_ok);

  // The tensor-power realization has the same graded dimensions, and the
  // power span certificate makes the generator map an isomorphism.
  GradedAlgebra l2 = level_k(frobenius_model_BD(Vec{rat(1), rat(1), rat(-1)}), 2);
  CHECK(l2.space.pieces == r.quotient.algebra.space.pieces);
}

TEST_CASE("direct quadric quotient at level one reproduces the model")
{
  BdLevelKResult r = bd_level_k_direct(Vec{rat(1), rat(1), rat(-1)}, 1);
  CHECK(r.quotient.algebra.space.pieces ==
        std::map<int, int>{{0, 1}, {2, 3}, {4, 1}});
  CHECK(r.powers_certified);
  CHECK(r.invariants_total == 2);
  CHECK(r.soccle_ok);
}

TEST_CASE("anisotropic forms admit no rational isotropic vectors")
{
  CHECK_THROWS(bd_level_k_direct(Vec{rat(1), rat(1), rat(1)}, 2));
}
