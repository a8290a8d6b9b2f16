#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leflab/geomodels.hpp"
#include "leflab/lie.hpp"

using namespace leflab;

TEST_CASE("torus closure for n = 1")
{
  TorusTotal t = torus_total(1);
  // Degenerate case: the 2-form space is a line, so the e/f closure is a
  // single triple, while the full orthogonal algebra has dimension 6.
  CHECK(t.gen.g.dim() == 3);
  CHECK(t.spin.dim() == 6);
  CHECK(t.gen.has_h);
  JordanCheck jc = jordan_check(t.module, t.gen);
  CHECK(jc.degrees_202);
  CHECK(jc.f_commute);

  // The e/f closure sits inside the orthogonal image.
  for (const auto& [deg, mats] : t.gen.g.basis)
    for (const Matrix& b : mats) CHECK(t.spin.contains(deg, b));
}

TEST_CASE("torus closure for n = 2 and the contraction formula")
{
  TorusTotal t = torus_total(2);
  CHECK(t.gen.g.dim() == 28);
  CHECK(t.spin.dim() == 28);
  CHECK(t.gen.saturated);
  JordanCheck jc = jordan_check(t.module, t.gen);
  CHECK(jc.degrees_202);
  CHECK(jc.f_commute);

  // The dual of the standard symplectic form is the double contraction.
  const Ext& x = t.ext;
  std::map<int, Rational> el{{3, Rational(1)}, {12, Rational(1)}};
  GradedMap e = GradedMap::from_full(x.space, 2, x.wedge(el));
  REQUIRE(lefschetz_check(e));
  Matrix expected = x.contract_gen(1) * x.contract_gen(0) +
                    x.contract_gen(3) * x.contract_gen(2);
  CHECK(jm_dual(e).to_full() == expected);

  // Even part is a Lefschetz module with the progression shape.
  std::vector<int> even_dims = {1, 6, 1};  // centered degrees -2, 0, 2
  CHECK(progression_check(even_dims).first);
}

TEST_CASE("generator assignment preserves brackets")
{
  CHECK(verify_psi(1));
  CHECK(verify_psi(2));
}

TEST_CASE("torus closure equals the image of the orthogonal algebra")
{
  // For n = 2 the generator families of degrees +-2 lie in the e/f closure
  // and the dimensions agree, so the closure is exactly the image.
  TorusTotal t = torus_total(2);
  const Ext& x = t.ext;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      CHECK(t.gen.g.contains(2, x.wedge_monomial((1 << i) | (1 << j))));
      CHECK(t.gen.g.contains(-2, x.contract_gen(i) * x.contract_gen(j)));
    }
  CHECK(t.gen.g.dim() == 28);  // = dim so(8)
  for (const auto& [deg, mats] : t.spin.basis)
    for (const Matrix& b : mats) CHECK(t.gen.g.contains(deg, b));
}

TEST_CASE("Kaehler closures")
{
  TorusKahler k1 = torus_kahler(1, standard_complex_structure(1));
  CHECK(k1.a_dim == 1);
  CHECK(k1.gen.g.dim() == 3);

  TorusKahler k2 = torus_kahler(2, standard_complex_structure(2));
  CHECK(k2.a_dim == 4);
  CHECK(k2.gen.g.dim() == 15);

  // Kaehler closure sits inside the total closure.
  TorusTotal t2 = torus_total(2);
  for (const auto& [deg, mats] : k2.gen.g.basis)
    for (const Matrix& b : mats) CHECK(t2.gen.g.contains(deg, b));

  Matrix bad = Matrix::identity(4);
  CHECK_THROWS(torus_kahler(2, bad));
}

TEST_CASE("Rosati restriction identity")
{
  // Standard symplectic form on 2n coordinates: pair masks (0,1), (2,3), ...
  auto standard_kappa = [](int n) {
    int npairs = n * (2 * n - 1);
    Vec kappa(npairs, Rational(0));
    Ext x = make_ext(2 * n);
    // Locate the pair basis indices of x_{2t} ^ x_{2t+1}.
    int idx = 0;
    for (int mask = 0; mask < (1 << (2 * n)); ++mask) {
      if (__builtin_popcount(mask) != 2) continue;
      for (int t = 0; t < n; ++t)
        if (mask == (3 << (2 * t))) kappa[idx] = 1;
      ++idx;
    }
    return kappa;
  };

  Matrix j1 = standard_complex_structure(1);
  Vec k1 = standard_kappa(1);
  CHECK(rosati_check(1, j1, k1, k1));
  // n = 1: the only 2-form space is 1-dimensional, scaled lambda.
  Vec l1 = k1;
  for (Rational& c : l1) c *= 5;
  CHECK(rosati_check(1, j1, k1, l1));

  Matrix j2 = standard_complex_structure(2);
  Vec k2 = standard_kappa(2);
  CHECK(rosati_check(2, j2, k2, k2));
  // An independent J-invariant 2-form: x0^x3 - x1^x2 is invariant under the
  // standard J (check by Gram conjugation below), plus a generic mixture.
  Vec l2(6, Rational(0));
  // pair basis for 4 generators in mask order: 3,5,6,9,10,12
  l2[3] = 1;   // mask 9  = x0^x3
  l2[2] = -1;  // mask 6  = x1^x2
  CHECK(rosati_check(2, j2, k2, l2));
  Vec mix = l2;
  mix[0] += 2;  // add 2 kappa_1 component (mask 3)
  mix[5] += 7;  // and 7 (mask 12)
  CHECK(rosati_check(2, j2, k2, mix));

  // Decomposable kappa is rejected.
  Vec bad(6, Rational(0));
  bad[0] = 1;
  CHECK_THROWS(rosati_check(2, j2, bad, l2));
}

TEST_CASE("Albert-type matrix algebras")
{
  AlbertRecord q = albert_sku(rational_field(), 1);
  CHECK(q.dim_sku == 3);
  CHECK(q.dim_g == 3);
  CHECK(q.dim_u == 0);
  CHECK(q.ideals_ok);

  AlbertRecord qi = albert_sku(gaussian_field(), 1);
  CHECK(qi.dim_sku == 4);
  CHECK(qi.dim_g == 3);
  CHECK(qi.dim_u == 1);
  CHECK(qi.ideals_ok);

  AlbertRecord hh = albert_sku(hamilton_quaternions(), 1);
  CHECK(hh.dim_sku == 6);
  CHECK(hh.dim_g == 3);
  CHECK(hh.dim_u == 3);
  CHECK(hh.ideals_ok);
  CHECK(hh.g.adh_grading() == std::map<int, int>{{-2, 1}, {0, 1}, {2, 1}});
}

TEST_CASE("quaternionic local model")
{
  HkRecord hk = hk_model();
  CHECK(hk.g.dim() == 10);
  CHECK(hk.g.adh_grading() == std::map<int, int>{{-2, 3}, {0, 4}, {2, 3}});
  CHECK(hk.duals_match);
  CHECK(hk.bracket_identity);
  CHECK(hk.m_dims == std::map<int, int>{{0, 1}, {2, 3}, {4, 1}});
  CHECK(hk.m_star_invariant);
  CHECK(hk.asd_killed);
  KillingResult kr = killing_semisimple(hk.g);
  CHECK(kr.semisimple);
}
