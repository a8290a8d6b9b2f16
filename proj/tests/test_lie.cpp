#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leflab/algebra.hpp"
#include "leflab/lie.hpp"
#include "leflab/sl2.hpp"

using namespace leflab;

namespace {

GradedMap string_module(int k)
{
  GradedSpace s;
  for (int j = 0; j <= k; ++j) s.pieces[-k + 2 * j] = 1;
  GradedMap e = GradedMap::zero(s, 2);
  for (int j = 0; j < k; ++j) e.blocks[-k + 2 * j] = Matrix::identity(1);
  return e;
}

GradedLieAlgebra sl2_on_v2()
{
  GradedMap e = string_module(2);
  return lie_closure({e, jm_dual(e)});
}

}  // namespace

TEST_CASE("closure of e, f on V(2) is sl2")
{
  GradedLieAlgebra g = sl2_on_v2();
  CHECK(g.dim() == 3);
  CHECK(g.adh_grading() == std::map<int, int>{{-2, 1}, {0, 1}, {2, 1}});
  CHECK(g.contains(0, h_of(g.ambient).to_full()));
}

TEST_CASE("closure on the product of two lines is sl2 x sl2")
{
  GradedAlgebra lines = product_of_lines_algebra();
  GradedMap ex = lines.cup(Vec{rat(1), rat(0)});
  GradedMap ey = lines.cup(Vec{rat(0), rat(1)});
  GradedMap e = lines.cup(Vec{rat(1), rat(1)});
  GradedLieAlgebra g = lie_closure({ex, ey, jm_dual(e)});
  CHECK(g.dim() == 6);
  auto k = killing_semisimple(g);
  CHECK(k.semisimple);
  CHECK(!is_simple(g));
  CHECK(lie_center(g).dim() == 0);
}

TEST_CASE("closure is order independent and idempotent")
{
  GradedMap e = string_module(2);
  GradedMap f = jm_dual(e);
  GradedLieAlgebra g1 = lie_closure({e, f});
  GradedLieAlgebra g2 = lie_closure({f, e});
  CHECK(g1.spans.at(0) == g2.spans.at(0));
  CHECK(g1.spans.at(2) == g2.spans.at(2));
  CHECK(g1.spans.at(-2) == g2.spans.at(-2));

  std::vector<std::pair<int, Matrix>> basis_gens;
  for (auto& [deg, m] : g1.flat_basis()) basis_gens.emplace_back(deg, m);
  GradedLieAlgebra g3 = lie_closure(g1.ambient, basis_gens);
  CHECK(g3.dim() == g1.dim());
  CHECK(g3.spans.at(0) == g1.spans.at(0));
}

TEST_CASE("killing form of sl2 has signature (2,1,0)")
{
  GradedLieAlgebra g = sl2_on_v2();
  auto k = killing_semisimple(g);
  CHECK(k.semisimple);
  CHECK(k.sig == Signature{2, 1, 0});
  CHECK(is_simple(g));
  CHECK(fingerprint(g) ==
        LieFingerprint{3, {{-2, 1}, {0, 1}, {2, 1}}, 1, Signature{2, 1, 0}, 0, true});
}

TEST_CASE("one-dimensional abelian algebra is not semisimple")
{
  GradedSpace s;
  s.pieces = {{-1, 1}, {1, 1}};
  GradedLieAlgebra g = lie_closure({h_of(s)});
  CHECK(g.dim() == 1);
  auto k = killing_semisimple(g);
  CHECK(!k.semisimple);
  CHECK(lie_center(g).dim() == 1);
  CHECK(!is_simple(g));
}

TEST_CASE("grading law holds on the closure")
{
  GradedAlgebra lines = product_of_lines_algebra();
  GradedMap e = lines.cup(Vec{rat(1), rat(1)});
  GradedLieAlgebra g = lie_closure({e, jm_dual(e)});
  auto fb = g.flat_basis();
  for (const auto& [di, mi] : fb)
    for (const auto& [dj, mj] : fb) {
      Matrix br = bracket(mi, mj);
      CHECK(g.contains(di + dj, br));
    }
}

TEST_CASE("semisimple closure has [g,g] = g and trivial center")
{
  GradedAlgebra lines = product_of_lines_algebra();
  GradedMap ex = lines.cup(Vec{rat(1), rat(0)});
  GradedMap ey = lines.cup(Vec{rat(0), rat(1)});
  GradedMap e = lines.cup(Vec{rat(1), rat(1)});
  GradedLieAlgebra g = lie_closure({ex, ey, jm_dual(e)});
  auto fb = g.flat_basis();
  std::vector<std::pair<int, Matrix>> brackets;
  for (std::size_t i = 0; i < fb.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!bracket(fb[i].second, fb[j].second).is_zero())
        brackets.emplace_back(fb[i].first + fb[j].first, bracket(fb[i].second, fb[j].second));
  GradedLieAlgebra derived = lie_closure(g.ambient, brackets);
  CHECK(derived.dim() == g.dim());
  CHECK(lie_center(g).dim() == 0);
}

TEST_CASE("closure preserves an invariant pairing when the generators do")
{
  GradedAlgebra lines = product_of_lines_algebra();
  PairingForm phi = poincare_form(lines, Vec{rat(1)});
  GradedMap e = lines.cup(Vec{rat(1), rat(1)});
  GradedLieAlgebra g = lie_closure({e, jm_dual(e)});
  for (const auto& [deg, m] : g.flat_basis()) {
    GradedMap op = GradedMap::from_full(g.ambient, deg, m);
    CHECK(infinitesimal_invariance(op, phi));
  }
}

TEST_CASE("minimal ideal separates the two sl2 factors")
{
  GradedAlgebra lines = product_of_lines_algebra();
  GradedMap ex = lines.cup(Vec{rat(1), rat(0)});
  GradedMap ey = lines.cup(Vec{rat(0), rat(1)});
  GradedMap e = lines.cup(Vec{rat(1), rat(1)});
  GradedLieAlgebra g = lie_closure({ex, ey, jm_dual(e)});
  auto c = g.coordinates(2, ex.to_full());
  REQUIRE(c.has_value());
  Vec x(g.dim(), rat(0));
  int off = 0;
  for (const auto& [deg, b] : g.basis) {
    if (deg == 2)
      for (std::size_t i = 0; i < c->size(); ++i) x[off + i] = (*c)[i];
    off += (int)b.size();
  }
  CHECK(minimal_ideal(g, x).dim() == 3);
}
