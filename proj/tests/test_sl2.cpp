#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leflab/algebra.hpp"
#include "leflab/sl2.hpp"

using namespace leflab;

namespace {

// V(k): single string v_0 -> v_1 -> ... -> v_k with e v_j = v_{j+1}.
GradedMap string_module(int k)
{
  GradedSpace s;
  for (int j = 0; j <= k; ++j) s.pieces[-k + 2 * j] = 1;
  GradedMap e = GradedMap::zero(s, 2);
  for (int j = 0; j < k; ++j) e.blocks[-k + 2 * j] = Matrix::identity(1);
  return e;
}

// Independent oracle for uniqueness: the affine solution set of [e, f'] = h
// over degree -2 maps, solved as one linear system in the block entries.
std::size_t solution_count_bound(const GradedMap& e)
{
  const GradedSpace& s = e.space;
  // Unknowns: entries of f' blocks (source degree k -> k-2).
  std::vector<std::tuple<int, int, int>> unknowns;  // (src degree, row, col)
  for (int k : s.degrees())
    if (s.dim(k - 2) > 0)
      for (int i = 0; i < s.dim(k - 2); ++i)
        for (int j = 0; j < s.dim(k); ++j) unknowns.emplace_back(k, i, j);
  Matrix h = h_of(s).to_full();
  Matrix efull = e.to_full();
  int n = s.total_dim();
  std::vector<Vec> rows;
  Vec rhs;
  // Equation (e f' - f' e)(r, c) = h(r, c) for all r, c.
  // Build the coefficient of each unknown in each equation.
  std::vector<Matrix> unit_fulls;
  for (auto [k, i, j] : unknowns) {
    GradedMap u = GradedMap::zero(s, -2);
    Matrix b(s.dim(k - 2), s.dim(k));
    b(i, j) = 1;
    u.blocks[k] = b;
    unit_fulls.push_back(bracket(efull, u.to_full()));
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Vec eq(unknowns.size(), rat(0));
      for (std::size_t t = 0; t < unknowns.size(); ++t) eq[t] = unit_fulls[t](r, c);
      rows.push_back(eq);
      rhs.push_back(h(r, c));
    }
  Matrix sys = Matrix::from_rows(rows, unknowns.size());
  auto sol = solve_any(sys, rhs);
  REQUIRE(sol.has_value());
  return kernel_basis(sys).rows();  // 0 means the solution is unique
}

GradedMap dual_from_solution(const GradedMap& e)
{
  // Global linear solve for f with [e, f] = h (oracle construction).
  const GradedSpace& s = e.space;
  std::vector<std::tuple<int, int, int>> unknowns;
  for (int k : s.degrees())
    if (s.dim(k - 2) > 0)
      for (int i = 0; i < s.dim(k - 2); ++i)
        for (int j = 0; j < s.dim(k); ++j) unknowns.emplace_back(k, i, j);
  Matrix h = h_of(s).to_full();
  Matrix efull = e.to_full();
  int n = s.total_dim();
  std::vector<Vec> rows;
  Vec rhs;
  std::vector<Matrix> unit_fulls;
  for (auto [k, i, j] : unknowns) {
    GradedMap u = GradedMap::zero(s, -2);
    Matrix b(s.dim(k - 2), s.dim(k));
    b(i, j) = 1;
    u.blocks[k] = b;
    unit_fulls.push_back(bracket(efull, u.to_full()));
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Vec eq(unknowns.size(), rat(0));
      for (std::size_t t = 0; t < unknowns.size(); ++t) eq[t] = unit_fulls[t](r, c);
      rows.push_back(eq);
      rhs.push_back(h(r, c));
    }
  auto sol = solve_unique(Matrix::from_rows(rows, unknowns.size()), rhs);
  REQUIRE(sol.has_value());
  GradedMap f = GradedMap::zero(s, -2);
  for (std::size_t t = 0; t < unknowns.size(); ++t) {
    auto [k, i, j] = unknowns[t];
    auto it = f.blocks.find(k);
    if (it == f.blocks.end()) it = f.blocks.emplace(k, Matrix(s.dim(k - 2), s.dim(k))).first;
    it->second(i, j) = (*sol)[t];
  }
  return f;
}

}  // namespace

TEST_CASE("lefschetz_check basics")
{
  CHECK(lefschetz_check(string_module(2)));
  CHECK(lefschetz_check(string_module(1)));

  GradedSpace s;
  s.pieces = {{-2, 1}, {2, 1}};
  CHECK(!lefschetz_check(GradedMap::zero(s, 2)));

  GradedAlgebra lines = product_of_lines_algebra();
  CHECK(lefschetz_check(lines.cup(Vec{rat(1), rat(1)})));
  CHECK(!lefschetz_check(lines.cup(Vec{rat(1), rat(0)})));
}

TEST_CASE("jm_dual on strings")
{
  GradedMap e = string_module(2);
  GradedMap f = jm_dual(e);
  CHECK(f.block(0)(0, 0) == 2);
  CHECK(f.block(2)(0, 0) == 2);
  CHECK(bracket(e, f) == h_of(e.space));

  GradedMap e1 = string_module(1);
  GradedMap f1 = jm_dual(e1);
  CHECK(f1.block(1)(0, 0) == 1);
}

TEST_CASE("jm_dual against the global linear-solve oracle")
{
  GradedAlgebra lines = product_of_lines_algebra();
  GradedMap e = lines.cup(Vec{rat(1), rat(1)});
  GradedMap f = jm_dual(e);
  CHECK(bracket(e, f) == h_of(e.space));
  CHECK(solution_count_bound(e) == 0);
  CHECK(dual_from_solution(e) == f);

  GradedMap es = string_module(3);
  CHECK(solution_count_bound(es) == 0);
  CHECK(dual_from_solution(es) == jm_dual(es));
}

TEST_CASE("jm_dual inherits infinitesimal invariance")
{
  GradedAlgebra lines = product_of_lines_algebra();
  PairingForm phi = poincare_form(lines, Vec{rat(1)});
  GradedMap e = lines.cup(Vec{rat(1), rat(1)});
  REQUIRE(infinitesimal_invariance(e, phi));
  CHECK(infinitesimal_invariance(jm_dual(e), phi));
}

TEST_CASE("sl2 type and decomposition completeness")
{
  CHECK(sl2_type(string_module(2)) == std::vector<std::pair<int, int>>{{2, 1}});
  CHECK(sl2_type(string_module(3)) == std::vector<std::pair<int, int>>{{3, 1}});

  GradedAlgebra lines = product_of_lines_algebra();
  GradedMap e = lines.cup(Vec{rat(1), rat(1)});
  CHECK(sl2_type(e) == std::vector<std::pair<int, int>>{{0, 1}, {2, 1}});

  PrimitiveDecomposition pd = primitive_decomposition(e);
  int total = 0;
  for (const auto& [k, prims] : pd.primitives) total += (k + 1) * (int)prims.rows();
  CHECK(total == e.space.total_dim());
}

TEST_CASE("primitive decomposition rejects non-Lefschetz input")
{
  GradedSpace s;
  s.pieces = {{-2, 1}, {2, 1}};
  CHECK_THROWS(primitive_decomposition(GradedMap::zero(s, 2)));
}

TEST_CASE("progression_check")
{
  CHECK(progression_check({1, 2, 2, 2, 1}) == std::pair<bool, int>{true, 1});
  CHECK(progression_check({2, 1, 2}).first == false);
  CHECK(progression_check({1, 1, 2, 1, 1}).first == false);
  CHECK(progression_check({1}) == std::pair<bool, int>{true, 0});
  CHECK(progression_check({1, 1}) == std::pair<bool, int>{true, 0});
  CHECK(progression_check({1, 2, 3, 2, 1}) == std::pair<bool, int>{true, 2});
  CHECK(progression_check({1, 2, 1, 2, 1}).first == false);
  CHECK(progression_check({2, 1}).first == false);
}
