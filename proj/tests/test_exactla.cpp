#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "leflab/matrix.hpp"
#include "leflab/subspace.hpp"

using namespace leflab;

namespace {

// Cofactor-expansion determinant, independent of the elimination code path.
Rational det_cofactor(const Matrix& m)
{
  std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Rational d(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Rational term = m(0, j) * det_cofactor(minor);
    d += (j % 2 == 0) ? term : -term;
  }
  return d;
}

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo = -5, int hi = 5)
{
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

Matrix random_invertible(std::mt19937& rng, std::size_t n)
{
  for (;;) {
    Matrix m = random_matrix(rng, n, n);
    if (determinant(m) != 0) return m;
  }
}

}  // namespace

TEST_CASE("rational parse and print round-trip")
{
  CHECK(rat_str(rat_parse("2/4")) == "1/2");
  CHECK(rat_str(rat_parse("-6/4")) == "-3/2");
  CHECK(rat_str(rat_parse("7")) == "7");
  CHECK(rat_str(rat_parse("0/5")) == "0");
  CHECK(rat_parse("3/-6") == Rational(-1, 2));
  CHECK_THROWS(rat_parse(""));
  CHECK_THROWS(rat_parse("1/0"));
  CHECK_THROWS(rat_parse("a/b"));
  CHECK_THROWS(rat_parse("1/2/3"));
}

TEST_CASE("rref basics")
{
  auto r = rref(Matrix::identity(3));
  CHECK(r.reduced == Matrix::identity(3));
  CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

  Matrix m = Matrix::from_rows({{rat(2), rat(4)}, {rat(1), rat(2)}}, 2);
  auto r2 = rref(m);
  CHECK(r2.pivots == std::vector<std::size_t>{0});
  CHECK(r2.reduced(0, 0) == 1);
  CHECK(r2.reduced(0, 1) == 2);
}

TEST_CASE("rref is idempotent and rank agrees with determinant oracle")
{
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, 4, 4);
    auto r = rref(m);
    auto r2 = rref(r.reduced);
    CHECK(r2.reduced == r.reduced);
    bool full_rank = r.pivots.size() == 4;
    CHECK(full_rank == (det_cofactor(m) != 0));
    CHECK(determinant(m) == det_cofactor(m));
  }
}

TEST_CASE("kernel")
{
  CHECK(kernel_basis(Matrix::identity(2)).rows() == 0);
  CHECK(kernel_basis(Matrix(2, 3)).rows() == 3);

  Matrix m = Matrix::from_rows({{rat(1), rat(1), rat(0)}}, 3);
  Matrix k = kernel_basis(m);
  CHECK(k.rows() == 2);
  for (std::size_t i = 0; i < k.rows(); ++i) {
    Vec prod = m.apply(k.row(i));
    for (const auto& x : prod) CHECK(x == 0);
  }
}

TEST_CASE("kernel multiply-back on random matrices")
{
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix m = random_matrix(rng, 3, 6);
    Matrix k = kernel_basis(m);
    CHECK(k.rows() == 6 - rank(m));
    for (std::size_t i = 0; i < k.rows(); ++i) {
      Vec prod = m.apply(k.row(i));
      for (const auto& x : prod) CHECK(x == 0);
    }
  }
}

TEST_CASE("signature basics")
{
  CHECK(signature(Matrix::identity(3)) == Signature{3, 0, 0});
  CHECK(signature(Matrix::diagonal({rat(1), rat(-1), rat(0)})) == Signature{1, 1, 1});

  // Killing form of sl2 in the (e,h,f) basis.
  Matrix killing = Matrix::from_rows({{rat(0), rat(0), rat(4)},
                                      {rat(0), rat(8), rat(0)},
                                      {rat(4), rat(0), rat(0)}},
                                     3);
  // Hand diagonalization: on span(e+f, h, e-f) the form is diag(8, 8, -8).
  CHECK(signature(killing) == Signature{2, 1, 0});

  CHECK_THROWS(signature(Matrix::from_rows({{rat(0), rat(1)}, {rat(0), rat(0)}}, 2)));
}

TEST_CASE("signature is congruence invariant")
{
  std::mt19937 rng(99);
  Matrix forms[] = {
      Matrix::diagonal({rat(1), rat(1), rat(-1), rat(0)}),
      Matrix::from_rows({{rat(0), rat(1), rat(0), rat(0)},
                         {rat(1), rat(0), rat(0), rat(0)},
                         {rat(0), rat(0), rat(2), rat(1)},
                         {rat(0), rat(0), rat(1), rat(2)}},
                        4),
  };
  for (const Matrix& f : forms) {
    Signature s = signature(f);
    for (int trial = 0; trial < 5; ++trial) {
      Matrix a = random_invertible(rng, 4);
      CHECK(signature(a.transpose() * f * a) == s);
    }
  }
}

TEST_CASE("subspace canonical form and arithmetic")
{
  Matrix m1 = Matrix::from_rows({{rat(1), rat(2), rat(3)}, {rat(2), rat(4), rat(6)}}, 3);
  Matrix m2 = Matrix::from_rows({{rat(-3), rat(-6), rat(-9)}}, 3);
  Subspace s1 = Subspace::span_rows(m1);
  Subspace s2 = Subspace::span_rows(m2);
  CHECK(s1 == s2);
  CHECK(s1.dim() == 1);
  CHECK(s1.contains(Vec{rat(5), rat(10), rat(15)}));
  CHECK(!s1.contains(Vec{rat(1), rat(0), rat(0)}));

  Subspace e1 = Subspace::span_rows(Matrix::from_rows({{rat(1), rat(0), rat(0)}}, 3));
  Subspace sum = s1.sum(e1);
  CHECK(sum.dim() == 2);
  CHECK(sum.contains(s1));
  CHECK(sum.contains(e1));

  Subspace inter = sum.intersect(e1);
  CHECK(inter == e1);
  CHECK(s1.intersect(e1).is_zero());
}

TEST_CASE("subspace ops are order independent and associative on random triples")
{
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 8; ++trial) {
    Subspace a = Subspace::span_rows(random_matrix(rng, 2, 5));
    Subspace b = Subspace::span_rows(random_matrix(rng, 2, 5));
    Subspace c = Subspace::span_rows(random_matrix(rng, 3, 5));
    CHECK(a.sum(b) == b.sum(a));
    CHECK(a.sum(b).sum(c) == a.sum(b.sum(c)));
    CHECK(a.intersect(b) == b.intersect(a));
    CHECK(a.intersect(b).intersect(c) == a.intersect(b.intersect(c)));
    CHECK(a.sum(b).contains(a));
    CHECK(a.contains(a.intersect(c)));
    // Dimension formula.
    CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
  }
}

TEST_CASE("subspace coordinates reconstruct the vector")
{
  Subspace s = Subspace::span_rows(
      Matrix::from_rows({{rat(1), rat(1), rat(0)}, {rat(0), rat(2), rat(2)}}, 3));
  Vec v{rat(2), rat(5), rat(3)};
  auto coords = s.coordinates(v);
  REQUIRE(coords.has_value());
  Vec rec(3, rat(0));
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < 3; ++j) rec[j] += (*coords)[i] * s.basis()(i, j);
  CHECK(rec == v);
  CHECK(!s.coordinates(Vec{rat(1), rat(0), rat(0)}).has_value());
}

TEST_CASE("linear solves")
{
  Matrix a = Matrix::from_rows({{rat(1), rat(2)}, {rat(3), rat(4)}, {rat(4), rat(6)}}, 2);
  Vec b{rat(5), rat(11), rat(16)};
  auto x = solve_unique(a, b);
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == b);

  Vec bad{rat(5), rat(11), rat(17)};
  CHECK(!solve_unique(a, bad).has_value());
  CHECK(!solve_any(a, bad).has_value());

  auto inv = inverse(Matrix::from_rows({{rat(1), rat(2)}, {rat(3), rat(4)}}, 2));
  REQUIRE(inv.has_value());
  CHECK(*inv * Matrix::from_rows({{rat(1), rat(2)}, {rat(3), rat(4)}}, 2) == Matrix::identity(2));
  CHECK(!inverse(Matrix(2, 2)).has_value());
}
