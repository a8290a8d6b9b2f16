#include "leflab/coinv.hpp"

#include <stdexcept>

#include "leflab/sl2.hpp"

namespace leflab {

namespace {

void add_to(Poly& a, const Poly& b)
{
  for (const auto& [e, c] : b) {
    Rational& r = a[e];
    r += c;
    if (r == 0) a.erase(e);
  }
}

Poly monomial_poly(const Exponents& e, const Rational& c)
{
  Poly p;
  if (c != 0) p[e] = c;
  return p;
}

/// e_1, ..., e_m of the given polynomials (in nvars ambient variables).
std::vector<Poly> elementary_symmetric(int nvars, const std::vector<Poly>& items)
{
  std::vector<Poly> e(items.size() + 1);
  e[0] = monomial_poly(Exponents(nvars, 0), Rational(1));
  for (const Poly& v : items)
    for (int k = (int)items.size(); k >= 1; --k) add_to(e[k], poly_mul(e[k - 1], v));
  return e;
}

long long factorial(int n)
{
  long long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

CoinvariantAlgebra coinvariant_algebra(WeylType type, int rank)
{
  CoinvariantAlgebra c;
  c.type = type;
  c.rank = rank;
  int nv = rank;
  std::vector<Poly> rels;
  int top = 0;

  auto squares = [&] {
    std::vector<Poly> s;
    for (int i = 0; i < rank; ++i) {
      Exponents e(nv, 0);
      e[i] = 2;
      s.push_back(monomial_poly(e, Rational(1)));
    }
    return s;
  };

  switch (type) {
    case WeylType::A: {
      if (rank < 1 || rank > 4) throw std::invalid_argument("type A supports rank 1..4");
      // rank+1 coordinates with zero sum: the last one is minus the others.
      std::vector<Poly> lin;
      for (int i = 0; i < rank; ++i) {
        Vec coeffs(nv, Rational(0));
        coeffs[i] = 1;
        lin.push_back(linear_poly(coeffs));
      }
      Vec all(nv, Rational(-1));
      lin.push_back(linear_poly(all));
      std::vector<Poly> e = elementary_symmetric(nv, lin);
      for (int k = 2; k <= rank + 1; ++k) rels.push_back(e[k]);
      top = rank * (rank + 1) / 2;
      c.group_order = factorial(rank + 1);
      break;
    }
    case WeylType::B:
    case WeylType::C: {
      if (rank < 2 || rank > 4) throw std::invalid_argument("types B/C support rank 2..4");
      std::vector<Poly> e = elementary_symmetric(nv, squares());
      for (int k = 1; k <= rank; ++k) rels.push_back(e[k]);
      top = rank * rank;
      c.group_order = (1LL << rank) * factorial(rank);
      break;
    }
    case WeylType::D: {
      if (rank < 2 || rank > 4) throw std::invalid_argument("type D supports rank 2..4");
      std::vector<Poly> e = elementary_symmetric(nv, squares());
      for (int k = 1; k < rank; ++k) rels.push_back(e[k]);
      rels.push_back(monomial_poly(Exponents(nv, 1), Rational(1)));
      top = rank * (rank - 1);
      c.group_order = (1LL << (rank - 1)) * factorial(rank);
      break;
    }
    case WeylType::G2: {
      if (rank != 2) throw std::invalid_argument("G2 has rank 2");
      nv = 2;
      rels.push_back(monomial_poly({2, 0}, Rational(1)));
      add_to(rels.back(), monomial_poly({0, 2}, Rational(1)));
      // Real part of (x + iy)^6: invariant of the dihedral group of order 12.
      Poly sext = monomial_poly({6, 0}, Rational(1));
      add_to(sext, monomial_poly({4, 2}, Rational(-15)));
      add_to(sext, monomial_poly({2, 4}, Rational(15)));
      add_to(sext, monomial_poly({0, 6}, Rational(-1)));
      rels.push_back(sext);
      top = 6;
      c.group_order = 12;
      break;
    }
  }

  c.quotient = quotient_algebra(nv, rels, top + 1);
  if (c.quotient.top != top) throw std::runtime_error("coinvariant top degree mismatch");
  for (int k = 0; k <= c.quotient.top; ++k) c.dims.push_back((int)c.quotient.basis[k].size());
  return c;
}

FlagLie flag_lie(WeylType type, int rank)
{
  FlagLie f;
  f.coinv = coinvariant_algebra(type, rank);
  const GradedAlgebra& alg = f.coinv.quotient.algebra;
  Vec integral{Rational(1)};
  f.module = module_from_algebra(alg, integral);
  f.gen = generate_g(f.module);

  PairingForm phi = poincare_form(alg, integral);
  int n = alg.depth();
  int N = alg.space.total_dim();
  f.aut_dim = (n % 2 != 0) ? N * (N + 1) / 2 : N * (N - 1) / 2;
  f.in_aut = true;
  for (const auto& [deg, mats] : f.gen.g.basis)
    for (const Matrix& m : mats)
      if (!infinitesimal_invariance(GradedMap::from_full(f.module.M, deg, m), phi))
        f.in_aut = false;
  f.maximal = f.in_aut && f.gen.g.dim() == f.aut_dim;
  return f;
}

int BundleAlgebra::base_index(int total_degree, int xi_power, int i) const
{
  int idx = 0;
  for (int j = 0; j < xi_power; ++j) idx += base.space.dim(total_degree - 2 * j);
  return idx + i;
}

namespace {

bool vec_zero(const Vec& v)
{
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

BundleAlgebra bundle_cohomology(const GradedAlgebra& base, int d, const std::vector<Vec>& chern)
{
  if (d < 1) throw std::invalid_argument("fiber dimension must be positive");
  if ((int)chern.size() != d)
    throw std::invalid_argument("expected coefficients c_2 .. c_{d+1}");
  for (int t = 2; t <= d + 1; ++t)
    if ((int)chern[t - 2].size() != base.space.dim(2 * t))
      throw std::invalid_argument("coefficient degree mismatch");
  if (base.space.dim(0) != 1 || base.space.min_degree() != 0)
    throw std::invalid_argument("base must be connected and nonnegatively graded");

  BundleAlgebra B;
  B.base = base;
  B.d = d;
  B.chern = chern;

  int btop = base.top_degree();
  int top = btop + 2 * d;
  for (int D = 0; D <= top; ++D) {
    int dim = 0;
    std::vector<std::pair<int, int>> bis;
    for (int j = 0; j <= d; ++j) {
      int p = D - 2 * j;
      int bd = base.space.dim(p);
      dim += bd;
      for (int i = 0; i < bd; ++i) bis.push_back({p, 2 * j});
    }
    if (dim == 0) continue;
    B.algebra.space.pieces[D] = dim;
    B.bidegrees[D] = std::move(bis);
  }

  // Decompose a flat index of total degree D into (xi power, base index).
  auto decompose = [&](int D, int idx) {
    for (int j = 0; j <= d; ++j) {
      int bd = base.space.dim(D - 2 * j);
      if (idx < bd) return std::pair<int, int>{j, idx};
      idx -= bd;
    }
    throw std::out_of_range("bad bundle basis index");
  };

  B.algebra.fill_products([&](int D1, int i1, int D2, int i2) {
    auto [j1, bi1] = decompose(D1, i1);
    auto [j2, bi2] = decompose(D2, i2);
    int p1 = D1 - 2 * j1, p2 = D2 - 2 * j2;
    int D = D1 + D2;
    // Components by xi power; the base part of power j has degree D - 2j.
    std::map<int, Vec> comps;
    if (base.space.dim(p1 + p2) > 0) {
      Vec bp = base.basis_product(p1, bi1, p2, bi2);
      if (!vec_zero(bp)) comps[j1 + j2] = std::move(bp);
    }
    while (!comps.empty() && comps.rbegin()->first > d) {
      int j = comps.rbegin()->first;
      Vec v = std::move(comps.rbegin()->second);
      comps.erase(j);
      int pv = D - 2 * j;
      for (int t = 2; t <= d + 1; ++t) {
        if (vec_zero(chern[t - 2])) continue;
        GradedVec prod = base.multiply({{pv, v}}, {{2 * t, chern[t - 2]}});
        auto it = prod.find(pv + 2 * t);
        if (it == prod.end()) continue;
        Vec& target = comps[j - t];
        if (target.empty()) target.assign(it->second.size(), Rational(0));
        for (std::size_t s = 0; s < it->second.size(); ++s) target[s] -= it->second[s];
      }
    }
    Vec out(B.algebra.space.dim(D), Rational(0));
    for (const auto& [j, v] : comps)
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) out[B.base_index(D, j, (int)i)] = v[i];
    return out;
  });

  if (!B.algebra.check_unit() || !B.algebra.check_graded_commutative() ||
      !B.algebra.check_associative())
    throw std::runtime_error("bundle algebra consistency failure");
  return B;
}

LeraySplit leray_split(const BundleAlgebra& B)
{
  LeraySplit r;
  const GradedAlgebra& alg = B.algebra;
  if (alg.space.dim(alg.top_degree()) != 1)
    throw std::invalid_argument("bundle top piece must be a line");
  Vec integral{Rational(1)};
  r.module = module_from_algebra(alg, integral);
  r.gen = generate_g(r.module);

  Vec bint{Rational(1)};
  LefschetzModule bmod = module_from_algebra(B.base, bint);
  r.base_gen = generate_g(bmod);

  const GradedSpace& M = r.module.M;  // centered
  int n = alg.depth(), m = B.base.depth(), d = B.d;

  r.h_hor = GradedMap::zero(M, 0);
  r.h_ver = GradedMap::zero(M, 0);
  for (int c : M.degrees()) {
    int dim = M.dim(c);
    Matrix Hh(dim, dim), Hv(dim, dim);
    const auto& bis = B.bidegrees.at(c + n);
    for (int i = 0; i < dim; ++i) {
      Hh(i, i) = bis[i].first - m;
      Hv(i, i) = bis[i].second - d;
    }
    r.h_hor.blocks[c] = std::move(Hh);
    r.h_ver.blocks[c] = std::move(Hv);
  }
  bool sum_ok = (r.h_hor + r.h_ver) == h_of(M);
  r.split_ok = sum_ok && r.gen.g.contains(0, r.h_hor.to_full()) &&
               r.gen.g.contains(0, r.h_ver.to_full());

  // Dual construction of h_hor: pick a base Lefschetz element; its cup on the
  // bundle preserves the vertical grading and acts on each vertical slice as
  // it does on the base, so the dual is assembled slice by slice.
  std::optional<Vec> eta = find_lefschetz_element(bmod);
  r.dual_construction = false;
  if (eta) {
    int b2 = B.base.space.dim(2);
    Vec a2(alg.space.dim(2), Rational(0));
    for (int i = 0; i < b2; ++i) a2[B.base_index(2, 0, i)] = (*eta)[i];
    GradedMap e = alg.cup(a2);
    GradedMap fb = jm_dual(bmod.op(*eta));

    GradedMap f = GradedMap::zero(M, -2);
    for (int c : M.degrees()) {
      if (M.dim(c - 2) == 0) continue;
      Matrix Fm(M.dim(c - 2), M.dim(c));
      const auto& src = B.bidegrees.at(c + n);
      for (int s = 0; s < M.dim(c); ++s) {
        auto [p, v2] = src[s];
        int j = v2 / 2;
        int pc = p - m;  // centered base degree
        if (B.base.space.dim(p - 2) == 0) continue;
        Matrix Fb = fb.block(pc);
        int off = B.base_index(c + n - 2, j, 0);
        int bi = s - B.base_index(c + n, j, 0);
        for (int t = 0; t < (int)Fb.rows(); ++t)
          if (Fb(t, bi) != 0) Fm(off + t, s) = Fb(t, bi);
      }
      f.blocks[c] = std::move(Fm);
    }
    r.dual_construction = (bracket(e, f) == r.h_hor) && r.gen.g.contains(-2, f.to_full());
  }

  // Bidegrees of the cup operators.
  r.bidegrees_ok = true;
  int b2 = B.base.space.dim(2);
  for (int i = 0; i < b2; ++i) {
    Vec a2(alg.space.dim(2), Rational(0));
    a2[B.base_index(2, 0, i)] = 1;
    GradedMap op = alg.cup(a2);
    if (!bracket(r.h_ver, op).is_zero() || !(bracket(r.h_hor, op) == op * Rational(2)))
      r.bidegrees_ok = false;
  }
  {
    Vec ax(alg.space.dim(2), Rational(0));
    ax[B.base_index(2, 1, 0)] = 1;
    GradedMap opx = alg.cup(ax);
    bool has2 = false, ok = true;
    for (int c : M.degrees()) {
      Matrix Bl = opx.block(c);
      if (M.dim(c + 2) == 0) continue;
      const auto& src = B.bidegrees.at(c + n);
      const auto& dst = B.bidegrees.at(c + n + 2);
      for (int t = 0; t < (int)Bl.rows(); ++t)
        for (int s = 0; s < (int)Bl.cols(); ++s) {
          if (Bl(t, s) == 0) continue;
          int lam = dst[t].second - src[s].second;
          if (lam == 2)
            has2 = true;
          else if (lam > -2)
            ok = false;
        }
    }
    if (!has2 || !ok) r.bidegrees_ok = false;
  }

  // Product embedding: base closure acting slice-wise, vertical sl2 on the
  // xi powers.
  auto embed = [&](const Matrix& X, int deg) {
    Matrix Y(M.total_dim(), M.total_dim());
    for (int c : M.degrees()) {
      if (M.dim(c + deg) == 0) continue;
      const auto& src = B.bidegrees.at(c + n);
      for (int s = 0; s < M.dim(c); ++s) {
        auto [p, v2] = src[s];
        int j = v2 / 2;
        if (B.base.space.dim(p + deg) == 0) continue;
        int srow = M.offset(c) + s;
        int soff_b = bmod.M.offset(p - m) + (s - B.base_index(c + n, j, 0));
        int doff = M.offset(c + deg) + B.base_index(c + n + deg, j, 0);
        int doff_b = bmod.M.offset(p + deg - m);
        for (int t = 0; t < B.base.space.dim(p + deg); ++t)
          if (X(doff_b + t, soff_b) != 0) Y(doff + t, srow) = X(doff_b + t, soff_b);
      }
    }
    return Y;
  };

  Matrix E(M.total_dim(), M.total_dim()), F(M.total_dim(), M.total_dim());
  for (int c : M.degrees()) {
    const auto& src = B.bidegrees.at(c + n);
    for (int s = 0; s < M.dim(c); ++s) {
      auto [p, v2] = src[s];
      int j = v2 / 2;
      int bi = s - B.base_index(c + n, j, 0);
      if (j < d && M.dim(c + 2) > 0)
        E(M.offset(c + 2) + B.base_index(c + n + 2, j + 1, 0) + bi, M.offset(c) + s) = 1;
      if (j > 0 && M.dim(c - 2) > 0)
        F(M.offset(c - 2) + B.base_index(c + n - 2, j - 1, 0) + bi, M.offset(c) + s) =
            Rational(j * (d - j + 1));
    }
  }

  r.product_embedded = r.gen.g.contains(2, E) && r.gen.g.contains(-2, F) &&
                       r.gen.g.contains(0, r.h_ver.to_full());
  for (const auto& [deg, mats] : r.base_gen.g.basis)
    for (const Matrix& X : mats) {
      Matrix Y = embed(X, deg);
      if (!r.gen.g.contains(deg, Y)) r.product_embedded = false;
      if (!(Y * E - E * Y).is_zero() || !(Y * F - F * Y).is_zero())
        r.product_embedded = false;
    }
  r.strict = r.gen.g.dim() > r.base_gen.g.dim() + 3;
  return r;
}

}  // namespace leflab
