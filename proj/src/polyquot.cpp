#include "leflab/polyquot.hpp"

#include <algorithm>
#include <stdexcept>

namespace leflab {

std::vector<Exponents> monomials_of_degree(int nvars, int degree)
{
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars - 1) {
      cur[var] = left;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[var] = e;
      rec(var + 1, left - e);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int monomial_index(const std::vector<Exponents>& list, const Exponents& e)
{
  auto it = std::lower_bound(list.begin(), list.end(), e);
  if (it == list.end() || *it != e) throw std::logic_error("monomial not found");
  return (int)(it - list.begin());
}

int poly_degree(const Poly& p)
{
  if (p.empty()) return -1;
  int d = 0;
  for (int e : p.begin()->first) d += e;
  for (const auto& [mono, c] : p) {
    int s = 0;
    for (int e : mono) s += e;
    if (s != d) throw std::invalid_argument("polynomial is not homogeneous");
  }
  return d;
}

}  // namespace

Poly poly_mul(const Poly& a, const Poly& b)
{
  Poly out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Exponents m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

Poly poly_pow(const Poly& a, int k)
{
  if (a.empty()) return k == 0 ? Poly{{Exponents{}, Rational(1)}} : Poly{};
  Poly out{{Exponents(a.begin()->first.size(), 0), Rational(1)}};
  for (int i = 0; i < k; ++i) out = poly_mul(out, a);
  return out;
}

Poly linear_poly(const Vec& coeffs)
{
  Poly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) {
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      out[e] = coeffs[i];
    }
  return out;
}

Vec QuotientAlgebra::reduce(int degree, const Vec& monomial_coords) const
{
  Vec v = monomial_coords;
  const Matrix& rows = ideal[degree].basis();
  const std::vector<int>& piv = pivots[degree];
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    Rational c = v[piv[r]];
    if (c == 0) continue;
    for (std::size_t t = 0; t < v.size(); ++t) v[t] -= c * rows(r, t);
  }
  std::vector<Exponents> mons = monomials_of_degree(nvars, degree);
  Vec out;
  for (const Exponents& b : basis[degree]) out.push_back(v[monomial_index(mons, b)]);
  return out;
}

Vec QuotientAlgebra::reduce(const Poly& p) const
{
  int d = poly_degree(p);
  if (d < 0) throw std::invalid_argument("zero polynomial has no degree");
  std::vector<Exponents> mons = monomials_of_degree(nvars, d);
  Vec coords(mons.size(), Rational(0));
  for (const auto& [mono, c] : p) coords[monomial_index(mons, mono)] = c;
  return reduce(d, coords);
}

Vec QuotientAlgebra::variable(int i) const
{
  Vec e(nvars, Rational(0));
  e[i] = 1;
  return reduce(linear_poly(e));
}

QuotientAlgebra quotient_algebra(int nvars, const std::vector<Poly>& relations, int max_degree)
{
  QuotientAlgebra q;
  q.nvars = nvars;
  bool closed = false;
  for (int d = 0; d <= max_degree; ++d) {
    std::vector<Exponents> mons = monomials_of_degree(nvars, d);
    std::vector<Vec> rows;
    for (const Poly& r : relations) {
      int e = poly_degree(r);
      if (e < 0 || e > d) continue;
      for (const Exponents& m : monomials_of_degree(nvars, d - e)) {
        Poly prod = poly_mul(Poly{{m, Rational(1)}}, r);
        Vec row(mons.size(), Rational(0));
        for (const auto& [mono, c] : prod) row[monomial_index(mons, mono)] = c;
        rows.push_back(std::move(row));
      }
    }
    Subspace ideal_d = rows.empty() ? Subspace(mons.size())
                                    : Subspace::span_rows(Matrix::from_rows(rows, mons.size()));
    RrefResult rr = rref(ideal_d.basis());
    std::vector<int> piv(rr.pivots.begin(), rr.pivots.end());
    std::vector<Exponents> basis_d;
    for (std::size_t t = 0; t < mons.size(); ++t)
      if (std::find(piv.begin(), piv.end(), (int)t) == piv.end()) basis_d.push_back(mons[t]);
    q.ideal.push_back(std::move(ideal_d));
    q.pivots.push_back(std::move(piv));
    q.ideal_dims.push_back((int)q.ideal.back().dim());
    q.basis.push_back(basis_d);
    if (basis_d.empty()) {
      q.top = d - 1;
      closed = true;
      break;
    }
  }
  if (!closed) throw std::runtime_error("quotient still nonzero at the degree cap");
  if (q.top < 0) throw std::runtime_error("quotient is the zero ring");

  for (int d = 0; d <= q.top; ++d) q.algebra.space.pieces[2 * d] = (int)q.basis[d].size();
  q.algebra.fill_products([&](int p, int i, int pp, int j) {
    int d1 = p / 2, d2 = pp / 2;
    Poly prod = poly_mul(Poly{{q.basis[d1][i], Rational(1)}}, Poly{{q.basis[d2][j], Rational(1)}});
    return q.reduce(prod);
  });
  return q;
}

std::map<int, Subspace> generated_subspaces(const GradedAlgebra& host,
                                            const std::vector<Vec>& gens2)
{
  std::map<int, Subspace> out;
  Vec unit(host.space.dim(0), Rational(0));
  unit[0] = 1;
  out.emplace(0, Subspace::span_rows(Matrix::from_rows({unit}, unit.size())));
  for (int d = 2; d <= host.top_degree(); d += 2) {
    if (host.space.dim(d) == 0) break;
    std::vector<Vec> rows;
    const Subspace& prev = out.at(d - 2);
    for (const Vec& g : gens2)
      for (std::size_t r = 0; r < prev.dim(); ++r) {
        GradedVec prod = host.multiply({{d - 2, prev.basis().row(r)}}, {{2, g}});
        auto it = prod.find(d);
        if (it != prod.end()) rows.push_back(it->second);
      }
    if (rows.empty()) break;
    Subspace s = Subspace::span_rows(Matrix::from_rows(rows, host.space.dim(d)));
    if (s.dim() == 0) break;
    out.emplace(d, std::move(s));
  }
  return out;
}

GradedAlgebra subalgebra_algebra(const GradedAlgebra& host, const std::vector<Vec>& gens2)
{
  std::map<int, Subspace> spans = generated_subspaces(host, gens2);
  GradedAlgebra sub;
  for (const auto& [d, s] : spans) sub.space.pieces[d] = (int)s.dim();
  sub.fill_products([&](int p, int i, int q, int j) {
    GradedVec prod =
        host.multiply({{p, spans.at(p).basis().row(i)}}, {{q, spans.at(q).basis().row(j)}});
    Vec zero(sub.space.dim(p + q), Rational(0));
    auto it = prod.find(p + q);
    if (it == prod.end()) {
      if (sub.space.dim(p + q) == 0 && !gv_is_zero(prod))
        throw std::logic_error("subalgebra is not closed under products");
      return zero;
    }
    auto sit = spans.find(p + q);
    if (sit == spans.end()) throw std::logic_error("subalgebra is not closed under products");
    auto c = sit->second.coordinates(it->second);
    if (!c) throw std::logic_error("subalgebra is not closed under products");
    return *c;
  });
  return sub;
}

GradedAlgebra tensor_algebra(const GradedAlgebra& a, const GradedAlgebra& b)
{
  for (int d : a.space.degrees())
    if (d % 2 != 0) throw std::invalid_argument("tensor factors must be evenly graded");
  for (int d : b.space.degrees())
    if (d % 2 != 0) throw std::invalid_argument("tensor factors must be evenly graded");

  struct Entry {
    int p, i, q, j;
  };
  std::map<int, std::vector<Entry>> basis;
  for (int p : a.space.degrees())
    for (int q : b.space.degrees())
      for (int i = 0; i < a.space.dim(p); ++i)
        for (int j = 0; j < b.space.dim(q); ++j) basis[p + q].push_back({p, i, q, j});

  GradedAlgebra t;
  for (const auto& [d, v] : basis) t.space.pieces[d] = (int)v.size();
  auto index_of = [&](int p, int i, int q, int j) {
    const auto& v = basis.at(p + q);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k].p == p && v[k].i == i && v[k].q == q && v[k].j == j) return (int)k;
    throw std::logic_error("missing tensor basis entry");
  };
  t.fill_products([&](int d1, int i1, int d2, int i2) {
    const Entry& x = basis.at(d1)[i1];
    const Entry& y = basis.at(d2)[i2];
    Vec out(t.space.dim(d1 + d2), Rational(0));
    Vec va = a.basis_product(x.p, x.i, y.p, y.i);
    Vec vb = b.basis_product(x.q, x.j, y.q, y.j);
    for (std::size_t r = 0; r < va.size(); ++r) {
      if (va[r] == 0) continue;
      for (std::size_t s = 0; s < vb.size(); ++s)
        if (vb[s] != 0) out[index_of(x.p + y.p, (int)r, x.q + y.q, (int)s)] += va[r] * vb[s];
    }
    return out;
  });
  return t;
}

}  // namespace leflab
