#include "leflab/ext.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace leflab {

int wedge_sign(int a, int b)
{
  if (a & b) return 0;
  int inversions = 0;
  for (int j = 0; (1 << j) <= b; ++j)
    if (b & (1 << j)) inversions += std::popcount((unsigned)(a >> (j + 1)));
  return inversions % 2 == 0 ? 1 : -1;
}

namespace {

std::vector<std::vector<int>> masks_by_degree(int m)
{
  std::vector<std::vector<int>> by(m + 1);
  for (int mask = 0; mask < (1 << m); ++mask) by[std::popcount((unsigned)mask)].push_back(mask);
  return by;  // each list ascending
}

}  // namespace

GradedAlgebra exterior_algebra(int m)
{
  if (m < 1) throw std::invalid_argument("need at least one generator");
  auto by = masks_by_degree(m);
  GradedAlgebra alg;
  for (int k = 0; k <= m; ++k) alg.space.pieces[k] = (int)by[k].size();

  auto index_in = [&](int k, int mask) {
    const auto& v = by[k];
    return (int)(std::lower_bound(v.begin(), v.end(), mask) - v.begin());
  };
  alg.fill_products([&](int p, int i, int q, int j) {
    Vec out(alg.space.dim(p + q), Rational(0));
    int a = by[p][i], b = by[q][j];
    int s = wedge_sign(a, b);
    if (s != 0) out[index_in(p + q, a | b)] = s;
    return out;
  });
  return alg;
}

int Ext::degree_of(int mask) const { return std::popcount((unsigned)mask) - m / 2; }

int Ext::index_of(int mask) const
{
  int k = std::popcount((unsigned)mask);
  int idx = 0;
  for (int other = 0; other < mask; ++other)
    if (std::popcount((unsigned)other) == k) ++idx;
  return idx;
}

int Ext::flat_of(int mask) const { return space.offset(degree_of(mask)) + index_of(mask); }

int Ext::mask_of(int degree, int index) const
{
  int k = degree + m / 2;
  for (int mask = 0; mask < (1 << m); ++mask)
    if (std::popcount((unsigned)mask) == k && index-- == 0) return mask;
  throw std::out_of_range("basis index out of range");
}

Matrix Ext::wedge_monomial(int mask) const
{
  int nt = space.total_dim();
  Matrix out(nt, nt);
  for (int b = 0; b < (1 << m); ++b) {
    int s = wedge_sign(mask, b);
    if (s != 0) out(flat_of(mask | b), flat_of(b)) = s;
  }
  return out;
}

Matrix Ext::wedge(const std::map<int, Rational>& element) const
{
  int nt = space.total_dim();
  Matrix out(nt, nt);
  for (const auto& [mask, c] : element)
    if (c != 0) out = out + wedge_monomial(mask) * c;
  return out;
}

Matrix Ext::contract_gen(int i) const
{
  int nt = space.total_dim();
  Matrix out(nt, nt);
  int bit = 1 << i;
  for (int s = 0; s < (1 << m); ++s) {
    if (!(s & bit)) continue;
    int below = std::popcount((unsigned)(s & (bit - 1)));
    out(flat_of(s ^ bit), flat_of(s)) = (below % 2 == 0) ? 1 : -1;
  }
  return out;
}

Matrix Ext::star() const
{
  int nt = space.total_dim();
  int full = (1 << m) - 1;
  Matrix out(nt, nt);
  for (int s = 0; s <= full; ++s) out(flat_of(full ^ s), flat_of(s)) = wedge_sign(s, full ^ s);
  return out;
}

Ext make_ext(int m)
{
  if (m < 2 || m % 2 != 0) throw std::invalid_argument("generator count must be even");
  Ext e;
  e.m = m;
  auto by = masks_by_degree(m);
  for (int k = 0; k <= m; ++k) e.space.pieces[k - m / 2] = (int)by[k].size();
  return e;
}

}  // namespace leflab
