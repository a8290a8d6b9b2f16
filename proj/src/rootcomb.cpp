#include "leflab/rootcomb.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace leflab {

namespace {

Rational dot(const Vec& a, const Vec& b)
{
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Vec> simple_roots(char type, int rank)
{
  auto unit = [](int dim, int i) {
    Vec v(dim, Rational(0));
    v[i] = 1;
    return v;
  };
  std::vector<Vec> s;
  switch (type) {
    case 'A': {
      if (rank < 1) throw std::invalid_argument("rank too small for type A");
      for (int i = 0; i < rank; ++i) {
        Vec v(rank + 1, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(std::move(v));
      }
      break;
    }
    case 'B':
    case 'C':
    case 'D': {
      int least = (type == 'D') ? 4 : 2;
      if (rank < least) throw std::invalid_argument("rank too small for type");
      for (int i = 0; i + 1 < rank; ++i) {
        Vec v(rank, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        s.push_back(std::move(v));
      }
      if (type == 'B') s.push_back(unit(rank, rank - 1));
      if (type == 'C') {
        Vec v(rank, Rational(0));
        v[rank - 1] = 2;
        s.push_back(std::move(v));
      }
      if (type == 'D') {
        Vec v(rank, Rational(0));
        v[rank - 2] = 1;
        v[rank - 1] = 1;
        s.push_back(std::move(v));
      }
      break;
    }
    case 'E': {
      if (rank != 6 && rank != 7) throw std::invalid_argument("E-series rank must be 6 or 7");
      Vec a1(8, rat(-1, 2));
      a1[0] = rat(1, 2);
      a1[7] = rat(1, 2);
      s.push_back(a1);
      Vec a2(8, Rational(0));
      a2[0] = 1;
      a2[1] = 1;
      s.push_back(a2);
      for (int i = 0; i < rank - 2; ++i) {
        Vec v(8, Rational(0));
        v[i] = -1;
        v[i + 1] = 1;
        s.push_back(std::move(v));
      }
      break;
    }
    default:
      throw std::invalid_argument("unknown type");
  }
  return s;
}

}  // namespace

bool RootSystem::adjacent(int i, int j) const
{
  return i != j && dot(simple[i], simple[j]) != 0;
}

bool RootSystem::is_root(const Vec& v) const
{
  return std::find(roots.begin(), roots.end(), v) != roots.end();
}

RootSystem build_roots(char type, int rank)
{
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.simple = simple_roots(type, rank);

  // Close the simple roots under the simple reflections.
  std::set<Vec> closed(rs.simple.begin(), rs.simple.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Vec> snapshot(closed.begin(), closed.end());
    for (const Vec& r : snapshot)
      for (const Vec& a : rs.simple) {
        Rational c = 2 * dot(r, a) / dot(a, a);
        Vec image = r;
        for (std::size_t t = 0; t < image.size(); ++t) image[t] -= c * a[t];
        if (closed.insert(image).second) grew = true;
      }
  }
  rs.roots.assign(closed.begin(), closed.end());

  // Simple-root coefficients of each root.
  std::size_t dim = rs.simple.front().size();
  Matrix s(dim, rs.simple.size());
  for (std::size_t j = 0; j < rs.simple.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) s(i, j) = rs.simple[j][i];
  Rational best_sum(0);
  for (const Vec& r : rs.roots) {
    auto c = solve_any(s, r);
    if (!c) throw std::logic_error("root outside the simple-root span");
    Rational sum(0);
    for (const Rational& x : *c) sum += x;
    if (sum > best_sum) {
      best_sum = sum;
      rs.highest = *c;
    }
    rs.coords.push_back(std::move(*c));
  }
  return rs;
}

bool adjacency_check(const WeightedDynkin& wd)
{
  for (int i : wd.b2)
    for (int j : wd.b2)
      if (i < j && wd.base.adjacent(i - 1, j - 1)) return false;
  return true;
}

namespace {

void check_star(const std::vector<int>& dims)
{
  if (dims.empty() || dims.front() < 1)
    throw std::invalid_argument("dimension sequence must start at 1 or more");
  bool plateau = false;
  for (std::size_t i = 1; i < dims.size(); ++i) {
    if (dims[i] < dims[i - 1]) throw std::invalid_argument("dimension sequence decreases");
    if (dims[i] == dims[i - 1]) plateau = true;
    if (plateau && dims[i] != dims[i - 1])
      throw std::invalid_argument("dimension sequence increases after its plateau");
  }
}

void require_even(const std::vector<int>& dims)
{
  for (int d : dims)
    if (d % 2 != 0) throw std::invalid_argument("all dimensions must be even in this case");
}

int sum_of(const std::vector<int>& dims, std::size_t count)
{
  int s = 0;
  for (std::size_t i = 0; i < count; ++i) s += dims[i];
  return s;
}

std::vector<int> cumulative(const std::vector<int>& blocks, std::size_t count)
{
  std::vector<int> out;
  int s = 0;
  for (std::size_t i = 0; i < count; ++i) out.push_back(s += blocks[i]);
  return out;
}

}  // namespace

B2Placement b2_from_dims(char type, const std::vector<int>& dims, int parity)
{
  check_star(dims);
  if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
  std::size_t k = dims.size() - 1;
  B2Placement out;
  switch (type) {
    case 'A': {
      // Block sizes of the standard representation are the palindrome of
      // dims, with the middle repeated exactly when the parity is odd. The
      // rank is one less than the total dimension.
      std::vector<int> blocks(dims.begin(), dims.end());
      if (parity == 1) blocks.push_back(dims[k]);
      for (std::size_t i = k; i-- > 0;) blocks.push_back(dims[i]);
      out.rank = sum_of(blocks, blocks.size()) - 1;
      out.indices = cumulative(blocks, blocks.size() - 1);
      if (out.rank < 1) throw std::invalid_argument("rank too small for type A");
      break;
    }
    case 'B': {
      if (parity != 0) throw std::invalid_argument("type B forces even parity");
      if (dims[k] % 2 != 1) throw std::invalid_argument("middle dimension must be odd");
      out.rank = sum_of(dims, k) + (dims[k] - 1) / 2;
      out.indices = cumulative(dims, k);
      if (out.rank < 2) throw std::invalid_argument("rank too small for type B");
      break;
    }
    case 'C': {
      if (parity == 1) {
        out.rank = sum_of(dims, k + 1);
        out.indices = cumulative(dims, k + 1);
      } else {
        require_even(dims);
        out.rank = sum_of(dims, k) + dims[k] / 2;
        out.indices = cumulative(dims, k);
      }
      if (out.rank < 2) throw std::invalid_argument("rank too small for type C");
      break;
    }
    case 'D': {
      if (parity == 1) {
        require_even(dims);
        // dims all equal to 2 would mean V(n) + V(n), which cannot occur.
        if (dims[k] == 2 && k >= 1)
          throw std::invalid_argument("standard module would be a doubled string");
        out.rank = sum_of(dims, k + 1);
        out.indices = cumulative(dims, k + 1);
      } else if (dims[k] >= 4) {
        if (dims[k] % 2 != 0) throw std::invalid_argument("middle dimension must be even");
        out.rank = sum_of(dims, k) + dims[k] / 2;
        out.indices = cumulative(dims, k);
      } else {
        // Middle dimension 2: the standard module is V(2k) + V(2k-2),
        // forcing dims = (1, 2, ..., 2) and the special node placement.
        if (dims[k] != 2 || dims[0] != 1 || k < 1)
          throw std::invalid_argument("invalid small-middle dimension sequence");
        out.rank = 2 * (int)k;
        for (int i = 1; i < out.rank; i += 2) out.indices.push_back(i);
        out.indices.push_back(out.rank);
      }
      if (out.rank < 4) throw std::invalid_argument("rank too small for type D");
      break;
    }
    default:
      throw std::invalid_argument("placement is defined for classical types only");
  }
  return out;
}

std::map<int, int> standard_grading(char type, int rank, const std::vector<int>& indices)
{
  std::vector<int> c(rank + 1, 0);  // 1-based
  for (int i : indices) {
    if (i < 1 || i > rank) throw std::invalid_argument("node index out of range");
    c[i] = 2;
  }
  std::map<int, int> dims;
  std::vector<int> lam(rank + 2, 0);  // 1-based
  switch (type) {
    case 'A': {
      lam[rank + 1] = 0;
      for (int i = rank; i >= 1; --i) lam[i] = lam[i + 1] + c[i];
      int lo = lam[rank + 1], hi = lam[1];
      int shift = (lo + hi) / 2;
      for (int i = 1; i <= rank + 1; ++i) ++dims[lam[i] - shift];
      break;
    }
    case 'B':
    case 'C':
    case 'D': {
      if (type == 'B') lam[rank] = c[rank];
      if (type == 'C') lam[rank] = c[rank] / 2;
      if (type == 'D') {
        lam[rank] = (c[rank] - c[rank - 1]) / 2;
        lam[rank - 1] = (c[rank] + c[rank - 1]) / 2;
      }
      int top = (type == 'D') ? rank - 2 : rank - 1;
      for (int i = top; i >= 1; --i) lam[i] = lam[i + 1] + c[i];
      for (int i = 1; i <= rank; ++i) {
        ++dims[lam[i]];
        ++dims[-lam[i]];
      }
      if (type == 'B') ++dims[0];
      break;
    }
    default:
      throw std::invalid_argument("grading is defined for classical types only");
  }
  return dims;
}

bool b2_round_trip(char type, const std::vector<int>& dims, int parity)
{
  B2Placement p = b2_from_dims(type, dims, parity);
  std::map<int, int> grading = standard_grading(type, p.rank, p.indices);

  std::vector<std::pair<int, int>> seq(grading.begin(), grading.end());
  std::size_t m = seq.size();
  // Degrees form a step-2 progression of the requested parity, with
  // palindromic dimensions whose lower half is the input.
  for (std::size_t i = 0; i < m; ++i) {
    if (i + 1 < m && seq[i + 1].first != seq[i].first + 2) return false;
    if (((seq[i].first % 2) + 2) % 2 != parity) return false;
    if (seq[i].second != seq[m - 1 - i].second) return false;
  }
  if (seq.front().first != -seq.back().first) return false;
  std::size_t expect = (parity == 1) ? 2 * dims.size() : 2 * dims.size() - 1;
  if (m != expect) return false;
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (seq[i].second != dims[i]) return false;
  return true;
}

std::vector<NodeVerdict> jordan_pair_enumerate(char type, int rank)
{
  RootSystem rs = build_roots(type, rank);
  std::vector<NodeVerdict> out;
  for (int beta = 1; beta <= rank; ++beta) {
    NodeVerdict v;
    v.index = beta;
    v.coeff_one = rs.highest[beta - 1] == 1;

    // R(beta): roots whose beta-coefficient is exactly 1.
    std::vector<const Vec*> rbeta;
    for (std::size_t t = 0; t < rs.roots.size(); ++t)
      if (rs.coords[t][beta - 1] == 1) rbeta.push_back(&rs.roots[t]);
    v.sum_free = true;
    for (const Vec* r : rbeta)
      for (const Vec* s : rbeta) {
        Vec sum = *r;
        for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += (*s)[t];
        if (rs.is_root(sum)) v.sum_free = false;
      }
    if (v.sum_free != v.coeff_one)
      throw std::logic_error("singleton criteria disagree at a node");

    if (type == 'E') {
      v.h_simple = (rank == 7 && beta == 7);  // tabulated for the E-series
    } else {
      std::vector<std::vector<int>> targets = {{beta}};
      if (type == 'D' && beta == rank - 1) targets.push_back({rank});
      for (int parity : {0, 1})
        for (int d0 = 1; d0 <= 2 * rank + 1 && !v.h_simple; ++d0)
          for (int len = 1; len <= 2 && !v.h_simple; ++len)
            for (int d1 = d0; d1 <= 2 * rank + 1 && !v.h_simple; ++d1) {
              std::vector<int> dims = {d0};
              if (len == 2) dims.push_back(d1);
              try {
                B2Placement p = b2_from_dims(type, dims, parity);
                for (const auto& target : targets)
                  if (p.rank == rank && p.indices == target &&
                      b2_round_trip(type, dims, parity))
                    v.h_simple = true;
              } catch (const std::invalid_argument&) {
              }
              if (len == 1) break;
            }
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace leflab
