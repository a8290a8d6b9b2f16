#include "leflab/lefmod.hpp"

#include <functional>
#include <stdexcept>

namespace leflab {

GradedMap LefschetzModule::op(const Vec& coeffs) const
{
  if (coeffs.size() != a_basis.size()) throw std::invalid_argument("coefficient count mismatch");
  GradedMap out = GradedMap::zero(M, 2);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out = out + a_basis[i] * coeffs[i];
  return out;
}

void LefschetzModule::validate() const
{
  for (const GradedMap& a : a_basis) {
    if (a.degree != 2) throw std::invalid_argument("a-operator of degree != 2");
    if (a.space != M) throw std::invalid_argument("a-operator on the wrong space");
  }
  for (std::size_t i = 0; i < a_basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!bracket(a_basis[i], a_basis[j]).is_zero())
        throw std::invalid_argument("a-operators do not commute");
}

LefschetzModule module_from_algebra(const GradedAlgebra& alg, const Vec& integral)
{
  std::vector<Vec> elements;
  for (int i = 0; i < alg.space.dim(2); ++i) {
    Vec e(alg.space.dim(2), Rational(0));
    e[i] = 1;
    elements.push_back(std::move(e));
  }
  return module_from_algebra(alg, integral, elements);
}

LefschetzModule module_from_algebra(const GradedAlgebra& alg, const Vec& integral,
                                    const std::vector<Vec>& a_elements)
{
  LefschetzModule L;
  L.M = alg.centered_space();
  for (const Vec& a : a_elements) L.a_basis.push_back(alg.cup(a));
  if (!integral.empty()) L.phi = poincare_form(alg, integral);
  L.validate();
  return L;
}

namespace {

// Deterministic enumeration of small integer coefficient vectors: unit
// vectors first, then vectors with entries in [-b, b] for growing b, in
// lexicographic order, keeping one representative of each +-pair (first
// nonzero entry positive). visit returns false to stop.
void enumerate_candidates(int g, const SearchOptions& opt,
                          const std::function<bool(const Vec&)>& visit)
{
  std::size_t seen = 0;
  for (int i = 0; i < g; ++i) {
    Vec v(g, Rational(0));
    v[i] = 1;
    if (!visit(v) || ++seen >= opt.max_candidates) return;
  }
  for (int b = 1; b <= opt.box; ++b) {
    std::vector<int> c(g, -b);
    for (;;) {
      bool max_is_b = false, nonzero_count = false;
      int first_nonzero = 0;
      int nonzeros = 0;
      for (int i = 0; i < g; ++i) {
        if (std::abs(c[i]) == b) max_is_b = true;
        if (c[i] != 0) {
          if (!nonzero_count) first_nonzero = c[i];
          nonzero_count = true;
          ++nonzeros;
        }
      }
      bool is_unit = (nonzeros == 1 && std::abs(first_nonzero) == 1);
      if (max_is_b && nonzero_count && first_nonzero > 0 && !is_unit) {
        Vec v(g);
        for (int i = 0; i < g; ++i) v[i] = c[i];
        if (!visit(v) || ++seen >= opt.max_candidates) return;
      }
      int i = g - 1;
      while (i >= 0 && c[i] == b) c[i--] = -b;
      if (i < 0) break;
      ++c[i];
    }
  }
}

}  // namespace

std::optional<Vec> find_lefschetz_element(const LefschetzModule& L, const SearchOptions& opt)
{
  std::optional<Vec> found;
  enumerate_candidates((int)L.a_basis.size(), opt, [&](const Vec& v) {
    if (lefschetz_check(L.op(v))) {
      found = v;
      return false;
    }
    return true;
  });
  return found;
}

GenerateResult generate_g(const LefschetzModule& L, const SearchOptions& opt)
{
  int g = (int)L.a_basis.size();
  GenerateResult res;

  // Stage 1 certified set: unit vectors and two-term combinations a_i +- a_j.
  std::vector<Vec> stage1;
  for (int i = 0; i < g; ++i) {
    Vec v(g, Rational(0));
    v[i] = 1;
    stage1.push_back(v);
  }
  for (int i = 0; i < g; ++i)
    for (int j = i + 1; j < g; ++j)
      for (int s : {1, -1}) {
        Vec v(g, Rational(0));
        v[i] = 1;
        v[j] = s;
        stage1.push_back(v);
      }
  for (const Vec& v : stage1)
    if (lefschetz_check(L.op(v))) res.certified.push_back(v);

  if (res.certified.empty()) {
    // Fall back to the full box search.
    auto first = find_lefschetz_element(L, opt);
    if (!first) throw std::runtime_error("no Lefschetz element found in search box");
    res.certified.push_back(*first);
  }

  auto build = [&](const std::vector<Vec>& certified) {
    std::vector<GradedMap> gens;
    for (const GradedMap& a : L.a_basis) gens.push_back(a);
    for (const Vec& v : certified) gens.push_back(jm_dual(L.op(v)));
    return lie_closure(gens);
  };
  res.g = build(res.certified);

  // Saturation test: further passing elements must have duals inside.
  int extra_used = 0;
  enumerate_candidates(g, opt, [&](const Vec& v) {
    if (extra_used >= opt.max_extra) return false;
    bool already = false;
    for (const Vec& c : res.certified) already = already || c == v;
    if (already) return true;
    if (!lefschetz_check(L.op(v))) return true;
    ++extra_used;
    GradedMap f = jm_dual(L.op(v));
    if (!res.g.contains(-2, f.to_full())) {
      res.saturated = false;
      res.certified.push_back(v);
      res.g = build(res.certified);
    }
    return true;
  });

  res.has_h = res.g.contains(0, h_of(L.M).to_full());
  return res;
}

std::map<int, Subspace> primitive_subspace(const GradedLieAlgebra& g)
{
  std::map<int, Subspace> prim;
  const GradedSpace& M = g.ambient;
  int n = M.total_dim();
  for (int d : M.degrees()) {
    std::vector<Vec> rows;
    for (const auto& [deg, mats] : g.basis) {
      if (deg >= 0) continue;
      for (const Matrix& m : mats) {
        // Restrict m to the degree-d piece: rows indexed by target coords.
        for (int r = 0; r < n; ++r) {
          Vec row(M.dim(d), Rational(0));
          bool nonzero = false;
          for (int c = 0; c < M.dim(d); ++c) {
            row[c] = m(r, M.offset(d) + c);
            if (row[c] != 0) nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
    }
    Subspace piece = rows.empty() ? Subspace::full(M.dim(d))
                                  : Subspace::span_rows(kernel_basis(
                                        Matrix::from_rows(rows, M.dim(d))));
    if (piece.dim() > 0) prim.emplace(d, piece);
  }
  return prim;
}

JordanCheck jordan_check(const LefschetzModule& L, const GenerateResult& gen)
{
  JordanCheck out;
  out.degrees_202 = true;
  for (const auto& [deg, b] : gen.g.basis)
    if (!b.empty() && deg != -2 && deg != 0 && deg != 2) out.degrees_202 = false;
  out.f_commute = true;
  std::vector<GradedMap> duals;
  for (const Vec& v : gen.certified) duals.push_back(jm_dual(L.op(v)));
  for (std::size_t i = 0; i < duals.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!bracket(duals[i], duals[j]).is_zero()) out.f_commute = false;
  return out;
}

FrobeniusRecord frobenius_order(const LefschetzModule& L, int dmax)
{
  FrobeniusRecord rec;
  const GradedSpace& M = L.M;
  int n = -M.min_degree();
  rec.dim_lowest = M.dim(-n);
  int nt = M.total_dim();

  // map_iso: a (x) M_{-n} -> M_{-n+2} bijective.
  {
    int dlow = M.dim(-n), dnext = M.dim(-n + 2);
    Matrix map(dnext, (int)L.a_basis.size() * dlow);
    for (std::size_t ai = 0; ai < L.a_basis.size(); ++ai) {
      Matrix b = L.a_basis[ai].block(-n);
      for (int r = 0; r < dnext; ++r)
        for (int c = 0; c < dlow; ++c) map(r, ai * dlow + c) = b(r, c);
    }
    rec.map_iso = (int)map.cols() == dnext && (int)rank(map) == dnext;
  }

  // W_k = span of length-k operator words applied to M_{-n}.
  Subspace w(nt);
  {
    std::vector<Vec> rows;
    for (int i = 0; i < M.dim(-n); ++i) {
      Vec v(nt, Rational(0));
      v[M.offset(-n) + i] = 1;
      rows.push_back(std::move(v));
    }
    w = Subspace::span_rows(Matrix::from_rows(rows, nt));
  }
  rec.order = 0;
  for (int k = 1; k <= dmax; ++k) {
    std::vector<Vec> rows;
    for (const GradedMap& a : L.a_basis)
      for (std::size_t r = 0; r < w.dim(); ++r) rows.push_back(a.apply(w.basis().row(r)));
    if (rows.empty()) break;
    w = Subspace::span_rows(Matrix::from_rows(rows, nt));
    int d = -n + 2 * k;
    if ((int)w.dim() != M.dim(d)) break;
    bool covers = true;
    for (int i = 0; i < M.dim(d) && covers; ++i) {
      Vec v(nt, Rational(0));
      v[M.offset(d) + i] = 1;
      covers = w.contains(v);
    }
    if (!covers) break;
    rec.order = k;
  }
  rec.full = rec.order >= n;
  return rec;
}

PairingForm invariant_form(const LefschetzModule& L, const Vec& unit_in_lowest,
                           const Vec& integral)
{
  const GradedSpace& M = L.M;
  int n = -M.min_degree();
  if (M.dim(-n) != 1) throw std::runtime_error("lowest piece is not one-dimensional");
  if (M.max_degree() != n) throw std::runtime_error("graded dimensions are not symmetric");
  int nt = M.total_dim();
  int g = (int)L.a_basis.size();

  Vec u(nt, Rational(0));
  for (int i = 0; i < M.dim(-n); ++i) u[M.offset(-n) + i] = unit_in_lowest[i];

  // Operator monomials of degree k, as full-space images of u and as maps.
  std::vector<Matrix> a_full;
  for (const GradedMap& a : L.a_basis) a_full.push_back(a.to_full());

  auto integral_of = [&](const Vec& v) {
    Rational s(0);
    for (int i = 0; i < M.dim(n); ++i) s += integral[i] * v[M.offset(n) + i];
    return s;
  };

  // monomials[k]: full matrices of the degree-k words in the (commuting)
  // a-operators, one per multiset of indices.
  std::vector<std::vector<Matrix>> monomials(n + 1);
  monomials[0].push_back(Matrix::identity(nt));
  for (int k = 1; k <= n; ++k) {
    std::function<void(int, int, const Matrix&)> rec_build = [&](int depth, int min_i,
                                                                 const Matrix& acc) {
      if (depth == k) {
        monomials[k].push_back(acc);
        return;
      }
      for (int i = min_i; i < g; ++i) rec_build(depth + 1, i, a_full[i] * acc);
    };
    rec_build(0, 0, Matrix::identity(nt));
  }

  PairingForm phi;
  phi.space = M;
  for (int k = 0; 2 * k <= 2 * n; ++k) {
    int c = -n + 2 * k;
    if (M.dim(c) == 0) continue;
    if (M.dim(-c) == 0) throw std::runtime_error("graded dimensions are not symmetric");
    // Express each basis vector of M_c as (polynomial in a)(u).
    Matrix mono_mat((std::size_t)M.dim(c), monomials[k].size());
    for (std::size_t m = 0; m < monomials[k].size(); ++m) {
      Vec img = monomials[k][m].apply(u);
      for (int r = 0; r < M.dim(c); ++r) mono_mat(r, m) = img[M.offset(c) + r];
    }
    Matrix b(M.dim(c), M.dim(-c));
    Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
    for (int i = 0; i < M.dim(c); ++i) {
      Vec target(M.dim(c), Rational(0));
      target[i] = 1;
      auto coeffs = solve_any(mono_mat, target);
      if (!coeffs)
        throw std::runtime_error("module is not generated by the lowest piece in degree " +
                                 std::to_string(c));
      for (int j = 0; j < M.dim(-c); ++j) {
        Vec y(nt, Rational(0));
        y[M.offset(-c) + j] = 1;
        Rational s(0);
        for (std::size_t m = 0; m < monomials[k].size(); ++m)
          if ((*coeffs)[m] != 0) s += (*coeffs)[m] * integral_of(monomials[k][m].apply(y));
        b(i, j) = sign * s;
      }
    }
    if (!b.is_zero()) phi.blocks[c] = std::move(b);
  }
  return phi;
}

LefschetzModule box_plus(const LefschetzModule& a, const LefschetzModule& b)
{
  LefschetzModule out;
  for (const auto& [d, m] : a.M.pieces) out.M.pieces[d] += m;
  for (const auto& [d, m] : b.M.pieces) out.M.pieces[d] += m;
  // Block-diagonal action: each factor's operators extended by zero.
  auto extend = [&](const LefschetzModule& src, bool first) {
    std::vector<GradedMap> ops;
    for (const GradedMap& op : src.a_basis) {
      GradedMap e = GradedMap::zero(out.M, 2);
      for (int k : src.M.degrees()) {
        if (src.M.dim(k + 2) == 0) continue;
        Matrix blk(out.M.dim(k + 2), out.M.dim(k));
        Matrix sb = op.block(k);
        int roff = first ? 0 : out.M.dim(k + 2) - src.M.dim(k + 2);
        int coff = first ? 0 : out.M.dim(k) - src.M.dim(k);
        for (std::size_t i = 0; i < sb.rows(); ++i)
          for (std::size_t j = 0; j < sb.cols(); ++j) blk(roff + i, coff + j) = sb(i, j);
        if (!blk.is_zero()) e.blocks[k] = std::move(blk);
      }
      ops.push_back(std::move(e));
    }
    return ops;
  };
  for (auto& op : extend(a, true)) out.a_basis.push_back(op);
  for (auto& op : extend(b, false)) out.a_basis.push_back(op);
  out.validate();
  return out;
}

LefschetzModule box_times(const LefschetzModule& a, const LefschetzModule& b)
{
  LefschetzModule out;
  // Basis of the product: pairs ((da, ia), (db, ib)) in lexicographic order
  // within each total degree.
  struct Pair {
    int da, ia, db, ib;
  };
  std::map<int, std::vector<Pair>> basis;
  for (int da : a.M.degrees())
    for (int db : b.M.degrees())
      for (int ia = 0; ia < a.M.dim(da); ++ia)
        for (int ib = 0; ib < b.M.dim(db); ++ib) basis[da + db].push_back({da, ia, db, ib});
  for (const auto& [d, v] : basis) out.M.pieces[d] = (int)v.size();

  auto index_of = [&](int da, int ia, int db, int ib) {
    const auto& v = basis.at(da + db);
    for (std::size_t t = 0; t < v.size(); ++t)
      if (v[t].da == da && v[t].ia == ia && v[t].db == db && v[t].ib == ib) return (int)t;
    throw std::logic_error("missing product basis element");
  };

  // a-operators act on the first factor, b-operators on the second; the
  // operators have even degree, so no Koszul signs arise.
  for (const GradedMap& op : a.a_basis) {
    GradedMap e = GradedMap::zero(out.M, 2);
    for (const auto& [d, v] : basis) {
      if (out.M.dim(d + 2) == 0) continue;
      Matrix blk(out.M.dim(d + 2), out.M.dim(d));
      for (std::size_t j = 0; j < v.size(); ++j) {
        Matrix sb = op.block(v[j].da);
        for (std::size_t r = 0; r < sb.rows(); ++r)
          if (sb(r, v[j].ia) != 0)
            blk(index_of(v[j].da + 2, (int)r, v[j].db, v[j].ib), j) = sb(r, v[j].ia);
      }
      if (!blk.is_zero()) e.blocks[d] = std::move(blk);
    }
    out.a_basis.push_back(std::move(e));
  }
  for (const GradedMap& op : b.a_basis) {
    GradedMap e = GradedMap::zero(out.M, 2);
    for (const auto& [d, v] : basis) {
      if (out.M.dim(d + 2) == 0) continue;
      Matrix blk(out.M.dim(d + 2), out.M.dim(d));
      for (std::size_t j = 0; j < v.size(); ++j) {
        Matrix sb = op.block(v[j].db);
        for (std::size_t r = 0; r < sb.rows(); ++r)
          if (sb(r, v[j].ib) != 0)
            blk(index_of(v[j].da, v[j].ia, v[j].db + 2, (int)r), j) = sb(r, v[j].ib);
      }
      if (!blk.is_zero()) e.blocks[d] = std::move(blk);
    }
    out.a_basis.push_back(std::move(e));
  }
  out.validate();
  return out;
}

LefschetzModule nonreductive_example()
{
  // M = sl2 (adjoint, basis f, h, e) + K^2 (degree 0, basis u, v).
  // Degree-0 coordinates are ordered (h, u, v).
  LefschetzModule L;
  L.M.pieces = {{-2, 1}, {0, 3}, {2, 1}};
  GradedMap e = GradedMap::zero(L.M, 2);
  {
    Matrix low(3, 1);
    low(0, 0) = 1;  // ad_e f = h
    e.blocks[-2] = low;
    Matrix mid(1, 3);
    mid(0, 0) = -2;  // ad_e h = -2e
    e.blocks[0] = mid;
  }
  GradedMap ep = GradedMap::zero(L.M, 2);
  {
    Matrix low(3, 1);
    low(1, 0) = 1;  // f -> u
    ep.blocks[-2] = low;
    Matrix mid(1, 3);
    mid(0, 2) = 1;  // v -> e
    ep.blocks[0] = mid;
  }
  L.a_basis = {e, ep};

  // Polarization of 2xz + 2y^2 - 2uv in coordinates (x, y, z, u, v) =
  // (e, h, f, u, v); flattened order is (f | h, u, v | e). This is the
  // unique-up-to-scale pairing invariant under both operators.
  PairingForm phi;
  phi.space = L.M;
  Matrix b2(1, 1), b0(3, 3), bm2(1, 1);
  b2(0, 0) = 1;   // phi(e, f)
  bm2(0, 0) = 1;  // phi(f, e)
  b0(0, 0) = 2;   // phi(h, h)
  b0(1, 2) = -1;  // phi(u, v)
  b0(2, 1) = -1;
  phi.blocks = {{2, b2}, {0, b0}, {-2, bm2}};
  L.phi = phi;
  L.validate();
  return L;
}

}  // namespace leflab
