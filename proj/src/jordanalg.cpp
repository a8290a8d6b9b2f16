#include "leflab/jordanalg.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "leflab/ext.hpp"

namespace leflab {

namespace {

// Basis masks of popcount k among m generators, ascending.
std::vector<int> masks_of(int m, int k)
{
  std::vector<int> out;
  for (int mask = 0; mask < (1 << m); ++mask)
    if (__builtin_popcount(mask) == k) out.push_back(mask);
  return out;
}

int index_in(const std::vector<int>& v, int mask)
{
  return (int)(std::lower_bound(v.begin(), v.end(), mask) - v.begin());
}

Poly two_var_poly(int nvars, int v1, const Rational& c1s, int v2, const Rational& c2s)
{
  // c1s * x_{v1} * x_{v2} as a monomial (exponent sum), scaled by c2s too.
  Exponents e(nvars, 0);
  ++e[v1];
  ++e[v2];
  Poly p;
  p[e] = c1s * c2s;
  return p;
}

void add_poly(Poly& into, const Poly& p)
{
  for (const auto& [m, c] : p) {
    into[m] += c;
    if (into[m] == 0) into.erase(m);
  }
}

}  // namespace

FrobeniusModel frobenius_model_A(int m)
{
  if (m < 1) throw std::invalid_argument("m must be positive");
  FrobeniusModel model;
  model.kase = JordanCase::A;
  model.m = m;

  // Basis of degree 2k: pairs (S, T) of popcount-k masks, ordered by (S, T).
  std::vector<std::vector<std::pair<int, int>>> basis(m + 1);
  for (int k = 0; k <= m; ++k) {
    auto mk = masks_of(m, k);
    for (int s : mk)
      for (int t : mk) basis[k].push_back({s, t});
    model.algebra.space.pieces[2 * k] = (int)basis[k].size();
  }
  auto pair_index = [&](int k, int s, int t) {
    auto mk = masks_of(m, k);
    return index_in(mk, s) * (int)mk.size() + index_in(mk, t);
  };
  model.algebra.fill_products([&](int p, int i, int q, int j) {
    auto [s1, t1] = basis[p / 2][i];
    auto [s2, t2] = basis[q / 2][j];
    Vec out(model.algebra.space.dim(p + q), Rational(0));
    int sgn = wedge_sign(s1, s2) * wedge_sign(t1, t2);
    if (sgn != 0) out[pair_index((p + q) / 2, s1 | s2, t1 | t2)] = sgn;
    return out;
  });

  // Defining relations x_ij x_kl + x_il x_kj = 0 (variables x_ij at i*m+j).
  int nv = m * m;
  std::set<Poly> rels;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          Poly r = two_var_poly(nv, i * m + j, 1, k * m + l, 1);
          add_poly(r, two_var_poly(nv, i * m + l, 1, k * m + j, 1));
          if (!r.empty()) rels.insert(r);
        }
  model.relations.assign(rels.begin(), rels.end());
  return model;
}

FrobeniusModel frobenius_model_D(int m)
{
  if (m < 1) throw std::invalid_argument("m must be positive");
  FrobeniusModel model;
  model.kase = JordanCase::D;
  model.m = m;
  int w = 2 * m;

  std::vector<std::vector<int>> basis(m + 1);
  for (int k = 0; k <= m; ++k) {
    basis[k] = masks_of(w, 2 * k);
    model.algebra.space.pieces[2 * k] = (int)basis[k].size();
  }
  model.algebra.fill_products([&](int p, int i, int q, int j) {
    int a = basis[p / 2][i], b = basis[q / 2][j];
    Vec out(model.algebra.space.dim(p + q), Rational(0));
    int sgn = wedge_sign(a, b);
    if (sgn != 0) out[index_in(basis[(p + q) / 2], a | b)] = sgn;
    return out;
  });

  // Variables: omega_ij for i < j, ordered like the degree-2 mask basis.
  std::vector<std::pair<int, int>> vars;
  for (int mask : basis[1]) {
    int i = __builtin_ctz(mask);
    int j = __builtin_ctz(mask & ~(1 << i));
    vars.push_back({i, j});
  }
  auto var_of = [&](int a, int b, Rational& sign) {
    if (a == b) return -1;
    sign = (a < b) ? 1 : -1;
    auto it = std::find(vars.begin(), vars.end(),
                        a < b ? std::make_pair(a, b) : std::make_pair(b, a));
    return (int)(it - vars.begin());
  };
  int nv = (int)vars.size();
  std::set<Poly> rels;
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j)
      for (int k = 0; k < w; ++k)
        for (int l = 0; l < w; ++l) {
          Poly r;
          Rational s1, s2;
          int v1 = var_of(i, j, s1), v2 = var_of(k, l, s2);
          if (v1 >= 0 && v2 >= 0) add_poly(r, two_var_poly(nv, v1, s1, v2, s2));
          int v3 = var_of(i, l, s1), v4 = var_of(k, j, s2);
          if (v3 >= 0 && v4 >= 0) add_poly(r, two_var_poly(nv, v3, s1, v4, s2));
          if (!r.empty()) rels.insert(r);
        }
  model.relations.assign(rels.begin(), rels.end());
  return model;
}

FrobeniusModel frobenius_model_C(int m)
{
  if (m < 1) throw std::invalid_argument("m must be positive");
  FrobeniusModel host = frobenius_model_A(m);
  FrobeniusModel model;
  model.kase = JordanCase::C;
  model.m = m;

  // Generators u_ij = x_ij + x_ji (i <= j) inside the bi-exterior algebra.
  std::vector<std::pair<int, int>> vars;
  std::vector<Vec> gens;
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      vars.push_back({i, j});
      Vec g(m * m, Rational(0));
      g[i * m + j] = 1;
      if (i != j) g[j * m + i] = 1;
      gens.push_back(std::move(g));
    }
  model.algebra = subalgebra_algebra(host.algebra, gens);

  auto var_of = [&](int a, int b) {
    auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    return (int)(std::find(vars.begin(), vars.end(), key) - vars.begin());
  };
  int nv = (int)vars.size();
  // u_ij u_jk = -u_jj u_ik for distinct outer indices; when the outer
  // indices coincide the ambient identities force u_ij u_ji = -2 u_jj u_ii,
  // so that instance carries the extra factor.
  std::set<Poly> rels;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Poly r = two_var_poly(nv, var_of(i, j), 1, var_of(j, k), 1);
        add_poly(r, two_var_poly(nv, var_of(j, j), i == k ? 2 : 1, var_of(i, k), 1));
        if (!r.empty()) rels.insert(r);
      }
  model.relations.assign(rels.begin(), rels.end());

  // The algebra's degree-2 basis must be expressed in the same order as the
  // relation variables: re-express so that generator t maps to basis t.
  // subalgebra_algebra uses the canonical RREF basis, so record coordinates
  // of the generators and change basis accordingly.
  auto spans = generated_subspaces(host.algebra, gens);
  Matrix change((int)gens.size(), (int)gens.size());
  for (std::size_t t = 0; t < gens.size(); ++t) {
    auto c = spans.at(2).coordinates(gens[t]);
    if (!c || c->size() != gens.size())
      throw std::logic_error("generators do not span the degree-2 part");
    for (std::size_t r = 0; r < c->size(); ++r) change(r, t) = (*c)[r];
  }
  // Rebuild the algebra in the generator basis (unit and top stay fixed).
  GradedAlgebra& alg = model.algebra;
  GradedAlgebra rebased;
  rebased.space = alg.space;
  auto inv_opt = inverse(change);
  if (!inv_opt) throw std::logic_error("generator change of basis is singular");
  Matrix inv = *inv_opt;
  rebased.fill_products([&](int p, int i, int q, int j) {
    // Convert basis i of degree p from the generator basis to the RREF
    // basis, multiply, convert back where the degree is 2.
    auto to_rref = [&](int deg, int idx) {
      Vec v(alg.space.dim(deg), Rational(0));
      if (deg == 2) {
        for (int r = 0; r < (int)gens.size(); ++r) v[r] = change(r, idx);
      } else {
        v[idx] = 1;
      }
      return v;
    };
    GradedVec prod = alg.multiply({{p, to_rref(p, i)}}, {{q, to_rref(q, j)}});
    Vec out(alg.space.dim(p + q), Rational(0));
    auto it = prod.find(p + q);
    if (it == prod.end()) return out;
    if (p + q == 2) return inv.apply(it->second);
    return it->second;
  });
  model.algebra = std::move(rebased);
  return model;
}

FrobeniusModel frobenius_model_BD(const Vec& q_diagonal)
{
  int w = (int)q_diagonal.size();
  if (w < 1) throw std::invalid_argument("form must have positive dimension");
  for (const Rational& qi : q_diagonal)
    if (qi == 0) throw std::invalid_argument("degenerate form rejected");
  FrobeniusModel model;
  model.kase = JordanCase::BD;
  model.m = w;
  model.q = q_diagonal;
  model.algebra.space.pieces = {{0, 1}, {2, w}, {4, 1}};
  model.algebra.fill_products([&](int p, int i, int q, int j) {
    Vec out(model.algebra.space.dim(p + q), Rational(0));
    if (p == 0) {
      out[j] = 1;
    } else if (q == 0) {
      out[i] = 1;
    } else if (p == 2 && q == 2) {
      if (i == j) out[0] = q_diagonal[i];
    }
    return out;
  });
  for (int i = 0; i < w; ++i)
    for (int j = i + 1; j < w; ++j) {
      model.relations.push_back(two_var_poly(w, i, 1, j, 1));
      Poly r = two_var_poly(w, i, q_diagonal[j], i, 1);
      add_poly(r, two_var_poly(w, j, -q_diagonal[i], j, 1));
      model.relations.push_back(r);
    }
  return model;
}

namespace {

GradedVec eval_monomial(const GradedAlgebra& alg, const Exponents& e)
{
  Vec unit(alg.space.dim(0), Rational(0));
  unit[0] = 1;
  GradedVec acc{{0, unit}};
  for (std::size_t v = 0; v < e.size(); ++v)
    for (int rep = 0; rep < e[v]; ++rep) {
      Vec g(alg.space.dim(2), Rational(0));
      g[v] = 1;
      acc = alg.multiply(acc, {{2, g}});
    }
  return acc;
}

GradedVec eval_poly(const GradedAlgebra& alg, const Poly& p)
{
  GradedVec acc;
  for (const auto& [mono, c] : p) acc = gv_add(acc, gv_scale(eval_monomial(alg, mono), c));
  return acc;
}

}  // namespace

bool presentation_check(const FrobeniusModel& model)
{
  for (const Poly& r : model.relations)
    if (!gv_is_zero(eval_poly(model.algebra, r))) return false;

  int nv = model.algebra.space.dim(2);
  int max_degree = model.algebra.top_degree() / 2 + 1;
  try {
    QuotientAlgebra q = quotient_algebra(nv, model.relations, max_degree);
    if (q.algebra.space.pieces != model.algebra.space.pieces) return false;
  } catch (const std::runtime_error&) {
    return false;
  }

  std::vector<Vec> gens;
  for (int t = 0; t < nv; ++t) {
    Vec g(nv, Rational(0));
    g[t] = 1;
    gens.push_back(std::move(g));
  }
  auto spans = generated_subspaces(model.algebra, gens);
  for (int d : model.algebra.space.degrees()) {
    auto it = spans.find(d);
    if (it == spans.end() || (int)it->second.dim() != model.algebra.space.dim(d)) return false;
  }
  return true;
}

namespace {

struct TensorPower {
  GradedAlgebra alg;
  // basis[D] = list of k-tuples (degree, index)
  std::map<int, std::vector<std::vector<std::pair<int, int>>>> basis;
};

TensorPower tensor_power(const GradedAlgebra& a, int k)
{
  TensorPower t;
  std::vector<std::vector<std::pair<int, int>>> tuples = {{}};
  for (int slot = 0; slot < k; ++slot) {
    std::vector<std::vector<std::pair<int, int>>> next;
    for (const auto& tup : tuples)
      for (int d : a.space.degrees())
        for (int i = 0; i < a.space.dim(d); ++i) {
          auto e = tup;
          e.push_back({d, i});
          next.push_back(std::move(e));
        }
    tuples = std::move(next);
  }
  for (const auto& tup : tuples) {
    int total = 0;
    for (auto [d, i] : tup) total += d;
    t.basis[total].push_back(tup);
  }
  for (const auto& [d, v] : t.basis) t.alg.space.pieces[d] = (int)v.size();

  auto index_of = [&](const std::vector<std::pair<int, int>>& tup) {
    int total = 0;
    for (auto [d, i] : tup) total += d;
    const auto& v = t.basis.at(total);
    auto it = std::find(v.begin(), v.end(), tup);
    if (it == v.end()) throw std::logic_error("missing tensor basis tuple");
    return (int)(it - v.begin());
  };
  t.alg.fill_products([&](int d1, int i1, int d2, int i2) {
    const auto& x = t.basis.at(d1)[i1];
    const auto& y = t.basis.at(d2)[i2];
    Vec out(t.alg.space.dim(d1 + d2), Rational(0));
    // Componentwise product, expanded slot by slot.
    std::vector<std::pair<std::vector<std::pair<int, int>>, Rational>> terms = {
        {{}, Rational(1)}};
    for (int slot = 0; slot < (int)x.size(); ++slot) {
      std::vector<std::pair<std::vector<std::pair<int, int>>, Rational>> next;
      Vec prod = a.basis_product(x[slot].first, x[slot].second, y[slot].first, y[slot].second);
      int pd = x[slot].first + y[slot].first;
      for (const auto& [tup, c] : terms)
        for (std::size_t r = 0; r < prod.size(); ++r) {
          if (prod[r] == 0) continue;
          auto e = tup;
          e.push_back({pd, (int)r});
          next.push_back({std::move(e), c * prod[r]});
        }
      terms = std::move(next);
    }
    for (const auto& [tup, c] : terms) out[index_of(tup)] += c;
    return out;
  });
  return t;
}

}  // namespace

GradedAlgebra level_k(const FrobeniusModel& model, int k)
{
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k == 1) return model.algebra;
  const GradedAlgebra& a = model.algebra;
  TensorPower t = tensor_power(a, k);

  std::vector<Vec> deltas;
  for (int g = 0; g < a.space.dim(2); ++g) {
    Vec d(t.alg.space.dim(2), Rational(0));
    for (int slot = 0; slot < k; ++slot) {
      std::vector<std::pair<int, int>> tup(k, {0, 0});
      tup[slot] = {2, g};
      const auto& v = t.basis.at(2);
      auto it = std::find(v.begin(), v.end(), tup);
      d[it - v.begin()] += 1;
    }
    deltas.push_back(std::move(d));
  }
  return subalgebra_algebra(t.alg, deltas);
}

BdLevelKResult bd_level_k_direct(const Vec& q_diagonal, int k)
{
  int w = (int)q_diagonal.size();
  for (const Rational& qi : q_diagonal)
    if (qi == 0) throw std::invalid_argument("degenerate form rejected");

  // Rational isotropic vectors from a small integer box.
  std::vector<Vec> isotropic;
  int bound = 6;
  std::vector<int> c(w, -bound);
  for (;;) {
    bool nonzero = false, first_pos = false;
    int g = 0;
    Rational val(0);
    for (int i = 0; i < w; ++i) {
      if (c[i] != 0 && !nonzero) {
        nonzero = true;
        first_pos = c[i] > 0;
      }
      g = std::gcd(g, std::abs(c[i]));
      val += q_diagonal[i] * c[i] * c[i];
    }
    if (nonzero && first_pos && g == 1 && val == 0) {
      Vec v(w);
      for (int i = 0; i < w; ++i) v[i] = c[i];
      isotropic.push_back(std::move(v));
    }
    int i = w - 1;
    while (i >= 0 && c[i] == bound) c[i--] = -bound;
    if (i < 0) break;
    ++c[i];
  }
  if (isotropic.empty())
    throw std::runtime_error("no rational isotropic vectors found for the given form");

  // Certified generating set: powers w^{k+1} until their span has the full
  // expected dimension dim Sym^{k+1} - dim Sym^{k-1}.
  std::vector<Exponents> mons = monomials_of_degree(w, k + 1);
  int target = (int)mons.size() - (int)monomials_of_degree(w, k - 1).size();
  std::vector<Poly> relations;
  Subspace span(mons.size());
  for (const Vec& v : isotropic) {
    Poly p = poly_pow(linear_poly(v), k + 1);
    Vec row(mons.size(), Rational(0));
    for (const auto& [mono, coeff] : p) {
      auto it = std::lower_bound(mons.begin(), mons.end(), mono);
      row[it - mons.begin()] = coeff;
    }
    if (span.contains(row)) continue;
    span = span.sum(Subspace::span_rows(Matrix::from_rows({row}, row.size())));
    relations.push_back(std::move(p));
    if ((int)span.dim() == target) break;
  }

  BdLevelKResult out;
  out.powers_certified = (int)span.dim() == target;
  out.quotient = quotient_algebra(w, relations, 2 * k + 2);
  const QuotientAlgebra& q = out.quotient;

  // so(W, q) basis acting as derivations; invariants = joint kernel.
  std::vector<Matrix> so_basis;
  for (int a = 0; a < w; ++a)
    for (int b = a + 1; b < w; ++b) {
      Matrix x(w, w);
      x(a, b) = q_diagonal[b];
      x(b, a) = -q_diagonal[a];
      so_basis.push_back(std::move(x));
    }

  // Invariant element dual to the form, normalized so that the soccle
  // identity x^2 u^{k-1} = q(x) u^k is exact (the 1/dim factor makes
  // x^2 project to q(x) u modulo the traceless part).
  Poly u;
  for (int i = 0; i < w; ++i) {
    Exponents e(w, 0);
    e[i] = 2;
    u[e] = Rational(1) / (q_diagonal[i] * w);
  }

  out.invariants_are_u_powers = true;
  for (int d = 0; d <= q.top; ++d) {
    int dim_d = (int)q.basis[d].size();
    std::vector<Vec> rows;
    for (const Matrix& x : so_basis)
      for (int col = 0; col < dim_d; ++col) {
        // Derivation applied to the col-th quotient basis monomial.
        Poly img;
        const Exponents& mono = q.basis[d][col];
        for (int var = 0; var < w; ++var) {
          if (mono[var] == 0) continue;
          Exponents rest = mono;
          --rest[var];
          for (int r = 0; r < w; ++r)
            if (x(r, var) != 0) {
              Exponents e2 = rest;
              ++e2[r];
              Poly term{{e2, Rational(mono[var]) * x(r, var)}};
              add_poly(img, term);
            }
        }
        Vec reduced = img.empty() ? Vec(dim_d, Rational(0)) : q.reduce(img);
        // Column col of the operator: store as part of the stacked system.
        rows.push_back(std::move(reduced));
      }
    // rows currently holds columns operator-by-operator; build the stacked
    // matrix with one block row per operator.
    Matrix sys((int)so_basis.size() * dim_d, dim_d);
    for (std::size_t t = 0; t < so_basis.size(); ++t)
      for (int col = 0; col < dim_d; ++col)
        for (int r = 0; r < dim_d; ++r)
          sys(t * dim_d + r, col) = rows[t * dim_d + col][r];
    Matrix ker = kernel_basis(sys);
    out.invariant_dims.push_back((int)ker.rows());
    out.invariants_total += (int)ker.rows();

    if (d % 2 == 0) {
      Vec upow = q.reduce(poly_pow(u, d / 2));
      Subspace kspan = ker.rows() ? Subspace::span_rows(ker) : Subspace(dim_d);
      if (ker.rows() != 1 || !kspan.contains(upow)) out.invariants_are_u_powers = false;
    } else if (ker.rows() != 0) {
      out.invariants_are_u_powers = false;
    }
  }

  out.soccle_ok = true;
  for (int i = 0; i < w; ++i) {
    Exponents sq(w, 0);
    sq[i] = 2;
    Poly lhs = poly_mul(Poly{{sq, Rational(1)}}, poly_pow(u, k - 1));
    Poly rhs = poly_pow(u, k);
    for (auto& [mono, coeff] : rhs) coeff *= q_diagonal[i];
    Poly diff = lhs;
    for (auto& [mono, coeff] : rhs) coeff = -coeff;
    add_poly(diff, rhs);
    Vec red = diff.empty() ? Vec() : q.reduce(diff);
    for (const Rational& x : red)
      if (x != 0) out.soccle_ok = false;
  }
  return out;
}

bool derivation_property(const GradedAlgebra& alg, const GradedLieAlgebra& g)
{
  GradedSpace centered = alg.centered_space();
  if (!(g.ambient == centered)) throw std::invalid_argument("closure is not on the algebra");
  int n = alg.depth();
  int nt = centered.total_dim();
  auto it = g.basis.find(0);
  if (it == g.basis.end()) return true;
  const std::vector<Matrix>& b0 = it->second;

  Vec unit_flat(nt, Rational(0));
  unit_flat[centered.offset(-n)] = 1;
  Matrix sys(nt, (int)b0.size());
  for (std::size_t t = 0; t < b0.size(); ++t) {
    Vec img = b0[t].apply(unit_flat);
    for (int r = 0; r < nt; ++r) sys(r, t) = img[r];
  }
  Matrix ker = kernel_basis(sys);

  auto flat_of = [&](int alg_deg, const Vec& v) {
    Vec out(nt, Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) out[centered.offset(alg_deg - n) + i] = v[i];
    return out;
  };
  auto piece_of = [&](const Vec& flat, int alg_deg) {
    Vec out(centered.dim(alg_deg - n), Rational(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = flat[centered.offset(alg_deg - n) + i];
    return out;
  };

  for (std::size_t kr = 0; kr < ker.rows(); ++kr) {
    Matrix d(nt, nt);
    for (std::size_t t = 0; t < b0.size(); ++t)
      if (ker(kr, t) != 0) d = d + b0[t] * ker(kr, t);
    for (int p : alg.space.degrees())
      for (int q : alg.space.degrees()) {
        if (alg.space.dim(p + q) == 0) continue;
        for (int i = 0; i < alg.space.dim(p); ++i)
          for (int j = 0; j < alg.space.dim(q); ++j) {
            Vec a(alg.space.dim(p), Rational(0));
            a[i] = 1;
            Vec b(alg.space.dim(q), Rational(0));
            b[j] = 1;
            Vec ab = alg.basis_product(p, i, q, j);
            Vec lhs = piece_of(d.apply(flat_of(p + q, ab)), p + q);
            Vec da = piece_of(d.apply(flat_of(p, a)), p);
            Vec db = piece_of(d.apply(flat_of(q, b)), q);
            GradedVec rhs = gv_add(alg.multiply({{p, da}}, {{q, b}}),
                                   alg.multiply({{p, a}}, {{q, db}}));
            Vec rhs_piece(alg.space.dim(p + q), Rational(0));
            auto rit = rhs.find(p + q);
            if (rit != rhs.end()) rhs_piece = rit->second;
            if (lhs != rhs_piece) return false;
          }
      }
  }
  return true;
}

LefschetzModule model_module(const FrobeniusModel& model)
{
  if (model.algebra.space.dim(model.algebra.top_degree()) != 1)
    throw std::invalid_argument("top piece is not one-dimensional");
  return module_from_algebra(model.algebra, Vec{rat(1)});
}

}  // namespace leflab
