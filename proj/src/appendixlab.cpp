#include "leflab/appendixlab.hpp"

#include <random>
#include <stdexcept>

#include "leflab/lie.hpp"

namespace leflab {

namespace {

Rational binomial(int n, int k)
{
  Rational r(1);
  for (int i = 1; i <= k; ++i) r *= Rational(n - k + i) / Rational(i);
  return r;
}

Matrix transpose_of(const Matrix& m) { return m.transpose(); }

Matrix matrix_power(const Matrix& m, int k)
{
  Matrix r = Matrix::identity(m.rows());
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b)
{
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

bool is_scalar(const Matrix& m)
{
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return false;
  for (std::size_t i = 1; i < m.rows(); ++i)
    if (m(i, i) != m(0, 0)) return false;
  return true;
}

}  // namespace

bool FormedSpace::symmetric() const { return form == form.transpose(); }

bool FormedSpace::skew() const { return form == form.transpose() * Rational(-1); }

FormedSpace orthogonal_space(int n) { return {Matrix::identity(n)}; }

FormedSpace symplectic_space(int n)
{
  if (n % 2 != 0) throw std::invalid_argument("symplectic dimension must be even");
  Matrix g(n, n);
  for (int i = 0; i < n / 2; ++i) {
    g(i, n / 2 + i) = 1;
    g(n / 2 + i, i) = -1;
  }
  return {g};
}

Matrix sl2_e(int d)
{
  // Basis m_j = x^{d-j} y^j; e = x d/dy sends m_j to j m_{j-1}.
  Matrix e(d + 1, d + 1);
  for (int j = 1; j <= d; ++j) e(j - 1, j) = j;
  return e;
}

Matrix sl2_f(int d)
{
  Matrix f(d + 1, d + 1);
  for (int j = 0; j < d; ++j) f(j + 1, j) = d - j;
  return f;
}

Matrix sl2_h(int d)
{
  Matrix h(d + 1, d + 1);
  for (int j = 0; j <= d; ++j) h(j, j) = d - 2 * j;
  return h;
}

Matrix vd_form(int d)
{
  Matrix b(d + 1, d + 1);
  for (int j = 0; j <= d; ++j)
    b(j, d - j) = Rational(j % 2 ? -1 : 1) / binomial(d, j);
  return b;
}

AutAlgebra aut_algebra(const Matrix& g)
{
  int n = (int)g.rows();
  // Constraint (X^T G + G X)_{ij} = 0 on the flattened unknown X.
  Matrix c(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        c(i * n + j, k * n + i) += g(k, j);
        c(i * n + j, k * n + j) += g(i, k);
      }
  Matrix ker = kernel_basis(c);
  AutAlgebra out{Subspace::span_rows(ker), {}};
  for (std::size_t r = 0; r < out.span.dim(); ++r)
    out.basis.push_back(unflatten(out.span.basis().row(r), n, n));
  return out;
}

GlDecomposition gl_decomposition(int d)
{
  if (d < 1) throw std::invalid_argument("d must be positive");
  GlDecomposition out;
  out.d = d;
  Matrix e = sl2_e(d), f = sl2_f(d);
  int n2 = (d + 1) * (d + 1);

  Subspace total(n2);
  bool independent = true;
  Matrix ei = Matrix::identity(d + 1);
  for (int i = 0; i <= d; ++i) {
    std::vector<Vec> rows{flatten(ei)};
    Matrix cur = ei;
    while (true) {
      cur = bracket(f, cur);
      Subspace next = Subspace::span_rows(Matrix::from_rows(rows, n2)).sum(
          Subspace::span_rows(Matrix::from_rows({flatten(cur)}, n2)));
      if (next.dim() == rows.size()) break;
      rows.push_back(flatten(cur));
    }
    Subspace piece = Subspace::span_rows(Matrix::from_rows(rows, n2));
    out.dims.push_back((int)piece.dim());
    if (piece.dim() > 0) ++out.nonzero_pieces;
    Subspace joined = total.sum(piece);
    if (joined.dim() != total.dim() + piece.dim()) independent = false;
    total = joined;
    out.pieces.push_back(std::move(piece));
    ei = ei * e;
  }
  out.direct_sum = independent && (int)total.dim() == n2;

  AutAlgebra aut = aut_algebra(vd_form(d));
  Subspace odd(n2);
  for (int i = 1; i <= d; i += 2) odd = odd.sum(out.pieces[i]);
  out.odd_is_aut = (odd == aut.span);
  return out;
}

HiRecord hi_check(int d, int i)
{
  if (i < 1 || i > d) throw std::invalid_argument("need 1 <= i <= d");
  HiRecord r;
  Matrix e = sl2_e(d), f = sl2_f(d), h = sl2_h(d);
  Matrix ei = matrix_power(e, i), fi = matrix_power(f, i);
  r.h_i = bracket(ei, fi);

  Matrix g = vd_form(d);
  r.in_aut = (transpose_of(r.h_i) * g + g * r.h_i).is_zero();
  r.commutes_with_h = bracket(h, r.h_i).is_zero();

  Subspace sl2 = Subspace::span_rows(
      Matrix::from_rows({flatten(e), flatten(h), flatten(f)}, (d + 1) * (d + 1)));
  r.in_sl2 = sl2.contains(flatten(r.h_i));

  Matrix ui = ei;
  for (int t = 0; t < i; ++t) ui = bracket(f, ui);
  r.ui_commutes = bracket(h, ui).is_zero();

  // h_i is diagonal on the monomials x^k y^l; swapping k and l must negate
  // the eigenvalue (basis index j has (k, l) = (d - j, j)).
  r.eigen_antisymmetric = true;
  for (int j = 0; j <= d; ++j)
    if (r.h_i(j, j) != -r.h_i(d - j, d - j)) r.eigen_antisymmetric = false;
  return r;
}

GlpmSplit glpm_split(const FormedSpace& U)
{
  int n = U.dim();
  if (n < 2) throw std::invalid_argument("need dim >= 2");
  if (!U.symmetric() && !U.skew()) throw std::invalid_argument("form must be (skew-)symmetric");
  if (!inverse(U.form)) throw std::invalid_argument("form must be nondegenerate");
  const Matrix& g = U.form;

  GlpmSplit out{Subspace(n * n), Subspace(n * n), Subspace(n * n)};
  AutAlgebra aut = aut_algebra(g);
  out.g_minus = aut.span;
  out.minus_is_aut = true;  // by construction; recorded for the report

  // g_plus: X^T G - G X = 0 and tr X = 0.
  Matrix c(n * n + 1, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        c(i * n + j, k * n + i) += g(k, j);
        c(i * n + j, k * n + j) -= g(i, k);
      }
  for (int i = 0; i < n; ++i) c(n * n, i * n + i) = 1;
  out.g_plus = Subspace::span_rows(kernel_basis(c));

  out.g_zero = Subspace::span_rows(
      Matrix::from_rows({flatten(Matrix::identity(n))}, n * n));

  Subspace sum = out.g_minus.sum(out.g_zero).sum(out.g_plus);
  out.direct_sum =
      sum.dim() == n * (std::size_t)n &&
      out.g_minus.dim() + out.g_zero.dim() + out.g_plus.dim() == sum.dim();

  auto witness_in = [&](const Subspace& s) {
    std::vector<Matrix> cand;
    for (std::size_t r = 0; r < s.dim(); ++r) cand.push_back(unflatten(s.basis().row(r), n, n));
    std::vector<Matrix> tries = cand;
    for (std::size_t a = 0; a < cand.size(); ++a)
      for (std::size_t b = a + 1; b < cand.size(); ++b) tries.push_back(cand[a] + cand[b]);
    for (const Matrix& y : tries) {
      Matrix y2 = y * y;
      if (!is_scalar(y2) && y2.trace() != 0) return true;
    }
    return false;
  };

  if (n > 2) {
    std::vector<Vec> rows;
    std::vector<Matrix> pb;
    for (std::size_t r = 0; r < out.g_plus.dim(); ++r)
      pb.push_back(unflatten(out.g_plus.basis().row(r), n, n));
    for (std::size_t a = 0; a < pb.size(); ++a)
      for (std::size_t b = a + 1; b < pb.size(); ++b) rows.push_back(flatten(bracket(pb[a], pb[b])));
    Subspace span = rows.empty() ? Subspace(n * n)
                                 : Subspace::span_rows(Matrix::from_rows(rows, n * n));
    out.bracket_onto = (span == out.g_minus);
    bool wm = witness_in(out.g_minus);
    bool wp = out.g_plus.dim() == 0 || witness_in(out.g_plus);
    out.witness_ok = wm && wp;
  }
  return out;
}

TensorClosure tensor_closure_experiment(const std::vector<FormedSpace>& spaces, unsigned seed)
{
  if (spaces.size() < 2) throw std::invalid_argument("need at least two factors");
  for (const FormedSpace& u : spaces) {
    if (!u.symmetric() && !u.skew()) throw std::invalid_argument("bad form");
    if (!inverse(u.form)) throw std::invalid_argument("degenerate form");
    if (u.symmetric() && u.dim() == 2)
      throw std::invalid_argument("inner-product planes are excluded");
  }

  TensorClosure out;
  out.seed = seed;

  Matrix g = spaces[0].form;
  for (std::size_t i = 1; i < spaces.size(); ++i) g = kron(g, spaces[i].form);
  int n = (int)g.rows();

  AutAlgebra aut = aut_algebra(g);
  out.aut_dim = (int)aut.span.dim();

  // Embedded factor algebras.
  std::vector<Matrix> gens;
  std::vector<Vec> prod_rows;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    AutAlgebra ai = aut_algebra(spaces[i].form);
    for (const Matrix& x : ai.basis) {
      Matrix emb = Matrix::identity(1);
      for (std::size_t j = 0; j < spaces.size(); ++j)
        emb = kron(emb, j == i ? x : Matrix::identity(spaces[j].dim()));
      prod_rows.push_back(flatten(emb));
      gens.push_back(std::move(emb));
    }
  }
  Subspace prod = Subspace::span_rows(Matrix::from_rows(prod_rows, n * n));

  // Deterministic pseudo-random form-preserving element, projected off the
  // product subalgebra (standard-coordinate least squares).
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(-3, 3);
  Matrix pbasis = prod.basis();
  Matrix normal = pbasis * pbasis.transpose();
  Matrix extra;
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vec x(n * n, Rational(0));
    for (std::size_t r = 0; r < aut.span.dim(); ++r) {
      Rational cr(pick(rng));
      if (cr == 0) continue;
      const Matrix& b = aut.span.basis();
      for (int t = 0; t < n * n; ++t) x[t] += cr * b(r, t);
    }
    Vec rhs(prod.dim(), Rational(0));
    for (std::size_t r = 0; r < prod.dim(); ++r)
      for (int t = 0; t < n * n; ++t) rhs[r] += pbasis(r, t) * x[t];
    auto coef = solve_unique(normal, rhs);
    if (!coef) continue;
    for (std::size_t r = 0; r < prod.dim(); ++r)
      for (int t = 0; t < n * n; ++t) x[t] -= (*coef)[r] * pbasis(r, t);
    bool zero = true;
    for (const Rational& v : x)
      if (v != 0) zero = false;
    if (zero) continue;
    extra = unflatten(x, n, n);
    break;
  }
  if (extra.rows() == 0) {
    // Only the boundary case, where the embedded factors already exhaust the
    // automorphism algebra, has nothing left outside the product.
    if (prod.dim() != aut.span.dim())
      throw std::runtime_error("no generic element found");
  } else {
    gens.push_back(extra);
  }

  GradedSpace ambient;
  ambient.pieces[0] = n;
  std::vector<std::pair<int, Matrix>> graded;
  for (Matrix& m : gens) graded.push_back({0, std::move(m)});
  out.g = lie_closure(ambient, graded);
  out.closure_dim = out.g.dim();
  out.reached_aut = out.closure_dim == out.aut_dim;
  out.simple = is_simple(out.g);
  out.preserves_form = true;
  for (const auto& [deg, mats] : out.g.basis)
    for (const Matrix& m : mats)
      if (!aut.span.contains(flatten(m))) out.preserves_form = false;
  return out;
}

namespace {

/// V = V(2k) + V(2k-2), K[e]-modules with mult-by-e as the Lefschetz map.
/// The second summand's invariant form is scaled by -1 so the middle plane
/// has rational isotropic lines.
struct SpinorSpace {
  int k = 0;
  int na = 0, nb = 0, n = 0;  // dims of the summands and total
  Matrix g;                   // the bilinear form
  Matrix e;                   // multiplication by e on both summands
  int dega(int p) const { return 2 * p - 2 * k; }
  int degb(int q) const { return 2 * q - (2 * k - 2); }
  int idxa(int p) const { return p; }
  int idxb(int q) const { return na + q; }
};

SpinorSpace make_spinor_space(int k)
{
  SpinorSpace s;
  s.k = k;
  s.na = 2 * k + 1;
  s.nb = 2 * k - 1;
  s.n = s.na + s.nb;
  s.g = Matrix(s.n, s.n);
  for (int p = 0; p < s.na; ++p)
    s.g(s.idxa(p), s.idxa(2 * k - p)) = ((k + p) % 2) ? -1 : 1;
  for (int q = 0; q < s.nb; ++q)
    s.g(s.idxb(q), s.idxb(2 * k - 2 - q)) = Rational(-1) * (((k - 1 + q) % 2) ? -1 : 1);
  s.e = Matrix(s.n, s.n);
  for (int p = 0; p + 1 < s.na; ++p) s.e(s.idxa(p + 1), s.idxa(p)) = 1;
  for (int q = 0; q + 1 < s.nb; ++q) s.e(s.idxb(q + 1), s.idxb(q)) = 1;
  return s;
}

/// The second generator of a: diagonal parts a*e and -a*e, off-diagonal
/// blocks lambda e^2 (second to first) and the truncation (first to second),
/// with lambda = -1 and a = 5/4 so that a^2 + lambda = (3/4)^2.
Matrix make_eprime(const SpinorSpace& s, const Rational& a, const Rational& lambda)
{
  Matrix m(s.n, s.n);
  for (int p = 0; p + 1 < s.na; ++p) m(s.idxa(p + 1), s.idxa(p)) = a;
  for (int q = 0; q + 1 < s.nb; ++q) m(s.idxb(q + 1), s.idxb(q)) = -a;
  for (int q = 0; q < s.nb; ++q) m(s.idxa(q + 2), s.idxb(q)) = lambda;
  for (int p = 0; p < s.nb; ++p) m(s.idxb(p), s.idxa(p)) = 1;
  return m;
}

}  // namespace

SpinorRecord spinor_example(int k)
{
  if (k < 2) throw std::invalid_argument("need k >= 2");
  SpinorRecord rec;
  rec.k = k;
  SpinorSpace s = make_spinor_space(k);
  const Rational a(5, 4), lambda(-1), sq(3, 4);
  Matrix eprime = make_eprime(s, a, lambda);

  auto in_so = [&](const Matrix& x) { return (x.transpose() * s.g + s.g * x).is_zero(); };
  rec.setup_ok = in_so(s.e) && in_so(eprime) && bracket(s.e, eprime).is_zero();

  // Centralizer of e in the degree-2 part of so(V).
  {
    std::vector<int> deg(s.n);
    for (int p = 0; p < s.na; ++p) deg[s.idxa(p)] = s.dega(p);
    for (int q = 0; q < s.nb; ++q) deg[s.idxb(q)] = s.degb(q);
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j < s.n; ++j)
        if (deg[i] == deg[j] + 2) slots.push_back({i, j});
    int nv = (int)slots.size();
    auto build = [&](const Vec& coords) {
      Matrix x(s.n, s.n);
      for (int t = 0; t < nv; ++t) x(slots[t].first, slots[t].second) = coords[t];
      return x;
    };
    // Conditions: orthogonality and commuting with e, expressed per slot.
    std::vector<Vec> cols;
    for (int t = 0; t < nv; ++t) {
      Vec unit(nv, Rational(0));
      unit[t] = 1;
      Matrix x = build(unit);
      Matrix c1 = x.transpose() * s.g + s.g * x;
      Matrix c2 = bracket(x, s.e);
      Vec col;
      Vec f1 = flatten(c1), f2 = flatten(c2);
      col.insert(col.end(), f1.begin(), f1.end());
      col.insert(col.end(), f2.begin(), f2.end());
      cols.push_back(std::move(col));
    }
    Matrix cm(cols[0].size(), nv);
    for (int t = 0; t < nv; ++t)
      for (std::size_t r = 0; r < cols[t].size(); ++r) cm(r, t) = cols[t][r];
    rec.centralizer_dim = (int)kernel_basis(cm).rows();
  }

  Matrix ap = eprime + s.e * sq, am = eprime - s.e * sq;
  rec.relations_ok = (ap * am).is_zero() && (am * ap).is_zero() &&
                     matrix_power(ap, 2 * k + 1).is_zero() &&
                     matrix_power(am, 2 * k + 1).is_zero();

  if (k < 3) return rec;

  // Semispinor W = even exterior powers of F, F spanned by the isotropic
  // line in the middle plus everything of positive degree.
  int nf = 2 * k;
  std::vector<Vec> fbasis(nf, Vec(s.n, Rational(0)));
  std::vector<int> fdeg(nf, 0);
  // f = e^k (first summand) + e^{k-1} (second); f' = (difference)/2.
  fbasis[0][s.idxa(k)] = 1;
  fbasis[0][s.idxb(k - 1)] = 1;
  Vec fprime(s.n, Rational(0));
  fprime[s.idxa(k)] = Rational(1, 2);
  fprime[s.idxb(k - 1)] = Rational(-1, 2);
  int pos = 1;
  for (int p = k + 1; p <= 2 * k; ++p, ++pos) {
    fbasis[pos][s.idxa(p)] = 1;
    fdeg[pos] = s.dega(p);
  }
  for (int q = k; q <= 2 * k - 2; ++q, ++pos) {
    fbasis[pos][s.idxb(q)] = 1;
    fdeg[pos] = s.degb(q);
  }

  // Coordinates in the F basis of a positive-degree vector of V.
  auto f_coords = [&](const Vec& v) {
    Vec c(nf, Rational(0));
    for (int t = 1; t < nf; ++t)
      for (int i = 0; i < s.n; ++i)
        if (fbasis[t][i] != 0) {
          c[t] = v[i] / fbasis[t][i];
          break;
        }
    // The middle-plane components must come only from f (degree-0 target
    // never appears for degree >= 2 images, checked by the caller context).
    return c;
  };

  int nmask = 1 << nf;
  int ntot = k * k;  // depth of W
  auto mask_degree = [&](int m) {
    int d = -ntot;
    for (int t = 0; t < nf; ++t)
      if (m & (1 << t)) d += fdeg[t];
    return d;
  };

  GradedSpace MW;
  std::map<int, std::vector<int>> masks_by_degree;
  for (int m = 0; m < nmask; ++m) {
    if (__builtin_popcount(m) % 2) continue;
    masks_by_degree[mask_degree(m)].push_back(m);
  }
  std::map<std::pair<int, int>, int> index_of;  // (degree, mask) -> index
  for (auto& [d, ms] : masks_by_degree) {
    MW.pieces[d] = (int)ms.size();
    for (int i = 0; i < (int)ms.size(); ++i) index_of[{d, ms[i]}] = i;
  }
  int wtot = MW.total_dim();
  rec.w_dim = wtot;

  // Wedge a single F-basis vector into a mask.
  auto wedge_in = [&](int t, int m, Rational& sign) -> int {
    if (m & (1 << t)) return -1;
    int below = __builtin_popcount(m & ((1 << t) - 1));
    sign = (below % 2) ? -1 : 1;
    return m | (1 << t);
  };

  // rho(x) on W for x in the span of a (degree +2 so-operators).
  auto rho = [&](const Matrix& x) {
    GradedMap op = GradedMap::zero(MW, 2);
    Vec xf = x.apply(fprime);
    Vec xf_c = f_coords(xf);
    for (auto& [d, ms] : masks_by_degree) {
      if (MW.dim(d + 2) == 0) {
        continue;
      }
      Matrix blk(MW.dim(d + 2), MW.dim(d));
      for (int ci = 0; ci < (int)ms.size(); ++ci) {
        int m = ms[ci];
        // -f ^ x(f') ^ (mask)
        for (int t = 1; t < nf; ++t) {
          if (xf_c[t] == 0) continue;
          Rational s1, s2;
          int m1 = wedge_in(t, m, s1);
          if (m1 < 0) continue;
          int m2 = wedge_in(0, m1, s2);
          if (m2 < 0) continue;
          blk(index_of.at({d + 2, m2}), ci) += Rational(-1) * s1 * s2 * xf_c[t];
        }
        // Derivation part.
        for (int t = 0; t < nf; ++t) {
          if (!(m & (1 << t))) continue;
          Vec img = x.apply(fbasis[t]);
          Vec c = f_coords(img);
          int removed = m & ~(1 << t);
          int below_t = __builtin_popcount(m & ((1 << t) - 1));
          for (int u = 1; u < nf; ++u) {
            if (c[u] == 0) continue;
            Rational s2;
            int m2 = wedge_in(u, removed, s2);
            if (m2 < 0) continue;
            Rational sgn = (below_t % 2) ? -1 : 1;
            blk(index_of.at({d + 2, m2}), ci) += sgn * s2 * c[u];
          }
        }
      }
      op.blocks[d] = std::move(blk);
    }
    return op;
  };

  LefschetzModule wmod;
  wmod.M = MW;
  wmod.a_basis = {rho(ap), rho(am)};
  wmod.validate();
  rec.frobenius = frobenius_order(wmod, 3);
  rec.order2_not3 = rec.frobenius.order == 2;

  // a_pm(f') is proportional to a_pm(f) with a common nonzero ratio.
  {
    Vec vp = ap.apply(fprime), wp = ap.apply(Vec(fbasis[0]));
    Vec vm = am.apply(fprime), wm = am.apply(Vec(fbasis[0]));
    auto ratio = [&](const Vec& u, const Vec& w) -> std::optional<Rational> {
      std::optional<Rational> r;
      for (int i = 0; i < s.n; ++i) {
        if (w[i] == 0 && u[i] == 0) continue;
        if (w[i] == 0) return std::nullopt;
        Rational q = u[i] / w[i];
        if (r && *r != q) return std::nullopt;
        r = q;
      }
      return r;
    };
    auto rp = ratio(vp, wp), rm = ratio(vm, wm);
    rec.dual_line_ok = rp && rm && *rp != 0 && *rm == Rational(0) - *rp;
  }

  // Reduced operators: wedging with f ^ v for v in the degree-2 part of V;
  // their pairwise products must vanish.
  {
    std::vector<GradedMap> abar;
    for (int t = 1; t < nf; ++t) {
      if (fdeg[t] != 2) continue;
      GradedMap op = GradedMap::zero(MW, 2);
      for (auto& [d, ms] : masks_by_degree) {
        if (MW.dim(d + 2) == 0) continue;
        Matrix blk(MW.dim(d + 2), MW.dim(d));
        for (int ci = 0; ci < (int)ms.size(); ++ci) {
          Rational s1, s2;
          int m1 = wedge_in(t, ms[ci], s1);
          if (m1 < 0) continue;
          int m2 = wedge_in(0, m1, s2);
          if (m2 < 0) continue;
          blk(index_of.at({d + 2, m2}), ci) += s1 * s2;
        }
        op.blocks[d] = std::move(blk);
      }
      abar.push_back(std::move(op));
    }
    rec.abar_sq_trivial = !abar.empty();
    for (const GradedMap& u : abar)
      for (const GradedMap& v : abar)
        if (!u.compose(v).is_zero()) rec.abar_sq_trivial = false;
  }
  return rec;
}

}  // namespace leflab
