#include "leflab/geomodels.hpp"

#include <stdexcept>

#include "leflab/polyquot.hpp"

namespace leflab {

namespace {

std::vector<int> pair_masks(int m)
{
  std::vector<int> out;
  for (int mask = 0; mask < (1 << m); ++mask)
    if (__builtin_popcount(mask) == 2) out.push_back(mask);
  return out;
}

// Wedge operator of a 2-form given by coefficients on the ascending pair-mask
// basis, as a flat matrix on the centered exterior space.
Matrix wedge2(const Ext& x, const Vec& coeffs)
{
  std::map<int, Rational> element;
  std::vector<int> masks = pair_masks(x.m);
  for (std::size_t t = 0; t < masks.size(); ++t)
    if (coeffs[t] != 0) element[masks[t]] = coeffs[t];
  return x.wedge(element);
}

// Antisymmetric Gram matrix of the same 2-form: lambda(a_i, a_j).
Matrix gram2(int m, const Vec& coeffs)
{
  Matrix g(m, m);
  std::vector<int> masks = pair_masks(m);
  for (std::size_t t = 0; t < masks.size(); ++t) {
    int i = __builtin_ctz(masks[t]);
    int j = __builtin_ctz(masks[t] & ~(1 << i));
    g(i, j) = coeffs[t];
    g(j, i) = -coeffs[t];
  }
  return g;
}

Vec coeffs_of_gram(const Matrix& g)
{
  int m = (int)g.rows();
  std::vector<int> masks = pair_masks(m);
  Vec out;
  for (int mask : masks) {
    int i = __builtin_ctz(mask);
    int j = __builtin_ctz(mask & ~(1 << i));
    out.push_back(g(i, j));
  }
  return out;
}

}  // namespace

Matrix derivation_extension(const Ext& x, const Matrix& sigma)
{
  int nt = x.space.total_dim();
  Matrix out(nt, nt);
  for (int k = 0; k < x.m; ++k)
    for (int l = 0; l < x.m; ++l)
      if (sigma(k, l) != 0)
        out = out + (x.wedge_monomial(1 << k) * x.contract_gen(l)) * sigma(k, l);
  return out;
}

TorusTotal torus_total(int n)
{
  if (n < 1) throw std::invalid_argument("n must be positive");
  TorusTotal t;
  t.ext = make_ext(2 * n);
  t.module.M = t.ext.space;
  for (int mask : pair_masks(2 * n))
    t.module.a_basis.push_back(
        GradedMap::from_full(t.ext.space, 2, t.ext.wedge_monomial(mask)));
  t.module.validate();
  t.gen = generate_g(t.module);

  int nt = t.ext.space.total_dim();
  std::vector<std::pair<int, Matrix>> fams;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = i + 1; j < 2 * n; ++j) {
      fams.push_back({2, t.ext.wedge_monomial((1 << i) | (1 << j))});
      fams.push_back({-2, t.ext.contract_gen(i) * t.ext.contract_gen(j)});
    }
  for (int k = 0; k < 2 * n; ++k)
    for (int l = 0; l < 2 * n; ++l) {
      Matrix sigma(2 * n, 2 * n);
      sigma(k, l) = 1;
      Matrix op = derivation_extension(t.ext, sigma);
      if (k == l) op = op - Matrix::identity(nt) * Rational(1, 2);
      fams.push_back({0, op});
    }
  t.spin = lie_closure(t.ext.space, fams);
  return t;
}

namespace {

// so(V + V*) with the evaluation form; V coordinates first. The three
// families below form a basis.
struct PsiKit {
  int n2 = 0;  // dim V = 2n
  Ext x;

  Matrix psi2(int i, int j) const  // alpha_i wedge alpha_j
  {
    Matrix z(2 * n2, 2 * n2);
    z(n2 + j, i) = 1;
    z(n2 + i, j) = -1;
    return z;
  }
  Matrix psi_minus2(int i, int j) const  // a_i wedge a_j
  {
    Matrix z(2 * n2, 2 * n2);
    z(j, n2 + i) = 1;
    z(i, n2 + j) = -1;
    return z;
  }
  Matrix psi0(const Matrix& sigma) const  // sigma in gl(V*)
  {
    Matrix z(2 * n2, 2 * n2);
    for (int k = 0; k < n2; ++k)
      for (int l = 0; l < n2; ++l) {
        z(n2 + k, n2 + l) = sigma(k, l);
        z(k, l) = -sigma(l, k);
      }
    return z;
  }

  // The operator assignment, defined blockwise on any element of so.
  Matrix psi_of(const Matrix& z) const
  {
    int nt = x.space.total_dim();
    Matrix out(nt, nt);
    // Degree 2: lower-left block is the Gram of a 2-form on V.
    for (int i = 0; i < n2; ++i)
      for (int j = i + 1; j < n2; ++j)
        if (z(n2 + j, i) != 0)
          out = out + x.wedge_monomial((1 << i) | (1 << j)) * z(n2 + j, i);
    // Degree -2: upper-right block encodes a 2-vector.
    for (int i = 0; i < n2; ++i)
      for (int j = i + 1; j < n2; ++j)
        if (z(j, n2 + i) != 0)
          out = out + (x.contract_gen(i) * x.contract_gen(j)) * z(j, n2 + i);
    // Degree 0: sigma from the V* block, extended as a derivation minus half
    // its trace.
    Matrix sigma(n2, n2);
    Rational tr(0);
    for (int k = 0; k < n2; ++k)
      for (int l = 0; l < n2; ++l) sigma(k, l) = z(n2 + k, n2 + l);
    for (int k = 0; k < n2; ++k) tr += sigma(k, k);
    out = out + derivation_extension(x, sigma) - Matrix::identity(nt) * (tr / 2);
    return out;
  }
};

}  // namespace

bool verify_psi(int n)
{
  PsiKit kit;
  kit.n2 = 2 * n;
  kit.x = make_ext(2 * n);
  std::vector<Matrix> basis;
  for (int i = 0; i < kit.n2; ++i)
    for (int j = i + 1; j < kit.n2; ++j) {
      basis.push_back(kit.psi2(i, j));
      basis.push_back(kit.psi_minus2(i, j));
    }
  for (int k = 0; k < kit.n2; ++k)
    for (int l = 0; l < kit.n2; ++l) {
      Matrix e(kit.n2, kit.n2);
      e(k, l) = 1;
      basis.push_back(kit.psi0(e));
    }
  std::vector<Matrix> images;
  for (const Matrix& z : basis) images.push_back(kit.psi_of(z));
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Matrix lhs = images[a] * images[b] - images[b] * images[a];
      Matrix rhs = kit.psi_of(basis[a] * basis[b] - basis[b] * basis[a]);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

Matrix standard_complex_structure(int n)
{
  Matrix j(2 * n, 2 * n);
  for (int t = 0; t < n; ++t) {
    j(2 * t + 1, 2 * t) = 1;
    j(2 * t, 2 * t + 1) = -1;
  }
  return j;
}

TorusKahler torus_kahler(int n, const Matrix& J)
{
  if ((int)J.rows() != 2 * n || !(J * J == Matrix::identity(2 * n) * Rational(-1)))
    throw std::invalid_argument("J must square to minus the identity");
  TorusKahler t;
  t.ext = make_ext(2 * n);
  std::vector<int> masks = pair_masks(2 * n);
  // Fixed 2-forms of lambda -> lambda(J., J.).
  Matrix action((int)masks.size(), (int)masks.size());
  for (std::size_t c = 0; c < masks.size(); ++c) {
    Vec unit(masks.size(), Rational(0));
    unit[c] = 1;
    Matrix g = gram2(2 * n, unit);
    Vec img = coeffs_of_gram(J.transpose() * g * J);
    for (std::size_t r = 0; r < masks.size(); ++r) action(r, c) = img[r];
  }
  Matrix fixed = kernel_basis(action - Matrix::identity(masks.size()));
  t.a_dim = (int)fixed.rows();
  t.module.M = t.ext.space;
  for (std::size_t r = 0; r < fixed.rows(); ++r)
    t.module.a_basis.push_back(
        GradedMap::from_full(t.ext.space, 2, wedge2(t.ext, fixed.row(r))));
  t.module.validate();
  t.gen = generate_g(t.module);
  return t;
}

bool rosati_check(int n, const Matrix& J, const Vec& kappa, const Vec& lambda)
{
  Ext x = make_ext(2 * n);
  GradedMap e_kappa = GradedMap::from_full(x.space, 2, wedge2(x, kappa));
  if (!lefschetz_check(e_kappa)) throw std::invalid_argument("kappa is not a Lefschetz form");
  GradedMap f_kappa = jm_dual(e_kappa);
  GradedMap e_lambda = GradedMap::from_full(x.space, 2, wedge2(x, lambda));
  GradedMap br = bracket(e_lambda, f_kappa);
  // Restriction to the generators (centered degree 1 - n).
  Matrix r = br.block(1 - n);

  Matrix k = gram2(2 * n, kappa);
  Matrix l = gram2(2 * n, lambda);
  auto kinv = inverse(k);
  if (!kinv) throw std::invalid_argument("kappa is degenerate");
  Matrix sigma = (l * *kinv).transpose();  // lambda(a, b) = kappa(sigma a, b)
  Matrix sigma_star = sigma.transpose();

  // r = u * sigma_star + t * identity for rationals u, t.
  int m = 2 * n;
  Matrix sys(m * m, 2);
  Vec rhs;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      sys(a * m + b, 0) = sigma_star(a, b);
      sys(a * m + b, 1) = a == b ? 1 : 0;
      rhs.push_back(r(a, b));
    }
  auto sol = solve_any(sys, rhs);
  if (!sol) return false;
  // Unless sigma is scalar, the multiple must be a sign.
  bool sigma_scalar = true;
  for (int a = 0; a < m && sigma_scalar; ++a)
    for (int b = 0; b < m; ++b)
      if (sigma(a, b) != (a == b ? sigma(0, 0) : Rational(0))) {
        sigma_scalar = false;
        break;
      }
  if (!sigma_scalar && (*sol)[0] * (*sol)[0] != 1) return false;

  // sigma is fixed by the adjoint involution of kappa (lambda antisymmetric).
  Matrix dagger = *kinv * sigma.transpose() * k;
  if (!(dagger == sigma)) return false;

  // J-equivariance when both forms are J-invariant.
  bool k_inv = J.transpose() * k * J == k;
  bool l_inv = J.transpose() * l * J == l;
  if (k_inv && l_inv && !(sigma * J == J * sigma)) return false;
  return true;
}

InvolutiveAlgebra rational_field()
{
  InvolutiveAlgebra f;
  f.dim = 1;
  f.left = {Matrix::identity(1)};
  f.dagger = Matrix::identity(1);
  return f;
}

InvolutiveAlgebra gaussian_field()
{
  InvolutiveAlgebra f;
  f.dim = 2;
  Matrix i(2, 2);
  i(1, 0) = 1;
  i(0, 1) = -1;
  f.left = {Matrix::identity(2), i};
  f.dagger = Matrix::identity(2);
  f.dagger(1, 1) = -1;
  return f;
}

InvolutiveAlgebra hamilton_quaternions()
{
  InvolutiveAlgebra f;
  f.dim = 4;
  // Basis 1, i, j, k with i^2 = j^2 = -1, ij = k.
  auto mk = [](std::initializer_list<std::initializer_list<int>> rows) {
    Matrix m(4, 4);
    int r = 0;
    for (auto& row : rows) {
      int c = 0;
      for (int v : row) m(r, c++) = v;
      ++r;
    }
    return m;
  };
  f.left = {Matrix::identity(4),
            mk({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}),
            mk({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}),
            mk({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}})};
  f.dagger = Matrix::identity(4) * Rational(-1);
  f.dagger(0, 0) = 1;
  return f;
}

namespace {

// Expand a 2m x 2m matrix with F-coefficient entries (each a coordinate
// vector) into the Q-matrix acting on F^{2m} via left multiplication.
Matrix expand(const InvolutiveAlgebra& f, int size,
              const std::map<std::pair<int, int>, Vec>& entries)
{
  int d = f.dim;
  Matrix out(size * d, size * d);
  for (const auto& [pos, q] : entries) {
    Matrix block(d, d);
    for (int t = 0; t < d; ++t)
      if (q[t] != 0) block = block + f.left[t] * q[t];
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) out(pos.first * d + r, pos.second * d + c) = block(r, c);
  }
  return out;
}

Vec unit_vec(int dim, int t)
{
  Vec v(dim, Rational(0));
  v[t] = 1;
  return v;
}

}  // namespace

AlbertRecord albert_sku(const InvolutiveAlgebra& f, int m)
{
  if (m < 1) throw std::invalid_argument("m must be positive");
  int d = f.dim;
  // Fixed space of the involution.
  Matrix plus = kernel_basis(f.dagger - Matrix::identity(d));

  std::vector<std::pair<int, Matrix>> sku;  // (degree, matrix)
  // Degree 0: A free over End(m, F); lower-right block is minus the
  // dagger-transpose.
  for (int r = 0; r < m; ++r)
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < d; ++t) {
        std::map<std::pair<int, int>, Vec> e;
        e[{r, s}] = unit_vec(d, t);
        Vec md = f.dagger.apply(unit_vec(d, t));
        for (Rational& c : md) c = -c;
        e[{m + s, m + r}] = md;
        sku.push_back({0, expand(f, 2 * m, e)});
      }
  // Degrees -2 (B block) and +2 (C block): dagger-transpose symmetric.
  for (int which = 0; which < 2; ++which) {
    int deg = which == 0 ? -2 : 2;
    int row0 = which == 0 ? 0 : m, col0 = which == 0 ? m : 0;
    for (int r = 0; r < m; ++r) {
      for (std::size_t p = 0; p < plus.rows(); ++p) {
        std::map<std::pair<int, int>, Vec> e;
        e[{row0 + r, col0 + r}] = plus.row(p);
        sku.push_back({deg, expand(f, 2 * m, e)});
      }
      for (int s = r + 1; s < m; ++s)
        for (int t = 0; t < d; ++t) {
          std::map<std::pair<int, int>, Vec> e;
          e[{row0 + r, col0 + s}] = unit_vec(d, t);
          e[{row0 + s, col0 + r}] = f.dagger.apply(unit_vec(d, t));
          sku.push_back({deg, expand(f, 2 * m, e)});
        }
    }
  }

  AlbertRecord rec;
  rec.dim_sku = (int)sku.size();
  for (auto& [deg, mat] : sku) ++rec.sku_degrees[deg];

  GradedSpace ambient;
  ambient.pieces = {{-1, m * d}, {1, m * d}};
  std::vector<std::pair<int, Matrix>> gens;
  for (const auto& [deg, mat] : sku)
    if (deg != 0) gens.push_back({deg, mat});
  rec.g = lie_closure(ambient, gens);
  rec.dim_g = rec.g.dim();

  // Complementary ideal: anti-invariant scalars embedded diagonally.
  Matrix minus = kernel_basis(f.dagger + Matrix::identity(d));
  std::vector<Matrix> u_basis;
  for (std::size_t p = 0; p < minus.rows(); ++p) {
    std::map<std::pair<int, int>, Vec> e;
    for (int r = 0; r < 2 * m; ++r) e[{r, r}] = minus.row(p);
    u_basis.push_back(expand(f, 2 * m, e));
  }
  rec.dim_u = (int)u_basis.size();

  // Verify sku = g + u with both summands ideals.
  int nsq = 2 * m * d * 2 * m * d;
  std::vector<Vec> g_rows, u_rows, sku_rows;
  for (const auto& [deg, mats] : rec.g.basis)
    for (const Matrix& b : mats) g_rows.push_back(flatten(b));
  for (const Matrix& b : u_basis) u_rows.push_back(flatten(b));
  for (const auto& [deg, mat] : sku) sku_rows.push_back(flatten(mat));
  Subspace g_span = g_rows.empty() ? Subspace(nsq)
                                   : Subspace::span_rows(Matrix::from_rows(g_rows, nsq));
  Subspace u_span = u_rows.empty() ? Subspace(nsq)
                                   : Subspace::span_rows(Matrix::from_rows(u_rows, nsq));
  Subspace sku_span = Subspace::span_rows(Matrix::from_rows(sku_rows, nsq));

  bool ok = (int)sku_span.dim() == rec.dim_sku;
  ok = ok && g_span.sum(u_span).dim() == sku_span.dim();
  ok = ok && g_span.intersect(u_span).dim() == 0;
  // Ideal property: brackets of sku with each summand stay inside it.
  std::vector<Matrix> g_mats;
  for (const auto& [deg, mats] : rec.g.basis)
    for (const Matrix& b : mats) g_mats.push_back(b);
  for (const auto& [deg, s] : sku) {
    for (const Matrix& b : g_mats)
      if (!g_span.contains(flatten(s * b - b * s))) ok = false;
    for (const Matrix& b : u_basis)
      if (!u_span.contains(flatten(s * b - b * s))) ok = false;
  }
  rec.ideals_ok = ok;
  return rec;
}

HkRecord hk_model()
{
  HkRecord rec;
  rec.ext = make_ext(4);
  const Ext& x = rec.ext;
  int nt = x.space.total_dim();
  InvolutiveAlgebra h = hamilton_quaternions();

  // kappa_a(v, w) = <a v, w> for pure a; Gram = transpose of left
  // multiplication (orthonormal norm basis).
  auto kappa_coeffs = [&](const Vec& a) {
    Matrix la(4, 4);
    for (int t = 0; t < 4; ++t)
      if (a[t] != 0) la = la + h.left[t] * a[t];
    return coeffs_of_gram(la.transpose());
  };
  auto e_of = [&](const Vec& a) { return wedge2(x, kappa_coeffs(a)); };

  Matrix star = x.star();
  auto star_inv = inverse(star);
  auto f_of = [&](const Vec& a) {
    // f_a = Nm(a)^{-1} star e_a star^{-1}.
    Rational nm(0);
    for (int t = 0; t < 4; ++t) nm += a[t] * a[t];
    return (star * e_of(a) * *star_inv) * (Rational(1) / nm);
  };

  std::vector<Vec> pure = {unit_vec(4, 1), unit_vec(4, 2), unit_vec(4, 3)};
  rec.module.M = x.space;
  for (const Vec& a : pure)
    rec.module.a_basis.push_back(GradedMap::from_full(x.space, 2, e_of(a)));
  rec.module.validate();

  // Star duals agree with the sl2 duals, also for a combination.
  rec.duals_match = true;
  std::vector<Vec> dual_tests = pure;
  dual_tests.push_back(Vec{rat(0), rat(1), rat(2), rat(-1)});
  for (const Vec& a : dual_tests) {
    GradedMap e = GradedMap::from_full(x.space, 2, e_of(a));
    if (!lefschetz_check(e) ||
        !(jm_dual(e) == GradedMap::from_full(x.space, -2, f_of(a))))
      rec.duals_match = false;
  }

  // Bracket identity [e_a, f_b] = -(a b^{-1})_0 + (1/4) Tr(a b^{-1}) h, with
  // the pure part acting on V = H* on the right.
  Matrix hmat = h_of(x.space).to_full();
  rec.bracket_identity = true;
  std::vector<Vec> bs = pure;
  bs.push_back(Vec{rat(0), rat(1), rat(-1), rat(3)});
  for (const Vec& a : bs)
    for (const Vec& b : bs) {
      Rational nm(0);
      for (int t = 0; t < 4; ++t) nm += b[t] * b[t];
      Vec binv = h.dagger.apply(b);
      for (Rational& c : binv) c /= nm;
      Matrix lb(4, 4);
      for (int t = 0; t < 4; ++t)
        if (binv[t] != 0) lb = lb + h.left[t] * binv[t];
      // coordinates of a * b^{-1}
      Matrix la(4, 4);
      for (int t = 0; t < 4; ++t)
        if (a[t] != 0) la = la + h.left[t] * a[t];
      Vec prod = la.apply(binv);
      Rational trace = 4 * prod[0];
      Vec pure_part = prod;
      pure_part[0] = 0;
      Matrix right_action(4, 4);
      for (int t = 1; t < 4; ++t)
        if (pure_part[t] != 0) right_action = right_action + h.left[t].transpose() * pure_part[t];
      Matrix lhs = e_of(a) * f_of(b) - f_of(b) * e_of(a);
      Matrix rhs = derivation_extension(x, right_action) * Rational(-1) + hmat * (trace / 4);
      if (!(lhs == rhs)) rec.bracket_identity = false;
    }

  // Closure.
  std::vector<std::pair<int, Matrix>> gens;
  for (const Vec& a : pure) {
    gens.push_back({2, e_of(a)});
    gens.push_back({-2, f_of(a)});
  }
  rec.g = lie_closure(x.space, gens);

  // Subalgebra generated by the Kaehler forms inside the exterior algebra.
  GradedAlgebra ealg = exterior_algebra(4);
  std::vector<Vec> gens2;
  for (const Vec& a : pure) gens2.push_back(kappa_coeffs(a));
  auto spans = generated_subspaces(ealg, gens2);
  for (const auto& [deg, s] : spans) rec.m_dims[deg] = (int)s.dim();

  rec.m_star_invariant = true;
  for (const Vec& a : pure) {
    // kappa_a lives in centered degree 0; check star fixes its span.
    Vec flat(nt, Rational(0));
    const Vec coeffs = kappa_coeffs(a);
    for (int i = 0; i < 6; ++i) flat[x.space.offset(0) + i] = coeffs[i];
    if (!(star.apply(flat) == flat)) rec.m_star_invariant = false;
  }

  // Anti-self-dual 2-forms are killed by every element of g.
  Matrix deg2_embed(nt, 6);
  for (int i = 0; i < 6; ++i) deg2_embed(x.space.offset(0) + i, i) = 1;
  std::vector<Vec> asd;
  {
    // Kernel of (star + 1) on the degree-2 block.
    Matrix block(6, 6);
    for (int c = 0; c < 6; ++c) {
      Vec v(nt, Rational(0));
      v[x.space.offset(0) + c] = 1;
      Vec img = star.apply(v);
      for (int r = 0; r < 6; ++r) block(r, c) = img[x.space.offset(0) + r];
    }
    Matrix ker = kernel_basis(block + Matrix::identity(6));
    for (std::size_t r = 0; r < ker.rows(); ++r) asd.push_back(ker.row(r));
  }
  rec.asd_killed = !asd.empty();
  for (const auto& [deg, mats] : rec.g.basis)
    for (const Matrix& b : mats)
      for (const Vec& v : asd) {
        Vec flat(nt, Rational(0));
        for (int i = 0; i < 6; ++i) flat[x.space.offset(0) + i] = v[i];
        for (const Rational& c : b.apply(flat))
          if (c != 0) rec.asd_killed = false;
      }
  return rec;
}

}  // namespace leflab
