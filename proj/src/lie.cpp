#include "leflab/lie.hpp"

#include <stdexcept>

namespace leflab {

int GradedLieAlgebra::dim() const
{
  int d = 0;
  for (const auto& [deg, b] : basis) d += (int)b.size();
  return d;
}

std::map<int, int> GradedLieAlgebra::adh_grading() const
{
  std::map<int, int> g;
  for (const auto& [deg, b] : basis)
    if (!b.empty()) g[deg] = (int)b.size();
  return g;
}

std::vector<std::pair<int, Matrix>> GradedLieAlgebra::flat_basis() const
{
  std::vector<std::pair<int, Matrix>> out;
  for (const auto& [deg, b] : basis)
    for (const Matrix& m : b) out.emplace_back(deg, m);
  return out;
}

bool GradedLieAlgebra::contains(int degree, const Matrix& full) const
{
  auto it = spans.find(degree);
  if (it == spans.end()) return full.is_zero();
  return it->second.contains(flatten(full));
}

bool GradedLieAlgebra::contains(const Matrix& full) const
{
  for (const auto& [d, part] : homogeneous_parts(ambient, full))
    if (!contains(d, part)) return false;
  return true;
}

std::optional<Vec> GradedLieAlgebra::coordinates(int degree, const Matrix& full) const
{
  auto it = spans.find(degree);
  if (it == spans.end()) {
    if (full.is_zero()) return Vec{};
    return std::nullopt;
  }
  return it->second.coordinates(flatten(full));
}

std::optional<Vec> GradedLieAlgebra::coordinates(const Matrix& full) const
{
  Vec out(dim(), Rational(0));
  std::map<int, Matrix> parts = homogeneous_parts(ambient, full);
  int off = 0;
  for (const auto& [deg, b] : basis) {
    auto pit = parts.find(deg);
    if (pit != parts.end()) {
      auto c = coordinates(deg, pit->second);
      if (!c) return std::nullopt;
      for (std::size_t i = 0; i < c->size(); ++i) out[off + i] = (*c)[i];
      parts.erase(pit);
    }
    off += (int)b.size();
  }
  for (const auto& [deg, part] : parts)
    if (!part.is_zero()) return std::nullopt;
  return out;
}

Matrix GradedLieAlgebra::from_coordinates(const Vec& coords) const
{
  int n = ambient.total_dim();
  Matrix out(n, n);
  std::size_t off = 0;
  for (const auto& [deg, b] : basis)
    for (const Matrix& m : b) {
      if (coords[off] != 0) out = out + m * coords[off];
      ++off;
    }
  return out;
}

GradedLieAlgebra lie_closure(const std::vector<GradedMap>& generators)
{
  if (generators.empty()) throw std::invalid_argument("no generators");
  std::vector<std::pair<int, Matrix>> gens;
  for (const GradedMap& g : generators) gens.emplace_back(g.degree, g.to_full());
  return lie_closure(generators.front().space, gens);
}

GradedLieAlgebra lie_closure(const GradedSpace& ambient,
                             const std::vector<std::pair<int, Matrix>>& generators)
{
  int n = ambient.total_dim();
  std::map<int, Subspace> spans;
  std::vector<std::pair<int, Matrix>> elems;  // append-only working basis

  auto add = [&](int degree, const Matrix& full) {
    if (full.is_zero()) return;
    auto it = spans.find(degree);
    if (it == spans.end()) it = spans.emplace(degree, Subspace((std::size_t)n * n)).first;
    Vec flat = flatten(full);
    if (it->second.contains(flat)) return;
    it->second = it->second.sum(Subspace::span_rows(Matrix::from_rows({flat}, flat.size())));
    elems.emplace_back(degree, full);
  };

  for (const auto& [deg, full] : generators) {
    // Enforce homogeneity of each generator.
    for (const auto& [d, part] : homogeneous_parts(ambient, full))
      if (d != deg) throw std::invalid_argument("generator is not ad-h homogeneous");
    add(deg, full);
  }

  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      add(elems[i].first + elems[j].first, bracket(elems[i].second, elems[j].second));

  // Canonicalize: per-degree basis = RREF rows of the span.
  GradedLieAlgebra g;
  g.ambient = ambient;
  for (auto& [deg, sp] : spans) {
    if (sp.dim() == 0) continue;
    std::vector<Matrix> b;
    for (std::size_t i = 0; i < sp.dim(); ++i) b.push_back(unflatten(sp.basis().row(i), n, n));
    g.basis[deg] = std::move(b);
    g.spans.emplace(deg, sp);
  }
  return g;
}

namespace {

// ad matrices of the flat basis, via structure constants.
std::vector<Matrix> ad_matrices(const GradedLieAlgebra& g)
{
  auto fb = g.flat_basis();
  int m = (int)fb.size();
  std::vector<Matrix> ads(m, Matrix(m, m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Matrix br = bracket(fb[i].second, fb[j].second);
      auto c = g.coordinates(br);
      if (!c) throw std::logic_error("algebra is not bracket-closed");
      for (int t = 0; t < m; ++t) ads[i](t, j) = (*c)[t];
    }
  return ads;
}

}  // namespace

KillingResult killing_semisimple(const GradedLieAlgebra& g)
{
  std::vector<Matrix> ads = ad_matrices(g);
  int m = (int)ads.size();
  Matrix k(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Rational t = (ads[i] * ads[j]).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  Signature sig = signature(k);
  bool semisimple = (sig.zero == 0) && m > 0;
  return {std::move(k), semisimple, sig};
}

Subspace lie_center(const GradedLieAlgebra& g)
{
  std::vector<Matrix> ads = ad_matrices(g);
  int m = (int)ads.size();
  // x = sum c_i b_i central iff sum_i c_i ad_i = 0.
  Matrix sys(m * m, m);
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) sys(r * m + c, i) = ads[i](r, c);
  return Subspace::span_rows(kernel_basis(sys));
}

namespace {

Subspace minimal_ideal_impl(const std::vector<Matrix>& ads, const Vec& x_coords)
{
  int m = (int)ads.size();
  Subspace ideal = Subspace::span_rows(Matrix::from_rows({x_coords}, m));
  for (;;) {
    Subspace next = ideal;
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      Vec y = ideal.basis().row(r);
      for (int j = 0; j < m; ++j) {
        Vec by = ads[j].apply(y);
        next = next.sum(Subspace::span_rows(Matrix::from_rows({by}, m)));
      }
    }
    if (next == ideal) return ideal;
    ideal = next;
  }
}

}  // namespace

Subspace minimal_ideal(const GradedLieAlgebra& g, const Vec& x_coords)
{
  return minimal_ideal_impl(ad_matrices(g), x_coords);
}

bool is_simple(const GradedLieAlgebra& g)
{
  int m = g.dim();
  if (m == 0) return false;
  std::vector<Matrix> ads = ad_matrices(g);
  bool abelian = true;
  for (const Matrix& a : ads)
    if (!a.is_zero()) abelian = false;
  if (abelian) return false;
  for (int i = 0; i < m; ++i) {
    Vec e(m, Rational(0));
    e[i] = 1;
    if ((int)minimal_ideal_impl(ads, e).dim() != m) return false;
  }
  return true;
}

LieFingerprint fingerprint(const GradedLieAlgebra& g)
{
  LieFingerprint fp;
  fp.dim = g.dim();
  fp.adh = g.adh_grading();
  fp.dim_g0 = fp.adh.count(0) ? fp.adh.at(0) : 0;
  KillingResult k = killing_semisimple(g);
  fp.killing_sig = k.sig;
  fp.semisimple = k.semisimple;
  fp.center_dim = (int)lie_center(g).dim();
  return fp;
}

}  // namespace leflab
