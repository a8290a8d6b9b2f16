#include "leflab/algebra.hpp"

#include <stdexcept>

namespace leflab {

GradedVec gv_add(const GradedVec& a, const GradedVec& b)
{
  GradedVec out = a;
  for (const auto& [d, v] : b) {
    auto it = out.find(d);
    if (it == out.end()) {
      out[d] = v;
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) it->second[i] += v[i];
    }
  }
  return out;
}

GradedVec gv_scale(const GradedVec& a, const Rational& c)
{
  GradedVec out;
  if (c == 0) return out;
  for (const auto& [d, v] : a) {
    Vec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i] * c;
    out[d] = std::move(w);
  }
  return out;
}

bool gv_is_zero(const GradedVec& a)
{
  for (const auto& [d, v] : a)
    for (const auto& x : v)
      if (x != 0) return false;
  return true;
}

void GradedAlgebra::set_product(int p, int i, int q, int j, Vec value)
{
  int dp = space.dim(p), dq = space.dim(q), dr = space.dim(p + q);
  if (i >= dp || j >= dq) throw std::out_of_range("basis index out of range");
  bool zero = true;
  for (const auto& x : value)
    if (x != 0) zero = false;
  if (zero) return;
  if ((int)value.size() != dr) throw std::invalid_argument("product vector has wrong dimension");
  auto& tab = tensors[{p, q}];
  if (tab.empty()) tab.resize((std::size_t)dp * dq);
  tab[(std::size_t)i * dq + j] = std::move(value);
}

Vec GradedAlgebra::basis_product(int p, int i, int q, int j) const
{
  int dr = space.dim(p + q);
  auto it = tensors.find({p, q});
  if (it == tensors.end() || it->second[(std::size_t)i * space.dim(q) + j].empty())
    return Vec(dr, Rational(0));
  return it->second[(std::size_t)i * space.dim(q) + j];
}

GradedVec GradedAlgebra::multiply(const GradedVec& a, const GradedVec& b) const
{
  GradedVec out;
  for (const auto& [p, va] : a)
    for (const auto& [q, vb] : b) {
      int dr = space.dim(p + q);
      if (dr == 0) continue;
      Vec acc(dr, Rational(0));
      bool nonzero = false;
      for (int i = 0; i < space.dim(p); ++i) {
        if (va[i] == 0) continue;
        for (int j = 0; j < space.dim(q); ++j) {
          if (vb[j] == 0) continue;
          Vec prod = basis_product(p, i, q, j);
          Rational c = va[i] * vb[j];
          for (int t = 0; t < dr; ++t)
            if (prod[t] != 0) {
              acc[t] += c * prod[t];
              nonzero = true;
            }
        }
      }
      if (!nonzero) continue;
      auto it = out.find(p + q);
      if (it == out.end()) {
        out[p + q] = std::move(acc);
      } else {
        for (int t = 0; t < dr; ++t) it->second[t] += acc[t];
      }
    }
  for (auto it = out.begin(); it != out.end();) {
    bool zero = true;
    for (const auto& x : it->second)
      if (x != 0) zero = false;
    it = zero ? out.erase(it) : std::next(it);
  }
  return out;
}

void GradedAlgebra::fill_products(const std::function<Vec(int, int, int, int)>& product)
{
  for (int p : space.degrees())
    for (int q : space.degrees()) {
      if (space.dim(p + q) == 0) continue;
      for (int i = 0; i < space.dim(p); ++i)
        for (int j = 0; j < space.dim(q); ++j) set_product(p, i, q, j, product(p, i, q, j));
    }
}

bool GradedAlgebra::check_unit() const
{
  if (space.dim(0) != 1) return false;
  for (int q : space.degrees())
    for (int j = 0; j < space.dim(q); ++j) {
      Vec left = basis_product(0, 0, q, j);
      Vec right = basis_product(q, j, 0, 0);
      Vec expect(space.dim(q), Rational(0));
      expect[j] = 1;
      if (left != expect || right != expect) return false;
    }
  return true;
}

bool GradedAlgebra::check_graded_commutative() const
{
  for (int p : space.degrees())
    for (int q : space.degrees()) {
      if (space.dim(p + q) == 0) continue;
      Rational sign = (p % 2 != 0 && q % 2 != 0) ? Rational(-1) : Rational(1);
      for (int i = 0; i < space.dim(p); ++i)
        for (int j = 0; j < space.dim(q); ++j) {
          Vec ab = basis_product(p, i, q, j);
          Vec ba = basis_product(q, j, p, i);
          for (std::size_t t = 0; t < ab.size(); ++t)
            if (ab[t] != sign * ba[t]) return false;
        }
    }
  return true;
}

bool GradedAlgebra::check_associative() const
{
  for (int p : space.degrees())
    for (int q : space.degrees())
      for (int r : space.degrees()) {
        if (space.dim(p + q + r) == 0) continue;
        for (int i = 0; i < space.dim(p); ++i)
          for (int j = 0; j < space.dim(q); ++j)
            for (int k = 0; k < space.dim(r); ++k) {
              GradedVec a{{p, Vec(space.dim(p), Rational(0))}};
              GradedVec b{{q, Vec(space.dim(q), Rational(0))}};
              GradedVec c{{r, Vec(space.dim(r), Rational(0))}};
              a[p][i] = 1;
              b[q][j] = 1;
              c[r][k] = 1;
              GradedVec lhs = multiply(multiply(a, b), c);
              GradedVec rhs = multiply(a, multiply(b, c));
              if (!gv_is_zero(gv_add(lhs, gv_scale(rhs, Rational(-1))))) return false;
            }
      }
  return true;
}

int GradedAlgebra::depth() const
{
  int top = top_degree();
  if (top % 2 != 0) throw std::logic_error("algebra top degree must be even for the centered view");
  return top / 2;
}

GradedSpace GradedAlgebra::centered_space() const
{
  int n = depth();
  GradedSpace c;
  for (const auto& [d, m] : space.pieces)
    if (m > 0) c.pieces[d - n] = m;
  for (const auto& [d, names] : space.labels) c.labels[d - depth()] = names;
  return c;
}

GradedMap GradedAlgebra::cup(const Vec& a2) const
{
  if ((int)a2.size() != space.dim(2)) throw std::invalid_argument("cup element must lie in degree 2");
  int n = depth();
  GradedSpace cs = centered_space();
  GradedMap op = GradedMap::zero(cs, 2);
  for (int p : space.degrees()) {
    int dr = space.dim(p + 2);
    if (dr == 0) continue;
    Matrix b(dr, space.dim(p));
    for (int j = 0; j < space.dim(p); ++j)
      for (int i = 0; i < space.dim(2); ++i) {
        if (a2[i] == 0) continue;
        Vec prod = basis_product(2, i, p, j);
        for (int t = 0; t < dr; ++t) b(t, j) += a2[i] * prod[t];
      }
    if (!b.is_zero()) op.blocks[p - n] = std::move(b);
  }
  return op;
}

Rational GradedAlgebra::integrate(const Vec& integral, const GradedVec& x) const
{
  int top = top_degree();
  if ((int)integral.size() != space.dim(top)) throw std::invalid_argument("integral size mismatch");
  auto it = x.find(top);
  if (it == x.end()) return Rational(0);
  Rational s(0);
  for (std::size_t i = 0; i < integral.size(); ++i) s += integral[i] * it->second[i];
  return s;
}

Matrix PairingForm::block(int c) const
{
  auto it = blocks.find(c);
  if (it != blocks.end()) return it->second;
  return Matrix(space.dim(c), space.dim(-c));
}

Rational PairingForm::value(int c, const Vec& x, const Vec& y) const
{
  Matrix b = block(c);
  Rational s(0);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) != 0) s += x[i] * b(i, j) * y[j];
  return s;
}

bool PairingForm::is_zero() const
{
  for (const auto& [c, b] : blocks)
    if (!b.is_zero()) return false;
  return true;
}

bool PairingForm::sign_symmetric(int n) const
{
  Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
  for (int c : space.degrees()) {
    if (space.dim(-c) == 0) {
      if (!block(c).is_zero()) return false;
      continue;
    }
    if (block(c) != block(-c).transpose() * sign) return false;
  }
  return true;
}

bool PairingForm::nondegenerate() const
{
  for (int c : space.degrees()) {
    if (space.dim(-c) != space.dim(c)) return false;
    if ((int)rank(block(c)) != space.dim(c)) return false;
  }
  return true;
}

PairingForm poincare_form(const GradedAlgebra& alg, const Vec& integral)
{
  int n = alg.depth();
  GradedSpace cs = alg.centered_space();
  PairingForm phi;
  phi.space = cs;
  for (int c : cs.degrees()) {
    if (cs.dim(-c) == 0) throw std::invalid_argument("graded dimensions are not symmetric");
    // c = 2q or 2q + 1 with q possibly negative.
    int q = (c >= 0) ? c / 2 : -((-c + 1) / 2);
    Rational sign = (q % 2 == 0) ? Rational(1) : Rational(-1);
    Matrix b(cs.dim(c), cs.dim(-c));
    for (int i = 0; i < cs.dim(c); ++i)
      for (int j = 0; j < cs.dim(-c); ++j) {
        Vec prod = alg.basis_product(c + n, i, -c + n, j);
        Rational s(0);
        for (std::size_t t = 0; t < prod.size(); ++t) s += integral[t] * prod[t];
        b(i, j) = sign * s;
      }
    if (!b.is_zero()) phi.blocks[c] = std::move(b);
  }
  if (!phi.sign_symmetric(n))
    throw std::runtime_error("pairing violates the expected symmetry; algebra is non-conforming");
  return phi;
}

bool infinitesimal_invariance(const GradedMap& op, const PairingForm& phi)
{
  const GradedSpace& s = phi.space;
  int d = op.degree;
  for (int k : s.degrees()) {
    int kp = -k - d;  // partner degree of op(M_k)
    if (s.dim(k + d) == 0 && s.dim(kp + d) == 0) continue;
    for (int i = 0; i < s.dim(k); ++i)
      for (int j = 0; j < s.dim(kp); ++j) {
        Rational lhs(0);
        if (s.dim(k + d) > 0) {
          Matrix ob = op.block(k);
          Matrix pb = phi.block(k + d);
          for (std::size_t t = 0; t < ob.rows(); ++t)
            if (ob(t, i) != 0 && pb(t, j) != 0) lhs += ob(t, i) * pb(t, j);
        }
        Rational rhs(0);
        if (s.dim(kp + d) > 0) {
          Matrix ob = op.block(kp);
          Matrix pb = phi.block(k);
          for (std::size_t t = 0; t < ob.rows(); ++t)
            if (ob(t, j) != 0 && pb(i, t) != 0) rhs += pb(i, t) * ob(t, j);
        }
        if (lhs + rhs != 0) return false;
      }
  }
  return true;
}

GradedAlgebra projective_space_algebra(int d)
{
  GradedAlgebra a;
  for (int k = 0; k <= d; ++k) a.space.pieces[2 * k] = 1;
  a.fill_products([&](int p, int, int q, int) {
    Vec v(1, Rational(0));
    if (p + q <= 2 * d) v[0] = 1;
    return v;
  });
  return a;
}

GradedAlgebra product_of_lines_algebra()
{
  // Q[x,y]/(x^2, y^2); degree-2 basis (x, y), degree-4 basis (xy).
  GradedAlgebra a;
  a.space.pieces[0] = 1;
  a.space.pieces[2] = 2;
  a.space.pieces[4] = 1;
  auto mono = [](int p, int i) {
    // exponent pair of the basis monomial
    if (p == 0) return std::pair<int, int>{0, 0};
    if (p == 2) return i == 0 ? std::pair<int, int>{1, 0} : std::pair<int, int>{0, 1};
    return std::pair<int, int>{1, 1};
  };
  a.fill_products([&](int p, int i, int q, int j) {
    auto [xa, ya] = mono(p, i);
    auto [xb, yb] = mono(q, j);
    int x = xa + xb, y = ya + yb;
    Vec v(a.space.dim(p + q), Rational(0));
    if (x <= 1 && y <= 1) {
      if (p + q == 0 || p + q == 4)
        v[0] = 1;
      else
        v[x == 1 ? 0 : 1] = 1;
    }
    return v;
  });
  return a;
}

}  // namespace leflab
