#include "leflab/sl2.hpp"

#include <stdexcept>

namespace leflab {

namespace {

// e^k as a single matrix from the degree -k piece.
Matrix e_power_block(const GradedMap& e, int k, int source_degree)
{
  const GradedSpace& s = e.space;
  Matrix m = Matrix::identity(s.dim(source_degree));
  int d = source_degree;
  for (int i = 0; i < k; ++i) {
    if (s.dim(d + 2) == 0) return Matrix(0, s.dim(source_degree));
    m = e.block(d) * m;
    d += 2;
  }
  return m;
}

}  // namespace

bool lefschetz_check(const GradedMap& e)
{
  if (e.degree != 2) return false;
  const GradedSpace& s = e.space;
  int n = std::max(std::abs(s.min_degree()), std::abs(s.max_degree()));
  for (int k = 1; k <= n; ++k) {
    int dm = s.dim(-k), dp = s.dim(k);
    if (dm != dp) return false;
    if (dm == 0) continue;
    Matrix p = e_power_block(e, k, -k);
    if ((int)p.rows() != dp || (int)rank(p) != dp) return false;
  }
  return true;
}

PrimitiveDecomposition primitive_decomposition(const GradedMap& e)
{
  if (!lefschetz_check(e))
    throw std::runtime_error("Lefschetz violation: e^k is not an isomorphism M_{-k} -> M_k");
  const GradedSpace& s = e.space;
  PrimitiveDecomposition pd;
  pd.space = s;
  int total = 0;
  for (int d : s.degrees()) {
    if (d > 0) continue;
    int k = -d;
    Matrix pk1 = e_power_block(e, k + 1, d);  // e^{k+1} out of M_{-k}
    Matrix ker =
        pk1.rows() == 0 ? Matrix::identity(s.dim(d)) : Subspace::span_rows(kernel_basis(pk1)).basis();
    if (ker.rows() == 0) continue;
    // Lift piece coordinates to full vectors.
    Matrix lifted(ker.rows(), s.total_dim());
    int off = s.offset(d);
    for (std::size_t i = 0; i < ker.rows(); ++i)
      for (std::size_t j = 0; j < ker.cols(); ++j) lifted(i, off + j) = ker(i, j);
    total += (k + 1) * (int)ker.rows();
    pd.primitives[k] = std::move(lifted);
  }
  if (total != s.total_dim())
    throw std::logic_error("primitive decomposition does not fill the module");
  return pd;
}

GradedMap jm_dual(const GradedMap& e)
{
  PrimitiveDecomposition pd = primitive_decomposition(e);
  const GradedSpace& s = e.space;
  int n = s.total_dim();
  // Columns of B: the string basis e^j p. Columns of C: their images under f.
  Matrix B(n, n), C(n, n);
  int col = 0;
  for (const auto& [k, prims] : pd.primitives) {
    for (std::size_t pi = 0; pi < prims.rows(); ++pi) {
      std::vector<Vec> string;  // e^j p, j = 0..k
      string.push_back(prims.row(pi));
      for (int j = 1; j <= k; ++j) string.push_back(e.apply(string.back()));
      for (int j = 0; j <= k; ++j) {
        for (int t = 0; t < n; ++t) B(t, col) = string[j][t];
        if (j > 0) {
          Rational c = Rational(j) * Rational(k - j + 1);
          for (int t = 0; t < n; ++t) C(t, col) = c * string[j - 1][t];
        }
        ++col;
      }
    }
  }
  auto Binv = inverse(B);
  if (!Binv) throw std::logic_error("string basis is not a basis");
  Matrix F = C * *Binv;
  GradedMap f = GradedMap::from_full(s, -2, F);
  if (!(bracket(e, f) == h_of(s))) throw std::logic_error("[e, f] != h");
  return f;
}

std::vector<std::pair<int, int>> sl2_type(const GradedMap& e)
{
  PrimitiveDecomposition pd = primitive_decomposition(e);
  std::vector<std::pair<int, int>> type;
  for (const auto& [k, prims] : pd.primitives)
    if (prims.rows() > 0) type.emplace_back(k, (int)prims.rows());
  return type;
}

std::pair<bool, int> progression_check(const std::vector<int>& dims)
{
  int m = (int)dims.size();
  if (m == 0) return {true, 0};
  for (int i = 0; i < m; ++i)
    if (dims[i] != dims[m - 1 - i]) return {false, 0};
  int mid = (m - 1) / 2;
  int r = 0;
  bool plateau = false;
  for (int i = 0; i < mid; ++i) {
    if (dims[i] < dims[i + 1]) {
      if (plateau) return {false, 0};  // increase after the plateau started
      ++r;
    } else if (dims[i] == dims[i + 1]) {
      plateau = true;
    } else {
      return {false, 0};
    }
  }
  if (m % 2 == 0 && mid >= 0 && m >= 2) {
    // middle pair must be equal for even length lists
    if (dims[mid] != dims[mid + 1]) return {false, 0};
  }
  return {true, r};
}

}  // namespace leflab
