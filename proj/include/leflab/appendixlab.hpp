#ifndef LEFLAB_APPENDIXLAB_HPP
#define LEFLAB_APPENDIXLAB_HPP

#include "leflab/lefmod.hpp"
#include "leflab/subspace.hpp"

namespace leflab {

/// Vector space with a nondegenerate symmetric or skew bilinear form.
struct FormedSpace {
  Matrix form;
  int dim() const { return (int)form.rows(); }
  bool symmetric() const;
  bool skew() const;
};

FormedSpace orthogonal_space(int n);   // identity form
FormedSpace symplectic_space(int n);   // n even, standard skew form

/// The e, f, h matrices of the irreducible sl2-module V(d) realized on
/// homogeneous degree-d polynomials in x, y with e = x d/dy, f = y d/dx.
Matrix sl2_e(int d);
Matrix sl2_f(int d);
Matrix sl2_h(int d);

/// The invariant bilinear form on V(d), normalized by <x^d, x^d-pairing> = 1;
/// symmetric for even d, skew for odd d.
Matrix vd_form(int d);

/// Subspace of flattened matrices preserving the form infinitesimally,
/// together with a basis of matrices.
struct AutAlgebra {
  Subspace span;                // inside Q^{n^2}
  std::vector<Matrix> basis;
};
AutAlgebra aut_algebra(const Matrix& form);

struct GlDecomposition {
  int d = 0;
  std::vector<Subspace> pieces;  // sl2-submodule generated by e^i, i = 0..d
  std::vector<int> dims;         // expected 2i+1
  bool direct_sum = false;       // pieces independent, spanning gl(V(d))
  bool odd_is_aut = false;       // odd-index sum equals aut(V(d), vd_form)
  int nonzero_pieces = 0;        // the actual range of the decomposition
};
GlDecomposition gl_decomposition(int d);

struct HiRecord {
  Matrix h_i;                 // [e^i, f^i]
  bool in_aut = false;
  bool commutes_with_h = false;
  bool in_sl2 = false;        // membership in span(e, h, f)
  bool ui_commutes = false;   // ad_f^i(e^i) commutes with h
  bool eigen_antisymmetric = false;  // eigenvalue table changes sign under
                                     // swapping the two exponents
};
HiRecord hi_check(int d, int i);

struct GlpmSplit {
  Subspace g_minus, g_zero, g_plus;  // flattened subspaces of gl(U)
  bool minus_is_aut = false;
  bool direct_sum = false;
  bool bracket_onto = false;  // [g+, g+] = g-; computed only for dim U > 2
  bool witness_ok = false;    // Y in g_eps with Y^2 non-scalar, nonzero trace
};
GlpmSplit glpm_split(const FormedSpace& U);

struct TensorClosure {
  unsigned seed = 0;
  int aut_dim = 0;
  int closure_dim = 0;
  bool reached_aut = false;
  bool simple = false;
  bool preserves_form = false;
  GradedLieAlgebra g;  // trivially graded (single degree 0)
};

/// Closes the embedded automorphism algebras of the factors together with one
/// deterministic pseudo-random form-preserving element outside their product.
/// Rejects inner-product planes.
TensorClosure tensor_closure_experiment(const std::vector<FormedSpace>& spaces,
                                        unsigned seed);

struct SpinorRecord {
  int k = 0;
  int centralizer_dim = 0;  // {x in so(V)_2 : [x, e] = 0}
  bool setup_ok = false;    // e, e' orthogonal, commuting
  bool relations_ok = false;  // a+ a- = a+^{2k+1} = a-^{2k+1} = 0
  // Semispinor data, only for k >= 3:
  int w_dim = 0;
  FrobeniusRecord frobenius;
  bool order2_not3 = false;
  bool dual_line_ok = false;      // a_pm(f') proportional to a_pm(f), common
                                  // nonzero ratio up to sign
  bool abar_sq_trivial = false;   // products of the reduced wedge operators
                                  // vanish on W
};

/// V = V(2k) + V(2k-2) with an orthogonal-sum form scaled to admit rational
/// isotropic vectors in the middle; a is spanned by e and a second operator
/// from the centralizer family.
SpinorRecord spinor_example(int k);

}  // namespace leflab

#endif
