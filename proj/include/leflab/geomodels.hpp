#ifndef LEFLAB_GEOMODELS_HPP
#define LEFLAB_GEOMODELS_HPP

#include "leflab/ext.hpp"
#include "leflab/lefmod.hpp"

namespace leflab {

/// The exterior algebra of a real torus of half-dimension n with the full
/// space of constant 2-forms acting by wedging.
struct TorusTotal {
  Ext ext;                 // centered exterior algebra on 2n generators
  LefschetzModule module;  // a = wedge operators of the 2-form basis
  GenerateResult gen;      // closure of the certified e/f operators
  /// Span of the three quadratic operator families (wedge pairs, double
  /// contractions, derivation extensions minus half trace): the full
  /// orthogonal algebra of the evaluation form. Coincides with gen.g for
  /// n >= 2; strictly larger in the degenerate n = 1 case.
  GradedLieAlgebra spin;
};

TorusTotal torus_total(int n);

/// Degree-0 derivation extension to the exterior algebra of a linear map on
/// the degree-1 piece (generators), as a flat matrix.
Matrix derivation_extension(const Ext& x, const Matrix& sigma);

/// Checks that the generator assignment from the orthogonal Lie algebra of
/// the evaluation form on V + V* to operators on the exterior algebra
/// preserves brackets on every basis pair.
bool verify_psi(int n);

/// The standard complex structure on 2n coordinates (rotation per plane).
Matrix standard_complex_structure(int n);

struct TorusKahler {
  Ext ext;
  LefschetzModule module;  // a = complex-structure-invariant 2-forms
  GenerateResult gen;
  int a_dim = 0;
};

TorusKahler torus_kahler(int n, const Matrix& J);

/// For a nondegenerate 2-form kappa and any 2-form lambda (coefficients on
/// the ascending-mask pair basis), verifies that the bracket of the wedge
/// operator of lambda with the dual of kappa restricts on the generators to
/// a multiple of the induced endomorphism plus a scalar, and that this
/// endomorphism is fixed by the adjoint involution of kappa. When both forms
/// are J-invariant the endomorphism must also commute with J.
bool rosati_check(int n, const Matrix& J, const Vec& kappa, const Vec& lambda);

/// Finite-dimensional Q-algebra with involution, given by the left regular
/// representation on a chosen basis (basis 0 = unit).
struct InvolutiveAlgebra {
  int dim = 0;
  std::vector<Matrix> left;  // left multiplication by basis element
  Matrix dagger;             // involution on coordinates
};

InvolutiveAlgebra rational_field();
InvolutiveAlgebra gaussian_field();
InvolutiveAlgebra hamilton_quaternions();

struct AlbertRecord {
  int dim_sku = 0;
  int dim_g = 0;
  int dim_u = 0;
  bool ideals_ok = false;  // sku = g + u, intersection 0, both ideals
  GradedLieAlgebra g;
  std::map<int, int> sku_degrees;  // graded dims of the full matrix algebra
};

/// The infinitesimal automorphisms of the standard skew-hermitian form on a
/// free rank-2m module over F, graded by the signature element, with the
/// closure of the degree +-2 parts and its complementary ideal.
AlbertRecord albert_sku(const InvolutiveAlgebra& F, int m);

struct HkRecord {
  Ext ext;                 // exterior algebra of the quaternions
  LefschetzModule module;  // a = the three imaginary Kaehler forms
  GradedLieAlgebra g;
  bool duals_match = false;      // star formula agrees with the sl2 duals
  bool bracket_identity = false;
  std::map<int, int> m_dims;     // subalgebra generated by the Kaehler forms
  bool m_star_invariant = false;
  bool asd_killed = false;       // anti-self-dual 2-forms annihilated by g
};

HkRecord hk_model();

}  // namespace leflab

#endif
