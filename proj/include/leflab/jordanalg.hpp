#ifndef LEFLAB_JORDANALG_HPP
#define LEFLAB_JORDANALG_HPP

#include "leflab/lefmod.hpp"
#include "leflab/polyquot.hpp"

namespace leflab {

enum class JordanCase { A, C, D, BD };

/// One of the four fundamental Frobenius algebras, with its defining
/// relations expressed in the canonical basis of the degree-2 part.
struct FrobeniusModel {
  JordanCase kase = JordanCase::A;
  int m = 0;   // parameter (for BD: dim W)
  Vec q;       // BD only: diagonal of the quadratic form
  GradedAlgebra algebra;
  std::vector<Poly> relations;  // nvars = dim A_2
};

FrobeniusModel frobenius_model_A(int m);
FrobeniusModel frobenius_model_C(int m);
FrobeniusModel frobenius_model_D(int m);
FrobeniusModel frobenius_model_BD(const Vec& q_diagonal);

/// (a) the relations vanish in the model; (b) the polynomial ring on A_2
/// modulo the relation ideal has the model's graded dimensions; (c) the
/// model is generated by A_2.
bool presentation_check(const FrobeniusModel& model);

/// Subalgebra of the k-th tensor power generated by the diagonal embedding
/// of A_2 (the symmetric-power realization).
GradedAlgebra level_k(const FrobeniusModel& model, int k);

struct BdLevelKResult {
  QuotientAlgebra quotient;
  bool powers_certified = false;       // span of isotropic (k+1)-powers is full
  std::vector<int> invariant_dims;     // per algebra degree 0,2,...
  int invariants_total = 0;
  bool invariants_are_u_powers = false;
  bool soccle_ok = false;              // x^2 u^{k-1} = q(x) u^k for basis x
};

/// Sym(W)/I_k with I_k generated by (k+1)-st powers of rational isotropic
/// vectors, together with the so(W,q)-invariant record.
BdLevelKResult bd_level_k_direct(const Vec& q_diagonal, int k);

/// Every degree-0 closure element killing the unit acts as a derivation.
bool derivation_property(const GradedAlgebra& alg, const GradedLieAlgebra& g);

/// The model as a Lefschetz module over its full degree-2 part.
LefschetzModule model_module(const FrobeniusModel& model);

}  // namespace leflab

#endif
