#ifndef LEFLAB_LEFMOD_HPP
#define LEFLAB_LEFMOD_HPP

#include <optional>

#include "leflab/algebra.hpp"
#include "leflab/lie.hpp"
#include "leflab/sl2.hpp"

namespace leflab {

/// A centered graded space with a commuting family of degree-2 operators.
struct LefschetzModule {
  GradedSpace M;
  std::vector<GradedMap> a_basis;
  std::optional<PairingForm> phi;

  int depth() const { return M.max_degree(); }
  /// The operator of the element with the given coefficients.
  GradedMap op(const Vec& coeffs) const;
  /// Throws if operators are not degree 2 or do not commute pairwise.
  void validate() const;
};

/// Module over the full degree-2 part of an algebra (or a chosen sub-family
/// of degree-2 elements), with the Poincaré pairing attached.
LefschetzModule module_from_algebra(const GradedAlgebra& alg, const Vec& integral);
LefschetzModule module_from_algebra(const GradedAlgebra& alg, const Vec& integral,
                                    const std::vector<Vec>& a_elements);

struct SearchOptions {
  int box = 2;          // max |coefficient| tried in the deterministic search
  int max_extra = 12;   // extra passing elements used for the saturation test
  std::size_t max_candidates = 200000;  // hard cap on enumerated coefficient vectors
};

/// First integer coefficient vector (basis vectors, then +-1 combinations,
/// then a growing box) whose operator passes lefschetz_check.
std::optional<Vec> find_lefschetz_element(const LefschetzModule& L, const SearchOptions& opt = {});

struct GenerateResult {
  GradedLieAlgebra g;
  std::vector<Vec> certified;  // Lefschetz elements whose duals were used
  bool saturated = true;       // no extra tested element enlarged the closure
  bool has_h = false;
};

/// Closure of {e_a, f_a} over the certified search set; throws if no
/// Lefschetz element is found in the box.
GenerateResult generate_g(const LefschetzModule& L, const SearchOptions& opt = {});

/// Joint kernel of all negative-degree basis elements, per degree.
std::map<int, Subspace> primitive_subspace(const GradedLieAlgebra& g);

struct JordanCheck {
  bool degrees_202 = false;
  bool f_commute = false;
};

JordanCheck jordan_check(const LefschetzModule& L, const GenerateResult& gen);

struct FrobeniusRecord {
  int dim_lowest = 0;
  bool map_iso = false;
  int order = 0;
  bool full = false;  // order reaches the depth
};

FrobeniusRecord frobenius_order(const LefschetzModule& L, int dmax);

/// The form <au, bu> = (-1)^k int(a b u) on a module generated over the
/// operator algebra by the lowest piece. integral is a functional on M_n.
PairingForm invariant_form(const LefschetzModule& L, const Vec& unit_in_lowest,
                           const Vec& integral);

LefschetzModule box_plus(const LefschetzModule& a, const LefschetzModule& b);
LefschetzModule box_times(const LefschetzModule& a, const LefschetzModule& b);

/// The non-reductive example: adjoint sl2 plus a 2-dimensional degree-0
/// space, with a second degree-2 operator pairing them. Its closure fails
/// Cartan's criterion. Also returns the invariant quadratic pairing.
LefschetzModule nonreductive_example();

}  // namespace leflab

#endif
