#ifndef LEFLAB_COINV_HPP
#define LEFLAB_COINV_HPP

#include "leflab/lefmod.hpp"
#include "leflab/polyquot.hpp"

namespace leflab {

enum class WeylType { A, B, C, D, G2 };

/// The coinvariant algebra of a finite reflection group of classical type
/// (or G2): the polynomial ring modulo the ideal generated by the fundamental
/// invariants, with all degrees doubled.
struct CoinvariantAlgebra {
  WeylType type = WeylType::A;
  int rank = 0;
  QuotientAlgebra quotient;   // algebra degrees 0, 2, ..., 2*top
  std::vector<int> dims;      // per polynomial degree (palindromic)
  long long group_order = 0;  // order of the reflection group
};

/// Supported: A/B/C/D of rank <= 4 (D needs rank >= 2), G2 (rank must be 2).
CoinvariantAlgebra coinvariant_algebra(WeylType type, int rank);

struct FlagLie {
  CoinvariantAlgebra coinv;
  LefschetzModule module;  // full degree-2 part acting by cup product
  GenerateResult gen;
  int aut_dim = 0;   // dim of the full form-preserving algebra
  bool in_aut = false;
  bool maximal = false;  // in_aut and dim g = aut_dim
};

FlagLie flag_lie(WeylType type, int rank);

/// Cohomology of a projective bundle of fiber dimension d over a base with
/// the given algebra: base[xi]/(xi^{d+1} + c_2 xi^{d-1} + ... + c_{d+1}),
/// normalized so the degree-d coefficient vanishes. Basis of total degree D:
/// pairs (base basis element of degree D - 2j, xi^j) ordered by increasing j.
struct BundleAlgebra {
  GradedAlgebra base;
  int d = 0;
  std::vector<Vec> chern;  // c_2 .. c_{d+1}; chern[t-2] in base degree 2t
  GradedAlgebra algebra;
  /// (horizontal, vertical) degree of each basis element per total degree.
  std::map<int, std::vector<std::pair<int, int>>> bidegrees;

  int base_index(int total_degree, int xi_power, int i) const;
};

BundleAlgebra bundle_cohomology(const GradedAlgebra& base, int d,
                                const std::vector<Vec>& chern);

struct LeraySplit {
  LefschetzModule module;
  GenerateResult gen;       // closure for the bundle algebra
  GenerateResult base_gen;  // closure for the base algebra
  GradedMap h_hor, h_ver;   // centered bigrading operators (sum = h)
  bool split_ok = false;        // sum is h, both summands in the closure
  bool dual_construction = false;  // h_hor from the dual of a horizontal
                                   // Lefschetz element, dual in the closure
  bool bidegrees_ok = false;    // base operators have bidegree (2,0); the
                                // xi-cup has vertical components 2 and <= -2
  bool product_embedded = false;  // base closure x sl2 inside the closure
  bool strict = false;            // the embedding is proper
};

LeraySplit leray_split(const BundleAlgebra& bundle);

}  // namespace leflab

#endif
