#ifndef LEFLAB_SL2_HPP
#define LEFLAB_SL2_HPP

#include "leflab/graded.hpp"
#include "leflab/subspace.hpp"

namespace leflab {

/// True iff e^k : M_{-k} -> M_k is an isomorphism for every k >= 0.
bool lefschetz_check(const GradedMap& e);

/// P_{-k} = Ker(e^{k+1}) cap M_{-k}, stored as rows of full-space vectors.
struct PrimitiveDecomposition {
  GradedSpace space;
  std::map<int, Matrix> primitives;  // k >= 0 -> basis of P_{-k}, rows of length total_dim

  int multiplicity(int k) const
  {
    auto it = primitives.find(k);
    return it == primitives.end() ? 0 : (int)it->second.rows();
  }
};

/// Throws std::runtime_error with a Lefschetz-violation report if e fails
/// lefschetz_check. The result satisfies dim M = sum (k+1) dim P_{-k}.
PrimitiveDecomposition primitive_decomposition(const GradedMap& e);

/// The unique degree -2 map with [e, f] = h, built from the string basis:
/// f(e^j p) = j(k - j + 1) e^{j-1} p on p in P_{-k}.
GradedMap jm_dual(const GradedMap& e);

/// Multiset of irreducible constituents: list of (k, multiplicity of V(k)),
/// k ascending, multiplicities > 0.
std::vector<std::pair<int, int>> sl2_type(const GradedMap& e);

/// Checks the arithmetic-progression shape d_0 < d_1 < ... < d_r = ... =
/// (palindromic plateau) ... > d_last on a symmetric dimension list; dims[i]
/// is the dimension in degree -n + 2i. Returns (ok, r).
std::pair<bool, int> progression_check(const std::vector<int>& dims);

}  // namespace leflab

#endif
