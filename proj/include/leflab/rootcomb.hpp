#ifndef LEFLAB_ROOTCOMB_HPP
#define LEFLAB_ROOTCOMB_HPP

#include <map>
#include <set>
#include <vector>

#include "leflab/matrix.hpp"

namespace leflab {

/// Root system of classical type A-D (any valid rank) or E6/E7, with the
/// Bourbaki simple-root conventions.
struct RootSystem {
  char type = 'A';  // 'A', 'B', 'C', 'D', 'E'
  int rank = 0;
  std::vector<Vec> simple;  // ambient coordinates
  std::vector<Vec> roots;   // all roots, ambient coordinates
  std::vector<Vec> coords;  // same order as roots, simple-root coefficients
  Vec highest;              // simple-root coefficients of the highest root

  /// Simple roots i and j (0-based) joined by an edge of the diagram.
  bool adjacent(int i, int j) const;
  /// Is v a root?
  bool is_root(const Vec& v) const;
};

RootSystem build_roots(char type, int rank);

/// Marking of the simple roots by labels 0/2; b2 holds the 1-based indices
/// of the label-2 nodes.
struct WeightedDynkin {
  RootSystem base;
  std::set<int> b2;
};

/// No two label-2 nodes are joined by an edge.
bool adjacency_check(const WeightedDynkin& wd);

struct B2Placement {
  int rank = 0;
  std::vector<int> indices;  // 1-based, increasing
};

/// Node placement for a classical type from the graded dimensions
/// d_0 < ... of the lower half of the standard representation. parity is
/// the common parity (0 or 1) of the grading degrees. Throws on dims
/// violating the admissibility constraints of the case.
B2Placement b2_from_dims(char type, const std::vector<int>& dims, int parity);

/// Degree -> dimension of the grading that 2*(sum of fundamental coweights
/// at the 1-based indices) induces on the standard representation.
std::map<int, int> standard_grading(char type, int rank, const std::vector<int>& indices);

/// b2_from_dims followed by standard_grading reproduces the input dims.
bool b2_round_trip(char type, const std::vector<int>& dims, int parity);

struct NodeVerdict {
  int index = 0;  // 1-based
  bool coeff_one = false;  // highest-root coefficient at the node is 1
  bool sum_free = false;   // R(beta) + R(beta) contains no root
  bool h_simple = false;
};

/// Verdicts for every simple root. Throws if the two singleton criteria
/// (coefficient one / sum-free) ever disagree. For classical types the
/// h-simplicity filter searches for graded dimensions whose placement is the
/// given singleton; for E6/E7 it is tabulated.
std::vector<NodeVerdict> jordan_pair_enumerate(char type, int rank);

}  // namespace leflab

#endif
