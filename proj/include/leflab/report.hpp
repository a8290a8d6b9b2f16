#ifndef LEFLAB_REPORT_HPP
#define LEFLAB_REPORT_HPP

#include <json.hpp>

#include "leflab/lefmod.hpp"
#include "leflab/lie.hpp"

namespace leflab {

/// All documents use nlohmann::json with std::map object storage, so keys are
/// sorted and serialization is byte-deterministic.
using Json = nlohmann::json;

Json json_rational(const Rational& r);             // "p/q" string
Rational rational_from_json(const Json& j);        // accepts "p/q" or integer
Json json_vec(const Vec& v);
Vec vec_from_json(const Json& j);
Json json_matrix(const Matrix& m);                 // row-major nested arrays
Matrix matrix_from_json(const Json& j);

/// {"pieces": {"0": 1, "2": 2, ...},
///  "mult":   [[deg_a, idx_a, deg_b, idx_b, ["p/q", ...]], ...]}
/// Only nonzero products are listed; the coefficient vector lives in degree
/// deg_a + deg_b.
Json algebra_to_json(const GradedAlgebra& alg);
GradedAlgebra algebra_from_json(const Json& j);

/// Module document: the algebra fields plus optional
///   "integral": ["p/q", ...]   functional on the top piece (default [1] when
///                              the top piece is a line), and/or
///   "a_basis":  [{"<source degree>": [[...]], ...}, ...]  explicit degree-2
///               operator blocks on the centered space.
/// Without "a_basis" the operators are the cups of the full degree-2 part.
LefschetzModule module_from_json(const Json& j);
Json module_to_json(const LefschetzModule& L);

Json fingerprint_to_json(const LieFingerprint& fp);

/// Deterministic human-readable rendering of any report document.
std::string render_text(const Json& j);

}  // namespace leflab

#endif
