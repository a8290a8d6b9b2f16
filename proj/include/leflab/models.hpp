#ifndef LEFLAB_MODELS_HPP
#define LEFLAB_MODELS_HPP

#include <optional>
#include <string>

#include "leflab/report.hpp"

namespace leflab {

inline constexpr const char* kToolVersion = "leflab 1.0.0";

/// Catalog entry: name, parameter schema (name -> type/range note), defaults.
struct ModelInfo {
  std::string name;
  Json schema;
  Json defaults;
};

std::vector<ModelInfo> model_catalog();
Json catalog_to_json();

/// A constructed builtin model. Some models (albert, spinor) are summary-only
/// and carry no Lefschetz module; analyses that need one are skipped.
struct ModelBundle {
  std::optional<LefschetzModule> module;
  std::optional<GenerateResult> gen;        // precomputed e/f closure, if any
  std::optional<GradedLieAlgebra> closure;  // override for the reported algebra
  Json info = Json::object();
  bool info_ok = true;  // the model's own certified claims all hold
};

/// Throws std::invalid_argument on unknown names or parameters.
ModelBundle build_model(const std::string& name, const Json& params);

struct ScenarioConfig {
  std::string model;            // builtin name, or empty when document is set
  Json params = Json::object();
  std::optional<Json> document;  // inline algebra/module document
  std::vector<std::string> analyses;  // default: {"closure"}
  unsigned seed = 7;
  int box = 2;
};

/// Accepts {"model": name, ...params..., "analyses": [...], "seed": n,
/// "box": n} or a bare module document (an object with "pieces").
ScenarioConfig config_from_json(const Json& j);

struct ScenarioOutcome {
  Json report;
  bool ok = false;
};

/// Deterministic for fixed (config, seed); all requested analyses appear in
/// the report with their verdicts.
ScenarioOutcome run_scenario(const ScenarioConfig& cfg);

/// Admissible-node table for a root-system type ('A'..'E') and rank.
Json classify_json(char type, int rank);

}  // namespace leflab

#endif
