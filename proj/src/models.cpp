#include "leflab/models.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "leflab/appendixlab.hpp"
#include "leflab/coinv.hpp"
#include "leflab/geomodels.hpp"
#include "leflab/jordanalg.hpp"
#include "leflab/rootcomb.hpp"

namespace leflab {

namespace {

int get_int(const Json& params, const std::string& key, int fallback)
{
  if (!params.contains(key)) return fallback;
  return params.at(key).get<int>();
}

std::string get_str(const Json& params, const std::string& key, const std::string& fallback)
{
  if (!params.contains(key)) return fallback;
  return params.at(key).get<std::string>();
}

void reject_unknown(const Json& params, const std::set<std::string>& allowed)
{
  for (auto it = params.begin(); it != params.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument("unknown parameter \"" + it.key() + "\"");
}

WeylType weyl_from_string(const std::string& s)
{
  if (s == "A") return WeylType::A;
  if (s == "B") return WeylType::B;
  if (s == "C") return WeylType::C;
  if (s == "D") return WeylType::D;
  if (s == "G2") return WeylType::G2;
  throw std::invalid_argument("unknown type \"" + s + "\" (A, B, C, D, G2)");
}

Json adh_json(const GradedLieAlgebra& g)
{
  Json out = Json::object();
  for (const auto& [deg, d] : g.adh_grading()) out[std::to_string(deg)] = d;
  return out;
}

Json dims_json(const GradedSpace& s)
{
  Json out = Json::object();
  for (const auto& [deg, d] : s.pieces) out[std::to_string(deg)] = d;
  return out;
}

ModelBundle build_torus(const Json& params)
{
  reject_unknown(params, {"n"});
  int n = get_int(params, "n", 1);
  if (n < 1 || n > 2) throw std::invalid_argument("torus: n must be 1 or 2");
  TorusTotal t = torus_total(n);
  ModelBundle mb;
  mb.module = t.module;
  mb.gen = t.gen;
  mb.closure = t.spin;
  mb.info["n"] = n;
  mb.info["generated_dim"] = t.gen.g.dim();
  mb.info["orthogonal_dim"] = t.spin.dim();
  mb.info_ok = t.gen.has_h && t.gen.saturated;
  return mb;
}

ModelBundle build_kahler_torus(const Json& params)
{
  reject_unknown(params, {"n"});
  int n = get_int(params, "n", 1);
  if (n < 1 || n > 2) throw std::invalid_argument("kahler-torus: n must be 1 or 2");
  TorusKahler t = torus_kahler(n, standard_complex_structure(n));
  ModelBundle mb;
  mb.module = t.module;
  mb.gen = t.gen;
  mb.info["n"] = n;
  mb.info["invariant_forms"] = t.a_dim;
  mb.info_ok = t.gen.has_h;
  return mb;
}

ModelBundle build_hk(const Json& params)
{
  reject_unknown(params, {});
  HkRecord r = hk_model();
  ModelBundle mb;
  mb.module = r.module;
  mb.closure = r.g;
  mb.info["duals_match"] = r.duals_match;
  mb.info["bracket_identity"] = r.bracket_identity;
  Json md = Json::object();
  for (const auto& [deg, d] : r.m_dims) md[std::to_string(deg)] = d;
  mb.info["operator_subalgebra_dims"] = md;
  mb.info["star_invariant"] = r.m_star_invariant;
  mb.info["antiselfdual_killed"] = r.asd_killed;
  mb.info_ok = r.duals_match && r.bracket_identity && r.m_star_invariant && r.asd_killed;
  return mb;
}

ModelBundle build_albert(const Json& params)
{
  reject_unknown(params, {"field", "m"});
  std::string field = get_str(params, "field", "Q");
  int m = get_int(params, "m", 1);
  InvolutiveAlgebra F;
  if (field == "Q")
    F = rational_field();
  else if (field == "Qi")
    F = gaussian_field();
  else if (field == "H")
    F = hamilton_quaternions();
  else
    throw std::invalid_argument("albert: field must be Q, Qi or H");
  AlbertRecord r = albert_sku(F, m);
  ModelBundle mb;
  mb.closure = r.g;
  mb.info["field"] = field;
  mb.info["m"] = m;
  mb.info["dim_sku"] = r.dim_sku;
  mb.info["dim_g"] = r.dim_g;
  mb.info["dim_u"] = r.dim_u;
  mb.info["ideals_ok"] = r.ideals_ok;
  mb.info_ok = r.ideals_ok;
  return mb;
}

ModelBundle build_jordan(const Json& params)
{
  reject_unknown(params, {"case", "m", "level", "q"});
  std::string kase = get_str(params, "case", "A");
  int m = get_int(params, "m", 2);
  int level = get_int(params, "level", 1);
  if (level < 1) throw std::invalid_argument("jordan: level must be >= 1");
  FrobeniusModel model;
  if (kase == "A")
    model = frobenius_model_A(m);
  else if (kase == "C")
    model = frobenius_model_C(m);
  else if (kase == "D")
    model = frobenius_model_D(m);
  else if (kase == "BD") {
    Vec q{rat(1), rat(1), rat(-1)};
    if (params.contains("q")) q = vec_from_json(params.at("q"));
    model = frobenius_model_BD(q);
  } else {
    throw std::invalid_argument("jordan: case must be A, C, D or BD");
  }
  ModelBundle mb;
  mb.info["case"] = kase;
  mb.info["m"] = model.m;
  mb.info["level"] = level;
  if (level == 1) {
    bool pres = presentation_check(model);
    mb.info["presentation"] = pres;
    mb.info["algebra"] = algebra_to_json(model.algebra);
    mb.module = model_module(model);
    mb.info_ok = pres;
  } else {
    GradedAlgebra lk = level_k(model, level);
    mb.info["algebra"] = algebra_to_json(lk);
    mb.module = module_from_algebra(lk, Vec{Rational(1)});
  }
  return mb;
}

ModelBundle build_flag(const Json& params)
{
  reject_unknown(params, {"type", "rank"});
  WeylType t = weyl_from_string(get_str(params, "type", "A"));
  int rank = get_int(params, "rank", 2);
  FlagLie fl = flag_lie(t, rank);
  ModelBundle mb;
  mb.module = fl.module;
  mb.gen = fl.gen;
  mb.info["type"] = get_str(params, "type", "A");
  mb.info["rank"] = rank;
  mb.info["group_order"] = fl.coinv.group_order;
  mb.info["aut_dim"] = fl.aut_dim;
  mb.info["in_aut"] = fl.in_aut;
  mb.info["maximal"] = fl.maximal;
  mb.info_ok = fl.in_aut;
  return mb;
}

ModelBundle build_bundle(const Json& params)
{
  reject_unknown(params, {"base", "d", "chern"});
  std::string base = get_str(params, "base", "P1");
  int d = get_int(params, "d", 1);
  GradedAlgebra base_alg;
  if (base.size() == 2 && base[0] == 'P' && base[1] >= '1' && base[1] <= '4')
    base_alg = projective_space_algebra(base[1] - '0');
  else
    throw std::invalid_argument("bundle: base must be P1..P4");
  std::vector<Vec> chern(d, Vec{});
  if (params.contains("chern")) {
    chern.clear();
    for (const Json& c : params.at("chern")) chern.push_back(vec_from_json(c));
  }
  BundleAlgebra b = bundle_cohomology(base_alg, d, chern);
  LeraySplit ls = leray_split(b);
  ModelBundle mb;
  mb.module = ls.module;
  mb.gen = ls.gen;
  mb.info["base"] = base;
  mb.info["fiber_dim"] = d;
  mb.info["base_closure_dim"] = ls.base_gen.g.dim();
  mb.info["split_ok"] = ls.split_ok;
  mb.info["dual_construction"] = ls.dual_construction;
  mb.info["bidegrees_ok"] = ls.bidegrees_ok;
  mb.info["product_embedded"] = ls.product_embedded;
  mb.info["strict"] = ls.strict;
  mb.info_ok = ls.split_ok && ls.product_embedded;
  return mb;
}

ModelBundle build_spinor(const Json& params)
{
  reject_unknown(params, {"k"});
  int k = get_int(params, "k", 2);
  SpinorRecord r = spinor_example(k);
  ModelBundle mb;
  mb.info["k"] = k;
  mb.info["centralizer_dim"] = r.centralizer_dim;
  mb.info["setup_ok"] = r.setup_ok;
  mb.info["relations_ok"] = r.relations_ok;
  mb.info_ok = r.setup_ok && r.relations_ok;
  if (k >= 3) {
    mb.info["semispinor_dim"] = r.w_dim;
    mb.info["frobenius_order"] = r.frobenius.order;
    mb.info["order_2_not_3"] = r.order2_not3;
    mb.info["dual_line_ok"] = r.dual_line_ok;
    mb.info["reduced_squares_trivial"] = r.abar_sq_trivial;
    mb.info_ok = mb.info_ok && r.order2_not3 && r.dual_line_ok && r.abar_sq_trivial;
  }
  return mb;
}

}  // namespace

std::vector<ModelInfo> model_catalog()
{
  std::vector<ModelInfo> out;
  out.push_back({"torus",
                 {{"n", "half-dimension, 1 or 2"}},
                 {{"n", 1}}});
  out.push_back({"kahler-torus",
                 {{"n", "half-dimension, 1 or 2"}},
                 {{"n", 1}}});
  out.push_back({"hk", Json::object(), Json::object()});
  out.push_back({"albert",
                 {{"field", "Q, Qi or H"}, {"m", "module rank parameter"}},
                 {{"field", "Q"}, {"m", 1}}});
  out.push_back({"jordan",
                 {{"case", "A, C, D or BD"},
                  {"m", "size parameter (ignored for BD)"},
                  {"level", "symmetric-power level, >= 1"},
                  {"q", "BD only: diagonal of the quadratic form"}},
                 {{"case", "A"}, {"m", 2}, {"level", 1}}});
  out.push_back({"flag",
                 {{"type", "A, B, C, D or G2"}, {"rank", "1..4 (G2: 2)"}},
                 {{"type", "A"}, {"rank", 2}}});
  out.push_back({"bundle",
                 {{"base", "P1..P4"},
                  {"d", "fiber dimension"},
                  {"chern", "coefficient vectors c_2..c_{d+1} in base degrees"}},
                 {{"base", "P1"}, {"d", 1}}});
  out.push_back({"spinor",
                 {{"k", ">= 2; the semispinor is built for k >= 3"}},
                 {{"k", 2}}});
  return out;
}

Json catalog_to_json()
{
  Json models = Json::array();
  for (const ModelInfo& m : model_catalog()) {
    Json e;
    e["name"] = m.name;
    e["params"] = m.schema;
    e["defaults"] = m.defaults;
    models.push_back(e);
  }
  return Json{{"models", models}, {"tool_version", kToolVersion}};
}

ModelBundle build_model(const std::string& name, const Json& params)
{
  if (name == "torus") return build_torus(params);
  if (name == "kahler-torus") return build_kahler_torus(params);
  if (name == "hk") return build_hk(params);
  if (name == "albert") return build_albert(params);
  if (name == "jordan") return build_jordan(params);
  if (name == "flag") return build_flag(params);
  if (name == "bundle") return build_bundle(params);
  if (name == "spinor") return build_spinor(params);
  throw std::invalid_argument("unknown model \"" + name + "\"");
}

ScenarioConfig config_from_json(const Json& j)
{
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  ScenarioConfig cfg;
  static const std::set<std::string> reserved = {"model", "analyses", "seed", "box", "format"};
  if (j.contains("analyses"))
    for (const Json& a : j.at("analyses")) cfg.analyses.push_back(a.get<std::string>());
  if (j.contains("seed")) cfg.seed = j.at("seed").get<unsigned>();
  if (j.contains("box")) cfg.box = j.at("box").get<int>();
  if (j.contains("model")) {
    cfg.model = j.at("model").get<std::string>();
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!reserved.count(it.key())) cfg.params[it.key()] = it.value();
    if (cfg.params.contains("params")) {
      Json p = cfg.params.at("params");
      cfg.params.erase("params");
      for (auto it = p.begin(); it != p.end(); ++it) cfg.params[it.key()] = it.value();
    }
  } else if (j.contains("pieces")) {
    cfg.document = j;
  } else {
    throw std::invalid_argument("config needs \"model\" or a document with \"pieces\"");
  }
  return cfg;
}

ScenarioOutcome run_scenario(const ScenarioConfig& cfg)
{
  static const std::set<std::string> known = {"closure", "jordan", "frobenius", "fingerprint",
                                             "forms"};
  std::vector<std::string> analyses = cfg.analyses;
  if (analyses.empty()) analyses = {"closure"};
  for (const std::string& a : analyses)
    if (!known.count(a)) throw std::invalid_argument("unknown analysis \"" + a + "\"");

  Json rep;
  rep["tool_version"] = kToolVersion;
  rep["seed"] = cfg.seed;
  bool ok = true;

  ModelBundle mb;
  if (!cfg.model.empty()) {
    mb = build_model(cfg.model, cfg.params);
    rep["input"] = Json{{"model", cfg.model}, {"params", cfg.params}};
  } else {
    mb.module = module_from_json(*cfg.document);
    rep["input"] = Json{{"source", "document"}};
  }
  if (!mb.info.empty()) rep["model"] = mb.info;
  ok = ok && mb.info_ok;
  if (mb.module) rep["dims"] = dims_json(mb.module->M);

  SearchOptions opt;
  opt.box = cfg.box;
  Json skipped = Json::array();
  auto need_gen = [&]() -> bool {
    if (mb.gen) return true;
    if (!mb.module) return false;
    mb.gen = generate_g(*mb.module, opt);
    return true;
  };

  for (const std::string& a : analyses) {
    if (a == "closure" || a == "fingerprint") {
      const GradedLieAlgebra* g = nullptr;
      if (mb.closure)
        g = &*mb.closure;
      else if (need_gen())
        g = &mb.gen->g;
      if (!g) {
        skipped.push_back(a);
        continue;
      }
      if (a == "closure") {
        Json c;
        c["dim"] = g->dim();
        c["adh"] = adh_json(*g);
        if (mb.gen) {
          c["certified"] = (int)mb.gen->certified.size();
          c["saturated"] = mb.gen->saturated;
          c["has_h"] = mb.gen->has_h;
          ok = ok && mb.gen->has_h;
        }
        rep["closure"] = c;
      } else {
        rep["fingerprint"] = fingerprint_to_json(fingerprint(*g));
      }
    } else if (a == "jordan") {
      if (!mb.module || !need_gen()) {
        skipped.push_back(a);
        continue;
      }
      JordanCheck jc = jordan_check(*mb.module, *mb.gen);
      rep["jordan"] = Json{{"degrees_202", jc.degrees_202}, {"f_commute", jc.f_commute},
                           {"ok", jc.degrees_202 && jc.f_commute}};
      ok = ok && jc.degrees_202 && jc.f_commute;
    } else if (a == "frobenius") {
      if (!mb.module) {
        skipped.push_back(a);
        continue;
      }
      FrobeniusRecord fr = frobenius_order(*mb.module, mb.module->depth());
      rep["frobenius"] = Json{{"dim_lowest", fr.dim_lowest},
                              {"map_iso", fr.map_iso},
                              {"order", fr.order},
                              {"full", fr.full}};
    } else if (a == "forms") {
      if (!mb.module || !mb.module->phi) {
        skipped.push_back(a);
        continue;
      }
      const PairingForm& phi = *mb.module->phi;
      bool nondeg = phi.nondegenerate();
      bool invariant = true;
      for (const GradedMap& op : mb.module->a_basis)
        invariant = invariant && infinitesimal_invariance(op, phi);
      rep["forms"] = Json{{"nondegenerate", nondeg}, {"invariant", invariant}};
      ok = ok && nondeg && invariant;
    }
  }
  if (!skipped.empty()) rep["skipped"] = skipped;
  rep["ok"] = ok;
  return {rep, ok};
}

Json classify_json(char type, int rank)
{
  std::vector<NodeVerdict> verdicts = jordan_pair_enumerate(type, rank);
  Json nodes = Json::array();
  for (const NodeVerdict& v : verdicts)
    nodes.push_back(Json{{"index", v.index},
                         {"coeff_one", v.coeff_one},
                         {"sum_free", v.sum_free},
                         {"h_simple", v.h_simple},
                         {"admissible", v.sum_free && v.h_simple}});
  return Json{{"type", std::string(1, type)}, {"rank", rank}, {"nodes", nodes},
              {"anchor", "Cor 2.6"}};
}

}  // namespace leflab
