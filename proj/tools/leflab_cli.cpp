// Command-line surface over the leflab C API: load or construct models, run
// analyses, execute verification suites, and emit structured reports.
#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "leflab.h"

namespace {

std::string json_escape(const std::string& s)
{
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if ((unsigned char)c < 0x20) continue;
    out += c;
  }
  return out;
}

void print_owned(char* s)
{
  if (!s) return;
  std::fputs(s, stdout);
  std::size_t n = std::strlen(s);
  if (n == 0 || s[n - 1] != '\n') std::fputc('\n', stdout);
  leflab_string_free(s);
}

int report_error(int code)
{
  std::fprintf(stderr, "error: %s\n", leflab_last_error());
  return code;
}

std::optional<int> env_box()
{
  const char* v = std::getenv("LEFLAB_SEARCH_BOX");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  long b = std::strtol(v, &end, 10);
  if (!end || *end || b <= 0) return std::nullopt;
  return (int)b;
}

struct CommonOpts {
  std::string format = "json";
  std::vector<std::string> analyses;
  unsigned seed = 0;
  bool seed_set = false;
  int box = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_analyses)
{
  cmd->add_option("--format", o.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  if (with_analyses)
    cmd->add_option("--analyses", o.analyses,
                    "closure, jordan, frobenius, fingerprint, forms")
        ->delimiter(',');
  cmd->add_option("--seed", o.seed, "seed for randomized experiments")
      ->each([&o](const std::string&) { o.seed_set = true; });
  cmd->add_option("--box", o.box, "Lefschetz-element search box");
}

int run_config(const std::string& config, const CommonOpts& o)
{
  leflab_scenario* s = nullptr;
  int rc = leflab_scenario_create(config.c_str(), &s);
  if (rc != LEFLAB_OK) return report_error(rc);
  if (auto b = env_box()) leflab_scenario_set_box(s, *b);
  if (o.box > 0) leflab_scenario_set_box(s, o.box);
  if (o.seed_set) leflab_scenario_set_seed(s, o.seed);
  rc = leflab_scenario_run(s);
  if (rc == LEFLAB_EPARSE) {
    leflab_scenario_free(s);
    return report_error(rc);
  }
  print_owned(o.format == "text" ? leflab_scenario_report_text(s)
                                 : leflab_scenario_report_json(s));
  leflab_scenario_free(s);
  return rc;
}

std::string analyses_fragment(const std::vector<std::string>& analyses)
{
  if (analyses.empty()) return "";
  std::string out = ",\"analyses\":[";
  for (std::size_t i = 0; i < analyses.size(); ++i) {
    if (i) out += ",";
    out += "\"" + json_escape(analyses[i]) + "\"";
  }
  out += "]";
  return out;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact-arithmetic Lie algebras generated by Lefschetz operators"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(leflab_version()));

  // analyze <file.json>
  std::string analyze_file;
  CommonOpts analyze_opts;
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze a scenario or module document");
  analyze->add_option("file", analyze_file, "JSON document")->required();
  add_common(analyze, analyze_opts, false);  // analyses belong in the document

  // model <name> [params]
  std::string model_name;
  CommonOpts model_opts;
  std::optional<int> p_n, p_m, p_level, p_rank, p_k, p_d;
  std::optional<std::string> p_case, p_type, p_base, p_field, p_q, p_chern;
  CLI::App* model = app.add_subcommand("model", "Construct and analyze a builtin model");
  model->add_option("name", model_name, "builtin model name")->required();
  model->add_option("--n", p_n, "torus half-dimension");
  model->add_option("--m", p_m, "size parameter");
  model->add_option("--level", p_level, "symmetric-power level");
  model->add_option("--rank", p_rank, "rank");
  model->add_option("--k", p_k, "spinor parameter");
  model->add_option("--d", p_d, "fiber dimension");
  model->add_option("--case", p_case, "jordan case: A, C, D, BD");
  model->add_option("--type", p_type, "flag type: A, B, C, D, G2");
  model->add_option("--base", p_base, "bundle base: P1..P4");
  model->add_option("--field", p_field, "albert field: Q, Qi, H");
  model->add_option("--q", p_q, "BD quadratic form diagonal, JSON array");
  model->add_option("--chern", p_chern, "bundle coefficients, JSON array of arrays");
  add_common(model, model_opts, true);

  // classify --type T --rank r
  std::string classify_type;
  int classify_rank = 0;
  CommonOpts classify_opts;
  CLI::App* classify = app.add_subcommand("classify", "Admissible-node table for a root system");
  classify->add_option("--type", classify_type, "A, B, C, D or E")->required();
  classify->add_option("--rank", classify_rank, "rank")->required();
  add_common(classify, classify_opts, false);

  // verify <suite>
  std::string verify_suite;
  CommonOpts verify_opts;
  verify_opts.format = "text";
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", verify_suite,
                     "core, jordan, torus, hk, albert, flags, appendix, all")
      ->required();
  add_common(verify, verify_opts, false);

  // list-models
  CommonOpts list_opts;
  list_opts.format = "text";
  bool list_json = false;
  CLI::App* list = app.add_subcommand("list-models", "Catalog of builtin models");
  list->add_flag("--json", list_json, "machine-readable catalog");
  add_common(list, list_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return LEFLAB_EPARSE;
  }

  if (*analyze) {
    std::ifstream in(analyze_file);
    if (!in) {
      std::fprintf(stderr, "error: cannot read %s\n", analyze_file.c_str());
      return LEFLAB_EPARSE;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_config(buf.str(), analyze_opts);
  }

  if (*model) {
    std::string config = "{\"model\":\"" + json_escape(model_name) + "\"";
    auto add_int = [&](const char* key, const std::optional<int>& v) {
      if (v) config += ",\"" + std::string(key) + "\":" + std::to_string(*v);
    };
    auto add_str = [&](const char* key, const std::optional<std::string>& v) {
      if (v) config += ",\"" + std::string(key) + "\":\"" + json_escape(*v) + "\"";
    };
    add_int("n", p_n);
    add_int("m", p_m);
    add_int("level", p_level);
    add_int("rank", p_rank);
    add_int("k", p_k);
    add_int("d", p_d);
    add_str("case", p_case);
    add_str("type", p_type);
    add_str("base", p_base);
    add_str("field", p_field);
    if (p_q) config += ",\"q\":" + *p_q;          // raw JSON array
    if (p_chern) config += ",\"chern\":" + *p_chern;
    config += analyses_fragment(model_opts.analyses);
    config += "}";
    return run_config(config, model_opts);
  }

  if (*classify) {
    if (classify_type.size() != 1) {
      std::fprintf(stderr, "error: --type must be a single letter A..E\n");
      return LEFLAB_EPARSE;
    }
    char* out = nullptr;
    int rc = leflab_classify(classify_type[0], classify_rank, &out);
    if (rc != LEFLAB_OK) return report_error(rc);
    if (classify_opts.format == "text") {
      char* text = nullptr;
      rc = leflab_render_text(out, &text);
      leflab_string_free(out);
      if (rc != LEFLAB_OK) return report_error(rc);
      print_owned(text);
    } else {
      print_owned(out);
    }
    return LEFLAB_OK;
  }

  if (*verify) {
    unsigned seed = verify_opts.seed_set ? verify_opts.seed : 7;
    int box = verify_opts.box;
    if (box <= 0)
      if (auto b = env_box()) box = *b;
    char* out = nullptr;
    int all = 0;
    int rc = verify_opts.format == "text"
                 ? leflab_verify_text(verify_suite.c_str(), seed, box, &out, &all)
                 : leflab_verify(verify_suite.c_str(), seed, box, &out, &all);
    if (rc == LEFLAB_EPARSE) return report_error(rc);
    print_owned(out);
    return rc;
  }

  if (*list) {
    char* out = nullptr;
    int rc = leflab_list_models(&out);
    if (rc != LEFLAB_OK) return report_error(rc);
    if (!list_json && list_opts.format == "text") {
      char* text = nullptr;
      rc = leflab_render_text(out, &text);
      leflab_string_free(out);
      if (rc != LEFLAB_OK) return report_error(rc);
      print_owned(text);
    } else {
      print_owned(out);
    }
    return LEFLAB_OK;
  }

  return LEFLAB_EPARSE;
}
