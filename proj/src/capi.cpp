#include "leflab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "leflab/models.hpp"
#include "leflab/verify.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s)
{
  char* out = (char*)std::malloc(s.size() + 1);
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int fail(int code, const std::string& msg)
{
  g_last_error = msg;
  return code;
}

}  // namespace

struct leflab_scenario {
  leflab::ScenarioConfig config;
  leflab::Json report;
  bool has_report = false;
  bool ok = false;
};

extern "C" {

const char* leflab_version(void) { return leflab::kToolVersion; }

const char* leflab_last_error(void) { return g_last_error.c_str(); }

void leflab_string_free(char* s) { std::free(s); }

int leflab_scenario_create(const char* config_json, leflab_scenario** out)
{
  if (!config_json || !out) return fail(LEFLAB_EPARSE, "null argument");
  *out = nullptr;
  try {
    leflab::Json j = leflab::Json::parse(config_json);
    leflab::ScenarioConfig cfg = leflab::config_from_json(j);
    *out = new leflab_scenario{std::move(cfg), {}, false, false};
    g_last_error.clear();
    return LEFLAB_OK;
  } catch (const std::exception& e) {
    return fail(LEFLAB_EPARSE, e.what());
  }
}

void leflab_scenario_free(leflab_scenario* s) { delete s; }

int leflab_scenario_set_box(leflab_scenario* s, int box)
{
  if (!s || box <= 0) return fail(LEFLAB_EPARSE, "bad scenario or box");
  s->config.box = box;
  g_last_error.clear();
  return LEFLAB_OK;
}

int leflab_scenario_set_seed(leflab_scenario* s, unsigned seed)
{
  if (!s) return fail(LEFLAB_EPARSE, "null scenario");
  s->config.seed = seed;
  g_last_error.clear();
  return LEFLAB_OK;
}

int leflab_scenario_run(leflab_scenario* s)
{
  if (!s) return fail(LEFLAB_EPARSE, "null scenario");
  try {
    leflab::ScenarioOutcome outcome = leflab::run_scenario(s->config);
    s->report = std::move(outcome.report);
    s->has_report = true;
    s->ok = outcome.ok;
    g_last_error.clear();
    return outcome.ok ? LEFLAB_OK : fail(LEFLAB_EFAIL, "one or more assertions failed");
  } catch (const std::invalid_argument& e) {
    return fail(LEFLAB_EPARSE, e.what());
  } catch (const std::exception& e) {
    return fail(LEFLAB_EFAIL, e.what());
  }
}

char* leflab_scenario_report_json(const leflab_scenario* s)
{
  if (!s || !s->has_report) return nullptr;
  return dup_string(s->report.dump(2));
}

char* leflab_scenario_report_text(const leflab_scenario* s)
{
  if (!s || !s->has_report) return nullptr;
  return dup_string(leflab::render_text(s->report));
}

int leflab_list_models(char** out_json)
{
  if (!out_json) return fail(LEFLAB_EPARSE, "null argument");
  *out_json = dup_string(leflab::catalog_to_json().dump(2));
  g_last_error.clear();
  return *out_json ? LEFLAB_OK : fail(LEFLAB_EFAIL, "allocation failed");
}

int leflab_classify(char type, int rank, char** out_json)
{
  if (!out_json) return fail(LEFLAB_EPARSE, "null argument");
  *out_json = nullptr;
  try {
    *out_json = dup_string(leflab::classify_json(type, rank).dump(2));
    g_last_error.clear();
    return *out_json ? LEFLAB_OK : fail(LEFLAB_EFAIL, "allocation failed");
  } catch (const std::exception& e) {
    return fail(LEFLAB_EPARSE, e.what());
  }
}

int leflab_verify(const char* suite, unsigned seed, int box, char** out_json, int* all_pass)
{
  if (!suite || !out_json) return fail(LEFLAB_EPARSE, "null argument");
  *out_json = nullptr;
  try {
    if (box <= 0) box = leflab::SearchOptions{}.box;
    std::vector<leflab::VerifyCheck> checks = leflab::run_suite(suite, seed, box);
    bool pass = leflab::all_pass(checks);
    if (all_pass) *all_pass = pass ? 1 : 0;
    *out_json = dup_string(leflab::verify_to_json(suite, seed, checks).dump(2));
    if (!*out_json) return fail(LEFLAB_EFAIL, "allocation failed");
    g_last_error.clear();
    return pass ? LEFLAB_OK : fail(LEFLAB_EFAIL, "suite reported failures");
  } catch (const std::invalid_argument& e) {
    return fail(LEFLAB_EPARSE, e.what());
  } catch (const std::exception& e) {
    return fail(LEFLAB_EFAIL, e.what());
  }
}

int leflab_verify_text(const char* suite, unsigned seed, int box, char** out_text,
                       int* all_pass)
{
  if (!suite || !out_text) return fail(LEFLAB_EPARSE, "null argument");
  *out_text = nullptr;
  try {
    if (box <= 0) box = leflab::SearchOptions{}.box;
    std::vector<leflab::VerifyCheck> checks = leflab::run_suite(suite, seed, box);
    bool pass = leflab::all_pass(checks);
    if (all_pass) *all_pass = pass ? 1 : 0;
    *out_text = dup_string(leflab::verify_to_text(suite, checks));
    if (!*out_text) return fail(LEFLAB_EFAIL, "allocation failed");
    g_last_error.clear();
    return pass ? LEFLAB_OK : fail(LEFLAB_EFAIL, "suite reported failures");
  } catch (const std::invalid_argument& e) {
    return fail(LEFLAB_EPARSE, e.what());
  } catch (const std::exception& e) {
    return fail(LEFLAB_EFAIL, e.what());
  }
}

int leflab_render_text(const char* report_json, char** out_text)
{
  if (!report_json || !out_text) return fail(LEFLAB_EPARSE, "null argument");
  *out_text = nullptr;
  try {
    leflab::Json j = leflab::Json::parse(report_json);
    *out_text = dup_string(leflab::render_text(j));
    g_last_error.clear();
    return *out_text ? LEFLAB_OK : fail(LEFLAB_EFAIL, "allocation failed");
  } catch (const std::exception& e) {
    return fail(LEFLAB_EPARSE, e.what());
  }
}

}  // extern "C"
