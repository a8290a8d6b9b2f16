#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "leflab.h"

using nlohmann::json;

namespace {

std::string take(char* s)
{
  REQUIRE(s != nullptr);
  std::string out(s);
  leflab_string_free(s);
  return out;
}

struct Scenario {
  leflab_scenario* s = nullptr;
  ~Scenario() { leflab_scenario_free(s); }
};

}  // namespace

TEST_CASE("version and error strings")
{
  CHECK(std::string(leflab_version()).size() > 0);
  CHECK(leflab_last_error() != nullptr);
}

TEST_CASE("malformed config is a parse error")
{
  leflab_scenario* s = nullptr;
  CHECK(leflab_scenario_create("{not json", &s) == LEFLAB_EPARSE);
  CHECK(s == nullptr);
  CHECK(std::string(leflab_last_error()).size() > 0);
  CHECK(leflab_scenario_create("{\"no_model\": 1}", &s) == LEFLAB_EPARSE);
}

TEST_CASE("unknown model fails at run time with a parse error")
{
  Scenario sc;
  REQUIRE(leflab_scenario_create("{\"model\": \"nope\"}", &sc.s) == LEFLAB_OK);
  CHECK(leflab_scenario_run(sc.s) == LEFLAB_EPARSE);
  CHECK(std::string(leflab_last_error()).find("unknown model") != std::string::npos);
}

TEST_CASE("torus scenario: dimension 6 and the Jordan property")
{
  const char* config =
      "{\"model\":\"torus\",\"n\":1,\"analyses\":[\"closure\",\"jordan\"]}";
  Scenario sc;
  REQUIRE(leflab_scenario_create(config, &sc.s) == LEFLAB_OK);
  REQUIRE(leflab_scenario_run(sc.s) == LEFLAB_OK);
  std::string first = take(leflab_scenario_report_json(sc.s));
  json rep = json::parse(first);
  CHECK(rep.at("closure").at("dim") == 6);
  CHECK(rep.at("jordan").at("ok") == true);
  CHECK(rep.at("ok") == true);

  // Byte-identical across runs for a fixed config.
  Scenario sc2;
  REQUIRE(leflab_scenario_create(config, &sc2.s) == LEFLAB_OK);
  REQUIRE(leflab_scenario_run(sc2.s) == LEFLAB_OK);
  CHECK(take(leflab_scenario_report_json(sc2.s)) == first);

  std::string text = take(leflab_scenario_report_text(sc.s));
  CHECK(text.find("closure") != std::string::npos);
}

TEST_CASE("flag scenario: dimension 21 and maximality")
{
  Scenario sc;
  REQUIRE(leflab_scenario_create("{\"model\":\"flag\",\"type\":\"A\",\"rank\":2}", &sc.s) ==
          LEFLAB_OK);
  REQUIRE(leflab_scenario_run(sc.s) == LEFLAB_OK);
  json rep = json::parse(take(leflab_scenario_report_json(sc.s)));
  CHECK(rep.at("closure").at("dim") == 21);
  CHECK(rep.at("model").at("maximal") == true);
}

TEST_CASE("document analysis: a line as a bare module document")
{
  const char* doc =
      "{\"pieces\":{\"0\":1,\"2\":1},"
      "\"mult\":[[0,0,0,0,[\"1\"]],[0,0,2,0,[\"1\"]],[2,0,0,0,[\"1\"]]],"
      "\"analyses\":[\"closure\",\"forms\"]}";
  Scenario sc;
  REQUIRE(leflab_scenario_create(doc, &sc.s) == LEFLAB_OK);
  REQUIRE(leflab_scenario_run(sc.s) == LEFLAB_OK);
  json rep = json::parse(take(leflab_scenario_report_json(sc.s)));
  CHECK(rep.at("closure").at("dim") == 3);
  CHECK(rep.at("forms").at("nondegenerate") == true);
  CHECK(rep.at("forms").at("invariant") == true);
}

TEST_CASE("catalog lists the builtin models and they construct with defaults")
{
  char* out = nullptr;
  REQUIRE(leflab_list_models(&out) == LEFLAB_OK);
  json catalog = json::parse(take(out));
  std::vector<std::string> names;
  for (const json& m : catalog.at("models")) names.push_back(m.at("name"));
  for (const char* expected :
       {"torus", "kahler-torus", "hk", "albert", "jordan", "flag", "bundle", "spinor"})
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());

  for (const std::string& name : names) {
    CAPTURE(name);
    Scenario sc;
    std::string config = "{\"model\":\"" + name + "\"}";
    REQUIRE(leflab_scenario_create(config.c_str(), &sc.s) == LEFLAB_OK);
    CHECK(leflab_scenario_run(sc.s) == LEFLAB_OK);
  }
}

TEST_CASE("classification table")
{
  char* out = nullptr;
  REQUIRE(leflab_classify('A', 3, &out) == LEFLAB_OK);
  json table = json::parse(take(out));
  REQUIRE(table.at("nodes").size() == 3);
  CHECK(table.at("nodes")[1].at("admissible") == true);
  CHECK(table.at("nodes")[0].at("admissible") == false);
  CHECK(leflab_classify('X', 3, &out) == LEFLAB_EPARSE);

  char* text = nullptr;
  REQUIRE(leflab_classify('A', 3, &out) == LEFLAB_OK);
  std::string json_str = take(out);
  REQUIRE(leflab_render_text(json_str.c_str(), &text) == LEFLAB_OK);
  CHECK(take(text).find("admissible") != std::string::npos);
}

TEST_CASE("verify suite plumbing")
{
  char* out = nullptr;
  int all = -1;
  CHECK(leflab_verify("nope", 7, 0, &out, &all) == LEFLAB_EPARSE);
  CHECK(std::string(leflab_last_error()).find("valid names") != std::string::npos);

  REQUIRE(leflab_verify("core", 7, 0, &out, &all) == LEFLAB_OK);
  CHECK(all == 1);
  json rep = json::parse(take(out));
  CHECK(rep.at("ok") == true);
  CHECK(rep.at("checks").size() == 3);
  for (const json& c : rep.at("checks")) CHECK(c.at("pass") == true);

  char* text = nullptr;
  REQUIRE(leflab_verify_text("core", 7, 0, &text, &all) == LEFLAB_OK);
  std::string t = take(text);
  CHECK(t.find("PASS") != std::string::npos);
  CHECK(t.find("FAIL") == std::string::npos);
}

TEST_CASE("box override propagates")
{
  Scenario sc;
  REQUIRE(leflab_scenario_create("{\"model\":\"jordan\",\"case\":\"C\",\"m\":2}", &sc.s) ==
          LEFLAB_OK);
  CHECK(leflab_scenario_set_box(sc.s, 3) == LEFLAB_OK);
  CHECK(leflab_scenario_set_box(sc.s, 0) == LEFLAB_EPARSE);
  CHECK(leflab_scenario_set_seed(sc.s, 11) == LEFLAB_OK);
  REQUIRE(leflab_scenario_run(sc.s) == LEFLAB_OK);
  json rep = json::parse(take(leflab_scenario_report_json(sc.s)));
  CHECK(rep.at("closure").at("dim") == 10);
  CHECK(rep.at("seed") == 11);
}
