#include <doctest.h>

#include <json.hpp>
#include <string>
#include <vector>

#include "maxcyc/constructors.hpp"
#include "maxcyc/render.hpp"

using namespace maxcyc;
using nlohmann::json;

namespace {

void has_keys(const json& j, const std::vector<std::string>& keys) {
  for (const auto& k : keys) {
    CAPTURE(k);
    CHECK(j.contains(k));
  }
  CHECK(j.size() == keys.size());
}

}  // namespace

TEST_CASE("eta json") {
  const json j = json::parse(render_eta(realize("S(3) x D(10)"), OutputFormat::Json));
  has_keys(j, {"order", "eta", "l", "gminus_size", "classes"});
  CHECK(j["eta"] == 4);
  REQUIRE(j["classes"].size() == 4);
  has_keys(j["classes"][0], {"subgroup_order", "class_size"});
  std::vector<int> orders;
  for (const auto& c : j["classes"]) orders.push_back(c["subgroup_order"]);
  CHECK(orders == std::vector<int>{2, 6, 10, 15});
}

TEST_CASE("normals json") {
  const json j = json::parse(render_normals(realize("D(30)"), OutputFormat::Json));
  has_keys(j, {"order", "normals"});
  REQUIRE(j["normals"].size() == 5);
  has_keys(j["normals"][0], {"row", "order", "index", "generators"});
  CHECK(j["normals"][2]["order"] == 5);
  CHECK(j["normals"][2]["index"] == 0);
}

TEST_CASE("quot json") {
  const json j = json::parse(render_quot(realize("D(30)"), 5, 0, OutputFormat::Json));
  has_keys(j, {"order", "normal", "eta_G", "eta_Q", "equal", "cond_a", "cond_b", "cond_c",
               "gminus_coset_union", "all_cosets_conjugate", "pgroup_union", "product_absorbs",
               "image_matches", "consistent", "witnesses"});
  has_keys(j["normal"], {"order", "index", "generators"});
  has_keys(j["witnesses"], {"cond_a", "cond_b", "cond_c", "coset_union"});
  CHECK(j["equal"] == true);
  CHECK(j["gminus_coset_union"] == false);
  CHECK(j["witnesses"]["coset_union"].is_string());
  CHECK(j["witnesses"]["cond_a"].is_null());
  CHECK(j["consistent"] == true);
}

TEST_CASE("xsub, gminus and gkgraph json") {
  const json x = json::parse(render_xsub(realize("M16"), OutputFormat::Json));
  has_keys(x, {"order", "generators", "eta", "eta_quotient", "cyclic", "qualifying"});
  CHECK(x["cyclic"] == true);
  const json g = json::parse(render_gminus(realize("D(30)"), OutputFormat::Json));
  has_keys(g, {"order", "gminus_size", "matches_power_formula", "matches_p_powers", "is_subgroup",
               "closure_order", "elements"});
  CHECK(g["gminus_size"] == 7);
  CHECK(g["elements"].size() == 7);
  CHECK(g["matches_p_powers"].is_null());
  const json k = json::parse(render_gkgraph(realize("A(5)"), OutputFormat::Json));
  has_keys(k, {"vertices", "edges", "components"});
  CHECK(k["components"] == 3);
}

TEST_CASE("rendering is deterministic") {
  const Group g = realize("SG72_50");
  CHECK(render_eta(g, OutputFormat::Json) == render_eta(realize("SG72_50"), OutputFormat::Json));
  CHECK(render_normals(g, OutputFormat::Text) == render_normals(g, OutputFormat::Text));
}

TEST_CASE("report rendering") {
  VerifyReport ok;
  ok.suite = "values";
  ok.instance = "C(2)";
  VerifyReport bad = ok;
  bad.expect_eq("eta", 2, 1);
  const std::string text = render_reports({ok, bad}, OutputFormat::Text);
  CHECK(text.find("PASS values C(2)") != std::string::npos);
  CHECK(text.find("FAIL values C(2)") != std::string::npos);
  CHECK(text.find("eta: expected 2, got 1") != std::string::npos);
  CHECK(text.find("2 reports, 1 failed") != std::string::npos);
  const std::string lines = render_reports({ok, bad}, OutputFormat::Json);
  const auto nl = lines.find('\n');
  const json second = json::parse(lines.substr(nl + 1));
  has_keys(second, {"suite", "instance", "passed", "details"});
  CHECK(second["passed"] == false);
}
