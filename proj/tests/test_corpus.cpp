#include <doctest.h>

#include <cstdlib>
#include <string>

#include "maxcyc/corpus.hpp"
#include "maxcyc/cyclic.hpp"
#include "maxcyc/errors.hpp"
#include "maxcyc/verify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace maxcyc;

namespace {

std::string corpus_error(const std::string& text) {
  try {
    parse_corpus(text);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CorpusError) return e.what();
    return std::string("wrong code: ") + e.what();
  }
  return "no error";
}

}  // namespace

TEST_CASE("parse_corpus basics") {
  const auto entries = parse_corpus(
      "# header\n"
      "\n"
      "C(6) ; eta=1 ; l=4   # trailing\n"
      "S(3) x D(10) ; source=reference ; eta=4 ; maxcyc=2,3,6,10\n"
      "Perm(3; (0,1,2)) ; order=3\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].line == 3);
  CHECK(entries[0].text == "C(6)");
  CHECK(entries[0].source == "derived");
  CHECK(entries[0].get("l") == "4");
  CHECK_FALSE(entries[0].get("gminus").has_value());
  CHECK(entries[1].source == "reference");
  CHECK(entries[1].has("maxcyc"));
  CHECK(entries[2].line == 5);
  CHECK(entries[2].text == "Perm(3; (0,1,2))");
}

TEST_CASE("corpus errors name the line") {
  CHECK(corpus_error("C(2)\nC(3) ; bogus=1\n").find("corpus line 2") != std::string::npos);
  CHECK(corpus_error("C(2) ; eta=x\n").find("corpus line 1") != std::string::npos);
  CHECK(corpus_error("C(2) ; eta=1 ; eta=1\n").find("corpus line 1") != std::string::npos);
  CHECK(corpus_error("\n\nC(2 ; eta=1\n").find("corpus line 3") != std::string::npos);
  CHECK(corpus_error("C(2) ; source=guess\n").find("corpus line 1") != std::string::npos);
  CHECK(corpus_error("C(2) ; class=simple\n").find("corpus line 1") != std::string::npos);
  CHECK(corpus_error("C(2) ; n2.0.equal=maybe\n").find("corpus line 1") != std::string::npos);
  CHECK(corpus_error("C(2) ; eta\n").find("corpus line 1") != std::string::npos);
  CHECK(corpus_error("C(0)\n").find("corpus line 1") != std::string::npos);
}

TEST_CASE("load_corpus on a missing file") {
  try {
    load_corpus("/nonexistent/corpus.txt");
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IoError);
  }
}

TEST_CASE("selectors") {
  CHECK(selector_name({5, 0}) == "n5.0");
  const auto s = parse_selector_list("5.0,3.1");
  REQUIRE(s.size() == 2);
  CHECK(s[1] == NormalSelector{3, 1});
  const auto e = parse_corpus("D(30) ; n5.0.eta_q=2 ; n5.0.equal=true ; n3.0.union=false\n");
  const auto pairs = pair_expectations(e[0]);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs.at({5, 0}).at("eta_q") == "2");
  CHECK(pairs.at({3, 0}).at("union") == "false");
}

TEST_CASE("shipped corpus: size and coverage") {
  const auto entries = testing::corpus();
  CHECK(entries.size() >= 60);
  std::size_t reference = 0, products = 0;
  for (const auto& e : entries) {
    reference += e.source == "reference";
    products += e.spec.kind == SpecKind::DirectProduct;
  }
  CHECK(reference >= 20);
  CHECK(products >= 20);
}

TEST_CASE("shipped corpus: recorded values agree with the oracle") {
  for (const auto& e : testing::corpus()) {
    const Group g = realize(e.spec);
    if (g.order() > 200) continue;
    CAPTURE(e.text);
    const auto t = oracle::table_of(g);
    if (auto v = e.get("order")) CHECK(std::stoull(*v) == t.size());
    if (auto v = e.get("eta")) CHECK(std::stoull(*v) == oracle::eta(t));
    if (auto v = e.get("l")) CHECK(std::stoull(*v) == oracle::l(t));
    if (auto v = e.get("gminus")) CHECK(std::stoull(*v) == oracle::count(oracle::g_minus(t)));
  }
}

TEST_CASE("shipped corpus: every suite passes, independent of job count") {
  const auto entries = testing::corpus();
  const auto suites = resolve_suites({"all"});
  RunConfig one;
  RunConfig four;
  four.jobs = 4;
  const auto a = run_suites(entries, suites, one);
  const auto b = run_suites(entries, suites, four);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() > entries.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CAPTURE(a[i].suite);
    CAPTURE(a[i].instance);
    CHECK(a[i].passed);
    CHECK(a[i].suite == b[i].suite);
    CHECK(a[i].instance == b[i].instance);
    CHECK(a[i].details.size() == b[i].details.size());
  }
}

TEST_CASE("a wrong expectation fails its suite") {
  const auto e = parse_corpus("D(30) ; eta=3 ; n5.0.eta_q=1\n");
  const auto reports = run_entry(e[0], {"values", "quot"});
  REQUIRE(reports.size() == 2);
  CHECK_FALSE(reports[0].passed);
  CHECK_FALSE(reports[1].passed);
}

TEST_CASE("resolve_suites") {
  CHECK(resolve_suites({"all"}) == suite_names());
  CHECK(resolve_suites({"quot", "values", "quot"}) == std::vector<std::string>{"values", "quot"});
  try {
    resolve_suites({"nope"});
    FAIL("expected UnknownSuite");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSuite);
  }
}
