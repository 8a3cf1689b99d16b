#include <doctest.h>

#include <cstring>
#include <string>

#include "maxcyc/maxcyc.h"

namespace {

struct Handle {
  maxcyc_group* g = nullptr;
  ~Handle() { maxcyc_group_free(g); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  maxcyc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("group lifecycle and invariants") {
  Handle h;
  REQUIRE(maxcyc_group_from_spec("S(3) x D(10)", nullptr, &h.g) == MAXCYC_OK);
  size_t v = 0;
  CHECK(maxcyc_group_order(h.g, &v) == MAXCYC_OK);
  CHECK(v == 60);
  CHECK(maxcyc_group_degree(h.g, &v) == MAXCYC_OK);
  CHECK(v == 8);
  CHECK(maxcyc_eta(h.g, &v) == MAXCYC_OK);
  CHECK(v == 4);
  CHECK(maxcyc_l(h.g, &v) == MAXCYC_OK);
  CHECK(v > 4);
  CHECK(maxcyc_gminus_size(h.g, &v) == MAXCYC_OK);
  CHECK(maxcyc_normal_count(h.g, &v) == MAXCYC_OK);
  CHECK(v > 2);
  CHECK(std::strlen(maxcyc_last_error()) == 0);
}

TEST_CASE("normals and quotients") {
  Handle h;
  REQUIRE(maxcyc_group_from_spec("D(30)", nullptr, &h.g) == MAXCYC_OK);
  Handle n;
  REQUIRE(maxcyc_normal(h.g, 5, 0, &n.g) == MAXCYC_OK);
  size_t v = 0;
  CHECK(maxcyc_group_order(n.g, &v) == MAXCYC_OK);
  CHECK(v == 5);
  CHECK(maxcyc_quotient_eta(h.g, 5, 0, &v) == MAXCYC_OK);
  CHECK(v == 2);
  CHECK(maxcyc_quotient_eta(h.g, 15, 0, &v) == MAXCYC_OK);
  CHECK(v == 1);
  Handle bad;
  CHECK(maxcyc_normal(h.g, 7, 0, &bad.g) == MAXCYC_E_NO_SUCH_NORMAL);
  CHECK(bad.g == nullptr);
  CHECK(std::strlen(maxcyc_last_error()) > 0);
}

TEST_CASE("error statuses") {
  Handle h;
  CHECK(maxcyc_group_from_spec("C(6", nullptr, &h.g) == MAXCYC_E_PARSE);
  CHECK(std::string(maxcyc_last_error()).find("3") != std::string::npos);
  CHECK(maxcyc_group_from_spec("EA(4,2)", nullptr, &h.g) == MAXCYC_E_ARITY);
  CHECK(maxcyc_group_from_spec("D(3)", nullptr, &h.g) == MAXCYC_E_ARITY);
  maxcyc_limits lim = maxcyc_default_limits();
  CHECK(lim.order_cap == 20000);
  CHECK(lim.degree_cap == 128);
  lim.order_cap = 50;
  CHECK(maxcyc_group_from_spec("S(5)", &lim, &h.g) == MAXCYC_E_CAP_EXCEEDED);
  lim.order_cap = 0;
  CHECK(maxcyc_group_from_spec("C(2)", &lim, &h.g) == MAXCYC_E_INVALID_ARGUMENT);
  CHECK(maxcyc_group_from_spec(nullptr, nullptr, &h.g) == MAXCYC_E_INVALID_ARGUMENT);
  CHECK(maxcyc_group_from_spec("C(2)", nullptr, nullptr) == MAXCYC_E_INVALID_ARGUMENT);
  size_t v = 0;
  CHECK(maxcyc_eta(nullptr, &v) == MAXCYC_E_INVALID_ARGUMENT);
  CHECK(h.g == nullptr);
  CHECK(std::string(maxcyc_status_name(MAXCYC_E_NOT_P_GROUP)) == "NotPGroup");
  CHECK(std::string(maxcyc_status_name(MAXCYC_OK)) == "Ok");
}

TEST_CASE("renderers") {
  Handle h;
  REQUIRE(maxcyc_group_from_spec("Q(8)", nullptr, &h.g) == MAXCYC_OK);
  char* out = nullptr;
  REQUIRE(maxcyc_render_xsub(h.g, MAXCYC_FORMAT_JSON, &out) == MAXCYC_OK);
  const std::string x = take(out);
  CHECK(x.find("\"order\": 2") != std::string::npos);
  REQUIRE(maxcyc_render_eta(h.g, MAXCYC_FORMAT_TEXT, &out) == MAXCYC_OK);
  CHECK(take(out).find("eta 3") != std::string::npos);
  REQUIRE(maxcyc_render_normals(h.g, MAXCYC_FORMAT_JSON, &out) == MAXCYC_OK);
  CHECK(!take(out).empty());
  REQUIRE(maxcyc_render_quot(h.g, 2, 0, MAXCYC_FORMAT_JSON, &out) == MAXCYC_OK);
  CHECK(take(out).find("\"equal\": true") != std::string::npos);
  REQUIRE(maxcyc_render_gminus(h.g, MAXCYC_FORMAT_JSON, &out) == MAXCYC_OK);
  take(out);
  REQUIRE(maxcyc_render_gkgraph(h.g, MAXCYC_FORMAT_JSON, &out) == MAXCYC_OK);
  take(out);
  out = nullptr;
  CHECK(maxcyc_render_quot(h.g, 8, 0, MAXCYC_FORMAT_JSON, &out) == MAXCYC_E_NOT_PROPER);
  CHECK(out == nullptr);
  Handle s3;
  REQUIRE(maxcyc_group_from_spec("S(3)", nullptr, &s3.g) == MAXCYC_OK);
  CHECK(maxcyc_render_xsub(s3.g, MAXCYC_FORMAT_TEXT, &out) == MAXCYC_E_NOT_P_GROUP);
}

TEST_CASE("verify through the C API") {
  char* out = nullptr;
  int ok = 0;
  REQUIRE(maxcyc_verify(MAXCYC_CORPUS, "values,quot", nullptr, 2, MAXCYC_FORMAT_TEXT, &out, &ok) ==
          MAXCYC_OK);
  CHECK(ok == 1);
  CHECK(take(out).find("0 failed") != std::string::npos);
  CHECK(maxcyc_verify(MAXCYC_CORPUS, "values,bogus", nullptr, 1, MAXCYC_FORMAT_TEXT, &out, &ok) ==
        MAXCYC_E_UNKNOWN_SUITE);
  CHECK(maxcyc_verify("/nonexistent", "all", nullptr, 1, MAXCYC_FORMAT_TEXT, &out, &ok) == MAXCYC_E_IO);
}
