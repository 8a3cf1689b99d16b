#include <doctest.h>

#include <functional>
#include <random>

#include "maxcyc/constructors.hpp"
#include "maxcyc/errors.hpp"
#include "maxcyc/spec.hpp"

using namespace maxcyc;

namespace {

ErrorCode code_of(const char* text) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("parse examples") {
  const GroupSpec p = parse_spec("S(3) x D(10)");
  REQUIRE(p.kind == SpecKind::DirectProduct);
  CHECK(p.factors[0].kind == SpecKind::Symmetric);
  CHECK(p.factors[0].params == std::vector<std::uint64_t>{3});
  CHECK(p.factors[1].kind == SpecKind::Dihedral);
  CHECK(p.factors[1].params == std::vector<std::uint64_t>{10});

  const GroupSpec a = parse_spec("AGL1(9,2)");
  CHECK(a.kind == SpecKind::FrobeniusAGL1);
  CHECK(a.params == std::vector<std::uint64_t>{9, 2});
}

TEST_CASE("parse error carries offset and expected set") {
  try {
    parse_spec("C(6");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.position() == 3);
    CHECK_FALSE(e.expected().empty());
  }
  try {
    parse_spec("S(3) x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }
  try {
    parse_spec("Foo(3)");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 0);
  }
}

TEST_CASE("arity and parameter errors") {
  CHECK(code_of("C(2,3)") == ErrorCode::ParseError);
  CHECK(code_of("D(7)") == ErrorCode::ArityError);
  CHECK(code_of("EA(4,2)") == ErrorCode::ArityError);
  CHECK(code_of("Heis(2)") == ErrorCode::ArityError);
  CHECK(code_of("Q(12)") == ErrorCode::ArityError);
  CHECK(code_of("AGL1(7,4)") == ErrorCode::ArityError);
  CHECK(code_of("AGL1(8,7)") == ErrorCode::ArityError);
  CHECK(code_of("W(4)") == ErrorCode::ArityError);
  CHECK(code_of("Perm(3; (0 3))") == ErrorCode::ArityError);
  CHECK(code_of("Perm(3; (0 1 0))") == ErrorCode::ArityError);
}

TEST_CASE("whitespace, products and grouping") {
  CHECK(parse_spec("  C(2)xC(3) ") == parse_spec("C(2) x C(3)"));
  const GroupSpec left = parse_spec("C(2) x C(3) x C(5)");
  REQUIRE(left.kind == SpecKind::DirectProduct);
  CHECK(left.factors[0].kind == SpecKind::DirectProduct);
  const GroupSpec right = parse_spec("C(2) x (C(3) x C(5))");
  CHECK(right.factors[1].kind == SpecKind::DirectProduct);
  CHECK(parse_spec("EA(2^1,3)") == parse_spec("EA(2,3)"));
  CHECK(parse_spec("AGL1(3^2,2)") == parse_spec("AGL1(9,2)"));
}

TEST_CASE("explicit generators") {
  const GroupSpec s = parse_spec("Perm(4; (0 1 2)(3), (0,1))");
  CHECK(s.kind == SpecKind::Explicit);
  CHECK(s.degree == 4);
  CHECK(realize(s).order() == 6);
  CHECK(realize("Perm(4;)").order() == 1);
}

TEST_CASE("render round trip") {
  for (const char* text :
       {"S(3) x D(10)", "AGL1(9,2)", "C(2) x (C(3) x C(5))", "Perm(4; (0 1 2), (0 1))", "Dic12",
        "SG72_50 x M16", "Heis(5)", "W(3)", "Q(16)", "EA(2,4) x A(5)", "Perm(4;)"}) {
    CAPTURE(text);
    const GroupSpec s = parse_spec(text);
    CHECK(parse_spec(render(s)) == s);
  }
  CHECK(render(parse_spec("S(3)xD(10)")) == "S(3) x D(10)");
  CHECK(render(parse_spec("Perm(4; (0,1,2), (0 1))")) == "Perm(4; (0 1 2), (0 1))");
}

TEST_CASE("render round trip on random products") {
  std::mt19937 rng(12345);
  const std::vector<std::string> atoms = {"C(4)", "D(8)", "S(3)", "A(4)", "EA(3,2)", "Q(8)",
                                          "W(2)", "AGL1(5,4)", "M16", "Heis(3)", "Perm(3; (0 1))"};
  for (int trial = 0; trial < 200; ++trial) {
    std::function<GroupSpec(int)> build = [&](int depth) {
      if (depth == 0 || rng() % 3 == 0) return parse_spec(atoms[rng() % atoms.size()]);
      return make_product(build(depth - 1), build(depth - 1));
    };
    const GroupSpec s = build(3);
    CHECK(parse_spec(render(s)) == s);
  }
}
