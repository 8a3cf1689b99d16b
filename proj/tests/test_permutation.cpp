#include <doctest.h>

#include "maxcyc/errors.hpp"
#include "maxcyc/permutation.hpp"
#include "support.hpp"

using maxcyc::Permutation;
using testing::cyc;

TEST_CASE("perm_order") {
  CHECK(maxcyc::perm_order(Permutation(5)) == 1);
  CHECK(maxcyc::perm_order(cyc(5, {{0, 1, 2, 3, 4}})) == 5);
  CHECK(maxcyc::perm_order(cyc(5, {{0, 1}, {2, 3, 4}})) == 6);
  CHECK(maxcyc::perm_order(cyc(12, {{0, 1, 2, 3}, {4, 5, 6, 7, 8, 9}})) == 12);
}

TEST_CASE("composition acts right to left") {
  const auto a = cyc(3, {{0, 1}});
  const auto b = cyc(3, {{1, 2}});
  const auto ab = a * b;
  // (a*b)(i) = a(b(i)): 1 -> 2 -> 2, 2 -> 1 -> 0
  CHECK(ab[1] == 2);
  CHECK(ab[2] == 0);
  CHECK(ab[0] == 1);
  CHECK(a * Permutation(3) == a);
  CHECK((a * b) * a == a * (b * a));
}

TEST_CASE("inverse and powers") {
  const auto c = cyc(7, {{0, 1, 2, 3, 4}, {5, 6}});
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.pow(10).is_identity());
  CHECK(c.pow(-1) == c.inverse());
  CHECK(c.pow(3) == c * c * c);
  CHECK(c.pow(0).is_identity());
}

TEST_CASE("cycle notation is zero based") {
  CHECK(cyc(5, {{0, 1, 2}, {3, 4}}).cycle_string() == "(0 1 2)(3 4)");
  CHECK(Permutation(4).cycle_string() == "()");
  CHECK(cyc(5, {{3, 1}}).cycle_string() == "(1 3)");
}

TEST_CASE("invalid image lists are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<maxcyc::Point>{0, 0, 1}), maxcyc::Error);
  CHECK_THROWS_AS(Permutation(std::vector<maxcyc::Point>{0, 3}), maxcyc::Error);
  CHECK_THROWS_AS(cyc(3, {{0, 5}}), maxcyc::Error);
}

TEST_CASE("lexicographic order by images") {
  const auto id = Permutation(3);
  const auto t = cyc(3, {{1, 2}});
  const auto u = cyc(3, {{0, 1}});
  CHECK(id < t);
  CHECK(t < u);
}
