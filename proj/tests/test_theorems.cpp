#include <doctest.h>

#include "maxcyc/constructors.hpp"
#include "maxcyc/cyclic.hpp"
#include "maxcyc/errors.hpp"
#include "maxcyc/perm_core.hpp"
#include "maxcyc/theorems.hpp"
#include "support.hpp"

using namespace maxcyc;

namespace {

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("check_quot_conditions: D30 with N of order 5") {
  const Group g = realize("D(30)");
  const QuotCheckReport r = check_quot_conditions(g, named_normal(g, 5, 0));
  CHECK(r.eta_G == 2);
  CHECK(r.eta_Q == 2);
  CHECK(r.equal);
  CHECK(r.cond_a);
  CHECK(r.cond_b);
  CHECK(r.cond_c);
  CHECK_FALSE(r.gminus_coset_union);
  CHECK(r.witnesses.coset_union.has_value());
  CHECK_FALSE(r.all_cosets_conjugate);
  CHECK(r.consistent());
}

TEST_CASE("check_quot_conditions: D30 with N of order 15 fails (a) only") {
  const Group g = realize("D(30)");
  const QuotCheckReport r = check_quot_conditions(g, named_normal(g, 15, 0));
  CHECK(r.eta_Q == 1);
  CHECK_FALSE(r.equal);
  CHECK_FALSE(r.cond_a);
  REQUIRE(r.witnesses.cond_a.has_value());
  CHECK(perm_order(*r.witnesses.cond_a) == 15);
  CHECK(r.consistent());
}

TEST_CASE("check_quot_conditions: Dic12 modulo its centre") {
  const Group g = realize("Dic12");
  const QuotCheckReport r = check_quot_conditions(g, center(g));
  CHECK(r.eta_G == 2);
  CHECK(r.eta_Q == 2);
  CHECK(r.equal);
  CHECK(r.consistent());
}

TEST_CASE("check_quot_conditions: trivial kernel and p-groups") {
  const Group g = realize("SG72_50");
  const QuotCheckReport r = check_quot_conditions(g, named_normal(g, 1, 0));
  CHECK(r.equal);
  CHECK(r.cond_a);
  CHECK(r.cond_b);
  CHECK(r.cond_c);
  CHECK(r.gminus_coset_union);

  const Group q8 = realize("Q(8)");
  const QuotCheckReport z = check_quot_conditions(q8, center(q8));
  CHECK(z.equal);
  REQUIRE(z.pgroup_union.has_value());
  CHECK(*z.pgroup_union);
  REQUIRE(z.product_absorbs.has_value());
  CHECK(*z.product_absorbs);
  CHECK(*z.image_matches);

  const Group c4 = realize("C(4)");
  CHECK(check_quot_conditions(c4, named_normal(c4, 2, 0)).equal);
}

TEST_CASE("check_quot_conditions errors") {
  const Group s3 = realize("S(3)");
  CHECK(error_of([&] { check_quot_conditions(s3, s3); }) == ErrorCode::NotProper);
  CHECK(error_of([&] {
          check_quot_conditions(s3, Group::generate(3, {testing::cyc(3, {{0, 1}})}));
        }) == ErrorCode::NotNormal);
}

TEST_CASE("compute_X") {
  const XSubgroup ea = compute_X(realize("EA(3,2)"));
  CHECK(ea.subgroup.order() == 1);
  CHECK(ea.eta_group == 4);
  const Group q8 = realize("Q(8)");
  const XSubgroup xq = compute_X(q8);
  CHECK(xq.subgroup.order() == 2);
  CHECK(xq.members == q8.embed(center(q8)));
  CHECK(xq.eta_quotient == 3);
  const XSubgroup m16 = compute_X(realize("M16"));
  CHECK(m16.cyclic);
  CHECK(m16.eta_quotient == m16.eta_group);
  CHECK(error_of([] { compute_X(realize("S(3)")); }) == ErrorCode::NotPGroup);
  CHECK(error_of([] { compute_X(realize("C(9)")); }) == ErrorCode::CyclicGroup);
  CHECK(error_of([] { compute_X(realize("C(1)")); }) == ErrorCode::NotPGroup);
}

TEST_CASE("classify_prime_order_group") {
  const PrimeOrderClass h = classify_prime_order_group(realize("Heis(3)"));
  CHECK(h.kind == PrimeOrderKind::ExponentP);
  CHECK(h.p == 3);
  CHECK(classify_prime_order_group(realize("A(5)")).kind == PrimeOrderKind::AlternatingFive);
  const PrimeOrderClass f = classify_prime_order_group(realize("AGL1(3,2)"));
  CHECK(f.kind == PrimeOrderKind::FrobeniusPQ);
  CHECK(f.p == 3);
  CHECK(f.q == 2);
  const PrimeOrderClass a4 = classify_prime_order_group(realize("A(4)"));
  CHECK(a4.kind == PrimeOrderKind::FrobeniusPQ);
  CHECK(a4.p == 2);
  CHECK(a4.q == 3);
  CHECK(classify_prime_order_group(realize("C(6)")).kind == PrimeOrderKind::NotAllPrimeOrder);
  CHECK(to_string(f) == "frobenius(3,2)");
  CHECK(error_of([] { classify_prime_order_group(realize("C(1)")); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("check_first_main") {
  for (const char* s : {"A(5)", "AGL1(9,2)", "C(4)", "S(4)", "SG72_50", "C(1)"}) {
    CAPTURE(s);
    CHECK(check_first_main(realize(s)).passed);
  }
  const VerifyReport r = check_first_main(realize("AGL1(9,2)"));
  bool frob = false;
  for (const auto& d : r.details) frob = frob || d.actual == "frobenius(3,2)";
  CHECK(frob);
}

TEST_CASE("check_gminus_containment") {
  const Group d30 = realize("D(30)");
  const VerifyReport r = check_gminus_containment(d30, named_normal(d30, 15, 0));
  CHECK(r.passed);
  CHECK(check_gminus_containment(realize("Heis(3)"), center(realize("Heis(3)"))).passed);
  const Group c6 = realize("C(6)");
  CHECK(check_gminus_containment(c6, named_normal(c6, 3, 0)).passed);
  const Group s3 = realize("S(3)");
  CHECK(error_of([&] {
          check_gminus_containment(s3, Group::generate(3, {testing::cyc(3, {{0, 1}})}));
        }) == ErrorCode::NotNormal);
}

TEST_CASE("check_gminus_subgroup_lemma") {
  for (const char* s : {"AGL1(9,2)", "AGL1(5,4)", "C(6)", "SG72_50"}) CHECK(check_gminus_subgroup_lemma(realize(s)).passed);
  // AGL1(9,2): G^- is the subgroup of order 3.
  const Group g = realize("AGL1(9,2)");
  CHECK(g_minus(g) == g.embed(named_normal(g, 3, 0)));
  const Group h = realize("AGL1(5,4)");
  CHECK_FALSE(closure_set(h, g_minus(h)) == g_minus(h));
}

TEST_CASE("gk_graph") {
  const GKGraph a5 = gk_graph(realize("A(5)"));
  CHECK(a5.vertices == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(a5.edges.empty());
  CHECK(a5.components() == 3);
  const GKGraph c6 = gk_graph(realize("C(6)"));
  REQUIRE(c6.edges.size() == 1);
  CHECK(c6.edges[0] == std::pair<std::uint64_t, std::uint64_t>{2, 3});
  const GKGraph d30 = gk_graph(realize("D(30)"));
  REQUIRE(d30.edges.size() == 1);
  CHECK(d30.edges[0] == std::pair<std::uint64_t, std::uint64_t>{3, 5});
  CHECK(d30.components() == 2);
  CHECK(check_gk_graph(realize("AGL1(5,4)")).passed);
}

TEST_CASE("check_dirproduct_laws") {
  const VerifyReport r = check_dirproduct_laws(realize("S(3)"), realize("D(10)"));
  CHECK(r.passed);
  CHECK(check_dirproduct_laws(realize("C(2)"), realize("C(3)")).passed);
  CHECK(check_dirproduct_laws(realize("EA(2,1)"), realize("EA(2,1)")).passed);
  CHECK(CyclicStructure(realize("C(2) x C(2)")).eta() == 3);
  Limits l;
  l.order_cap = 100;
  CHECK(error_of([&] { check_dirproduct_laws(realize("S(4)", l), realize("S(3)", l)); }) ==
        ErrorCode::CapExceeded);
}

TEST_CASE("check_frobenius_eta") {
  for (const char* s : {"AGL1(5,4)", "AGL1(7,3)", "AGL1(5,2)", "AGL1(7,6)", "AGL1(13,4)", "AGL1(9,2)"}) {
    CAPTURE(s);
    const Group g = realize(s);
    const Group h = stabilizer(g, 0);
    const Group n = named_normal(g, g.order() / h.order(), 0);
    CHECK(check_frobenius_eta(g, n, h).passed);
  }
  const Group g = realize("AGL1(7,3)");
  const Group n = named_normal(g, 7, 0);
  CHECK(eta_star(g, n) == 1);
  CHECK(CyclicStructure(stabilizer(g, 0)).eta() == 1);
  CHECK(CyclicStructure(g).eta() == 2);

  const Group sg = realize("SG72_50");
  CHECK(error_of([&] { check_frobenius_eta(sg, named_normal(sg, 9, 0), stabilizer(sg, 0)); }) ==
        ErrorCode::NotFrobenius);
  // Not a complement at all.
  CHECK(error_of([&] { check_frobenius_eta(g, n, g); }) == ErrorCode::NotFrobenius);
}

TEST_CASE("check_centre_bounds") {
  const Group sg = realize("SG72_50");
  CHECK(check_centre_bounds(sg, named_normal(sg, 9, 0)).passed);
  const Group q8 = realize("Q(8)");
  CHECK(check_centre_bounds(q8, center(q8)).passed);
  const Group d30 = realize("D(30)");
  CHECK(check_centre_bounds(d30, named_normal(d30, 15, 0)).passed);
}

TEST_CASE("check_derived_criterion") {
  const Group dic = realize("Dic12");
  const VerifyReport r = check_derived_criterion(dic, center(dic));
  CHECK(r.passed);
  bool hyp_false = false, not_in = false;
  for (const auto& d : r.details) {
    hyp_false = hyp_false || (d.name == "hypothesis" && d.actual == "false");
    not_in = not_in || (d.name == "in_derived" && d.actual == "false");
  }
  CHECK(hyp_false);
  CHECK(not_in);
  const Group kc = realize("EA(2,2) x C(3)");
  CHECK(check_derived_criterion(kc, named_normal(kc, 3, 0)).passed);
  const Group q8 = realize("Q(8)");
  const VerifyReport z = check_derived_criterion(q8, center(q8));
  CHECK(z.passed);
  bool required = false;
  for (const auto& d : z.details) required = required || d.name == "N_in_derived";
  CHECK(required);
}

TEST_CASE("check_exp_bound") {
  CHECK(check_exp_bound(realize("EA(3,2)")).passed);
  CHECK(check_exp_bound(realize("Heis(3)")).passed);
  CHECK(check_exp_bound(realize("EA(2,3)")).passed);
  CHECK(error_of([] { check_exp_bound(realize("C(9)")); }) == ErrorCode::NotExponentP);
  CHECK(error_of([] { check_exp_bound(realize("S(3)")); }) == ErrorCode::NotExponentP);
  CHECK(error_of([] { check_exp_bound(realize("C(3)")); }) == ErrorCode::HypothesisFailed);
}

TEST_CASE("check_eitheror") {
  const Group q8 = realize("Q(8)");
  const Group z = center(q8);
  for (std::size_t i = 0; i < 3; ++i) CHECK(check_eitheror(q8, z, named_normal(q8, 4, i)).passed);
  const Group m16 = realize("M16");
  const XSubgroup x = compute_X(m16);
  for (const auto& m : normal_subgroups(m16)) CHECK(check_eitheror(m16, x.subgroup, m).passed);
  const Group ea = realize("EA(3,2)");
  CHECK(error_of([&] { check_eitheror(ea, named_normal(ea, 3, 0), ea); }) == ErrorCode::HypothesisFailed);
  CHECK(error_of([&] { check_eitheror(ea, named_normal(ea, 1, 0), ea); }) == ErrorCode::HypothesisFailed);
  const Group s3 = realize("S(3)");
  CHECK(error_of([&] { check_eitheror(s3, s3, s3); }) == ErrorCode::NotPGroup);
}

TEST_CASE("check_l_relation") {
  for (const char* s : {"A(5)", "C(6)", "Heis(3)", "SG72_50"}) CHECK(check_l_relation(realize(s)).passed);
  CHECK(error_of([] { check_l_relation(realize("C(1)")); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("check_quotient_join") {
  const Group q8 = realize("Q(8)");
  CHECK(check_quotient_join(q8, center(q8), center(q8)).passed);
  const Group d30 = realize("D(30)");
  const Group n = named_normal(d30, 5, 0), m = named_normal(d30, 3, 0);
  CHECK(error_of([&] { check_quotient_join(d30, n, m); }) == ErrorCode::NotPGroup);
  CHECK(join_quotient_eta(d30, n, m) == 1);
  const Group ea = realize("EA(3,2)");
  CHECK(error_of([&] { check_quotient_join(ea, named_normal(ea, 3, 0), named_normal(ea, 1, 0)); }) ==
        ErrorCode::HypothesisFailed);
}

TEST_CASE("VerifyReport passes iff all details pass") {
  VerifyReport r;
  r.note("info", "x");
  CHECK(r.passed);
  r.expect_eq("same", 3, 3);
  CHECK(r.passed);
  r.expect_eq("diff", 3, 4);
  CHECK_FALSE(r.passed);
  VerifyReport m;
  m.merge(r, "p:");
  CHECK_FALSE(m.passed);
  CHECK(m.details[2].name == "p:diff");
}
