#include "maxcyc/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "maxcyc/cyclic.hpp"
#include "maxcyc/errors.hpp"
#include "maxcyc/perm_core.hpp"

namespace maxcyc {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

// G/N seen through element ids of G. For trivial N the view is G itself.
struct QuotView {
  Group group;
  std::vector<ElemId> projection;   // G id -> quotient id
  std::vector<ElementSet> cosets;   // one per quotient point
  std::vector<ElemId> reps;         // least G id of each coset
};

QuotView make_view(const Group& g, const ElementSet& n) {
  if (n.size() == 1) {
    QuotView v{g, {}, {}, {}};
    v.projection.resize(g.order());
    std::iota(v.projection.begin(), v.projection.end(), ElemId{0});
    for (ElemId x = 0; x < g.order(); ++x) {
      ElementSet c(g.order());
      c.insert(x);
      v.cosets.push_back(std::move(c));
      v.reps.push_back(x);
    }
    return v;
  }
  Quotient q = quotient_by_set(g, n);
  QuotView v{q.group, std::move(q.projection), std::move(q.table.cosets), {}};
  for (const auto& c : v.cosets) v.reps.push_back(c.to_vector().front());
  return v;
}

void require_normal(const Group& g, const ElementSet& n) {
  if (!is_normal_set(g, n)) fail(ErrorCode::NotNormal, "subgroup is not normal in the group");
}

ElementSet embed_normal(const Group& g, const Group& n) {
  ElementSet s = g.embed(n);
  require_normal(g, s);
  return s;
}

bool all_prime_orders(const Group& g) {
  for (ElemId x = 1; x < g.order(); ++x)
    if (!is_prime(g.elem_order(x))) return false;
  return true;
}

bool all_prime_power_orders(const Group& g) {
  for (ElemId x = 0; x < g.order(); ++x)
    if (!is_prime_power(g.elem_order(x))) return false;
  return true;
}

std::uint64_t log_base(std::uint64_t n, std::uint64_t p) {
  std::uint64_t k = 0;
  while (n > 1) {
    n /= p;
    ++k;
  }
  return k;
}

// p-part of n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

void require_noncyclic_p_group(const Group& g) {
  if (p_group_prime(g) == 0) fail(ErrorCode::NotPGroup, "group is not a p-group");
  if (is_cyclic(g)) fail(ErrorCode::CyclicGroup, "group is cyclic");
}

}  // namespace

void VerifyReport::add(std::string name, std::string expected, std::string actual, bool ok) {
  details.push_back({std::move(name), std::move(expected), std::move(actual), ok});
  passed = passed && ok;
}

void VerifyReport::require(std::string name, bool ok) {
  add(std::move(name), "true", yes_no(ok), ok);
}

void VerifyReport::expect_eq(std::string name, std::uint64_t expected, std::uint64_t actual) {
  add(std::move(name), std::to_string(expected), std::to_string(actual), expected == actual);
}

void VerifyReport::note(std::string name, std::string value) {
  add(std::move(name), "-", std::move(value), true);
}

void VerifyReport::merge(const VerifyReport& other, const std::string& prefix) {
  for (const auto& d : other.details)
    add(prefix + d.name, d.expected, d.actual, d.passed);
}

bool QuotCheckReport::consistent() const {
  if (eta_Q > eta_G) return false;
  if (equal != (cond_a && cond_b && cond_c)) return false;
  if ((equal && gminus_coset_union) != all_cosets_conjugate) return false;
  if (pgroup_union && !*pgroup_union) return false;
  if (product_absorbs && !*product_absorbs) return false;
  if (image_matches && !*image_matches) return false;
  return true;
}

std::string to_string(const PrimeOrderClass& c) {
  switch (c.kind) {
    case PrimeOrderKind::ExponentP: return "exp-p(" + std::to_string(c.p) + ")";
    case PrimeOrderKind::FrobeniusPQ:
      return "frobenius(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
    case PrimeOrderKind::AlternatingFive: return "a5";
    case PrimeOrderKind::NotAllPrimeOrder: return "none";
  }
  return "none";
}

std::size_t GKGraph::components() const {
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  auto pos = [&](std::uint64_t p) {
    return static_cast<std::size_t>(std::lower_bound(vertices.begin(), vertices.end(), p) -
                                    vertices.begin());
  };
  std::size_t count = vertices.size();
  for (auto [a, b] : edges) {
    std::size_t ra = find(pos(a)), rb = find(pos(b));
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

std::uint64_t p_group_prime(const Group& g) { return prime_power_base(g.order()); }

std::size_t quotient_eta(const Group& g, const ElementSet& n) {
  if (n.size() == 1) return CyclicStructure(g).eta();
  return CyclicStructure(quotient_by_set(g, n).group).eta();
}

std::uint64_t coset_order(const Group& g, ElemId x, const ElementSet& n) {
  std::uint64_t k = 1;
  for (ElemId y = x; !n.contains(y); y = g.mul(y, x)) ++k;
  return k;
}

QuotCheckReport check_quot_conditions(const Group& g, const Group& n) {
  const ElementSet ns = embed_normal(g, n);
  if (ns.size() == g.order()) fail(ErrorCode::NotProper, "normal subgroup is not proper");

  const CyclicStructure cs(g);
  const ElementSet& gm = cs.g_minus();
  const QuotView q = make_view(g, ns);
  const CyclicStructure qs(q.group);

  QuotCheckReport r;
  r.eta_G = cs.eta();
  r.eta_Q = qs.eta();
  r.equal = r.eta_G == r.eta_Q;

  r.cond_a = ns.is_subset_of(gm);
  if (!r.cond_a) {
    ns.for_each([&](ElemId x) {
      if (!r.witnesses.cond_a && !gm.contains(x)) r.witnesses.cond_a = g.element(x);
    });
  }

  r.cond_b = true;
  r.gminus_coset_union = true;
  for (std::size_t c = 0; c < q.cosets.size(); ++c) {
    const ElementSet& coset = q.cosets[c];
    const bool inside = coset.is_subset_of(gm);
    const bool meets = !(coset & gm).empty();
    const bool q_minus = qs.g_minus().contains(q.projection[q.reps[c]]);
    if (inside != q_minus) {
      if (r.cond_b) r.witnesses.cond_b = g.element(q.reps[c]);
      r.cond_b = false;
    }
    if (meets && !inside) {
      if (r.gminus_coset_union) r.witnesses.coset_union = g.element(q.reps[c]);
      r.gminus_coset_union = false;
    }
  }

  // y is conjugate to a generator of <x> iff <y> and <x> are conjugate.
  r.cond_c = true;
  r.all_cosets_conjugate = true;
  const auto members = ns.to_vector();
  for (ElemId x = 0; x < g.order(); ++x) {
    if (gm.contains(x)) continue;
    const std::size_t orbit = cs.orbit_of(cs.cyclic_of(x));
    for (ElemId m : members) {
      const ElemId y = g.mul(x, m);
      const bool conj = cs.orbit_of(cs.cyclic_of(y)) == orbit;
      if (conj) continue;
      r.all_cosets_conjugate = false;
      if (!gm.contains(y)) {
        if (r.cond_c) r.witnesses.cond_c = g.element(y);
        r.cond_c = false;
      }
    }
  }

  if (r.equal && p_group_prime(g) != 0) r.pgroup_union = r.gminus_coset_union;
  if (r.equal && r.gminus_coset_union) {
    r.product_absorbs = product_set(g, gm, ns) == gm;
    ElementSet image(q.group.order());
    gm.for_each([&](ElemId x) { image.insert(q.projection[x]); });
    r.image_matches = image == qs.g_minus();
  }
  return r;
}

XSubgroup compute_X(const Group& g) {
  require_noncyclic_p_group(g);
  const std::size_t eta_g = CyclicStructure(g).eta();
  ElementSet x(g.order());
  x.insert(Group::identity);
  std::size_t qualifying = 0;
  for (const auto& m : normal_subgroup_sets(g)) {
    if (m.size() == g.order()) continue;
    if (quotient_eta(g, m) != eta_g) continue;
    ++qualifying;
    x = closure_set(g, x | m);
  }
  Group sub = g.subgroup(x);
  const bool cyclic = is_cyclic(sub);
  return XSubgroup{std::move(sub), x, eta_g, quotient_eta(g, x), qualifying, cyclic};
}

PrimeOrderClass classify_prime_order_group(const Group& g) {
  if (g.order() == 1) fail(ErrorCode::InvalidArgument, "trivial group has no prime-order elements");
  PrimeOrderClass c;
  if (!all_prime_orders(g)) return c;
  if (std::uint64_t p = p_group_prime(g)) {
    c.kind = PrimeOrderKind::ExponentP;
    c.p = p;
    return c;
  }
  if (is_simple_nonabelian_60(g)) {
    c.kind = PrimeOrderKind::AlternatingFive;
    return c;
  }
  const auto primes = prime_factors(g.order());
  if (primes.size() == 2) {
    for (std::size_t i = 0; i < 2; ++i) {
      const std::uint64_t p = primes[i], q = primes[1 - i];
      if (g.order() / p_part(g.order(), p) != q) continue;
      ElementSet kernel(g.order());
      for (ElemId x = 0; x < g.order(); ++x)
        if (x == Group::identity || g.elem_order(x) == p) kernel.insert(x);
      if (kernel.size() != p_part(g.order(), p)) continue;
      if (!(closure_set(g, kernel) == kernel) || !is_normal_set(g, kernel)) continue;
      bool fixed_point_free = true;
      for (ElemId y = 0; y < g.order() && fixed_point_free; ++y) {
        if (g.elem_order(y) != q) continue;
        kernel.for_each([&](ElemId x) {
          if (x != Group::identity && g.conj(x, y) == x) fixed_point_free = false;
        });
      }
      if (!fixed_point_free) continue;
      c.kind = PrimeOrderKind::FrobeniusPQ;
      c.p = p;
      c.q = q;
      return c;
    }
  }
  fail(ErrorCode::ClassificationFailed,
       "group with all elements of prime order matches no known structure");
}

GKGraph gk_graph(const Group& g) {
  GKGraph gr;
  gr.vertices = prime_factors(g.order());
  std::vector<std::uint64_t> seen;
  for (ElemId x = 0; x < g.order(); ++x) seen.push_back(g.elem_order(x));
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (std::uint64_t o : seen) {
    const auto ps = prime_factors(o);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) gr.edges.emplace_back(ps[i], ps[j]);
  }
  std::sort(gr.edges.begin(), gr.edges.end());
  gr.edges.erase(std::unique(gr.edges.begin(), gr.edges.end()), gr.edges.end());
  return gr;
}

VerifyReport check_first_main(const Group& g) {
  VerifyReport r;
  r.suite = "first-main";
  const CyclicStructure cs(g);
  const ElementSet h = closure_set(g, cs.g_minus());
  r.note("gminus_closure_order", std::to_string(h.size()));
  if (h.size() == g.order()) {
    r.note("vacuous", "closure of G^- is G");
    return r;
  }
  const bool normal = is_normal_set(g, h);
  r.require("gminus_closure_normal", normal);
  if (!normal) return r;
  const Group quotient = quotient_by_set(g, h).group;
  try {
    const PrimeOrderClass c = classify_prime_order_group(quotient);
    r.add("quotient_class", "exp-p|frobenius|a5", to_string(c),
          c.kind != PrimeOrderKind::NotAllPrimeOrder);
    if (c.kind == PrimeOrderKind::ExponentP) r.note("quotient_abelian", yes_no(quotient.is_abelian()));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ClassificationFailed) throw;
    r.add("quotient_class", "exp-p|frobenius|a5", "classification-failed", false);
  }
  return r;
}

VerifyReport check_gminus_containment(const Group& g, const Group& n) {
  VerifyReport r;
  r.suite = "gminus-containment";
  const ElementSet ns = embed_normal(g, n);
  const CyclicStructure cs(g);
  const bool lhs = cs.g_minus().is_subset_of(ns);

  bool outside_prime_power = true;
  bool quotient_prime = true;
  bool quotient_exp_p = true;
  std::uint64_t index = g.order() / ns.size();
  const std::uint64_t index_prime = is_prime(index) ? index : 0;
  bool outside_index_power = true;
  const std::uint64_t p = p_group_prime(g);
  for (ElemId x = 0; x < g.order(); ++x) {
    if (ns.contains(x)) continue;
    const std::uint64_t o = g.elem_order(x);
    outside_prime_power = outside_prime_power && is_prime_power(o);
    const std::uint64_t co = coset_order(g, x, ns);
    quotient_prime = quotient_prime && is_prime(co);
    quotient_exp_p = quotient_exp_p && p != 0 && co == p;
    if (index_prime) outside_index_power = outside_index_power && prime_power_base(o) == index_prime;
  }
  const bool rhs = outside_prime_power && quotient_prime;
  r.note("gminus_in_N", yes_no(lhs));
  r.add("part1_iff", yes_no(lhs), yes_no(rhs), lhs == rhs);
  if (index_prime) r.add("part2_iff", yes_no(lhs), yes_no(outside_index_power), lhs == outside_index_power);
  if (p != 0 && quotient_exp_p && ns.size() < g.order()) r.require("part3_contained", lhs);
  if (lhs && ns.size() < g.order()) {
    const Group quotient = quotient_by_set(g, ns).group;
    try {
      const PrimeOrderClass c = classify_prime_order_group(quotient);
      r.add("quotient_class", "exp-p|frobenius|a5", to_string(c),
            c.kind != PrimeOrderKind::NotAllPrimeOrder);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ClassificationFailed) throw;
      r.add("quotient_class", "exp-p|frobenius|a5", "classification-failed", false);
    }
  }
  return r;
}

VerifyReport check_gminus_subgroup_lemma(const Group& g) {
  VerifyReport r;
  r.suite = "gminus-subgroup";
  const ElementSet gm = CyclicStructure(g).g_minus();
  const bool subgroup = gm.contains(Group::identity) && closure_set(g, gm) == gm;
  r.note("gminus_subgroup", yes_no(subgroup));
  if (subgroup) r.require("prime_power_orders", all_prime_power_orders(g));
  return r;
}

VerifyReport check_pgrp_lemma(const Group& g) {
  VerifyReport r;
  r.suite = "pgrp-lemma";
  const CyclicStructure cs(g);
  r.require("scan_equals_powers", cs.g_minus() == cs.g_minus_via_powers());
  if (std::uint64_t p = p_group_prime(g)) r.require("equals_p_powers", cs.g_minus() == cs.power_set(p));
  return r;
}

VerifyReport check_gk_graph(const Group& g) {
  VerifyReport r;
  r.suite = "gk-graph";
  const GKGraph gr = gk_graph(g);
  const bool prime_power = all_prime_power_orders(g);
  r.add("no_edges_iff_prime_power_orders", yes_no(prime_power), yes_no(gr.edges.empty()),
        prime_power == gr.edges.empty());
  if (prime_power && gr.vertices.size() == 2 && is_solvable(g))
    r.expect_eq("components", 2, gr.components());
  return r;
}

VerifyReport check_dirproduct_laws(const Group& h, const Group& k) {
  VerifyReport r;
  r.suite = "dirproduct";
  const Group g = direct_product(h, k);
  const std::size_t eh = CyclicStructure(h).eta(), ek = CyclicStructure(k).eta();
  const std::size_t eg = CyclicStructure(g).eta();
  auto ge = [&](const std::string& name, std::size_t lhs, std::size_t rhs) {
    r.add(name, ">= " + std::to_string(rhs), std::to_string(lhs), lhs >= rhs);
  };
  ge("i", eg, eh * ek);
  if (std::gcd(h.order(), k.order()) == 1) r.expect_eq("ii", eh * ek, eg);

  auto clause_iii = [&](const Group& a, std::size_t ea, const Group& b, std::size_t eb,
                        const std::string& name) {
    const std::uint64_t p = p_group_prime(a);
    if (p == 0 || b.order() % p != 0) return;
    const std::size_t ep = eta_p(b, p);
    ge(name, eg, ea * eb + ep);
    r.require(name + "_eta_p_positive", ep >= 1);
  };
  clause_iii(h, eh, k, ek, "iii");
  clause_iii(k, ek, h, eh, "iii_swapped");

  auto clause_iv = [&](const Group& a, const Group& b, std::size_t eb, const std::string& name) {
    if (a.order() == 1 || b.order() == 1 || std::gcd(a.order(), b.order()) == 1) return;
    if (!is_nilpotent(a)) return;
    r.add(name, "> " + std::to_string(eb), std::to_string(eg), eg > eb);
  };
  clause_iv(h, k, ek, "iv");
  clause_iv(k, h, eh, "iv_swapped");

  const std::uint64_t ph = p_group_prime(h);
  if (ph != 0 && ph == p_group_prime(k)) ge("v", eg, eh * ek + eh + ek);
  r.note("eta", std::to_string(eh) + "," + std::to_string(ek) + "," + std::to_string(eg));
  return r;
}

bool is_frobenius_pair(const Group& g, const Group& n, const Group& h) {
  ElementSet nset(g.order()), hset(g.order());
  try {
    nset = g.embed(n);
    hset = g.embed(h);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSubgroup) throw;
    return false;
  }
  if (!is_normal_set(g, nset)) return false;
  if (hset.size() <= 1 || hset.size() >= g.order()) return false;
  if (nset.size() * hset.size() != g.order()) return false;
  if ((nset & hset).size() != 1) return false;
  // G = HN, so conjugates of H are H^m for m in N; H^m = H only for m = 1.
  const auto hs = hset.to_vector();
  bool ok = true;
  nset.for_each([&](ElemId m) {
    if (!ok || m == Group::identity) return;
    for (ElemId x : hs)
      if (x != Group::identity && hset.contains(g.conj(x, m))) {
        ok = false;
        return;
      }
  });
  return ok;
}

VerifyReport check_frobenius_eta(const Group& g, const Group& n, const Group& h) {
  if (!is_frobenius_pair(g, n, h)) fail(ErrorCode::NotFrobenius, "not a Frobenius kernel and complement");
  VerifyReport r;
  r.suite = "frobenius";
  const std::size_t eg = CyclicStructure(g).eta();
  const std::size_t es = eta_star(g, n);
  const std::size_t eh = CyclicStructure(h).eta();
  r.note("eta_star", std::to_string(es));
  r.note("eta_h", std::to_string(eh));
  r.expect_eq("eta_equals_sum", es + eh, eg);
  return r;
}

VerifyReport check_centre_bounds(const Group& g, const Group& n) {
  VerifyReport r;
  r.suite = "centre";
  const ElementSet ns = embed_normal(g, n);
  const std::size_t eg = CyclicStructure(g).eta();
  const std::size_t es = eta_star(g, n);
  const std::size_t en = CyclicStructure(n).eta();
  r.add("eta_ge_eta_star", ">= " + std::to_string(es), std::to_string(eg), eg >= es);
  r.note("gap", std::to_string(eg - std::min(eg, es)));
  if (ns.is_subset_of(center_set(g)))
    r.add("central", ">= " + std::to_string(en), std::to_string(eg), eg >= en);
  const std::size_t k = g.order() / n.order();
  r.add("index", ">= " + std::to_string(en) + "/" + std::to_string(k), std::to_string(eg),
        k * eg >= en);
  return r;
}

VerifyReport check_derived_criterion(const Group& g, const Group& n) {
  VerifyReport r;
  r.suite = "derived";
  const ElementSet ns = embed_normal(g, n);
  const std::size_t eg = CyclicStructure(g).eta();
  const ElementSet d = g.embed(derived_subgroup(g));
  const bool in_derived = ns.is_subset_of(d);

  // G/G' is abelian, so its Sylow p-subgroup is cyclic iff some coset has order |G/G'|_p.
  const std::uint64_t ab = g.order() / d.size();
  bool hypothesis = true;
  for (std::uint64_t p : prime_factors(ab)) {
    std::uint64_t best = 1;
    for (ElemId x = 0; x < g.order(); ++x) best = std::max(best, p_part(coset_order(g, x, d), p));
    if (best == p_part(ab, p)) hypothesis = false;
  }
  r.note("derived_order", std::to_string(d.size()));
  r.note("hypothesis", yes_no(hypothesis));
  r.note("in_derived", yes_no(in_derived));
  if (ns.size() == g.order() || quotient_eta(g, ns) != eg) {
    r.note("vacuous", "eta(G/N) != eta(G)");
    return r;
  }
  if (hypothesis) r.require("N_in_derived", in_derived);
  return r;
}

VerifyReport check_exp_bound(const Group& g) {
  const std::uint64_t p = p_group_prime(g);
  if (p == 0) fail(ErrorCode::NotExponentP, "group is not a p-group");
  for (ElemId x = 1; x < g.order(); ++x)
    if (g.elem_order(x) != p) fail(ErrorCode::NotExponentP, "group does not have exponent p");
  const std::uint64_t n = log_base(g.order(), p);
  if (n < 2) fail(ErrorCode::HypothesisFailed, "order must be at least p^2");
  VerifyReport r;
  r.suite = "exp-bound";
  const std::size_t eg = CyclicStructure(g).eta();
  r.add("bound", ">= " + std::to_string(n + p - 1), std::to_string(eg), eg >= n + p - 1);
  if (n == 2) r.expect_eq("order_p2", p + 1, eg);
  return r;
}

VerifyReport check_eitheror(const Group& g, const Group& n, const Group& m) {
  require_noncyclic_p_group(g);
  const ElementSet ns = embed_normal(g, n);
  const ElementSet ms = embed_normal(g, m);
  const CyclicStructure cs(g);
  if (ns.size() == 1) fail(ErrorCode::HypothesisFailed, "N must be nontrivial");
  if (ns.size() == g.order() || quotient_eta(g, ns) != cs.eta())
    fail(ErrorCode::HypothesisFailed, "eta(G/N) != eta(G)");
  VerifyReport r;
  r.suite = "eitheror";
  const bool n_in_m = ns.is_subset_of(ms);
  const bool m_in_gminus = ms.is_subset_of(cs.g_minus());
  r.add("either_or", "true", "N<=M:" + yes_no(n_in_m) + " M<=G^-:" + yes_no(m_in_gminus),
        n_in_m || m_in_gminus);
  for (std::size_t i : cs.maximal_indices()) {
    const ElementSet& c = cs.subgroups()[i].elements;
    if (!is_normal_set(g, c)) continue;
    r.require("N_in_normal_maximal_cyclic_" + std::to_string(c.size()), ns.is_subset_of(c));
  }
  return r;
}

VerifyReport check_l_relation(const Group& g) {
  if (g.order() == 1) fail(ErrorCode::InvalidArgument, "group must be nontrivial");
  VerifyReport r;
  r.suite = "l-relation";
  const CyclicStructure cs(g);
  const bool prime = all_prime_orders(g);
  const bool equality = cs.eta() + 1 == cs.l();
  r.note("eta", std::to_string(cs.eta()));
  r.note("l", std::to_string(cs.l()));
  r.add("eta_eq_l_minus_1_iff_prime_orders", yes_no(prime), yes_no(equality), prime == equality);
  return r;
}

std::size_t join_quotient_eta(const Group& g, const Group& n, const Group& m) {
  const ElementSet ns = embed_normal(g, n);
  const ElementSet ms = embed_normal(g, m);
  return quotient_eta(g, product_set(g, ns, ms));
}

VerifyReport check_quotient_join(const Group& g, const Group& n, const Group& m) {
  if (p_group_prime(g) == 0) fail(ErrorCode::NotPGroup, "group is not a p-group");
  if (is_cyclic(g)) fail(ErrorCode::HypothesisFailed, "group is cyclic");
  const ElementSet ns = embed_normal(g, n);
  const ElementSet ms = embed_normal(g, m);
  const std::size_t eg = CyclicStructure(g).eta();
  for (const ElementSet* s : {&ns, &ms})
    if (s->size() == g.order() || quotient_eta(g, *s) != eg)
      fail(ErrorCode::HypothesisFailed, "eta(G/N) and eta(G/M) must equal eta(G)");
  VerifyReport r;
  r.suite = "products-join";
  r.expect_eq("eta_join", eg, quotient_eta(g, product_set(g, ns, ms)));
  return r;
}

}  // namespace maxcyc
