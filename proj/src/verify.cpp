#include "maxcyc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

#include "maxcyc/constructors.hpp"
#include "maxcyc/cyclic.hpp"
#include "maxcyc/errors.hpp"
#include "maxcyc/perm_core.hpp"

namespace maxcyc {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

struct NamedNormal {
  NormalSelector name;
  Group group;
  ElementSet members;
};

// Everything the suites share for one corpus entry, computed once.
struct EntryContext {
  const CorpusEntry& entry;
  Limits limits;
  Group g;
  CyclicStructure cs;
  std::vector<NamedNormal> normals;
  std::vector<std::size_t> quotient_etas;  // parallel to normals
  std::uint64_t p;                         // p-group prime or 0
  bool cyclic;

  EntryContext(const CorpusEntry& e, const Limits& lim)
      : entry(e), limits(lim), g(realize(e.spec, lim)), cs(g) {
    std::size_t last_order = 0, index = 0;
    for (auto& n : normal_subgroups(g)) {
      index = n.order() == last_order ? index + 1 : 0;
      last_order = n.order();
      ElementSet members = g.embed(n);
      normals.push_back({{n.order(), index}, std::move(n), std::move(members)});
    }
    for (const auto& n : normals) quotient_etas.push_back(quotient_eta(g, n.members));
    p = p_group_prime(g);
    cyclic = is_cyclic(g);
  }

  std::string prefix(const NamedNormal& n) const { return selector_name(n.name) + ":"; }
  bool proper(const NamedNormal& n) const { return n.group.order() < g.order(); }
  bool qualifies(std::size_t i) const {
    return proper(normals[i]) && quotient_etas[i] == cs.eta();
  }
  bool noncyclic_p_group() const { return p != 0 && !cyclic; }

  const NamedNormal& select(const NormalSelector& s) const {
    for (const auto& n : normals)
      if (n.name == s) return n;
    fail(ErrorCode::NoSuchNormal, "no normal subgroup " + selector_name(s));
  }
};

std::string detail_value(const VerifyReport& r, const std::string& name) {
  for (const auto& d : r.details)
    if (d.name == name) return d.actual;
  return {};
}

void expect_count(VerifyReport& r, const CorpusEntry& e, const std::string& key,
                  const std::string& name, std::uint64_t actual) {
  if (auto v = e.get(key)) r.add(name, *v, std::to_string(actual), *v == std::to_string(actual));
}

void expect_text(VerifyReport& r, const std::map<std::string, std::string>& exp,
                 const std::string& key, const std::string& name, const std::string& actual) {
  if (auto it = exp.find(key); it != exp.end())
    r.add(name, it->second, actual, it->second == actual);
}

std::string witness(const std::optional<Permutation>& w) {
  return w ? " witness " + w->cycle_string() : "";
}

using Suite = std::function<std::optional<VerifyReport>(const EntryContext&)>;

std::optional<VerifyReport> suite_values(const EntryContext& c) {
  VerifyReport r;
  const auto& e = c.entry;
  expect_count(r, e, "order", "order", c.g.order());
  expect_count(r, e, "eta", "eta", c.cs.eta());
  expect_count(r, e, "l", "l", c.cs.l());
  expect_count(r, e, "gminus", "gminus", c.cs.g_minus().size());
  if (auto v = e.get("maxcyc")) {
    std::vector<std::size_t> orders;
    for (const auto& row : c.cs.report().class_reps) orders.push_back(row.subgroup_order);
    std::sort(orders.begin(), orders.end());
    std::string actual;
    for (std::size_t o : orders) actual += (actual.empty() ? "" : ",") + std::to_string(o);
    std::string wanted = *v;
    std::erase(wanted, ' ');
    r.add("maxcyc", wanted, actual, wanted == actual);
  }
  if (c.g.order() > 1) {
    std::string cls;
    try {
      const PrimeOrderClass pc = classify_prime_order_group(c.g);
      cls = to_string(pc);
      r.require("classified", true);
      if (auto v = e.get("class")) {
        const std::string kind = cls.substr(0, cls.find('('));
        r.add("class", *v, cls, *v == kind);
      }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::ClassificationFailed) throw;
      r.add("classified", "true", "classification-failed", false);
    }
  }
  return r;
}

std::optional<VerifyReport> suite_dirproduct(const EntryContext& c) {
  if (c.entry.spec.kind != SpecKind::DirectProduct) return std::nullopt;
  const Group h = realize(c.entry.spec.factors[0], c.limits);
  const Group k = realize(c.entry.spec.factors[1], c.limits);
  return check_dirproduct_laws(h, k);
}

std::optional<VerifyReport> suite_frobenius(const EntryContext& c) {
  const auto& e = c.entry;
  auto kernel_order = e.get("frobenius");
  if (!kernel_order) return std::nullopt;
  const Group n = named_normal(c.g, std::stoull(*kernel_order), 0);
  const Group h = stabilizer(c.g, 0);
  const std::size_t es = eta_star(c.g, n);
  const std::size_t eh = CyclicStructure(h).eta();
  VerifyReport r;
  if (e.get("frobenius.expect").value_or("holds") == "holds") {
    r = check_frobenius_eta(c.g, n, h);
  } else {
    r.suite = "frobenius";
    bool rejected = false;
    try {
      check_frobenius_eta(c.g, n, h);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NotFrobenius) throw;
      rejected = true;
    }
    r.add("not_frobenius", "NotFrobenius", rejected ? "NotFrobenius" : "accepted", rejected);
    r.add("gap", "< " + std::to_string(es + eh), std::to_string(c.cs.eta()), c.cs.eta() < es + eh);
  }
  expect_count(r, e, "frobenius.sum", "sum", es + eh);
  expect_count(r, e, "frobenius.eta_h", "eta_h_expected", eh);
  expect_count(r, e, "frobenius.eta_star", "eta_star_expected", es);
  return r;
}

std::optional<VerifyReport> suite_centre(const EntryContext& c) {
  VerifyReport r;
  const auto pairs = pair_expectations(c.entry);
  for (const auto& n : c.normals) {
    r.merge(check_centre_bounds(c.g, n.group), c.prefix(n));
    if (auto it = pairs.find(n.name); it != pairs.end())
      expect_text(r, it->second, "eta_star", c.prefix(n) + "eta_star_expected",
                  std::to_string(eta_star(c.g, n.group)));
  }
  return r;
}

std::optional<VerifyReport> suite_pgrp(const EntryContext& c) { return check_pgrp_lemma(c.g); }

std::optional<VerifyReport> suite_gminus_containment(const EntryContext& c) {
  VerifyReport r;
  for (const auto& n : c.normals) r.merge(check_gminus_containment(c.g, n.group), c.prefix(n));
  return r;
}

std::optional<VerifyReport> suite_gminus_subgroup(const EntryContext& c) {
  return check_gminus_subgroup_lemma(c.g);
}

std::optional<VerifyReport> suite_quot(const EntryContext& c) {
  VerifyReport r;
  const auto pairs = pair_expectations(c.entry);
  std::size_t count = 0;
  for (const auto& n : c.normals) {
    if (!c.proper(n)) continue;
    ++count;
    const std::string pre = c.prefix(n);
    const QuotCheckReport q = check_quot_conditions(c.g, n.group);
    r.add(pre + "monotone", "<= " + std::to_string(q.eta_G), std::to_string(q.eta_Q),
          q.eta_Q <= q.eta_G);
    const bool abc = q.cond_a && q.cond_b && q.cond_c;
    r.add(pre + "equal_iff_abc", yes_no(q.equal),
          yes_no(abc) + witness(q.witnesses.cond_a) + witness(q.witnesses.cond_b) +
              witness(q.witnesses.cond_c),
          q.equal == abc);
    r.add(pre + "part4_iff", yes_no(q.equal && q.gminus_coset_union),
          yes_no(q.all_cosets_conjugate), (q.equal && q.gminus_coset_union) == q.all_cosets_conjugate);
    if (q.pgroup_union)
      r.add(pre + "part3_union", "true", yes_no(*q.pgroup_union) + witness(q.witnesses.coset_union),
            *q.pgroup_union);
    if (q.product_absorbs) r.require(pre + "part5a", *q.product_absorbs);
    if (q.image_matches) r.require(pre + "part5b", *q.image_matches);
    if (auto it = pairs.find(n.name); it != pairs.end()) {
      expect_text(r, it->second, "eta_q", pre + "eta_q", std::to_string(q.eta_Q));
      expect_text(r, it->second, "equal", pre + "equal", yes_no(q.equal));
      expect_text(r, it->second, "union", pre + "union", yes_no(q.gminus_coset_union));
    }
  }
  r.note("pairs", std::to_string(count));
  return r;
}

std::optional<VerifyReport> suite_products_join(const EntryContext& c) {
  const auto& e = c.entry;
  const bool theorem = c.noncyclic_p_group();
  if (!theorem && !e.has("join")) return std::nullopt;
  VerifyReport r;
  r.suite = "products-join";
  if (theorem) {
    for (std::size_t i = 0; i < c.normals.size(); ++i) {
      if (!c.qualifies(i)) continue;
      for (std::size_t j = i; j < c.normals.size(); ++j) {
        if (!c.qualifies(j)) continue;
        r.merge(check_quotient_join(c.g, c.normals[i].group, c.normals[j].group),
                c.prefix(c.normals[i]) + selector_name(c.normals[j].name) + ":");
      }
    }
  }
  if (auto sel = e.get("join")) {
    const auto names = parse_selector_list(*sel);
    if (names.size() != 2) fail(ErrorCode::CorpusError, "join needs two selectors");
    const std::size_t ej =
        join_quotient_eta(c.g, c.select(names[0]).group, c.select(names[1]).group);
    expect_count(r, e, "join.eta_q", "join_eta_q", ej);
    if (theorem)
      r.expect_eq("join_equals_eta", c.cs.eta(), ej);
    else  // outside p-groups the join may lose maximal cyclic classes
      r.add("join_control", "!= " + std::to_string(c.cs.eta()), std::to_string(ej),
            ej != c.cs.eta());
  }
  return r;
}

std::optional<VerifyReport> suite_xsub(const EntryContext& c) {
  if (!c.noncyclic_p_group()) return std::nullopt;
  const XSubgroup x = compute_X(c.g);
  VerifyReport r;
  r.suite = "xsub";
  r.expect_eq("eta_quotient", x.eta_group, x.eta_quotient);
  r.require("normal", is_normal_set(c.g, x.members));
  for (std::size_t i = 0; i < c.normals.size(); ++i) {
    const auto& m = c.normals[i];
    if (c.qualifies(i)) r.require(c.prefix(m) + "below_X", m.members.is_subset_of(x.members));
    if (m.members == x.members || !x.members.is_subset_of(m.members)) continue;
    r.add(c.prefix(m) + "above_X_disqualified", "!= " + std::to_string(c.cs.eta()),
          std::to_string(c.quotient_etas[i]), !c.qualifies(i));
  }
  // Invariance under every inner automorphism.
  bool invariant = true;
  for (ElemId s = 0; s < c.g.order() && invariant; ++s)
    x.members.for_each([&](ElemId y) { invariant = invariant && x.members.contains(c.g.conj(y, s)); });
  r.require("conjugation_invariant", invariant);
  r.note("order", std::to_string(x.subgroup.order()));
  expect_count(r, c.entry, "xsub.order", "order_expected", x.subgroup.order());
  if (auto v = c.entry.get("xsub.cyclic")) r.add("cyclic", *v, yes_no(x.cyclic), *v == yes_no(x.cyclic));
  return r;
}

std::optional<VerifyReport> suite_derived(const EntryContext& c) {
  VerifyReport r;
  const auto pairs = pair_expectations(c.entry);
  for (const auto& n : c.normals) {
    if (!c.proper(n)) continue;
    const VerifyReport d = check_derived_criterion(c.g, n.group);
    r.merge(d, c.prefix(n));
    if (auto it = pairs.find(n.name); it != pairs.end()) {
      expect_text(r, it->second, "in_derived", c.prefix(n) + "in_derived_expected",
                  detail_value(d, "in_derived"));
      expect_text(r, it->second, "derived_hyp", c.prefix(n) + "derived_hyp_expected",
                  detail_value(d, "hypothesis"));
    }
  }
  if (c.noncyclic_p_group())
    r.require("abelianization_noncyclic", detail_value(check_derived_criterion(
                                              c.g, c.normals.front().group),
                                          "hypothesis") == "true");
  return r;
}

std::optional<VerifyReport> suite_exp_bound(const EntryContext& c) {
  if (c.p == 0 || c.g.order() < c.p * c.p) return std::nullopt;
  for (ElemId x = 1; x < c.g.order(); ++x)
    if (c.g.elem_order(x) != c.p) return std::nullopt;
  return check_exp_bound(c.g);
}

std::optional<VerifyReport> suite_eitheror(const EntryContext& c) {
  if (!c.noncyclic_p_group()) return std::nullopt;
  VerifyReport r;
  r.suite = "eitheror";
  std::size_t applicable = 0;
  for (std::size_t i = 0; i < c.normals.size(); ++i) {
    if (!c.qualifies(i) || c.normals[i].group.order() == 1) continue;
    for (const auto& m : c.normals) {
      ++applicable;
      r.merge(check_eitheror(c.g, c.normals[i].group, m.group),
              c.prefix(c.normals[i]) + selector_name(m.name) + ":");
    }
  }
  r.note("pairs", std::to_string(applicable));
  return r;
}

std::optional<VerifyReport> suite_l_relation(const EntryContext& c) {
  if (c.g.order() == 1) return std::nullopt;
  return check_l_relation(c.g);
}

std::optional<VerifyReport> suite_first_main(const EntryContext& c) { return check_first_main(c.g); }

std::optional<VerifyReport> suite_gk_graph(const EntryContext& c) {
  VerifyReport r = check_gk_graph(c.g);
  const GKGraph gr = gk_graph(c.g);
  expect_count(r, c.entry, "gk.components", "components_expected", gr.components());
  expect_count(r, c.entry, "gk.edges", "edges_expected", gr.edges.size());
  return r;
}

const std::vector<std::pair<std::string, Suite>>& suite_table() {
  static const std::vector<std::pair<std::string, Suite>> table = {
      {"values", suite_values},
      {"dirproduct", suite_dirproduct},
      {"frobenius", suite_frobenius},
      {"centre", suite_centre},
      {"pgrp-lemma", suite_pgrp},
      {"gminus-containment", suite_gminus_containment},
      {"gminus-subgroup", suite_gminus_subgroup},
      {"quot", suite_quot},
      {"products-join", suite_products_join},
      {"xsub", suite_xsub},
      {"derived", suite_derived},
      {"exp-bound", suite_exp_bound},
      {"eitheror", suite_eitheror},
      {"l-relation", suite_l_relation},
      {"first-main", suite_first_main},
      {"gk-graph", suite_gk_graph},
  };
  return table;
}

VerifyReport error_report(const std::string& what) {
  VerifyReport r;
  r.add("error", "-", what, false);
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<std::string> resolve_suites(const std::vector<std::string>& requested) {
  std::vector<bool> chosen(suite_names().size(), false);
  for (const auto& name : requested) {
    if (name == "all") {
      chosen.assign(chosen.size(), true);
      continue;
    }
    auto it = std::find(suite_names().begin(), suite_names().end(), name);
    if (it == suite_names().end()) fail(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
    chosen[static_cast<std::size_t>(it - suite_names().begin())] = true;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < chosen.size(); ++i)
    if (chosen[i]) out.push_back(suite_names()[i]);
  return out;
}

std::vector<VerifyReport> run_entry(const CorpusEntry& entry,
                                    const std::vector<std::string>& suites, const Limits& limits) {
  std::vector<VerifyReport> out;
  std::optional<EntryContext> ctx;
  std::string setup_error;
  try {
    ctx.emplace(entry, limits);
  } catch (const Error& e) {
    setup_error = std::string(error_code_name(e.code())) + ": " + e.what();
  }
  for (const auto& name : suites) {
    auto it = std::find_if(suite_table().begin(), suite_table().end(),
                           [&](const auto& s) { return s.first == name; });
    if (it == suite_table().end()) fail(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
    std::optional<VerifyReport> r;
    if (!ctx) {
      r = error_report(setup_error);
    } else {
      try {
        r = it->second(*ctx);
      } catch (const Error& e) {
        r = error_report(std::string(error_code_name(e.code())) + ": " + e.what());
      } catch (const std::exception& e) {
        r = error_report(e.what());
      }
    }
    if (!r) continue;
    r->suite = name;
    r->instance = entry.text;
    out.push_back(std::move(*r));
  }
  return out;
}

std::vector<VerifyReport> run_suites(const std::vector<CorpusEntry>& corpus,
                                     const std::vector<std::string>& suites,
                                     const RunConfig& config) {
  std::vector<std::vector<VerifyReport>> per_entry(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++)
      per_entry[i] = run_entry(corpus[i], suites, config.limits);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, corpus.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  std::vector<VerifyReport> out;
  for (auto& v : per_entry)
    for (auto& r : v) out.push_back(std::move(r));
  return out;
}

}  // namespace maxcyc
