#include "maxcyc/render.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "maxcyc/constructors.hpp"
#include "maxcyc/cyclic.hpp"
#include "maxcyc/perm_core.hpp"

namespace maxcyc {

namespace {

using nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<std::string> generator_strings(const Group& g) {
  std::vector<std::string> out;
  for (const auto& p : g.generators()) out.push_back(p.cycle_string());
  if (out.empty()) out.push_back("()");
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

ordered_json optional_bool(const std::optional<bool>& b) {
  return b ? ordered_json(*b) : ordered_json(nullptr);
}

ordered_json optional_perm(const std::optional<Permutation>& p) {
  return p ? ordered_json(p->cycle_string()) : ordered_json(nullptr);
}

const char* tf(bool b) { return b ? "true" : "false"; }

std::string tf(const std::optional<bool>& b) { return b ? tf(*b) : "n/a"; }

}  // namespace

std::string render_eta(const Group& g, OutputFormat fmt) {
  const EtaReport rep = CyclicStructure(g).report();
  if (fmt == OutputFormat::Json) {
    ordered_json j;
    j["order"] = g.order();
    j["eta"] = rep.eta;
    j["l"] = rep.l_value;
    j["gminus_size"] = rep.gminus_size;
    j["classes"] = ordered_json::array();
    for (const auto& c : rep.class_reps)
      j["classes"].push_back({{"subgroup_order", c.subgroup_order}, {"class_size", c.class_size}});
    return dump(j);
  }
  std::ostringstream os;
  os << "order " << g.order() << "\n"
     << "eta " << rep.eta << "\n"
     << "l " << rep.l_value << "\n"
     << "gminus_size " << rep.gminus_size << "\n"
     << "classes (subgroup_order class_size)\n";
  for (const auto& c : rep.class_reps) os << "  " << c.subgroup_order << " " << c.class_size << "\n";
  return os.str();
}

std::string render_normals(const Group& g, OutputFormat fmt) {
  const auto normals = normal_subgroups(g);
  ordered_json rows = ordered_json::array();
  std::ostringstream os;
  os << "row order index generators\n";
  std::size_t last = 0, index = 0;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const Group& n = normals[i];
    index = (i > 0 && n.order() == last) ? index + 1 : 0;
    last = n.order();
    const auto gens = generator_strings(n);
    rows.push_back({{"row", i}, {"order", n.order()}, {"index", index}, {"generators", gens}});
    os << i << " " << n.order() << " " << index << " " << join(gens, ", ") << "\n";
  }
  if (fmt == OutputFormat::Json) return dump({{"order", g.order()}, {"normals", rows}});
  return os.str();
}

std::string render_quot(const Group& g, std::size_t order, std::size_t index, OutputFormat fmt) {
  const Group n = named_normal(g, order, index);
  const QuotCheckReport q = check_quot_conditions(g, n);
  if (fmt == OutputFormat::Json) {
    ordered_json j;
    j["order"] = g.order();
    j["normal"] = {{"order", order}, {"index", index}, {"generators", generator_strings(n)}};
    j["eta_G"] = q.eta_G;
    j["eta_Q"] = q.eta_Q;
    j["equal"] = q.equal;
    j["cond_a"] = q.cond_a;
    j["cond_b"] = q.cond_b;
    j["cond_c"] = q.cond_c;
    j["gminus_coset_union"] = q.gminus_coset_union;
    j["all_cosets_conjugate"] = q.all_cosets_conjugate;
    j["pgroup_union"] = optional_bool(q.pgroup_union);
    j["product_absorbs"] = optional_bool(q.product_absorbs);
    j["image_matches"] = optional_bool(q.image_matches);
    j["consistent"] = q.consistent();
    j["witnesses"] = {{"cond_a", optional_perm(q.witnesses.cond_a)},
                      {"cond_b", optional_perm(q.witnesses.cond_b)},
                      {"cond_c", optional_perm(q.witnesses.cond_c)},
                      {"coset_union", optional_perm(q.witnesses.coset_union)}};
    return dump(j);
  }
  std::ostringstream os;
  os << "normal order " << order << " index " << index << ": " << join(generator_strings(n), ", ")
     << "\n"
     << "eta_G " << q.eta_G << "\n"
     << "eta_Q " << q.eta_Q << "\n"
     << "equal " << tf(q.equal) << "\n"
     << "cond_a " << tf(q.cond_a) << "\n"
     << "cond_b " << tf(q.cond_b) << "\n"
     << "cond_c " << tf(q.cond_c) << "\n"
     << "coset_union " << tf(q.gminus_coset_union) << "\n"
     << "all_cosets_conjugate " << tf(q.all_cosets_conjugate) << "\n"
     << "pgroup_union " << tf(q.pgroup_union) << "\n"
     << "product_absorbs " << tf(q.product_absorbs) << "\n"
     << "image_matches " << tf(q.image_matches) << "\n"
     << "consistent " << tf(q.consistent()) << "\n";
  auto w = [&](const char* name, const std::optional<Permutation>& p) {
    if (p) os << "witness " << name << " " << p->cycle_string() << "\n";
  };
  w("cond_a", q.witnesses.cond_a);
  w("cond_b", q.witnesses.cond_b);
  w("cond_c", q.witnesses.cond_c);
  w("coset_union", q.witnesses.coset_union);
  return os.str();
}

std::string render_xsub(const Group& g, OutputFormat fmt) {
  const XSubgroup x = compute_X(g);
  const auto gens = generator_strings(x.subgroup);
  if (fmt == OutputFormat::Json) {
    ordered_json j;
    j["order"] = x.subgroup.order();
    j["generators"] = gens;
    j["eta"] = x.eta_group;
    j["eta_quotient"] = x.eta_quotient;
    j["cyclic"] = x.cyclic;
    j["qualifying"] = x.qualifying;
    return dump(j);
  }
  std::ostringstream os;
  os << "order " << x.subgroup.order() << "\n"
     << "generators " << join(gens, ", ") << "\n"
     << "eta " << x.eta_group << "\n"
     << "eta_quotient " << x.eta_quotient << "\n"
     << "cyclic " << tf(x.cyclic) << "\n"
     << "qualifying " << x.qualifying << "\n";
  return os.str();
}

std::string render_gminus(const Group& g, OutputFormat fmt) {
  const CyclicStructure cs(g);
  const ElementSet& gm = cs.g_minus();
  const bool powers = gm == cs.g_minus_via_powers();
  const std::uint64_t p = p_group_prime(g);
  std::vector<ElemId> ids = gm.to_vector();
  std::sort(ids.begin(), ids.end(),
            [&](ElemId a, ElemId b) { return g.lex_rank(a) < g.lex_rank(b); });
  std::vector<std::string> elems;
  for (ElemId x : ids) elems.push_back(g.element(x).cycle_string());
  const ElementSet closure = closure_set(g, gm);
  if (fmt == OutputFormat::Json) {
    ordered_json j;
    j["order"] = g.order();
    j["gminus_size"] = gm.size();
    j["matches_power_formula"] = powers;
    j["matches_p_powers"] = p ? ordered_json(gm == cs.power_set(p)) : ordered_json(nullptr);
    j["is_subgroup"] = gm.contains(Group::identity) && closure == gm;
    j["closure_order"] = closure.size();
    j["elements"] = elems;
    return dump(j);
  }
  std::ostringstream os;
  os << "order " << g.order() << "\n"
     << "gminus_size " << gm.size() << "\n"
     << "matches_power_formula " << tf(powers) << "\n"
     << "matches_p_powers " << (p ? tf(gm == cs.power_set(p)) : "n/a") << "\n"
     << "is_subgroup " << tf(gm.contains(Group::identity) && closure == gm) << "\n"
     << "closure_order " << closure.size() << "\n";
  for (const auto& e : elems) os << "  " << e << "\n";
  return os.str();
}

std::string render_gkgraph(const Group& g, OutputFormat fmt) {
  const GKGraph gr = gk_graph(g);
  if (fmt == OutputFormat::Json) {
    ordered_json j;
    j["vertices"] = gr.vertices;
    j["edges"] = ordered_json::array();
    for (auto [a, b] : gr.edges) j["edges"].push_back({a, b});
    j["components"] = gr.components();
    return dump(j);
  }
  std::ostringstream os;
  os << "vertices";
  for (auto v : gr.vertices) os << " " << v;
  os << "\nedges";
  for (auto [a, b] : gr.edges) os << " " << a << "-" << b;
  os << "\ncomponents " << gr.components() << "\n";
  return os.str();
}

std::string render_reports(const std::vector<VerifyReport>& reports, OutputFormat fmt) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    failed += r.passed ? 0 : 1;
    if (fmt == OutputFormat::Json) {
      ordered_json j;
      j["suite"] = r.suite;
      j["instance"] = r.instance;
      j["passed"] = r.passed;
      j["details"] = ordered_json::array();
      for (const auto& d : r.details)
        j["details"].push_back({{"name", d.name},
                                {"expected", d.expected},
                                {"actual", d.actual},
                                {"passed", d.passed}});
      os << j.dump() << "\n";
      continue;
    }
    os << (r.passed ? "PASS " : "FAIL ") << r.suite << " " << r.instance << "\n";
    for (const auto& d : r.details)
      if (!d.passed) os << "    " << d.name << ": expected " << d.expected << ", got " << d.actual << "\n";
  }
  if (fmt == OutputFormat::Text)
    os << reports.size() << " reports, " << failed << " failed\n";
  return os.str();
}

}  // namespace maxcyc
