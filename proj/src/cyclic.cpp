#include "maxcyc/cyclic.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "maxcyc/errors.hpp"
#include "maxcyc/perm_core.hpp"

namespace maxcyc {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

// Orbit labelling by breadth-first search; labels follow first appearance.
std::vector<std::size_t> label_orbits(std::size_t count, auto&& neighbours) {
  std::vector<std::size_t> label(count, kUnset);
  std::size_t next = 0;
  for (std::size_t start = 0; start < count; ++start) {
    if (label[start] != kUnset) continue;
    std::vector<std::size_t> queue{start};
    label[start] = next;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      neighbours(queue[i], [&](std::size_t j) {
        if (label[j] == kUnset) {
          label[j] = next;
          queue.push_back(j);
        }
      });
    }
    ++next;
  }
  return label;
}

std::size_t distinct(const std::vector<std::size_t>& labels, auto&& keep) {
  std::vector<std::size_t> seen;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (keep(i)) seen.push_back(labels[i]);
  std::sort(seen.begin(), seen.end());
  return static_cast<std::size_t>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

}  // namespace

CyclicStructure::CyclicStructure(Group g) : group_(std::move(g)) {
  const std::size_t n = group_.order();

  // Enumerate <x> for every x; each element generates exactly one of them.
  std::vector<std::size_t> raw_of(n, kUnset);
  std::vector<CyclicSubgroup> raw;
  for (ElemId x = 0; x < n; ++x) {
    if (raw_of[x] != kUnset) continue;
    const std::uint64_t ord = group_.elem_order(x);
    CyclicSubgroup c;
    c.elements = ElementSet(n);
    c.order = ord;
    c.generator = x;
    ElemId power = Group::identity;
    for (std::uint64_t k = 0; k < ord; ++k) {
      c.elements.insert(power);
      if (std::gcd(k, ord) == 1) {
        raw_of[power] = raw.size();
        if (group_.lex_rank(power) < group_.lex_rank(c.generator)) c.generator = power;
      }
      power = group_.mul(power, x);
    }
    if (ord == 1) raw_of[x] = raw.size();
    c.canonical_generator = group_.element(c.generator);
    raw.push_back(std::move(c));
  }

  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].order != raw[b].order) return raw[a].order < raw[b].order;
    return group_.compare_sets(raw[a].elements, raw[b].elements) < 0;
  });
  std::vector<std::size_t> renumber(raw.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    renumber[perm[i]] = i;
    subgroups_.push_back(std::move(raw[perm[i]]));
  }
  cyclic_of_.resize(n);
  for (ElemId x = 0; x < n; ++x) cyclic_of_[x] = renumber[raw_of[x]];

  // Containment scan with the order-divisibility filter.
  const std::size_t c = subgroups_.size();
  maximal_.assign(c, true);
  for (std::size_t i = 0; i < c; ++i) {
    const auto& small = subgroups_[i];
    for (std::size_t j = i + 1; j < c; ++j) {
      const auto& big = subgroups_[j];
      if (big.order == small.order || big.order % small.order != 0) continue;
      if (big.elements.contains(small.generator)) {
        maximal_[i] = false;
        break;
      }
    }
  }

  g_minus_ = ElementSet(n);
  for (ElemId x = 0; x < n; ++x)
    if (!maximal_[cyclic_of_[x]]) g_minus_.insert(x);
  if (!(g_minus_ == g_minus_via_powers()))
    fail(ErrorCode::Internal,
         "containment scan and power description of G^- disagree");

  std::vector<ElemId> gens(group_.generator_ids().begin(), group_.generator_ids().end());
  orbit_ = orbits_under(gens);
  eta_ = distinct(orbit_, [&](std::size_t i) { return maximal_[i]; });
  l_ = distinct(orbit_, [](std::size_t) { return true; });
}

std::vector<std::size_t> CyclicStructure::maximal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < subgroups_.size(); ++i)
    if (maximal_[i]) out.push_back(i);
  return out;
}

ElementSet CyclicStructure::g_minus_via_powers() const {
  ElementSet out(group_.order());
  for (ElemId x = 0; x < group_.order(); ++x)
    for (auto q : prime_factors(group_.elem_order(x))) out.insert(group_.pow(x, static_cast<long long>(q)));
  return out;
}

ElementSet CyclicStructure::power_set(std::uint64_t p) const {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "power set needs a prime");
  ElementSet out(group_.order());
  for (ElemId x = 0; x < group_.order(); ++x) out.insert(group_.pow(x, static_cast<long long>(p)));
  return out;
}

std::vector<std::size_t> CyclicStructure::orbits_under(std::span<const ElemId> conjugators) const {
  return label_orbits(subgroups_.size(), [&](std::size_t i, auto&& visit) {
    for (ElemId s : conjugators) visit(cyclic_of_[group_.conj(subgroups_[i].generator, s)]);
  });
}

SubgroupClassSet CyclicStructure::classes_of(const std::vector<std::size_t>& indices) const {
  std::vector<std::size_t> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  SubgroupClassSet out;
  std::map<std::size_t, std::size_t> slot;  // orbit id -> class position
  for (std::size_t i : sorted) {
    auto [it, fresh] = slot.try_emplace(orbit_[i], out.classes.size());
    if (fresh) {
      out.classes.emplace_back();
      out.representatives.push_back(subgroups_[i]);
    }
    out.classes[it->second].push_back(subgroups_[i]);
  }
  return out;
}

std::size_t CyclicStructure::eta_p(std::uint64_t p) const {
  if (!is_prime(p)) fail(ErrorCode::InvalidArgument, "eta_p needs a prime");
  return distinct(orbit_, [&](std::size_t i) {
    return maximal_[i] && subgroups_[i].order % p == 0;
  });
}

EtaReport CyclicStructure::report() const {
  EtaReport r;
  r.eta = eta_;
  r.l_value = l_;
  r.gminus_size = g_minus_.size();
  for (const auto& cls : classes_of(maximal_indices()).classes)
    r.class_reps.push_back({cls.front().order, cls.size()});
  return r;
}

std::vector<CyclicSubgroup> cyclic_subgroups(const Group& g) {
  return CyclicStructure(g).subgroups();
}

std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const Group& g) {
  CyclicStructure cs(g);
  std::vector<CyclicSubgroup> out;
  for (std::size_t i : cs.maximal_indices()) out.push_back(cs.subgroups()[i]);
  return out;
}

SubgroupClassSet conjugacy_classes_of_subgroups(const Group& g,
                                                const std::vector<CyclicSubgroup>& subs) {
  CyclicStructure cs(g);
  std::vector<std::size_t> indices;
  for (const auto& s : subs) {
    if (s.elements.universe() != g.order() || s.generator >= g.order())
      fail(ErrorCode::NotSubgroup, "cyclic subgroup belongs to a different group");
    std::size_t i = cs.cyclic_of(s.generator);
    if (!(cs.subgroups()[i].elements == s.elements))
      fail(ErrorCode::InvalidArgument, "cyclic subgroup does not match its generator");
    indices.push_back(i);
  }
  return cs.classes_of(indices);
}

EtaReport eta(const Group& g) { return CyclicStructure(g).report(); }
ElementSet g_minus(const Group& g) { return CyclicStructure(g).g_minus(); }
ElementSet g_minus_via_powers(const Group& g) { return CyclicStructure(g).g_minus_via_powers(); }
ElementSet g_power_set(const Group& g, std::uint64_t p) { return CyclicStructure(g).power_set(p); }
std::size_t eta_p(const Group& k, std::uint64_t p) { return CyclicStructure(k).eta_p(p); }

std::size_t eta_star(const Group& g, const Group& n) {
  if (!is_normal(g, n)) fail(ErrorCode::NotNormal, "eta_star needs a normal subgroup");
  CyclicStructure inner(n);
  const auto maxima = inner.maximal_indices();

  // N-conjugacy classes of the maximal cyclic subgroups of N ...
  std::vector<std::size_t> class_of(inner.subgroups().size(), kUnset);
  std::size_t classes = 0;
  {
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t i : maxima) {
      auto [it, fresh] = slot.try_emplace(inner.orbit_of(i), classes);
      if (fresh) ++classes;
      class_of[i] = it->second;
    }
  }

  // ... fused by conjugation with the generators of G.
  const auto fused = label_orbits(classes, [&](std::size_t cls, auto&& visit) {
    for (std::size_t i : maxima) {
      if (class_of[i] != cls) continue;
      const Permutation& x = inner.subgroups()[i].canonical_generator;
      for (const auto& s : g.generators()) {
        ElemId y = n.index_of(s.inverse() * x * s);
        visit(class_of[inner.cyclic_of(y)]);
      }
    }
  });
  return *std::max_element(fused.begin(), fused.end()) + 1;
}

}  // namespace maxcyc
