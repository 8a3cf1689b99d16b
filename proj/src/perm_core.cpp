#include "maxcyc/perm_core.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "maxcyc/errors.hpp"

namespace maxcyc {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::uint64_t prime_power_base(std::uint64_t n) {
  auto ps = prime_factors(n);
  return ps.size() == 1 ? ps.front() : 0;
}

bool is_prime_power(std::uint64_t n) { return n == 1 || prime_power_base(n) != 0; }

ElementClassPartition conjugacy_classes(const Group& g) { return g.classes(); }

ElementSet closure_set(const Group& g, const ElementSet& seed) {
  if (seed.universe() != g.order())
    fail(ErrorCode::InvalidArgument, "seed belongs to a different group");
  std::vector<ElemId> gens;
  ElementSet reached(g.order());
  reached.insert(Group::identity);
  seed.for_each([&](ElemId x) {
    if (reached.contains(x)) return;
    gens.push_back(x);
    // Extend by right-multiplying everything reached so far until closed.
    std::vector<ElemId> queue = reached.to_vector();
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (ElemId s : gens) {
        ElemId y = g.mul(queue[i], s);
        if (!reached.contains(y)) {
          reached.insert(y);
          queue.push_back(y);
        }
      }
    }
  });
  return reached;
}

Group subgroup_generated(const Group& g, const ElementSet& seed) {
  return g.subgroup(closure_set(g, seed));
}

bool is_normal_set(const Group& g, const ElementSet& h) {
  bool normal = true;
  h.for_each([&](ElemId x) {
    if (!normal) return;
    for (ElemId s : g.generator_ids())
      if (!h.contains(g.conj(x, s))) {
        normal = false;
        return;
      }
  });
  return normal;
}

bool is_normal(const Group& g, const Group& h) { return is_normal_set(g, g.embed(h)); }

ElementSet normal_closure_set(const Group& g, const ElementSet& seed) {
  ElementSet conjugates(g.order());
  seed.for_each([&](ElemId x) { conjugates |= g.classes().classes[g.class_of(x)]; });
  return closure_set(g, conjugates);
}

Group normal_closure(const Group& g, const ElementSet& seed) {
  return g.subgroup(normal_closure_set(g, seed));
}

Quotient quotient_by_set(const Group& g, const ElementSet& n) {
  if (!is_normal_set(g, n) || !n.contains(Group::identity) || !(closure_set(g, n) == n))
    fail(ErrorCode::NotNormal, "subgroup is not normal in the group");
  const std::size_t order = g.order();
  const auto members = n.to_vector();
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);

  Quotient q{Group::generate(1, {}), {}, std::vector<std::uint32_t>(order, kUnset), {}};
  std::vector<ElemId> reps;
  for (ElemId x = 0; x < order; ++x) {
    if (q.coset_of[x] != kUnset) continue;
    const auto point = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    ElementSet coset(order);
    for (ElemId m : members) {
      ElemId y = g.mul(x, m);
      q.coset_of[y] = point;
      coset.insert(y);
    }
    q.table.cosets.push_back(std::move(coset));
  }
  q.table.index = reps.size();

  const std::size_t index = reps.size();
  auto action = [&](ElemId x) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c)
      images[c] = static_cast<Point>(q.coset_of[g.mul(x, reps[c])]);
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (ElemId s : g.generator_ids()) gens.push_back(action(s));
  // The regular action needs `index` points; that is internal, not a user degree.
  Limits limits = g.limits();
  limits.degree_cap = std::max(limits.degree_cap, index);
  q.group = Group::generate(index, std::move(gens), limits);
  q.projection.resize(order);
  for (ElemId x = 0; x < order; ++x) q.projection[x] = q.group.index_of(action(x));
  return q;
}

Quotient quotient_group(const Group& g, const Group& n) {
  return quotient_by_set(g, g.embed(n));
}

ElementSet center_set(const Group& g) {
  ElementSet z(g.order());
  for (ElemId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElemId s : g.generator_ids())
      if (g.mul(x, s) != g.mul(s, x)) {
        central = false;
        break;
      }
    if (central) z.insert(x);
  }
  return z;
}

Group center(const Group& g) { return g.subgroup(center_set(g)); }

ElementSet product_set(const Group& g, const ElementSet& n, const ElementSet& m) {
  ElementSet out(g.order());
  const auto ms = m.to_vector();
  n.for_each([&](ElemId a) {
    for (ElemId b : ms) out.insert(g.mul(a, b));
  });
  return out;
}

std::vector<ElementSet> normal_subgroup_sets(const Group& g) {
  std::vector<ElementSet> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  auto add = [&](ElementSet s) {
    if (seen.insert(s).second) found.push_back(std::move(s));
  };

  ElementSet trivial(g.order());
  trivial.insert(Group::identity);
  add(trivial);
  for (ElemId rep : g.classes().representatives) {
    ElementSet seed(g.order());
    seed.insert(rep);
    add(normal_closure_set(g, seed));
  }

  // Join-closure: every normal subgroup is the product of the class closures
  // it contains, so closing under pairwise products is exhaustive.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (found[i].is_subset_of(found[j]) || found[j].is_subset_of(found[i])) continue;
      add(product_set(g, found[i], found[j]));
    }
  }

  std::sort(found.begin(), found.end(), [&](const ElementSet& a, const ElementSet& b) {
    auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return g.compare_sets(a, b) < 0;
  });
  return found;
}

std::vector<Group> normal_subgroups(const Group& g) {
  std::vector<Group> out;
  for (const auto& s : normal_subgroup_sets(g)) out.push_back(g.subgroup(s));
  return out;
}

bool is_simple_nonabelian_60(const Group& g) {
  if (g.order() != 60) return false;
  return normal_subgroup_sets(g).size() == 2;
}

Group stabilizer(const Group& g, std::size_t point) {
  if (point >= g.degree())
    fail(ErrorCode::InvalidArgument, "point " + std::to_string(point) + " out of range");
  ElementSet s(g.order());
  for (ElemId x = 0; x < g.order(); ++x)
    if (g.element(x)[point] == point) s.insert(x);
  return g.subgroup(s);
}

namespace {

ElementSet derived_set(const Group& g) {
  ElementSet commutators(g.order());
  for (ElemId a : g.generator_ids())
    for (ElemId b : g.generator_ids())
      commutators.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
  return normal_closure_set(g, commutators);
}

}  // namespace

Group derived_subgroup(const Group& g) { return g.subgroup(derived_set(g)); }

bool is_solvable(const Group& g) {
  Group current = g;
  while (current.order() > 1) {
    ElementSet d = derived_set(current);
    if (d.size() == current.order()) return false;
    current = current.subgroup(d);
  }
  return true;
}

bool is_nilpotent(const Group& g) {
  // Nilpotent iff every Sylow subgroup is normal iff, for each prime p, the
  // p-elements number exactly |G|_p.
  for (auto p : prime_factors(g.order())) {
    std::uint64_t part = 1;
    for (auto n = g.order(); n % p == 0; n /= p) part *= p;
    std::uint64_t count = 0;
    for (ElemId x = 0; x < g.order(); ++x)
      if (part % g.elem_order(x) == 0) ++count;
    if (count != part) return false;
  }
  return true;
}

bool is_cyclic(const Group& g) {
  for (ElemId x = 0; x < g.order(); ++x)
    if (g.elem_order(x) == g.order()) return true;
  return false;
}

Group direct_product(const Group& h, const Group& k) {
  const std::size_t dh = h.degree(), dk = k.degree();
  std::vector<Permutation> gens;
  for (const auto& a : h.generators()) {
    std::vector<Point> images(dh + dk);
    for (std::size_t i = 0; i < dh; ++i) images[i] = a[i];
    for (std::size_t i = 0; i < dk; ++i) images[dh + i] = static_cast<Point>(dh + i);
    gens.emplace_back(std::move(images));
  }
  for (const auto& b : k.generators()) {
    std::vector<Point> images(dh + dk);
    for (std::size_t i = 0; i < dh; ++i) images[i] = static_cast<Point>(i);
    for (std::size_t i = 0; i < dk; ++i) images[dh + i] = static_cast<Point>(dh + b[i]);
    gens.emplace_back(std::move(images));
  }
  Limits limits = h.limits();
  return Group::generate(dh + dk, std::move(gens), limits);
}

}  // namespace maxcyc
