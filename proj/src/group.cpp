#include "maxcyc/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "maxcyc/errors.hpp"

namespace maxcyc {

namespace {

// Full multiplication tables are kept up to this order; larger groups
// multiply permutations and look the product up.
constexpr std::size_t kTableLimit = 2048;

}  // namespace

struct Group::Impl {
  std::size_t degree = 0;
  Limits limits;
  std::vector<Permutation> generators;
  std::vector<ElemId> generator_ids;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, ElemId, PermutationHash> index;
  std::vector<ElemId> inverse;
  std::vector<std::uint64_t> orders;
  std::vector<std::size_t> lex_rank;
  std::vector<ElemId> table;  // order*order when present
  std::vector<std::size_t> class_of;
  ElementClassPartition classes;

  ElemId lookup(const Permutation& p) const {
    auto it = index.find(p);
    if (it == index.end()) fail(ErrorCode::Internal, "product left the group");
    return it->second;
  }

  ElemId mul(ElemId a, ElemId b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * elements.size() + b];
    return lookup(elements[a] * elements[b]);
  }
};

Group Group::generate(std::size_t degree, std::vector<Permutation> generators,
                      const Limits& limits) {
  if (degree == 0) fail(ErrorCode::InvalidArgument, "degree must be at least 1");
  if (degree > limits.degree_cap)
    fail(ErrorCode::CapExceeded, "degree " + std::to_string(degree) +
                                     " exceeds the degree cap " +
                                     std::to_string(limits.degree_cap));
  if (degree > 65536) fail(ErrorCode::InvalidArgument, "degree too large");
  for (const auto& g : generators)
    if (g.degree() != degree)
      fail(ErrorCode::InvalidArgument, "generator degree does not match group degree");

  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->limits = limits;
  impl->generators = std::move(generators);

  const std::size_t k = impl->generators.size();
  std::vector<ElemId> right;  // right[e*k + j] = id(e * gen_j)
  std::vector<ElemId> parent{0};
  std::vector<std::size_t> via{0};

  impl->elements.emplace_back(degree);
  impl->index.emplace(impl->elements.front(), 0);
  for (std::size_t e = 0; e < impl->elements.size(); ++e) {
    for (std::size_t j = 0; j < k; ++j) {
      Permutation p = impl->elements[e] * impl->generators[j];
      auto [it, inserted] =
          impl->index.try_emplace(std::move(p), static_cast<ElemId>(impl->elements.size()));
      if (inserted) {
        if (impl->elements.size() >= limits.order_cap)
          fail(ErrorCode::CapExceeded,
               "group order exceeds the order cap " + std::to_string(limits.order_cap));
        impl->elements.push_back(it->first);
        parent.push_back(static_cast<ElemId>(e));
        via.push_back(j);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = impl->elements.size();
  for (const auto& g : impl->generators) impl->generator_ids.push_back(impl->index.at(g));

  if (n <= kTableLimit) {
    impl->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      ElemId* row = impl->table.data() + a * n;
      row[0] = static_cast<ElemId>(a);
      for (std::size_t b = 1; b < n; ++b) row[b] = right[row[parent[b]] * k + via[b]];
    }
  }

  impl->inverse.resize(n);
  impl->orders.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    impl->inverse[a] = impl->lookup(impl->elements[a].inverse());
    impl->orders[a] = perm_order(impl->elements[a]);
  }

  std::vector<ElemId> by_lex(n);
  std::iota(by_lex.begin(), by_lex.end(), ElemId{0});
  std::sort(by_lex.begin(), by_lex.end(), [&](ElemId a, ElemId b) {
    return impl->elements[a] < impl->elements[b];
  });
  impl->lex_rank.resize(n);
  for (std::size_t r = 0; r < n; ++r) impl->lex_rank[by_lex[r]] = r;

  // Conjugacy classes as orbits under conjugation by the generators.
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> raw_class(n, kUnset);
  std::vector<std::vector<ElemId>> members;
  for (ElemId x : by_lex) {
    if (raw_class[x] != kUnset) continue;
    const std::size_t c = members.size();
    members.emplace_back();
    raw_class[x] = c;
    members[c].push_back(x);
    for (std::size_t i = 0; i < members[c].size(); ++i) {
      ElemId y = members[c][i];
      for (ElemId g : impl->generator_ids) {
        ElemId z = impl->mul(impl->mul(impl->inverse[g], y), g);
        if (raw_class[z] == kUnset) {
          raw_class[z] = c;
          members[c].push_back(z);
        }
      }
    }
  }
  // Representatives are lexicographic minima since classes open in lex order.
  std::vector<std::size_t> perm(members.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    ElemId ra = members[a].front(), rb = members[b].front();
    if (impl->orders[ra] != impl->orders[rb]) return impl->orders[ra] < impl->orders[rb];
    return impl->lex_rank[ra] < impl->lex_rank[rb];
  });
  std::vector<std::size_t> renumber(members.size());
  impl->class_of.resize(n);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    renumber[perm[i]] = i;
    ElementSet set(n);
    for (ElemId y : members[perm[i]]) set.insert(y);
    impl->classes.classes.push_back(std::move(set));
    impl->classes.representatives.push_back(members[perm[i]].front());
  }
  for (std::size_t a = 0; a < n; ++a) impl->class_of[a] = renumber[raw_class[a]];

  return Group(std::move(impl));
}

std::size_t Group::degree() const noexcept { return impl_->degree; }
std::size_t Group::order() const noexcept { return impl_->elements.size(); }
const Limits& Group::limits() const noexcept { return impl_->limits; }
const std::vector<Permutation>& Group::generators() const noexcept {
  return impl_->generators;
}
std::span<const ElemId> Group::generator_ids() const noexcept { return impl_->generator_ids; }
const std::vector<Permutation>& Group::elements() const noexcept { return impl_->elements; }

std::optional<ElemId> Group::find(const Permutation& p) const {
  auto it = impl_->index.find(p);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

ElemId Group::index_of(const Permutation& p) const {
  auto it = impl_->index.find(p);
  if (it == impl_->index.end())
    fail(ErrorCode::NotSubgroup, "permutation " + p.cycle_string() + " is not in the group");
  return it->second;
}

ElemId Group::mul(ElemId a, ElemId b) const { return impl_->mul(a, b); }
ElemId Group::inv(ElemId a) const { return impl_->inverse[a]; }

ElemId Group::pow(ElemId a, long long exponent) const {
  auto order = static_cast<long long>(impl_->orders[a]);
  long long e = ((exponent % order) + order) % order;
  ElemId result = identity;
  ElemId base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint64_t Group::elem_order(ElemId a) const { return impl_->orders[a]; }
std::size_t Group::lex_rank(ElemId a) const { return impl_->lex_rank[a]; }

int Group::compare_sets(const ElementSet& a, const ElementSet& b) const {
  auto ranks = [&](const ElementSet& s) {
    std::vector<std::size_t> r;
    s.for_each([&](ElemId x) { r.push_back(impl_->lex_rank[x]); });
    std::sort(r.begin(), r.end());
    return r;
  };
  auto ra = ranks(a), rb = ranks(b);
  if (ra < rb) return -1;
  if (rb < ra) return 1;
  return 0;
}

const ElementClassPartition& Group::classes() const noexcept { return impl_->classes; }
std::size_t Group::class_of(ElemId x) const { return impl_->class_of[x]; }

bool Group::is_abelian() const {
  for (ElemId a : impl_->generator_ids)
    for (ElemId b : impl_->generator_ids)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

ElementSet Group::all() const {
  ElementSet s(order());
  for (ElemId x = 0; x < order(); ++x) s.insert(x);
  return s;
}

ElementSet closure_of(const Group& g, std::span<const ElemId> gens) {
  ElementSet members(g.order());
  std::vector<ElemId> queue{Group::identity};
  members.insert(Group::identity);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (ElemId s : gens) {
      ElemId y = g.mul(queue[i], s);
      if (!members.contains(y)) {
        members.insert(y);
        queue.push_back(y);
      }
    }
  }
  return members;
}

Group Group::subgroup(const ElementSet& members) const {
  if (members.universe() != order())
    fail(ErrorCode::InvalidArgument, "element set belongs to a different group");
  std::vector<ElemId> gens;
  ElementSet reached(order());
  reached.insert(identity);
  members.for_each([&](ElemId x) {
    if (reached.contains(x)) return;
    gens.push_back(x);
    reached = closure_of(*this, gens);
  });
  if (!(reached == members))
    fail(ErrorCode::InvalidArgument, "element set is not closed under multiplication");
  std::vector<Permutation> perms;
  for (ElemId x : gens) perms.push_back(element(x));
  return Group::generate(degree(), std::move(perms), limits());
}

ElementSet Group::embed(const Group& sub) const {
  if (sub.degree() != degree())
    fail(ErrorCode::NotSubgroup, "subgroup acts on a different number of points");
  ElementSet s(order());
  for (const auto& p : sub.elements()) s.insert(index_of(p));
  return s;
}

Group enumerate_elements(std::size_t degree, const std::vector<Permutation>& generators,
                         const Limits& limits) {
  return Group::generate(degree, generators, limits);
}

}  // namespace maxcyc
