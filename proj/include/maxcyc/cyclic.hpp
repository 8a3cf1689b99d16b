#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "maxcyc/element_set.hpp"
#include "maxcyc/group.hpp"

namespace maxcyc {

struct CyclicSubgroup {
  ElementSet elements;  // also the canonical key
  std::size_t order = 0;
  Permutation canonical_generator;  // lexicographically least generator
  ElemId generator = 0;             // its element id

  const ElementSet& key() const noexcept { return elements; }
  friend bool operator==(const CyclicSubgroup& a, const CyclicSubgroup& b) {
    return a.elements == b.elements;
  }
};

struct SubgroupClassSet {
  std::vector<std::vector<CyclicSubgroup>> classes;
  std::vector<CyclicSubgroup> representatives;  // least key in each class
};

struct ClassSummary {
  std::size_t subgroup_order = 0;
  std::size_t class_size = 0;
};

struct EtaReport {
  std::size_t eta = 0;
  std::vector<ClassSummary> class_reps;  // one row per class of maximal cyclic subgroups
  std::size_t l_value = 0;
  std::size_t gminus_size = 0;
};

// All cyclic subgroups of a group together with maximality, G^- and the
// conjugation orbits. Subgroups are indexed in (order, canonical key) order.
//
// Maximality is decided twice: by a containment scan over the cyclic
// subgroups, and by the power description of G^- ({g^q : q prime, q | o(g)}).
// Construction throws an Internal error if the two ever disagree.
class CyclicStructure {
 public:
  explicit CyclicStructure(Group g);

  const Group& group() const noexcept { return group_; }
  const std::vector<CyclicSubgroup>& subgroups() const noexcept { return subgroups_; }
  std::size_t cyclic_of(ElemId x) const { return cyclic_of_[x]; }
  bool is_maximal(std::size_t i) const { return maximal_[i]; }
  std::vector<std::size_t> maximal_indices() const;

  const ElementSet& g_minus() const noexcept { return g_minus_; }
  ElementSet g_minus_via_powers() const;
  ElementSet power_set(std::uint64_t p) const;

  // Orbit id of every cyclic subgroup under conjugation by `conjugators`.
  std::vector<std::size_t> orbits_under(std::span<const ElemId> conjugators) const;
  // Orbit id under conjugation by the whole group.
  std::size_t orbit_of(std::size_t i) const { return orbit_[i]; }

  SubgroupClassSet classes_of(const std::vector<std::size_t>& indices) const;

  std::size_t eta() const noexcept { return eta_; }
  std::size_t l() const noexcept { return l_; }
  std::size_t eta_p(std::uint64_t p) const;
  EtaReport report() const;

 private:
  Group group_;
  std::vector<CyclicSubgroup> subgroups_;
  std::vector<std::size_t> cyclic_of_;
  std::vector<bool> maximal_;
  ElementSet g_minus_;
  std::vector<std::size_t> orbit_;
  std::size_t eta_ = 0;
  std::size_t l_ = 0;
};

std::vector<CyclicSubgroup> cyclic_subgroups(const Group& g);
std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const Group& g);
SubgroupClassSet conjugacy_classes_of_subgroups(const Group& g,
                                                const std::vector<CyclicSubgroup>& subs);
EtaReport eta(const Group& g);
ElementSet g_minus(const Group& g);
ElementSet g_minus_via_powers(const Group& g);
ElementSet g_power_set(const Group& g, std::uint64_t p);
std::size_t eta_p(const Group& k, std::uint64_t p);
// Number of G-orbits on the N-conjugacy classes of maximal cyclic subgroups of N.
std::size_t eta_star(const Group& g, const Group& n);

}  // namespace maxcyc
