#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "maxcyc/element_set.hpp"
#include "maxcyc/group.hpp"

namespace maxcyc {

struct CosetTable {
  std::vector<ElementSet> cosets;  // left cosets xN, point i <-> cosets[i]
  std::size_t index = 0;
};

// G/N realized by the regular action of G on the left cosets of N.
struct Quotient {
  Group group;
  CosetTable table;
  std::vector<std::uint32_t> coset_of;  // G element id -> quotient point
  std::vector<ElemId> projection;       // G element id -> quotient element id
};

ElementClassPartition conjugacy_classes(const Group& g);

Group subgroup_generated(const Group& g, const ElementSet& seed);
bool is_normal(const Group& g, const Group& h);
Group normal_closure(const Group& g, const ElementSet& seed);
Quotient quotient_group(const Group& g, const Group& n);
Group center(const Group& g);
// Every normal subgroup, sorted by order and then by canonical element-set key.
std::vector<Group> normal_subgroups(const Group& g);
bool is_simple_nonabelian_60(const Group& g);

Group stabilizer(const Group& g, std::size_t point);
Group derived_subgroup(const Group& g);
bool is_solvable(const Group& g);
bool is_nilpotent(const Group& g);
bool is_cyclic(const Group& g);
// Acts on the disjoint union of the factors' points, left factor first.
Group direct_product(const Group& h, const Group& k);

// Set-level forms working on element ids of g.
ElementSet closure_set(const Group& g, const ElementSet& seed);
bool is_normal_set(const Group& g, const ElementSet& h);
ElementSet normal_closure_set(const Group& g, const ElementSet& seed);
ElementSet center_set(const Group& g);
// Product set NM of two normal subgroups.
ElementSet product_set(const Group& g, const ElementSet& n, const ElementSet& m);
std::vector<ElementSet> normal_subgroup_sets(const Group& g);
Quotient quotient_by_set(const Group& g, const ElementSet& n);

// Arithmetic helpers.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
bool is_prime(std::uint64_t n);
// The prime p when n == p^k with k >= 1, otherwise 0.
std::uint64_t prime_power_base(std::uint64_t n);
bool is_prime_power(std::uint64_t n);  // includes 1

}  // namespace maxcyc
