#pragma once

#include <cstddef>
#include <string>

#include "maxcyc/group.hpp"
#include "maxcyc/spec.hpp"

namespace maxcyc {

// Empty when the parameters of a single (non-product) node are admissible,
// otherwise a description of the violated constraint.
std::string parameter_problem(const GroupSpec& spec);

// Faithful permutation realization of the named isomorphism type.
Group realize(const GroupSpec& spec, const Limits& limits = {});
Group realize(std::string_view spec_text, const Limits& limits = {});

// The index-th normal subgroup of the given order, in normal_subgroups order.
Group named_normal(const Group& g, std::size_t order, std::size_t index);

}  // namespace maxcyc
