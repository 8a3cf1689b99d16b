#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "maxcyc/element_set.hpp"
#include "maxcyc/permutation.hpp"

namespace maxcyc {

// Hard caps on constructed groups. Exceeding either raises CapExceeded.
struct Limits {
  std::size_t order_cap = 20000;
  std::size_t degree_cap = 128;
};

struct ElementClassPartition {
  std::vector<ElementSet> classes;
  std::vector<ElemId> representatives;
};

// A permutation group with its full element list. Element ids follow the
// breadth-first enumeration from the identity (id 0), applying generators in
// the order given. Immutable; copies share state.
class Group {
 public:
  static constexpr ElemId identity = 0;

  static Group generate(std::size_t degree, std::vector<Permutation> generators,
                        const Limits& limits = {});

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  const Limits& limits() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  std::span<const ElemId> generator_ids() const noexcept;
  const std::vector<Permutation>& elements() const noexcept;
  const Permutation& element(ElemId x) const { return elements()[x]; }

  std::optional<ElemId> find(const Permutation& p) const;
  // Throws NotSubgroup when p is not an element.
  ElemId index_of(const Permutation& p) const;

  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const;
  // g^-1 x g
  ElemId conj(ElemId x, ElemId g) const { return mul(mul(inv(g), x), g); }
  ElemId pow(ElemId a, long long exponent) const;
  std::uint64_t elem_order(ElemId a) const;

  // Position of the element in the lexicographic order of image lists.
  std::size_t lex_rank(ElemId a) const;
  // Total order on element sets: by the sorted lexicographic sequence of members.
  int compare_sets(const ElementSet& a, const ElementSet& b) const;

  // Conjugacy classes, ordered by (element order, lexicographic representative).
  const ElementClassPartition& classes() const noexcept;
  std::size_t class_of(ElemId x) const;

  bool is_abelian() const;

  ElementSet empty_set() const { return ElementSet(order()); }
  ElementSet all() const;

  // Materializes a subgroup given by its element set as a stand-alone group on
  // the same points. The set must be closed.
  Group subgroup(const ElementSet& members) const;
  // Element set of a subgroup living on the same points. Throws NotSubgroup.
  ElementSet embed(const Group& sub) const;

 private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Subgroup generated by `gens` inside g, as an element set of g.
ElementSet closure_of(const Group& g, std::span<const ElemId> gens);

// Closure of the generators, enumerated breadth-first from the identity.
Group enumerate_elements(std::size_t degree, const std::vector<Permutation>& generators,
                         const Limits& limits = {});

}  // namespace maxcyc
