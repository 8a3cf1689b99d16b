#pragma once

#include <set>
#include <string>
#include <vector>

#include "maxcyc/constructors.hpp"
#include "maxcyc/corpus.hpp"
#include "maxcyc/group.hpp"

namespace testing {

inline std::set<maxcyc::Permutation> perms(const maxcyc::Group& g, const maxcyc::ElementSet& s) {
  std::set<maxcyc::Permutation> out;
  s.for_each([&](maxcyc::ElemId x) { out.insert(g.element(x)); });
  return out;
}

inline std::set<maxcyc::Permutation> perms(const maxcyc::Group& g) {
  return {g.elements().begin(), g.elements().end()};
}

inline std::vector<std::size_t> orders(const std::vector<maxcyc::Group>& gs) {
  std::vector<std::size_t> out;
  for (const auto& g : gs) out.push_back(g.order());
  return out;
}

inline maxcyc::Permutation cyc(std::size_t degree, std::vector<std::vector<std::size_t>> cycles) {
  return maxcyc::Permutation::from_cycles(degree, cycles);
}

inline std::vector<maxcyc::CorpusEntry> corpus() {
  return maxcyc::load_corpus(MAXCYC_CORPUS);
}

}  // namespace testing
