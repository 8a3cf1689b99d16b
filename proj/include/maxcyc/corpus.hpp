#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxcyc/spec.hpp"

namespace maxcyc {

// One record of the line-oriented corpus:
//   spec ; key=value ; key=value ...     # comment
struct CorpusEntry {
  std::size_t line = 0;
  std::string text;  // spec as written
  GroupSpec spec;
  std::string source = "derived";  // reference | derived
  std::map<std::string, std::string> expect;

  bool has(const std::string& key) const { return expect.count(key) != 0; }
  std::optional<std::string> get(const std::string& key) const;
};

// Selector of the index-th normal subgroup of a given order ("n5.0").
struct NormalSelector {
  std::size_t order = 0;
  std::size_t index = 0;
  friend auto operator<=>(const NormalSelector&, const NormalSelector&) = default;
};

std::string selector_name(const NormalSelector& s);

// Parses corpus text. Throws CorpusError naming the line on any malformed
// record, unknown key or bad value; spec errors are rethrown the same way.
std::vector<CorpusEntry> parse_corpus(std::string_view text);
std::vector<CorpusEntry> load_corpus(const std::string& path);

// Normal-subgroup selectors carrying per-pair expectations, with their keys
// ("n5.0.eta_q" -> {5,0} -> {"eta_q": "2"}).
std::map<NormalSelector, std::map<std::string, std::string>> pair_expectations(
    const CorpusEntry& entry);

// "5.0,3.0" -> two selectors.
std::vector<NormalSelector> parse_selector_list(std::string_view text);

}  // namespace maxcyc
