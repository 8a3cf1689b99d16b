#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "maxcyc/corpus.hpp"
#include "maxcyc/group.hpp"
#include "maxcyc/theorems.hpp"

namespace maxcyc {

enum class OutputFormat { Text, Json };

struct RunConfig {
  Limits limits;
  std::size_t jobs = 1;
  OutputFormat format = OutputFormat::Text;
  std::string corpus_path;
};

// Stable suite identifiers, in run order. "values" checks the recorded
// invariants of each corpus entry.
const std::vector<std::string>& suite_names();

// Expands "all" and removes duplicates, keeping suite_names() order.
// Throws UnknownSuite.
std::vector<std::string> resolve_suites(const std::vector<std::string>& requested);

// Reports for one entry, one per applicable suite, in the order given.
std::vector<VerifyReport> run_entry(const CorpusEntry& entry,
                                    const std::vector<std::string>& suites,
                                    const Limits& limits = {});

// Entry-major: all reports of the first entry, then the second, ...
// Work is spread over config.jobs threads; ordering does not depend on it.
std::vector<VerifyReport> run_suites(const std::vector<CorpusEntry>& corpus,
                                     const std::vector<std::string>& suites,
                                     const RunConfig& config);

}  // namespace maxcyc
