#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "maxcyc/group.hpp"
#include "maxcyc/theorems.hpp"
#include "maxcyc/verify.hpp"

namespace maxcyc {

// Text output is line oriented; JSON output is a single document, except for
// verify, which writes one compact report per line.
std::string render_eta(const Group& g, OutputFormat fmt);
std::string render_normals(const Group& g, OutputFormat fmt);
std::string render_quot(const Group& g, std::size_t order, std::size_t index, OutputFormat fmt);
std::string render_xsub(const Group& g, OutputFormat fmt);
std::string render_gminus(const Group& g, OutputFormat fmt);
std::string render_gkgraph(const Group& g, OutputFormat fmt);
std::string render_reports(const std::vector<VerifyReport>& reports, OutputFormat fmt);

}  // namespace maxcyc
