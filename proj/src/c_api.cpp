#include "maxcyc/maxcyc.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "maxcyc/constructors.hpp"
#include "maxcyc/cyclic.hpp"
#include "maxcyc/errors.hpp"
#include "maxcyc/perm_core.hpp"
#include "maxcyc/render.hpp"
#include "maxcyc/theorems.hpp"
#include "maxcyc/verify.hpp"

struct maxcyc_group {
  maxcyc::Group group;
};

namespace {

thread_local std::string last_error;

maxcyc_status to_status(maxcyc::ErrorCode code) {
  using maxcyc::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return MAXCYC_E_INVALID_ARGUMENT;
    case ErrorCode::CapExceeded: return MAXCYC_E_CAP_EXCEEDED;
    case ErrorCode::NotSubgroup: return MAXCYC_E_NOT_SUBGROUP;
    case ErrorCode::NotNormal: return MAXCYC_E_NOT_NORMAL;
    case ErrorCode::NotProper: return MAXCYC_E_NOT_PROPER;
    case ErrorCode::NoSuchNormal: return MAXCYC_E_NO_SUCH_NORMAL;
    case ErrorCode::ParseError: return MAXCYC_E_PARSE;
    case ErrorCode::ArityError: return MAXCYC_E_ARITY;
    case ErrorCode::NotPGroup: return MAXCYC_E_NOT_P_GROUP;
    case ErrorCode::CyclicGroup: return MAXCYC_E_CYCLIC_GROUP;
    case ErrorCode::NotFrobenius: return MAXCYC_E_NOT_FROBENIUS;
    case ErrorCode::NotExponentP: return MAXCYC_E_NOT_EXPONENT_P;
    case ErrorCode::HypothesisFailed: return MAXCYC_E_HYPOTHESIS_FAILED;
    case ErrorCode::ClassificationFailed: return MAXCYC_E_CLASSIFICATION_FAILED;
    case ErrorCode::UnknownSuite: return MAXCYC_E_UNKNOWN_SUITE;
    case ErrorCode::CorpusError: return MAXCYC_E_CORPUS;
    case ErrorCode::IoError: return MAXCYC_E_IO;
    case ErrorCode::Internal: return MAXCYC_E_INTERNAL;
  }
  return MAXCYC_E_INTERNAL;
}

template <class F>
maxcyc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return MAXCYC_OK;
  } catch (const maxcyc::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return MAXCYC_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return MAXCYC_E_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) maxcyc::fail(maxcyc::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

maxcyc::Limits limits_of(const maxcyc_limits* l) {
  maxcyc::Limits out;
  if (!l) return out;
  if (l->order_cap < 1 || l->degree_cap < 1)
    maxcyc::fail(maxcyc::ErrorCode::InvalidArgument, "caps must be at least 1");
  out.order_cap = l->order_cap;
  out.degree_cap = l->degree_cap;
  return out;
}

maxcyc::OutputFormat format_of(maxcyc_format fmt) {
  if (fmt == MAXCYC_FORMAT_JSON) return maxcyc::OutputFormat::Json;
  if (fmt == MAXCYC_FORMAT_TEXT) return maxcyc::OutputFormat::Text;
  maxcyc::fail(maxcyc::ErrorCode::InvalidArgument, "unknown output format");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class F>
maxcyc_status render_into(const maxcyc_group* group, char** out, F&& fn) {
  return guarded([&] {
    need(group, "group");
    need(out, "out");
    *out = copy_string(fn(group->group));
  });
}

}  // namespace

extern "C" {

maxcyc_limits maxcyc_default_limits(void) {
  const maxcyc::Limits l;
  return {l.order_cap, l.degree_cap};
}

const char* maxcyc_last_error(void) { return last_error.c_str(); }

const char* maxcyc_status_name(maxcyc_status status) {
  switch (status) {
    case MAXCYC_OK: return "Ok";
    case MAXCYC_E_INVALID_ARGUMENT: return "InvalidArgument";
    case MAXCYC_E_CAP_EXCEEDED: return "CapExceeded";
    case MAXCYC_E_NOT_SUBGROUP: return "NotSubgroup";
    case MAXCYC_E_NOT_NORMAL: return "NotNormal";
    case MAXCYC_E_NOT_PROPER: return "NotProper";
    case MAXCYC_E_NO_SUCH_NORMAL: return "NoSuchNormal";
    case MAXCYC_E_PARSE: return "ParseError";
    case MAXCYC_E_ARITY: return "ArityError";
    case MAXCYC_E_NOT_P_GROUP: return "NotPGroup";
    case MAXCYC_E_CYCLIC_GROUP: return "CyclicGroup";
    case MAXCYC_E_NOT_FROBENIUS: return "NotFrobenius";
    case MAXCYC_E_NOT_EXPONENT_P: return "NotExponentP";
    case MAXCYC_E_HYPOTHESIS_FAILED: return "HypothesisFailed";
    case MAXCYC_E_CLASSIFICATION_FAILED: return "ClassificationFailed";
    case MAXCYC_E_UNKNOWN_SUITE: return "UnknownSuite";
    case MAXCYC_E_CORPUS: return "CorpusError";
    case MAXCYC_E_IO: return "IoError";
    case MAXCYC_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

maxcyc_status maxcyc_group_from_spec(const char* spec, const maxcyc_limits* limits,
                                     maxcyc_group** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = nullptr;
    maxcyc::Group g = maxcyc::realize(std::string_view(spec), limits_of(limits));
    *out = new maxcyc_group{std::move(g)};
  });
}

void maxcyc_group_free(maxcyc_group* group) { delete group; }

#define MAXCYC_SIZE_GETTER(name, expr)                         \
  maxcyc_status name(const maxcyc_group* group, size_t* out) { \
    return guarded([&] {                                       \
      need(group, "group");                                    \
      need(out, "out");                                        \
      const maxcyc::Group& g = group->group;                   \
      *out = (expr);                                           \
    });                                                        \
  }

MAXCYC_SIZE_GETTER(maxcyc_group_order, g.order())
MAXCYC_SIZE_GETTER(maxcyc_group_degree, g.degree())
MAXCYC_SIZE_GETTER(maxcyc_eta, maxcyc::CyclicStructure(g).eta())
MAXCYC_SIZE_GETTER(maxcyc_l, maxcyc::CyclicStructure(g).l())
MAXCYC_SIZE_GETTER(maxcyc_gminus_size, maxcyc::CyclicStructure(g).g_minus().size())
MAXCYC_SIZE_GETTER(maxcyc_normal_count, maxcyc::normal_subgroups(g).size())

#undef MAXCYC_SIZE_GETTER

maxcyc_status maxcyc_normal(const maxcyc_group* group, size_t order, size_t index,
                            maxcyc_group** out) {
  return guarded([&] {
    need(group, "group");
    need(out, "out");
    *out = nullptr;
    *out = new maxcyc_group{maxcyc::named_normal(group->group, order, index)};
  });
}

maxcyc_status maxcyc_quotient_eta(const maxcyc_group* group, size_t order, size_t index,
                                  size_t* out) {
  return guarded([&] {
    need(group, "group");
    need(out, "out");
    const maxcyc::Group& g = group->group;
    *out = maxcyc::quotient_eta(g, g.embed(maxcyc::named_normal(g, order, index)));
  });
}

maxcyc_status maxcyc_render_eta(const maxcyc_group* group, maxcyc_format fmt, char** out) {
  return render_into(group, out, [&](const maxcyc::Group& g) {
    return maxcyc::render_eta(g, format_of(fmt));
  });
}

maxcyc_status maxcyc_render_normals(const maxcyc_group* group, maxcyc_format fmt, char** out) {
  return render_into(group, out, [&](const maxcyc::Group& g) {
    return maxcyc::render_normals(g, format_of(fmt));
  });
}

maxcyc_status maxcyc_render_quot(const maxcyc_group* group, size_t order, size_t index,
                                 maxcyc_format fmt, char** out) {
  return render_into(group, out, [&](const maxcyc::Group& g) {
    return maxcyc::render_quot(g, order, index, format_of(fmt));
  });
}

maxcyc_status maxcyc_render_xsub(const maxcyc_group* group, maxcyc_format fmt, char** out) {
  return render_into(group, out, [&](const maxcyc::Group& g) {
    return maxcyc::render_xsub(g, format_of(fmt));
  });
}

maxcyc_status maxcyc_render_gminus(const maxcyc_group* group, maxcyc_format fmt, char** out) {
  return render_into(group, out, [&](const maxcyc::Group& g) {
    return maxcyc::render_gminus(g, format_of(fmt));
  });
}

maxcyc_status maxcyc_render_gkgraph(const maxcyc_group* group, maxcyc_format fmt, char** out) {
  return render_into(group, out, [&](const maxcyc::Group& g) {
    return maxcyc::render_gkgraph(g, format_of(fmt));
  });
}

maxcyc_status maxcyc_verify(const char* corpus_path, const char* suites,
                            const maxcyc_limits* limits, size_t jobs, maxcyc_format fmt,
                            char** out, int* all_passed) {
  return guarded([&] {
    need(corpus_path, "corpus_path");
    need(suites, "suites");
    need(out, "out");
    need(all_passed, "all_passed");
    *out = nullptr;
    std::vector<std::string> names;
    std::stringstream ss(suites);
    for (std::string part; std::getline(ss, part, ',');)
      if (!part.empty()) names.push_back(part);
    if (names.empty()) maxcyc::fail(maxcyc::ErrorCode::UnknownSuite, "no suite given");

    maxcyc::RunConfig config;
    config.limits = limits_of(limits);
    config.jobs = jobs == 0 ? 1 : jobs;
    config.format = format_of(fmt);
    config.corpus_path = corpus_path;
    const auto resolved = maxcyc::resolve_suites(names);
    const auto corpus = maxcyc::load_corpus(config.corpus_path);
    const auto reports = maxcyc::run_suites(corpus, resolved, config);
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.passed;
    *out = copy_string(maxcyc::render_reports(reports, config.format));
    *all_passed = ok ? 1 : 0;
  });
}

void maxcyc_string_free(char* s) { std::free(s); }

}  // extern "C"
