// maxcyc command-line front end. Talks to the library only through maxcyc.h.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "maxcyc/maxcyc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitError = 2;

struct Options {
  std::string format = "text";
  std::size_t order_cap = 0;
  std::size_t degree_cap = 0;
  std::size_t jobs = 1;
  std::string spec;
  std::size_t order = 0;
  std::size_t index = 0;
  std::vector<std::string> suites;
  std::string corpus;
};

int report_error(maxcyc_status st) {
  std::cerr << "maxcyc: " << maxcyc_status_name(st) << ": " << maxcyc_last_error() << "\n";
  return kExitError;
}

int emit(maxcyc_status st, char* text) {
  if (st != MAXCYC_OK || !text) return report_error(st);
  std::fputs(text, stdout);
  maxcyc_string_free(text);
  return kExitOk;
}

using Renderer = maxcyc_status (*)(const maxcyc_group*, maxcyc_format, char**);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal cyclic subgroup invariants of finite permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  const maxcyc_limits defaults = maxcyc_default_limits();
  opt.order_cap = defaults.order_cap;
  opt.degree_cap = defaults.degree_cap;

  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--order-cap", opt.order_cap, "Largest group order to construct")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--degree-cap", opt.degree_cap, "Largest permutation degree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--jobs", opt.jobs, "Worker threads for verify")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  struct GroupCommand {
    const char* name;
    const char* help;
    Renderer render;
  };
  const std::vector<GroupCommand> group_commands = {
      {"eta", "eta, l, |G^-| and the classes of maximal cyclic subgroups", maxcyc_render_eta},
      {"normals", "normal subgroups with their generators", maxcyc_render_normals},
      {"xsub", "largest normal X with eta(G/X) = eta(G) (noncyclic p-groups)", maxcyc_render_xsub},
      {"gminus", "elements not generating a maximal cyclic subgroup", maxcyc_render_gminus},
      {"gkgraph", "prime graph of element orders", maxcyc_render_gkgraph},
  };
  std::vector<std::pair<CLI::App*, Renderer>> simple;
  for (const auto& c : group_commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("spec", opt.spec, "Group spec, e.g. \"S(3) x D(10)\"")->required();
    simple.emplace_back(sub, c.render);
  }

  CLI::App* quot = app.add_subcommand("quot", "conditions for eta(G/N) = eta(G) on one pair");
  quot->add_option("spec", opt.spec, "Group spec")->required();
  quot->add_option("--order", opt.order, "Order of N")->required();
  quot->add_option("--index", opt.index, "Index of N among normal subgroups of that order")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run verification suites over a corpus");
  verify->add_option("--suite", opt.suites, "Suite names or \"all\" (repeat or comma separate)")
      ->delimiter(',');
  verify->add_option("--corpus", opt.corpus, "Corpus file (default: $MAXCYC_CORPUS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  const maxcyc_limits limits{opt.order_cap, opt.degree_cap};
  const maxcyc_format fmt = opt.format == "json" ? MAXCYC_FORMAT_JSON : MAXCYC_FORMAT_TEXT;

  if (verify->parsed()) {
    std::string corpus = opt.corpus;
    if (corpus.empty())
      if (const char* env = std::getenv("MAXCYC_CORPUS")) corpus = env;
#ifdef MAXCYC_DEFAULT_CORPUS
    if (corpus.empty()) corpus = MAXCYC_DEFAULT_CORPUS;
#endif
    std::string suites;
    for (const auto& s : opt.suites) suites += (suites.empty() ? "" : ",") + s;
    if (suites.empty()) suites = "all";
    char* text = nullptr;
    int passed = 0;
    const maxcyc_status st =
        maxcyc_verify(corpus.c_str(), suites.c_str(), &limits, opt.jobs, fmt, &text, &passed);
    if (st != MAXCYC_OK) return report_error(st);
    std::fputs(text, stdout);
    maxcyc_string_free(text);
    return passed ? kExitOk : kExitFailed;
  }

  maxcyc_group* group = nullptr;
  if (maxcyc_status st = maxcyc_group_from_spec(opt.spec.c_str(), &limits, &group); st != MAXCYC_OK)
    return report_error(st);

  int code = kExitError;
  char* text = nullptr;
  if (quot->parsed()) {
    const maxcyc_status st = maxcyc_render_quot(group, opt.order, opt.index, fmt, &text);
    code = emit(st, text);
  } else {
    for (auto [sub, render] : simple) {
      if (!sub->parsed()) continue;
      const maxcyc_status st = render(group, fmt, &text);
      code = emit(st, text);
    }
  }
  maxcyc_group_free(group);
  return code;
}
