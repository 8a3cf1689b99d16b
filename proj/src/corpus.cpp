#include "maxcyc/corpus.hpp"

#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

#include "maxcyc/errors.hpp"

namespace maxcyc {

namespace {

enum class ValueKind { Count, Bool, Source, Class, FrobeniusExpect, OrderList, Selectors };

struct KeyRule {
  std::regex pattern;
  ValueKind kind;
};

const std::vector<KeyRule>& key_rules() {
  static const std::vector<KeyRule> rules = [] {
    std::vector<KeyRule> r;
    auto add = [&](const char* re, ValueKind k) { r.push_back({std::regex(re), k}); };
    add("source", ValueKind::Source);
    add("order|eta|l|gminus", ValueKind::Count);
    add("maxcyc", ValueKind::OrderList);
    add("class", ValueKind::Class);
    add("xsub\\.order", ValueKind::Count);
    add("xsub\\.cyclic", ValueKind::Bool);
    add("gk\\.(components|edges)", ValueKind::Count);
    add("n[0-9]+\\.[0-9]+\\.(eta_q|eta_star)", ValueKind::Count);
    add("n[0-9]+\\.[0-9]+\\.(equal|union|in_derived|derived_hyp)", ValueKind::Bool);
    add("frobenius", ValueKind::Count);
    add("frobenius\\.expect", ValueKind::FrobeniusExpect);
    add("frobenius\\.(sum|eta_h|eta_star)", ValueKind::Count);
    add("join", ValueKind::Selectors);
    add("join\\.eta_q", ValueKind::Count);
    return r;
  }();
  return rules;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void corpus_fail(std::size_t line, const std::string& msg) {
  fail(ErrorCode::CorpusError, "corpus line " + std::to_string(line) + ": " + msg);
}

bool is_count(std::string_view v) {
  std::uint64_t x = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  return ec == std::errc{} && p == v.data() + v.size() && !v.empty();
}

std::size_t to_size(std::string_view v) {
  std::size_t x = 0;
  std::from_chars(v.data(), v.data() + v.size(), x);
  return x;
}

bool valid_value(ValueKind kind, const std::string& v) {
  switch (kind) {
    case ValueKind::Count: return is_count(v);
    case ValueKind::Bool: return v == "true" || v == "false";
    case ValueKind::Source: return v == "reference" || v == "derived";
    case ValueKind::Class: return v == "exp-p" || v == "frobenius" || v == "a5" || v == "none";
    case ValueKind::FrobeniusExpect: return v == "holds" || v == "not-frobenius";
    case ValueKind::OrderList: {
      std::stringstream ss(v);
      std::string part;
      bool any = false;
      while (std::getline(ss, part, ',')) {
        if (!is_count(trim(part))) return false;
        any = true;
      }
      return any;
    }
    case ValueKind::Selectors:
      try {
        return !parse_selector_list(v).empty();
      } catch (const Error&) {
        return false;
      }
  }
  return false;
}

// Splits on ';' outside parentheses.
std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '(') ++depth;
    else if (line[i] == ')') --depth;
    else if (line[i] == ';' && depth == 0) {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(line.substr(start)));
  return out;
}

}  // namespace

std::optional<std::string> CorpusEntry::get(const std::string& key) const {
  auto it = expect.find(key);
  if (it == expect.end()) return std::nullopt;
  return it->second;
}

std::string selector_name(const NormalSelector& s) {
  return "n" + std::to_string(s.order) + "." + std::to_string(s.index);
}

std::vector<NormalSelector> parse_selector_list(std::string_view text) {
  static const std::regex item("\\s*([0-9]+)\\.([0-9]+)\\s*");
  std::vector<NormalSelector> out;
  std::stringstream ss{std::string(text)};
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::smatch m;
    if (!std::regex_match(part, m, item))
      fail(ErrorCode::InvalidArgument, "bad normal-subgroup selector '" + part + "'");
    out.push_back({to_size(m[1].str()), to_size(m[2].str())});
  }
  return out;
}

std::vector<CorpusEntry> parse_corpus(std::string_view text) {
  std::vector<CorpusEntry> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) {
      if (nl == text.size()) break;
      continue;
    }

    const auto fields = split_fields(raw);
    CorpusEntry e;
    e.line = line_no;
    e.text = fields.front();
    try {
      e.spec = parse_spec(e.text);
    } catch (const Error& err) {
      corpus_fail(line_no, err.what());
    }
    for (std::size_t i = 1; i < fields.size(); ++i) {
      const std::string& f = fields[i];
      if (f.empty()) continue;
      const auto eq = f.find('=');
      if (eq == std::string::npos) corpus_fail(line_no, "expected key=value, found '" + f + "'");
      const std::string key = trim(f.substr(0, eq));
      const std::string value = trim(f.substr(eq + 1));
      const KeyRule* rule = nullptr;
      for (const auto& r : key_rules())
        if (std::regex_match(key, r.pattern)) {
          rule = &r;
          break;
        }
      if (!rule) corpus_fail(line_no, "unknown key '" + key + "'");
      if (!valid_value(rule->kind, value))
        corpus_fail(line_no, "bad value '" + value + "' for key '" + key + "'");
      if (e.expect.count(key))
        corpus_fail(line_no, "duplicate key '" + key + "'");
      if (key == "source") e.source = value;
      e.expect[key] = value;
    }
    e.expect.erase("source");
    out.push_back(std::move(e));
    if (nl == text.size()) break;
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot read corpus file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str());
}

std::map<NormalSelector, std::map<std::string, std::string>> pair_expectations(
    const CorpusEntry& entry) {
  static const std::regex key("n([0-9]+)\\.([0-9]+)\\.([a-z_]+)");
  std::map<NormalSelector, std::map<std::string, std::string>> out;
  for (const auto& [k, v] : entry.expect) {
    std::smatch m;
    if (!std::regex_match(k, m, key)) continue;
    out[{to_size(m[1].str()), to_size(m[2].str())}][m[3].str()] = v;
  }
  return out;
}

}  // namespace maxcyc
