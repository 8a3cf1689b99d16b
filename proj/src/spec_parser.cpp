#include "maxcyc/spec.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "maxcyc/errors.hpp"
#include "maxcyc/constructors.hpp"

namespace maxcyc {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Semicolon, Caret, Times, End };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End: return "end of input";
    case Tok::Ident:
    case Tok::Number: return "'" + t.text + "'";
    default: return "'" + t.text + "'";
  }
}

// 'x' is never part of an identifier, so "C(2)xC(3)" lexes as a product.
bool ident_char(char c) {
  return (std::isalnum(static_cast<unsigned char>(c)) || c == '_') && c != 'x';
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Number, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (c == 'x') {
      out.push_back({Tok::Times, i, "x"});
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      out.push_back({Tok::Ident, i, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semicolon; break;
      case '^': kind = Tok::Caret; break;
      default:
        throw ParseError(i, {"group name", "'('", "'x'"}, "'" + std::string(1, c) + "'");
    }
    out.push_back({kind, i, std::string(1, c)});
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

[[noreturn]] void arity_error(std::size_t pos, const std::string& msg) {
  std::ostringstream os;
  os << "invalid parameters at offset " << pos << ": " << msg;
  fail(ErrorCode::ArityError, os.str());
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  GroupSpec parse() {
    GroupSpec s = expr();
    if (peek().kind != Tok::End) throw ParseError(peek().pos, {"'x'", "end of input"}, describe(peek()));
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  const Token& expect(Tok kind, std::vector<std::string> expected) {
    if (peek().kind != kind) throw ParseError(peek().pos, std::move(expected), describe(peek()));
    return next();
  }

  GroupSpec expr() {
    GroupSpec left = atom();
    while (peek().kind == Tok::Times) {
      next();
      left = make_product(std::move(left), atom());
    }
    return left;
  }

  std::uint64_t integer() {
    const Token& t = expect(Tok::Number, {"integer"});
    std::uint64_t value = to_u64(t);
    if (peek().kind == Tok::Caret) {
      next();
      const Token& e = expect(Tok::Number, {"integer exponent"});
      std::uint64_t exponent = to_u64(e);
      std::uint64_t base = value;
      value = 1;
      for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && value > std::numeric_limits<std::uint32_t>::max() / base)
          arity_error(t.pos, "integer too large");
        value *= base;
      }
    }
    return value;
  }

  static std::uint64_t to_u64(const Token& t) {
    if (t.text.size() > 9) arity_error(t.pos, "integer too large");
    return std::stoull(t.text);
  }

  std::vector<std::uint64_t> args(std::size_t count) {
    expect(Tok::LParen, {"'('"});
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < count; ++i) {
      bool last = i + 1 == count;
      out.push_back(integer());
      if (!last) expect(Tok::Comma, {"'^'", "','"});
    }
    expect(Tok::RParen, {"'^'", "')'"});
    return out;
  }

  GroupSpec atom() {
    if (peek().kind == Tok::LParen) {
      next();
      GroupSpec inner = expr();
      expect(Tok::RParen, {"'x'", "')'"});
      return inner;
    }
    const Token& name = expect(Tok::Ident, {"group name", "'('"});
    const std::string& n = name.text;
    const std::size_t at = name.pos;
    struct Entry {
      const char* name;
      SpecKind kind;
      std::size_t arity;
    };
    static constexpr Entry kAtoms[] = {
        {"C", SpecKind::Cyclic, 1},          {"D", SpecKind::Dihedral, 1},
        {"S", SpecKind::Symmetric, 1},       {"A", SpecKind::Alternating, 1},
        {"EA", SpecKind::ElemAbelian, 2},    {"Heis", SpecKind::Heisenberg, 1},
        {"Q", SpecKind::GeneralizedQuaternion, 1},
        {"W", SpecKind::WreathCpCp, 1},      {"AGL1", SpecKind::FrobeniusAGL1, 2},
        {"Dic12", SpecKind::Dicyclic12, 0},  {"SG72_50", SpecKind::SG72_50, 0},
        {"M16", SpecKind::M16, 0},
    };
    GroupSpec s;
    if (n == "Perm") {
      s.kind = SpecKind::Explicit;
      explicit_body(s);
    } else {
      const Entry* found = nullptr;
      for (const auto& e : kAtoms)
        if (n == e.name) found = &e;
      if (found == nullptr) throw ParseError(at, {"group name"}, describe(name));
      s.kind = found->kind;
      if (found->arity > 0) s.params = args(found->arity);
    }
    if (auto problem = parameter_problem(s); !problem.empty()) arity_error(at, problem);
    return s;
  }

  void explicit_body(GroupSpec& s) {
    expect(Tok::LParen, {"'('"});
    const std::size_t degree_pos = peek().pos;
    s.degree = integer();
    if (s.degree < 1 || s.degree > 65535) arity_error(degree_pos, "Perm needs 1 <= degree <= 65535");
    expect(Tok::Semicolon, {"'^'", "';'"});
    if (peek().kind == Tok::RParen) {
      next();
      return;
    }
    while (true) {
      CycleList gen;
      std::vector<bool> used(s.degree, false);
      do {
        expect(Tok::LParen, {"'('"});
        Cycle cycle;
        while (peek().kind != Tok::RParen) {
          if (!cycle.empty() && peek().kind == Tok::Comma) next();
          std::size_t pt_pos = peek().pos;
          std::uint64_t pt = integer();
          if (pt >= s.degree) arity_error(pt_pos, "point out of range for the degree");
          if (used[pt]) arity_error(pt_pos, "point repeated within one generator");
          used[pt] = true;
          cycle.push_back(pt);
          if (peek().kind == Tok::End) throw ParseError(peek().pos, {"integer", "')'"}, describe(peek()));
        }
        next();
        gen.push_back(std::move(cycle));
      } while (peek().kind == Tok::LParen);
      s.generators.push_back(std::move(gen));
      if (peek().kind == Tok::Comma) {
        next();
        continue;
      }
      expect(Tok::RParen, {"'('", "','", "')'"});
      return;
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void render_into(std::ostringstream& os, const GroupSpec& s) {
  auto one = [&](const char* name) { os << name << '(' << s.params.at(0) << ')'; };
  switch (s.kind) {
    case SpecKind::Cyclic: one("C"); break;
    case SpecKind::Dihedral: one("D"); break;
    case SpecKind::Symmetric: one("S"); break;
    case SpecKind::Alternating: one("A"); break;
    case SpecKind::ElemAbelian: os << "EA(" << s.params.at(0) << ',' << s.params.at(1) << ')'; break;
    case SpecKind::Heisenberg: one("Heis"); break;
    case SpecKind::GeneralizedQuaternion: one("Q"); break;
    case SpecKind::WreathCpCp: one("W"); break;
    case SpecKind::FrobeniusAGL1: os << "AGL1(" << s.params.at(0) << ',' << s.params.at(1) << ')'; break;
    case SpecKind::Dicyclic12: os << "Dic12"; break;
    case SpecKind::SG72_50: os << "SG72_50"; break;
    case SpecKind::M16: os << "M16"; break;
    case SpecKind::DirectProduct: {
      render_into(os, s.factors.at(0));
      os << " x ";
      bool paren = s.factors.at(1).kind == SpecKind::DirectProduct;
      if (paren) os << '(';
      render_into(os, s.factors.at(1));
      if (paren) os << ')';
      break;
    }
    case SpecKind::Explicit: {
      os << "Perm(" << s.degree << ';';
      for (std::size_t g = 0; g < s.generators.size(); ++g) {
        os << (g == 0 ? " " : ", ");
        for (const auto& cycle : s.generators[g]) {
          os << '(';
          for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
          os << ')';
        }
      }
      os << ')';
      break;
    }
  }
}

}  // namespace

GroupSpec make_product(GroupSpec left, GroupSpec right) {
  GroupSpec s;
  s.kind = SpecKind::DirectProduct;
  s.factors.push_back(std::move(left));
  s.factors.push_back(std::move(right));
  return s;
}

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string render(const GroupSpec& spec) {
  std::ostringstream os;
  render_into(os, spec);
  return os.str();
}

}  // namespace maxcyc
