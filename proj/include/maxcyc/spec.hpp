#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace maxcyc {

enum class SpecKind {
  Cyclic,                 // C(n)
  Dihedral,               // D(n), n = total order
  Symmetric,              // S(n)
  Alternating,            // A(n)
  ElemAbelian,            // EA(p,k)
  Heisenberg,             // Heis(p)
  GeneralizedQuaternion,  // Q(n), n = total order
  WreathCpCp,             // W(p)
  FrobeniusAGL1,          // AGL1(q,d)
  Dicyclic12,             // Dic12
  SG72_50,                // SG72_50
  M16,                    // M16
  DirectProduct,          // left x right
  Explicit,               // Perm(degree; generators)
};

using Cycle = std::vector<std::size_t>;
using CycleList = std::vector<Cycle>;

struct GroupSpec {
  SpecKind kind = SpecKind::Cyclic;
  std::vector<std::uint64_t> params;
  std::vector<GroupSpec> factors;  // DirectProduct: {left, right}
  std::size_t degree = 0;          // Explicit only
  std::vector<CycleList> generators;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// Grammar (whitespace-insensitive, `x` is a left-associative product):
//   expr  := atom ('x' atom)*
//   atom  := C(n) | D(n) | S(n) | A(n) | EA(p,k) | Heis(p) | Q(n) | W(p)
//          | AGL1(q,d) | Dic12 | SG72_50 | M16 | Perm(degree; gen, ...)
//          | '(' expr ')'
//   gen   := cycle+          cycle := '(' [int ([,] int)*] ')'
//   int   := digits ['^' digits]
// Throws ParseError (byte offset, expected set) or an ArityError.
GroupSpec parse_spec(std::string_view text);

// Canonical text form; parse_spec(render(s)) == s.
std::string render(const GroupSpec& spec);

GroupSpec make_product(GroupSpec left, GroupSpec right);

}  // namespace maxcyc
