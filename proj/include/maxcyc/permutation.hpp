#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace maxcyc {

using Point = std::uint16_t;

// A bijection of {0, ..., degree-1}. Products compose like functions:
// (a * b)(i) == a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  // Cycles are zero-based point lists; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  Permutation operator*(const Permutation& rhs) const;

  // Non-trivial cycles only, each starting at its smallest point.
  std::vector<std::vector<std::size_t>> cycles() const;
  // "(0 1 2)(3 4)"; the identity renders as "()".
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;
  // Lexicographic on the image list.
  std::strong_ordering operator<=>(const Permutation& rhs) const {
    return images_ <=> rhs.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

// Least n >= 1 with a^n == identity (lcm of the cycle lengths).
std::uint64_t perm_order(const Permutation& a);

}  // namespace maxcyc
