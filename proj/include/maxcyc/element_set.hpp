#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace maxcyc {

using ElemId = std::uint32_t;

// Subset of a group's elements, addressed by element id. Two sets over the
// same group are equal iff their word vectors are equal, so the words double
// as the canonical hashable key of the set.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool contains(ElemId x) const noexcept {
    return (words_[x >> 6] >> (x & 63u)) & 1u;
  }
  void insert(ElemId x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63u); }
  void erase(ElemId x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63u)); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  // Set difference.
  ElementSet& operator-=(const ElementSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        auto bit = static_cast<unsigned>(std::countr_zero(bits));
        f(static_cast<ElemId>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::vector<ElemId> to_vector() const {
    std::vector<ElemId> out;
    for_each([&](ElemId x) { out.push_back(x); });
    return out;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  bool operator==(const ElementSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

inline ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
inline ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
inline ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ s.universe();
    for (auto w : s.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace maxcyc
