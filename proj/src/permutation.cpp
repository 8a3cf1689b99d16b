#include "maxcyc/permutation.hpp"

#include <numeric>
#include <sstream>

#include "maxcyc/errors.hpp"

namespace maxcyc {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      fail(ErrorCode::InvalidArgument, "image list is not a permutation");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t from = cycle[i];
      std::size_t to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree) {
        std::ostringstream os;
        os << "cycle point " << (from >= degree ? from : to)
           << " out of range for degree " << degree;
        fail(ErrorCode::InvalidArgument, os.str());
      }
      if (used[from])
        fail(ErrorCode::InvalidArgument,
             "point " + std::to_string(from) + " appears twice in one permutation");
      used[from] = true;
      images[from] = static_cast<Point>(to);
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation result(degree());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[images_[i]] = static_cast<Point>(i);
  return result;
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree())
    fail(ErrorCode::InvalidArgument, "degree mismatch in permutation product");
  Permutation result;
  result.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    result.images_[i] = images_[rhs.images_[i]];
  return result;
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cycle : cs) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) os << ' ';
      os << cycle[i];
    }
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t perm_order(const Permutation& a) {
  std::uint64_t order = 1;
  for (const auto& cycle : a.cycles())
    order = std::lcm(order, static_cast<std::uint64_t>(cycle.size()));
  return order;
}

}  // namespace maxcyc
