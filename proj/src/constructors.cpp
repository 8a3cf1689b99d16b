#include "maxcyc/constructors.hpp"

#include <numeric>

#include "maxcyc/errors.hpp"
#include "maxcyc/perm_core.hpp"

namespace maxcyc {

namespace {

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t q) {
  std::uint64_t x = a % q, k = 1;
  while (x != 1 % q) {
    x = x * a % q;
    ++k;
  }
  return k;
}

Permutation from_map(std::size_t degree, auto&& f) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(f(i));
  return Permutation(std::move(images));
}

Permutation cycle_on(std::size_t degree, std::size_t first, std::size_t length) {
  std::vector<std::size_t> c(length);
  std::iota(c.begin(), c.end(), first);
  return Permutation::from_cycles(degree, {c});
}

void check_degree(std::size_t degree, const Limits& limits) {
  if (degree > limits.degree_cap)
    fail(ErrorCode::CapExceeded, "degree " + std::to_string(degree) +
                                     " exceeds the degree cap " +
                                     std::to_string(limits.degree_cap));
}

}  // namespace

std::string parameter_problem(const GroupSpec& s) {
  auto p = [&](std::size_t i) { return s.params.size() > i ? s.params[i] : 0; };
  switch (s.kind) {
    case SpecKind::Cyclic:
      return p(0) >= 1 ? "" : "C(n) needs n >= 1";
    case SpecKind::Dihedral:
      return p(0) >= 2 && p(0) % 2 == 0 ? "" : "D(n) needs an even total order n >= 2";
    case SpecKind::Symmetric:
      return p(0) >= 1 ? "" : "S(n) needs n >= 1";
    case SpecKind::Alternating:
      return p(0) >= 1 ? "" : "A(n) needs n >= 1";
    case SpecKind::ElemAbelian:
      if (!is_prime(p(0))) return "EA(p,k) needs p prime";
      return p(1) >= 1 ? "" : "EA(p,k) needs k >= 1";
    case SpecKind::Heisenberg:
      return is_prime(p(0)) && p(0) != 2 ? "" : "Heis(p) needs an odd prime p";
    case SpecKind::GeneralizedQuaternion:
      return p(0) >= 8 && prime_power_base(p(0)) == 2 ? ""
                                                       : "Q(n) needs n a power of 2 with n >= 8";
    case SpecKind::WreathCpCp:
      return is_prime(p(0)) ? "" : "W(p) needs p prime";
    case SpecKind::FrobeniusAGL1: {
      const auto q = p(0), d = p(1);
      const auto base = prime_power_base(q);
      if (base == 0) return "AGL1(q,d) needs q a prime power";
      if (base == 2 && q > 4) return "AGL1(q,d) needs a cyclic unit group mod q (q odd, 2 or 4)";
      if (d < 1 || euler_phi(q) % d != 0)
        return "AGL1(q,d) needs d dividing the number of units mod q";
      return "";
    }
    case SpecKind::Explicit:
      return s.degree >= 1 ? "" : "Perm needs degree >= 1";
    case SpecKind::Dicyclic12:
    case SpecKind::SG72_50:
    case SpecKind::M16:
    case SpecKind::DirectProduct:
      return "";
  }
  return "";
}

Group realize(const GroupSpec& s, const Limits& limits) {
  if (auto problem = parameter_problem(s); !problem.empty())
    fail(ErrorCode::ArityError, problem);

  auto build = [&](std::size_t degree, std::vector<Permutation> gens) {
    return Group::generate(degree, std::move(gens), limits);
  };

  switch (s.kind) {
    case SpecKind::Cyclic: {
      const std::size_t n = s.params[0];
      check_degree(n, limits);
      return build(n, {cycle_on(n, 0, n)});
    }
    case SpecKind::Dihedral: {
      const std::size_t m = s.params[0] / 2;
      if (m == 1) return build(2, {cycle_on(2, 0, 2)});
      if (m == 2)
        return build(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
      check_degree(m, limits);
      return build(m, {cycle_on(m, 0, m), from_map(m, [&](std::size_t i) { return (m - i) % m; })});
    }
    case SpecKind::Symmetric: {
      const std::size_t n = s.params[0];
      check_degree(n, limits);
      if (n == 1) return build(1, {});
      return build(n, {cycle_on(n, 0, 2), cycle_on(n, 0, n)});
    }
    case SpecKind::Alternating: {
      const std::size_t n = s.params[0];
      check_degree(n, limits);
      if (n < 3) return build(n, {});
      return build(n, {cycle_on(n, 0, 3), n % 2 == 1 ? cycle_on(n, 0, n) : cycle_on(n, 1, n - 1)});
    }
    case SpecKind::ElemAbelian: {
      const std::size_t p = s.params[0], k = s.params[1];
      check_degree(p * k, limits);
      std::vector<Permutation> gens;
      for (std::size_t b = 0; b < k; ++b) gens.push_back(cycle_on(p * k, b * p, p));
      return build(p * k, std::move(gens));
    }
    case SpecKind::Heisenberg: {
      // Maps (x, y) -> (x + a*y + c, y + b) on F_p^2, point x + p*y.
      const std::size_t p = s.params[0], n = p * p;
      check_degree(n, limits);
      auto affine = [&](std::size_t a, std::size_t b, std::size_t c) {
        return from_map(n, [&](std::size_t pt) {
          std::size_t x = pt % p, y = pt / p;
          return (x + a * y + c) % p + p * ((y + b) % p);
        });
      };
      return build(n, {affine(1, 0, 0), affine(0, 1, 0), affine(0, 0, 1)});
    }
    case SpecKind::GeneralizedQuaternion: {
      // Regular action on x^i y^j (point i + m*j), x^m = 1, y^2 = x^(m/2), y x = x^-1 y.
      const std::size_t n = s.params[0], m = n / 2;
      check_degree(n, limits);
      auto left_x = from_map(n, [&](std::size_t pt) {
        std::size_t i = pt % m, j = pt / m;
        return (i + 1) % m + m * j;
      });
      auto left_y = from_map(n, [&](std::size_t pt) {
        std::size_t i = pt % m, j = pt / m;
        std::size_t neg = (m - i) % m;
        return j == 0 ? neg + m : (neg + m / 2) % m;
      });
      return build(n, {left_x, left_y});
    }
    case SpecKind::WreathCpCp: {
      const std::size_t p = s.params[0], n = p * p;
      check_degree(n, limits);
      return build(n, {cycle_on(n, 0, p), from_map(n, [&](std::size_t i) { return (i + p) % n; })});
    }
    case SpecKind::FrobeniusAGL1: {
      // x -> a*x + b over Z/q with a in the order-d subgroup of the units.
      const std::size_t q = s.params[0], d = s.params[1];
      check_degree(q, limits);
      const std::uint64_t phi = euler_phi(q);
      std::uint64_t root = 1;
      for (std::uint64_t g = 1; g < q; ++g) {
        if (std::gcd(g, static_cast<std::uint64_t>(q)) == 1 && mult_order(g, q) == phi) {
          root = g;
          break;
        }
      }
      std::uint64_t a = 1 % q;
      for (std::uint64_t i = 0; i < phi / d; ++i) a = a * root % q;
      auto translate = from_map(q, [&](std::size_t x) { return (x + 1) % q; });
      auto scale = from_map(q, [&](std::size_t x) { return a * x % q; });
      return build(q, {translate, scale});
    }
    case SpecKind::Dicyclic12:
      return build(7, {Permutation::from_cycles(7, {{0, 1, 2}}),
                       Permutation::from_cycles(7, {{1, 2}, {3, 4, 5, 6}})});
    case SpecKind::SG72_50: {
      // Translations of F_3^2 extended by the monomial dihedral group of order 8.
      auto map = [](auto f) {
        return from_map(9, [&](std::size_t pt) {
          auto [x, y] = f(pt % 3, pt / 3);
          return x % 3 + 3 * (y % 3);
        });
      };
      return build(9, {map([](std::size_t x, std::size_t y) { return std::pair{x + 1, y}; }),
                       map([](std::size_t x, std::size_t y) { return std::pair{x, y + 1}; }),
                       map([](std::size_t x, std::size_t y) { return std::pair{x, 3 - y}; }),
                       map([](std::size_t x, std::size_t y) { return std::pair{y, x}; })});
    }
    case SpecKind::M16:
      // <a, b | a^8 = b^2 = 1, b a b = a^5> as x -> x + 1 and x -> 5x on Z/8.
      return build(8, {from_map(8, [](std::size_t x) { return (x + 1) % 8; }),
                       from_map(8, [](std::size_t x) { return 5 * x % 8; })});
    case SpecKind::DirectProduct: {
      Group left = realize(s.factors.at(0), limits);
      Group right = realize(s.factors.at(1), limits);
      check_degree(left.degree() + right.degree(), limits);
      if (left.order() * right.order() > limits.order_cap)
        fail(ErrorCode::CapExceeded, "direct product order exceeds the order cap " +
                                         std::to_string(limits.order_cap));
      return direct_product(left, right);
    }
    case SpecKind::Explicit: {
      check_degree(s.degree, limits);
      std::vector<Permutation> gens;
      for (const auto& cycles : s.generators) gens.push_back(Permutation::from_cycles(s.degree, cycles));
      return build(s.degree, std::move(gens));
    }
  }
  fail(ErrorCode::Internal, "unhandled group kind");
}

Group realize(std::string_view spec_text, const Limits& limits) {
  return realize(parse_spec(spec_text), limits);
}

Group named_normal(const Group& g, std::size_t order, std::size_t index) {
  std::size_t seen = 0;
  for (const auto& s : normal_subgroup_sets(g)) {
    if (s.size() != order) continue;
    if (seen++ == index) return g.subgroup(s);
  }
  fail(ErrorCode::NoSuchNormal, "no normal subgroup of order " + std::to_string(order) +
                                    " with index " + std::to_string(index));
}

}  // namespace maxcyc
