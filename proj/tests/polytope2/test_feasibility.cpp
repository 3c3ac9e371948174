#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/polytope2/feasibility.hpp"
#include "transportlab/polytope2/vertices.hpp"

using namespace transportlab;
using oracle::ints;

namespace {

// Brute-force definition of genericity over all subset pairs.
bool generic_by_definition(const std::vector<long>& u, const std::vector<long>& v) {
  const std::size_t p = u.size(), q = v.size();
  for (std::size_t Y = 1; Y < (1u << p); ++Y) {
    for (std::size_t Z = 1; Z < (1u << q); ++Z) {
      if (Y == (1u << p) - 1 && Z == (1u << q) - 1) continue;
      long a = 0, b = 0;
      for (std::size_t i = 0; i < p; ++i) a += (Y >> i & 1) ? u[i] : 0;
      for (std::size_t j = 0; j < q; ++j) b += (Z >> j & 1) ? v[j] : 0;
      if (a == b) return false;
    }
  }
  return true;
}

Margins2 to_margins(const std::vector<long>& u, const std::vector<long>& v) {
  Margins2 m;
  for (long x : u) m.u.emplace_back(x);
  for (long x : v) m.v.emplace_back(x);
  return m;
}

}  // namespace

TEST_CASE("feasibility") {
  CHECK(is_feasible({ints({5, 5, 1}), ints({2, 7, 2})}));
  CHECK_FALSE(is_feasible({ints({1, 2}), ints({4})}));
  CHECK(is_feasible({ints({0, 0}), ints({0, 0})}));
  CHECK_THROWS_AS(is_feasible({ints({-1, 2}), ints({1})}), Error);
  try {
    is_feasible({ints({-1, 2}), ints({1})});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidMargins);
  }
}

TEST_CASE("dimension formula") {
  CHECK(dimension2(3, 3) == 4);
  CHECK(dimension2(1, 7) == 0);
  CHECK(dimension2(5, 2) == 4);
}

TEST_CASE("northwest corner rule") {
  const auto x = northwest_corner({ints({5, 5, 1}), ints({2, 7, 2})});
  CHECK(x == Table2::from_rows({ints({2, 3, 0}), ints({0, 4, 1}), ints({0, 0, 1})}));
  CHECK(northwest_corner({ints({1}), ints({1})}) == Table2::from_rows({ints({1})}));
  CHECK(northwest_corner({ints({2, 2}), ints({2, 2})}) == Table2::from_rows({ints({2, 0}), ints({0, 2})}));
  CHECK_THROWS_AS(northwest_corner({ints({1, 2}), ints({4})}), Error);
  const Margins2 frac{{make_rational(1, 2), make_rational(3, 2)}, {Rational(1), Rational(1)}};
  const auto y = northwest_corner(frac);
  CHECK(y.satisfies(frac));
  CHECK(is_vertex(y, frac));
}

TEST_CASE("northwest corner solves exactly the feasible instances") {
  std::mt19937_64 rng(2024);
  int feasible = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t p = 1 + rng() % 5, q = 1 + rng() % 5;
    Margins2 m;
    for (std::size_t i = 0; i < p; ++i) m.u.emplace_back(static_cast<long>(rng() % 6));
    for (std::size_t j = 0; j < q; ++j) m.v.emplace_back(static_cast<long>(rng() % 6));
    if (rng() % 2) {  // force balance half of the time
      const Rational diff = sum(m.u) - sum(m.v);
      if (diff > 0) m.v.back() += diff;
      if (diff < 0) m.u.back() -= diff;
    }
    bool solved = true;
    try {
      const auto x = northwest_corner(m);
      CHECK(x.satisfies(m));
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Infeasible);
      solved = false;
    }
    CHECK(solved == is_feasible(m));
    feasible += solved;
  }
  CHECK(feasible > 300);
}

TEST_CASE("genericity") {
  CHECK(is_generic({ints({5, 5, 1}), ints({2, 7, 2})}));
  CHECK_FALSE(is_generic({ints({1, 1}), ints({1, 1})}));
  CHECK_FALSE(is_generic(central_margins(2, 4)));
  CHECK_FALSE(is_generic(central_margins(3, 3)));
  CHECK(is_generic(central_margins(2, 3)));
  CHECK_THROWS_AS(is_generic(central_margins(12, 13)), Error);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const std::size_t p = 1 + rng() % 4, q = 1 + rng() % 4;
    std::vector<long> u(p), v(q);
    for (auto& x : u) x = 1 + static_cast<long>(rng() % 6);
    long total = 0;
    for (auto x : u) total += x;
    auto w = oracle::random_composition(rng, q, total, 6);
    if (w.empty()) continue;
    CHECK(is_generic(to_margins(u, w)) == generic_by_definition(u, w));
  }
}

TEST_CASE("special margins") {
  CHECK(birkhoff_margins(2) == Margins2{ints({1, 1}), ints({1, 1})});
  CHECK(central_margins(2, 3) == Margins2{ints({3, 3}), ints({2, 2, 2})});
}

TEST_CASE("perturbation yields nearby generic margins") {
  for (const auto& m : {birkhoff_margins(3), central_margins(3, 3), Margins2{ints({2, 2}), ints({1, 1, 2})}}) {
    const auto g = perturb_to_generic(m);
    CHECK(is_feasible(g));
    CHECK(is_generic(g));
    for (std::size_t i = 0; i < m.p(); ++i) {
      CHECK(g.u[i] > m.u[i]);
      CHECK(g.u[i] - m.u[i] < make_rational(1, 2));
    }
  }
}
