#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "transportlab/core/constraint_system.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/lattice/markov.hpp"

using namespace transportlab;

namespace {

IntMargins2 int_margins(const std::vector<long>& u, const std::vector<long>& v) {
  IntMargins2 m;
  for (long x : u) m.u.emplace_back(x);
  for (long x : v) m.v.emplace_back(x);
  return m;
}

}  // namespace

TEST_CASE("graver moves are the 2x2 rectangles") {
  CHECK(graver_moves(2, 2).moves.size() == 1);
  CHECK(graver_moves(3, 3).moves.size() == 9);
  CHECK(graver_moves(4, 5).moves.size() == 60);
  CHECK(graver_moves(1, 5).moves.empty());
  for (const auto& mv : graver_moves(3, 4).moves) {
    const auto t = mv.table(3, 4);
    CHECK(std::count(t.entries.begin(), t.entries.end(), 0) == 12 - 4);
    CHECK(std::accumulate(t.entries.begin(), t.entries.end(), 0L) == 0);
    for (std::size_t i = 0; i < 3; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < 4; ++j) s += t(i, j);
      CHECK(s == 0);
    }
    for (std::size_t j = 0; j < 4; ++j) {
      long s = 0;
      for (std::size_t i = 0; i < 3; ++i) s += t(i, j);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("moves lie in the kernel of the constraint matrix") {
  const Margins2 m{oracle::ints({1, 1, 1}), oracle::ints({1, 1, 1, 0})};
  const auto cs = build_constraint_system(m);
  for (const auto& mv : graver_moves(3, 4).moves) {
    const auto t = mv.table(3, 4);
    for (std::size_t r = 0; r < cs.A.rows(); ++r) {
      Rational s = 0;
      for (std::size_t c = 0; c < cs.A.cols(); ++c) s += cs.A(r, c) * t.entries[c];
      CHECK(s == 0);
    }
  }
}

TEST_CASE("moves connect the integer tables") {
  CHECK(moves_connect(int_margins({1, 1}, {1, 1})));
  CHECK(moves_connect(int_margins({2, 2}, {2, 2})));
  CHECK(moves_connect(int_margins({3}, {1, 2})));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t p = 2 + rng() % 3, q = 2 + rng() % 3;
    std::vector<long> u(p);
    for (auto& x : u) x = 1 + static_cast<long>(rng() % 4);
    const long total = std::accumulate(u.begin(), u.end(), 0L);
    std::vector<long> v(q, 0);
    for (long k = 0; k < total; ++k) ++v[rng() % q];
    CHECK(moves_connect(int_margins(u, v)));
  }
}

TEST_CASE("sampler starts at the northwest corner and keeps the margins") {
  const auto m = int_margins({3, 2, 4}, {2, 5, 2});
  const auto nw = integer_nw_corner(m);
  CHECK(nw.entries == std::vector<std::int64_t>{2, 1, 0, 0, 2, 0, 0, 2, 2});
  CHECK(sample_table(m, 0, 1) == nw);
  std::size_t steps = 0;
  sample_table(m, 500, 3, [&](const IntTable2& x) {
    ++steps;
    CHECK(x.satisfies(m));
  });
  CHECK(steps == 500);
  CHECK(sample_table(m, 1000, 42) == sample_table(m, 1000, 42));
  CHECK_THROWS_AS(sample_table(int_margins({1, 2}, {1, 1}), 1, 1), Error);
}

TEST_CASE("sampler visits every table of a small fiber") {
  const auto m = int_margins({2, 2}, {2, 2});
  std::map<std::vector<std::int64_t>, long> hits;
  sample_table(m, 100'000, 9, [&](const IntTable2& x) { ++hits[x.entries]; });
  CHECK(hits.size() == enumerate_tables(m).size());
  CHECK(hits.size() == 3);
}
