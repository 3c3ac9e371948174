#include <doctest.h>

#include "oracles.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/lattice/ehrhart.hpp"

using namespace transportlab;

namespace {

long brute_semi_magic(std::size_t p, long t) {
  return static_cast<long>(oracle::integer_tables(std::vector<long>(p, t), std::vector<long>(p, t)).size());
}

}  // namespace

TEST_CASE("semi-magic squares") {
  CHECK(semi_magic_count(3, 1) == 6);
  CHECK(semi_magic_count(3, 2) == 21);
  for (std::size_t p = 1; p <= 5; ++p) {
    CHECK(semi_magic_count(p, 0) == 1);
    CHECK(semi_magic_count(p, 1) == factorial(p));
  }
  for (std::size_t p = 1; p <= 4; ++p) {
    for (long t = 0; t <= 3; ++t) CHECK(semi_magic_count(p, t) == brute_semi_magic(p, t));
  }
  CHECK_THROWS_AS(semi_magic_count(6, 1), Error);
  CHECK_THROWS_AS(semi_magic_count(3, 21), Error);
}

TEST_CASE("interpolating the counts of dilated B_3") {
  // Leading coefficient from the 4th forward difference at 0, divided by 4!.
  std::vector<long> f;
  for (long t = 0; t <= 5; ++t) f.push_back(brute_semi_magic(3, t));
  CHECK(f == std::vector<long>{1, 6, 21, 55, 120, 231});
  const long delta4 = f[4] - 4 * f[3] + 6 * f[2] - 4 * f[1] + f[0];
  EhrhartSamples s{"B_3", {}};
  for (long t = 0; t <= 4; ++t) s.samples.emplace_back(t, semi_magic_count(3, t));
  const auto poly = ehrhart_interpolate(s, 4);
  REQUIRE(poly.size() == 5);
  CHECK(poly.back() == make_rational(delta4, 24));
  CHECK(poly.back() == Rational(1, 8));
  CHECK(poly.front() == 1);
  CHECK(evaluate(poly, 5) == f[5]);
  s.samples.emplace_back(5, f[5]);
  CHECK(ehrhart_interpolate(s, 4) == poly);
  s.samples.emplace_back(6, 0);
  CHECK_THROWS_AS(ehrhart_interpolate(s, 4), Error);
}

TEST_CASE("interpolation needs dim + 1 distinct dilations") {
  EhrhartSamples s{"B_3", {{0, 1}, {1, 6}, {1, 6}, {2, 21}}};
  try {
    ehrhart_interpolate(s, 4);
    FAIL("expected NeedMoreSamples");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NeedMoreSamples);
  }
  const auto point = ehrhart_interpolate(EhrhartSamples{"point", {{0, 1}, {3, 1}}}, 0);
  CHECK(point == Polynomial{1});
}

TEST_CASE("normalized volumes of Birkhoff polytopes") {
  CHECK(birkhoff_normalized_volume(1) == 1);
  CHECK(birkhoff_normalized_volume(2) == 1);
  CHECK(birkhoff_normalized_volume(3) == 3);
  CHECK(birkhoff_normalized_volume(4) == 352);
  CHECK_THROWS_AS(birkhoff_normalized_volume(6), Error);
  for (std::size_t p = 1; p <= 4; ++p) {
    const auto poly = ehrhart_interpolate(birkhoff_samples(p), (p - 1) * (p - 1));
    CHECK(poly.front() == 1);
    CHECK(sgn(poly.back()) > 0);
  }
}

TEST_CASE("samples round-trip through JSON") {
  const auto s = birkhoff_samples(3);
  const auto back = ehrhart_samples_from_json(to_json(s));
  CHECK(back.polytope == "B_3");
  CHECK(back.samples == s.samples);
}
