#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "transportlab/core/constraint_system.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/polytope3/basis.hpp"
#include "transportlab/polytope3/multiway.hpp"

using namespace transportlab;
using oracle::ints;

namespace {

std::vector<std::vector<Rational>> rows_of(const RationalMatrix& A) {
  std::vector<std::vector<Rational>> out(A.rows(), std::vector<Rational>(A.cols()));
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) out[r][c] = A(r, c);
  }
  return out;
}

PlanarMargins planar_from(const long (&U)[3][3], const long (&V)[3][3], const long (&W)[3][3]) {
  PlanarMargins m{RationalMatrix(3, 3), RationalMatrix(3, 3), RationalMatrix(3, 3)};
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      m.U(a, b) = U[a][b];
      m.V(a, b) = V[a][b];
      m.W(a, b) = W[a][b];
    }
  }
  return m;
}

// The 3x3x3 2-margins with 270 vertices; rows of W, V and U side by side.
PlanarMargins margins_270() {
  const long W[3][3] = {{164424, 324745, 127239}, {262784, 601074, 9369116}, {149654, 7618489, 1736281}};
  const long V[3][3] = {{163445, 49395, 403568}, {1151824, 767866, 8313284}, {1609500, 6331023, 1563901}};
  const long U[3][3] = {{184032, 123585, 269245}, {886393, 6722333, 935582}, {1854344, 302366, 9075926}};
  return planar_from(U, V, W);
}

AxialMargins random_axial(std::mt19937_64& rng, std::size_t p, std::size_t q, std::size_t s) {
  while (true) {
    std::vector<long> u(p);
    for (auto& x : u) x = std::uniform_int_distribution<long>(1, 1000)(rng);
    const long total = std::accumulate(u.begin(), u.end(), 0L);
    auto v = oracle::random_composition(rng, q, total, 1000);
    auto w = oracle::random_composition(rng, s, total, 1000);
    if (v.empty() || w.empty()) continue;
    AxialMargins m;
    for (long x : u) m.u.emplace_back(x);
    for (long x : v) m.v.emplace_back(x);
    for (long x : w) m.w.emplace_back(x);
    return m;
  }
}

PlanarMargins random_planar(std::mt19937_64& rng, std::size_t p, std::size_t q, std::size_t s) {
  Table3 x(p, q, s);
  for (auto& e : x.entries) e = std::uniform_int_distribution<long>(1, 1000)(rng);
  return x.planar_margins();
}

void check_vertices(const ConstraintSystem& cs, const std::vector<Table3>& vs) {
  for (const auto& x : vs) {
    CHECK(x.nonnegative());
    for (std::size_t r = 0; r < cs.A.rows(); ++r) {
      Rational s = 0;
      for (std::size_t c = 0; c < cs.A.cols(); ++c) s += cs.A(r, c) * x.entries[c];
      CHECK(s == cs.b[r]);
    }
    CHECK(x.support_size() <= cs.expected_rank());
  }
}

}  // namespace

TEST_CASE("axial feasibility") {
  CHECK(axial_feasible({ints({2, 2}), ints({2, 2}), ints({1, 1, 2})}));
  CHECK_FALSE(axial_feasible({ints({1}), ints({1}), ints({2})}));
  CHECK(axial_feasible(generalized_birkhoff_axial(2, 3, 4)));
  CHECK_THROWS_AS(axial_feasible({ints({-1, 2}), ints({1}), ints({1})}), Error);
}

TEST_CASE("axial northwest corner") {
  const auto x = axial_nw_corner({ints({1, 1}), ints({1, 1}), ints({1, 1})});
  Table3 expected(2, 2, 2);
  expected(0, 0, 0) = 1;
  expected(1, 1, 1) = 1;
  CHECK(x == expected);
  const auto one = axial_nw_corner({ints({7}), ints({7}), ints({7})});
  CHECK(one(0, 0, 0) == 7);
  const auto m = generalized_birkhoff_axial(2, 2, 2);
  CHECK(m.u == ints({4, 4}));
  const auto b = axial_nw_corner(m);
  CHECK(b(0, 0, 0) == 4);
  CHECK(b.axial_margins() == m);
  CHECK_THROWS_AS(axial_nw_corner({ints({1}), ints({1}), ints({2})}), Error);
}

TEST_CASE("axial constraint rank and dimension") {
  for (std::size_t p = 1; p <= 3; ++p) {
    for (std::size_t q = 1; q <= 3; ++q) {
      for (std::size_t s = 1; s <= 3; ++s) {
        const auto cs = build_constraint_system(generalized_birkhoff_axial(p, q, s));
        CHECK(oracle::exact_rank(rows_of(cs.A)) == p + q + s - 2);
      }
    }
  }
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    const auto m = random_axial(rng, 2, 2, 3);
    const auto cs = build_constraint_system(m);
    std::vector<Point> pts;
    for (const auto& x : enumerate_vertices_3way(m)) pts.push_back(x.entries);
    CHECK(polytope_dimension(cs.A, pts) <= 12 - 2 - 2 - 3 + 2);
  }
}

TEST_CASE("vertex enumeration matches the subset oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    const auto m = random_axial(rng, 2, 2, 2);
    const auto cs = build_constraint_system(m);
    const auto vs = enumerate_vertices_3way(m);
    const auto brute = oracle::basic_solutions(rows_of(cs.A), cs.b);
    REQUIRE(vs.size() == brute.size());
    for (std::size_t a = 0; a < vs.size(); ++a) CHECK(vs[a].entries == brute[a]);
    check_vertices(cs, vs);
  }
  for (int t = 0; t < 5; ++t) {
    const auto m = random_planar(rng, 2, 2, 3);
    const auto cs = build_constraint_system(m);
    const auto vs = enumerate_vertices_3way(m);
    CHECK(vs.size() == oracle::basic_solutions(rows_of(cs.A), cs.b).size());
    check_vertices(cs, vs);
  }
}

TEST_CASE("vertex counts of generic small 3-way polytopes") {
  std::mt19937_64 rng(23);
  std::set<std::size_t> axial, planar;
  int generic = 0;
  while (generic < 40) {
    const auto m = random_axial(rng, 2, 2, 2);
    if (!is_nondegenerate(m)) continue;
    ++generic;
    axial.insert(enumerate_vertices_3way(m).size());
  }
  generic = 0;
  while (generic < 40) {
    const auto m = random_planar(rng, 2, 2, 3);
    if (!is_nondegenerate(m)) continue;
    ++generic;
    planar.insert(enumerate_vertices_3way(m).size());
  }
  for (auto n : axial) CHECK(std::set<std::size_t>{8, 11, 14}.count(n) == 1);
  for (auto n : planar) CHECK(std::set<std::size_t>{3, 4, 5, 6}.count(n) == 1);
}

TEST_CASE("degeneracy is detected") {
  CHECK_FALSE(is_nondegenerate(generalized_birkhoff_axial(2, 2, 2)));
  CHECK_FALSE(is_nondegenerate(generalized_birkhoff_planar(2, 2, 2)));
}

TEST_CASE("the 3x3x3 planar polytope with 270 vertices beats the central one") {
  const auto m = margins_270();
  const auto cs = build_constraint_system(m);
  const auto vs = enumerate_vertices_3way(m);
  CHECK(vs.size() == 270);
  check_vertices(cs, vs);
  const auto central = enumerate_vertices_3way(generalized_birkhoff_planar(3, 3, 3));
  CHECK(central.size() == 66);
  CHECK_THROWS_AS(enumerate_vertices_3way(generalized_birkhoff_planar(3, 3, 4)), Error);
}

TEST_CASE("axial diameters stay under the quadratic bound") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 6; ++t) {
    const std::size_t s = 2 + t % 2;
    const auto m = random_axial(rng, 2, 2, s);
    const auto cs = build_constraint_system(m);
    const auto vs = enumerate_vertices_3way(m);
    const auto g = vertex_graph_3way(cs, vs);
    const std::size_t k = 2 + 2 + s - 2;
    CHECK(diameter(g) <= 2 * k * k);
  }
}

TEST_CASE("generalized Birkhoff margins") {
  const auto a = generalized_birkhoff_axial(2, 2, 2);
  CHECK(a.u == ints({4, 4}));
  CHECK(a.v == ints({4, 4}));
  CHECK(a.w == ints({4, 4}));
  const auto p = generalized_birkhoff_planar(3, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(p.U(i, j) == 3);
      CHECK(p.V(i, j) == 3);
      CHECK(p.W(i, j) == 3);
    }
  }
}

TEST_CASE("Latin squares are the 0/1 vertices of the planar assignment polytope") {
  CHECK(latin_square_vertices(1).size() == 1);
  CHECK(latin_square_vertices(2).size() == 2);
  CHECK(latin_square_vertices(3).size() == 12);
  CHECK(latin_square_vertices(4).size() == 576);
  CHECK_THROWS_AS(latin_square_vertices(5), Error);

  // Brute force over 0/1 tables for p = 2.
  std::vector<Table3> brute;
  for (unsigned mask = 0; mask < 256; ++mask) {
    Table3 x(2, 2, 2);
    for (std::size_t c = 0; c < 8; ++c) x.entries[c] = (mask >> c) & 1U;
    if (x.planar_margins() == planar_assignment_margins(2)) brute.push_back(x);
  }
  std::sort(brute.begin(), brute.end());
  CHECK(brute == latin_square_vertices(2));

  const auto m = planar_assignment_margins(3);
  const auto vs = enumerate_vertices_3way(m);
  for (const auto& x : latin_square_vertices(3)) {
    CHECK(std::find(vs.begin(), vs.end(), x) != vs.end());
    CHECK(spectrum(x) == ints({1}));
  }
  CHECK(planar_integer_points(m) == latin_square_vertices(3));
}

TEST_CASE("spectra") {
  CHECK(spectrum(Table3(2, 2, 2)).empty());
  Table3 x(2, 2, 2);
  x(0, 0, 0) = 4;
  x(1, 1, 1) = 2;
  x(0, 1, 1) = 2;
  CHECK(spectrum(x) == ints({4, 2}));
  // An axial 2x2x2 vertex with entries 4 and 2.
  const AxialMargins m{ints({4, 4}), ints({6, 2}), ints({4, 4})};
  bool found = false;
  for (const auto& v : enumerate_vertices_3way(m)) {
    const auto sp = spectrum(v);
    for (std::size_t a = 0; a + 1 < sp.size(); ++a) CHECK(sp[a] > sp[a + 1]);
    found = found || sp == ints({4, 2});
  }
  CHECK(found);
}

TEST_CASE("integer points of planar fibers are interval-closed in the searched range") {
  // A bounded random search; a gap, if one turns up, must be genuine.
  const auto gap = find_integer_gap({3, 3, 3}, 40, 1);
  if (gap) {
    const auto& vals = gap->values;
    REQUIRE(vals.size() >= 2);
    CHECK(vals.back() - vals.front() + 1 > static_cast<long>(vals.size()));
  } else {
    MESSAGE("no integer gap among 40 random 3x3x3 fibers");
  }
  CHECK_THROWS_AS(planar_integer_points(generalized_birkhoff_planar(3, 3, 3), 10), Error);
}
