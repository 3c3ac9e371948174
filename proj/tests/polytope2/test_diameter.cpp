#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/polytope2/birkhoff.hpp"
#include "transportlab/polytope2/facets.hpp"
#include "transportlab/polytope2/feasibility.hpp"
#include "transportlab/polytope2/graph.hpp"
#include "transportlab/polytope2/hurkens.hpp"

using namespace transportlab;
using oracle::ints;

namespace {

Margins2 random_margins(std::mt19937_64& rng, std::size_t p, std::size_t q, long hi, bool generic) {
  while (true) {
    Margins2 m;
    long total = 0;
    for (std::size_t i = 0; i < p; ++i) {
      const long x = std::uniform_int_distribution<long>(1, hi)(rng);
      total += x;
      m.u.emplace_back(x);
    }
    const auto v = oracle::random_composition(rng, q, total, hi);
    if (v.empty()) continue;
    for (long x : v) m.v.emplace_back(x);
    if (!generic || is_generic(m)) return m;
  }
}

// Facet oracle: x_ij = 0 is facet-defining iff the vertices on it span an
// affine space of dimension dim(P) - 1.
std::size_t facet_count_oracle(const VertexSet2& vs) {
  const std::size_t p = vs.margins.p(), q = vs.margins.q();
  std::vector<std::vector<Rational>> all;
  for (const auto& x : vs.vertices) all.push_back(x.entries);
  const std::size_t dim = oracle::affine_dimension(all);
  std::size_t n = 0;
  for (std::size_t c = 0; c < p * q; ++c) {
    std::vector<std::vector<Rational>> on;
    for (const auto& x : vs.vertices) {
      if (x.entries[c] == 0) on.push_back(x.entries);
    }
    if (!on.empty() && dim >= 1 && oracle::affine_dimension(on) == dim - 1) ++n;
  }
  return n;
}

void check_path(const PivotPath& path, const VertexSet2& vs, const PolytopeGraph& g) {
  const auto idx = path.indices(vs);
  for (std::size_t k = 0; k < idx.size(); ++k) REQUIRE(idx[k] < vs.vertices.size());
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) CHECK(g.has_edge(idx[k], idx[k + 1]));
}

}  // namespace

TEST_CASE("Birkhoff graphs") {
  const auto b3 = enumerate_vertices(birkhoff_margins(3));
  const auto g3 = polytope_graph(b3);
  CHECK(g3.n == 6);
  for (const auto& nb : g3.adjacency) CHECK(nb.size() == 5);
  CHECK(diameter(g3) == 1);

  const auto g4 = polytope_graph(birkhoff_margins(4));
  CHECK(g4.n == 24);
  for (const auto& nb : g4.adjacency) CHECK(BigInt(static_cast<unsigned long>(nb.size())) == birkhoff_degree(4));
  CHECK(diameter(g4) == 2);
}

TEST_CASE("Birkhoff degree formula") {
  CHECK(birkhoff_degree(2) == 1);
  CHECK(birkhoff_degree(3) == 5);
  CHECK(birkhoff_degree(4) == 20);
  CHECK(birkhoff_degree(5) == 84);
  CHECK(polytope_graph(birkhoff_margins(2)).edge_count() == 1);
}

TEST_CASE("Pak cost and decreasing paths") {
  CHECK(pak_cost(2, make_rational(1, 3)) ==
        std::vector<Rational>{1, make_rational(1, 3), make_rational(1, 9), make_rational(1, 27)});
  CHECK_THROWS_AS(pak_cost(3, make_rational(1, 3)), Error);
  CHECK_THROWS_AS(pak_cost(3, Rational(0)), Error);
  const auto b3 = enumerate_vertices(birkhoff_margins(3));
  const auto l3 = longest_decreasing_path(polytope_graph(b3), b3.vertices, pak_cost(3, make_rational(1, 4)));
  CHECK(l3 >= 2);
  CHECK(l3 == 5);
  const auto b4 = enumerate_vertices(birkhoff_margins(4));
  const auto g4 = polytope_graph(b4);
  const auto l4 = longest_decreasing_path(g4, b4.vertices, pak_cost(4, make_rational(1, 5)));
  CHECK(l4 > diameter(g4));
  CHECK(l4 == 22);
}

TEST_CASE("facet characterization") {
  const Margins2 fig{ints({100, 6, 6}), ints({38, 37, 37})};
  CHECK(facet_indicator(fig, 2, 2));
  CHECK_FALSE(facet_indicator(fig, 0, 0));
  CHECK(facet_count(fig) == 6);
  CHECK(facet_count(fig) == facet_count_oracle(enumerate_vertices(fig)));
  CHECK_THROWS_AS(facet_count(birkhoff_margins(2)), Error);
  CHECK_THROWS_AS(facet_indicator(fig, 3, 0), Error);
}

TEST_CASE("facet counts agree with the vertex-incidence oracle") {
  std::mt19937_64 rng(23);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 5}, {2, 3}, {3, 2}, {2, 4}, {2, 5}, {2, 6},
                                                                {3, 3}, {3, 4}, {4, 3}, {6, 2}};
  for (int t = 0; t < 10; ++t) {
    for (auto [p, q] : shapes) {
      const auto m = random_margins(rng, p, q, t % 2 ? 10 : 1000, false);
      const auto n = facet_count(m);
      CHECK(n == facet_count_oracle(enumerate_vertices(m)));
      const std::size_t lo = std::min(p, q), hi = std::max(p, q);
      if (lo >= 2 && hi >= 3) {
        CHECK(n >= (lo - 1) * hi);
        CHECK(n <= (lo - 1) * hi + hi);
      }
    }
  }
  std::set<std::size_t> seen;
  for (int t = 0; t < 400; ++t) seen.insert(facet_count(random_margins(rng, 3, 3, 20, false)));
  CHECK(seen == std::set<std::size_t>{6, 7, 8, 9});
}

TEST_CASE("diameter bounds on enumerable instances") {
  std::mt19937_64 rng(31);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 3}, {3, 4}, {2, 5}};
  for (int t = 0; t < 8; ++t) {
    for (auto [p, q] : shapes) {
      for (bool generic : {true, false}) {
        const auto m = random_margins(rng, p, q, generic ? 200 : 6, generic);
        const auto vs = enumerate_vertices(m);
        const auto g = polytope_graph(vs);
        CHECK(g.connected());
        const auto d = diameter(g);
        CHECK(d <= 8 * (p + q - 2));
        CHECK(d <= 4 * (p + q - 2));
        CHECK(d <= p + q - 1);
        if (p * q > 4) CHECK(d + dimension2(p, q) <= facet_count(m));
      }
    }
  }
}

TEST_CASE("pivoting") {
  const Margins2 m = central_margins(2, 3);
  const auto x = Table2::from_rows({ints({2, 1, 0}), ints({0, 1, 2})});
  const auto y = pivot_in(x, 0, 2);
  CHECK(y.satisfies(m));
  CHECK(adjacent(x, y));
  CHECK(y(0, 2) > 0);
  CHECK_THROWS_AS(pivot_in(x, 0, 0), Error);
  // B_2 pivots are degenerate: both cycle cells drop to zero together.
  CHECK_THROWS_AS(pivot_in(Table2::from_rows({ints({1, 0}), ints({0, 1})}), 0, 1), Error);
}

TEST_CASE("Hurkens walk on the two-supply example") {
  const Margins2 m = central_margins(2, 3);
  const auto x = Table2::from_rows({ints({2, 1, 0}), ints({0, 1, 2})});
  const auto y = Table2::from_rows({ints({0, 1, 2}), ints({2, 1, 0})});
  const auto vs = enumerate_vertices(m);
  const auto g = polytope_graph(vs);
  const auto path = hurkens_walk(m, x, y);
  CHECK(path.start == y);
  CHECK(path.end() == x);
  CHECK(path.length() <= 12);
  check_path(path, vs, g);
  const auto dist = bfs_distances(g, vs.index_of(y))[vs.index_of(x)];
  CHECK(dist <= path.length());
  CHECK(hurkens_walk(m, x, x).length() == 0);
}

TEST_CASE("Hurkens walk stays within budget and above BFS distance") {
  std::mt19937_64 rng(41);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{3, 4}, {2, 3}, {3, 3}, {2, 5}, {4, 3}, {4, 4}};
  for (auto [p, q] : shapes) {
    for (int t = 0; t < (p * q >= 16 ? 2 : 6); ++t) {
      const auto m = random_margins(rng, p, q, 1000, true);
      const auto vs = enumerate_vertices(m);
      const auto g = polytope_graph(vs);
      for (int k = 0; k < 15; ++k) {
        const std::size_t a = rng() % vs.vertices.size(), b = rng() % vs.vertices.size();
        const auto path = hurkens_walk(m, vs.vertices[a], vs.vertices[b]);
        CHECK(path.end() == vs.vertices[a]);
        CHECK(path.length() <= 4 * (p + q - 2));
        CHECK(path.length() >= bfs_distances(g, b)[a]);
        check_path(path, vs, g);
      }
    }
  }
}

TEST_CASE("Hurkens walk refuses degenerate instances; perturbed instances work") {
  const auto b3 = birkhoff_margins(3);
  const auto vs = enumerate_vertices(b3);
  CHECK_THROWS_AS(hurkens_walk(b3, vs.vertices[0], vs.vertices[1]), Error);
  const auto pert = perturb_to_generic(b3);
  const auto pvs = enumerate_vertices(pert);
  const auto g = polytope_graph(pvs);
  CHECK(pvs.vertices.size() >= vs.vertices.size());
  for (std::size_t a = 0; a < pvs.vertices.size(); ++a) {
    for (std::size_t b = 0; b < pvs.vertices.size(); ++b) {
      const auto path = hurkens_walk(pert, pvs.vertices[a], pvs.vertices[b]);
      CHECK(path.length() <= 16);
      CHECK(path.length() >= bfs_distances(g, b)[a]);
    }
  }
}
