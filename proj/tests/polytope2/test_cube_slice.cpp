#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/polytope2/cube_slice.hpp"
#include "transportlab/polytope2/facets.hpp"
#include "transportlab/polytope2/feasibility.hpp"

using namespace transportlab;
using oracle::ints;

TEST_CASE("Hamming distance on signatures") {
  CHECK(hamming("0", "*") == 1);
  CHECK(hamming("*", "0") == 1);
  CHECK(hamming("*", "*") == 0);
  CHECK(hamming("0", "1") == 1);
  CHECK(hamming("1", "*") == 1);
  CHECK(hamming("01*", "01*") == 0);
  CHECK(hamming("0*1", "*01") == 2);
  CHECK_THROWS_AS(hamming("01", "0"), Error);
  CHECK_THROWS_AS(hamming("0x", "01"), Error);
}

TEST_CASE("signatures and vertices of a triangle slice") {
  // x + y + z = 1/2 cuts off a corner: three vertices, each with one star.
  const CubeSlice s{ints({1, 1, 1}), make_rational(1, 2)};
  const auto vs = slice_vertices(s);
  REQUIRE(vs.size() == 3);
  CHECK(side_signature(vs[0], s) == "00*");
  CHECK(side_signature(vs[2], s) == "*00");
  CHECK(slice_facet_count(s) == 3);
  const auto g = slice_graph(s, vs);
  for (const auto& nb : g.adjacency) CHECK(nb.size() == 2);
  const auto walk = signature_pivot_walk(s, vs[0], vs[0]);
  CHECK(walk.length() == 0);
  CHECK(walk.monotone);
  CHECK_THROWS_AS(side_signature({Rational(1), Rational(1), Rational(1)}, s), Error);
}

TEST_CASE("non-generic hyperplanes are refused") {
  CHECK_THROWS_AS(slice_vertices({ints({1, 1, 1}), Rational(1)}), Error);
  CHECK_THROWS_AS(slice_vertices({ints({1, 2}), Rational(3)}), Error);
}

TEST_CASE("p x 2 polytopes as cube slices") {
  std::mt19937_64 rng(8);
  int checked = 0;
  while (checked < 40) {
    const std::size_t p = 2 + rng() % 5;
    Margins2 m;
    long total = 0;
    for (std::size_t i = 0; i < p; ++i) {
      const long x = 1 + static_cast<long>(rng() % 100);
      m.u.emplace_back(x);
      total += x;
    }
    const long v1 = 1 + static_cast<long>(rng() % static_cast<unsigned long>(total - 1));
    m.v = {Rational(v1), Rational(total - v1)};
    if (!is_generic(m)) continue;
    ++checked;
    const auto slice = cube_slice_from_p_by_2(m);
    const auto pts = slice_vertices(slice);
    const auto vs = enumerate_vertices(m);
    REQUIRE(pts.size() == vs.vertices.size());
    for (const auto& x : vs.vertices) {
      const auto t = table_to_slice_point(x, m);
      CHECK(std::binary_search(pts.begin(), pts.end(), t));
    }
    const auto g = slice_graph(slice, pts);
    const auto gt = polytope_graph(vs);
    CHECK(g.edge_count() == gt.edge_count());
    CHECK(g.connected());
    const std::size_t n = slice_facet_count(slice);
    if (p * 2 > 4) CHECK(n == facet_count(m));
    const std::size_t diam = diameter(g);
    CHECK(diam == diameter(gt));
    CHECK(diam + (p - 2) <= n);
    CHECK(diam + (p - 1) <= n);
    for (std::size_t a = 0; a < pts.size(); ++a) {
      const auto dist = bfs_distances(g, a);
      for (std::size_t b = 0; b < pts.size(); ++b) {
        const auto walk = signature_pivot_walk(slice, pts[a], pts[b]);
        const auto h = hamming(side_signature(pts[a], slice), side_signature(pts[b], slice));
        CHECK(walk.path.front() == pts[a]);
        CHECK(walk.path.back() == pts[b]);
        CHECK(walk.length() >= dist[b]);
        for (std::size_t k = 0; k + 1 < walk.path.size(); ++k) {
          const auto nb = slice_neighbours(slice, walk.path[k]);
          CHECK(std::binary_search(nb.begin(), nb.end(), walk.path[k + 1]));
        }
        if (walk.monotone) {
          CHECK(walk.length() <= h);
        } else {
          CHECK(walk.length() == dist[b]);
          CHECK(dist[b] > h);
        }
        CHECK(h + (p - 2) <= n);
      }
    }
  }
}

TEST_CASE("a hexagonal slice where no pivot lowers the Hamming distance") {
  const Margins2 m{ints({87, 86, 91}), ints({138, 126})};
  REQUIRE(is_generic(m));
  const auto slice = cube_slice_from_p_by_2(m);
  const auto pts = slice_vertices(slice);
  REQUIRE(pts.size() == 6);
  CHECK(slice_facet_count(slice) == 6);
  Point v, w;
  for (const auto& x : pts) {
    if (side_signature(x, slice) == "0*1") v = x;
    if (side_signature(x, slice) == "1*0") w = x;
  }
  REQUIRE(!v.empty());
  REQUIRE(!w.empty());
  CHECK(hamming(side_signature(v, slice), side_signature(w, slice)) == 2);
  for (const auto& nb : slice_neighbours(slice, v)) {
    CHECK(hamming(side_signature(nb, slice), side_signature(w, slice)) == 3);
  }
  const auto walk = signature_pivot_walk(slice, v, w);
  CHECK_FALSE(walk.monotone);
  CHECK(walk.length() == 3);
  CHECK(diameter(slice_graph(slice, pts)) + 2 <= slice_facet_count(slice));
}
