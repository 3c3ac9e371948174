#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/polytope3/basis.hpp"
#include "transportlab/polytope3/universality.hpp"

using namespace transportlab;

namespace {

IntegerSystem system_of(std::vector<std::vector<long>> A, std::vector<long> b) {
  IntegerSystem s;
  for (const auto& row : A) {
    s.A.emplace_back();
    for (long x : row) s.A.back().emplace_back(x);
  }
  for (long x : b) s.b.emplace_back(x);
  return s;
}

struct Shape {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  long dimension = -1;
  std::size_t integer_points = 0;
  friend bool operator==(const Shape&, const Shape&) = default;
};

Shape shape_of(const RationalMatrix& A, const std::vector<Rational>& b) {
  const auto vs = enumerate_basic_solutions(A, b);
  Shape s;
  s.vertices = vs.size();
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t c = a + 1; c < vs.size(); ++c) s.edges += vertices_adjacent(A, vs[a], vs[c]);
  }
  s.dimension = polytope_dimension(A, vs);
  s.integer_points = integer_points(A, b, vs).size();
  return s;
}

// Bounded systems in two variables: the first row has positive coefficients.
std::vector<IntegerSystem> random_systems(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pos(1, 5), any(-3, 3), rhs(1, 10), rhs2(-5, 5);
  std::vector<IntegerSystem> out;
  while (out.size() < n) {
    std::vector<std::vector<long>> A{{pos(rng), pos(rng)}};
    std::vector<long> b{rhs(rng)};
    if (rng() % 3 == 0) {
      A.push_back({any(rng), any(rng)});
      b.push_back(rhs2(rng));
    }
    auto s = system_of(A, b);
    if (enumerate_basic_solutions(s.rational_matrix(), s.rational_rhs()).empty()) continue;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

TEST_CASE("step 1 on 3 y1 - 5 y2 + 2 y3 = 7") {
  const auto r = universality_step1(system_of({{3, -5, 2}}, {7}));
  const auto expected = system_of(
      {
          {2, -1, 0, 0, 0, 0, 0},
          {0, 0, 2, -1, 0, 0, 0},
          {0, 0, 0, 2, -1, 0, 0},
          {0, 0, 0, 0, 0, 2, -1},
          {1, 1, -1, 0, -1, 0, 1},
      },
      {0, 0, 0, 0, 7});
  CHECK(r.system.A == expected.A);
  CHECK(r.system.b == expected.b);
  CHECK(r.designated == std::vector<std::size_t>{0, 2, 5});
  CHECK(r.variables[4] == std::array<std::size_t, 2>{1, 2});
}

TEST_CASE("step 1 leaves small coefficients alone") {
  const auto one = universality_step1(system_of({{1}}, {1}));
  CHECK(one.system.A == system_of({{1}}, {1}).A);
  CHECK(one.system.b == system_of({{1}}, {1}).b);
  const auto two = universality_step1(system_of({{2}}, {1}));
  const auto expected = system_of({{2, -1}, {0, 1}}, {0, 1});
  CHECK(two.system.A == expected.A);
  CHECK(two.system.b == expected.b);
}

TEST_CASE("2y = 1 becomes a single point of an axial face") {
  const auto enc = encode_universality(system_of({{2}}, {1}));
  CHECK(enc.r() == 3);
  CHECK(enc.layers() == 3);
  const auto src = source_point_sets(enc);
  const auto face = face_point_sets(enc);
  REQUIRE(face.vertices.size() == 1);
  CHECK(enc.project(face.vertices[0]) == Point{Rational(1, 2)});
  CHECK(src.integer_points.empty());
  CHECK(face.integer_points.empty());
  CHECK(verify_representation(enc, src, face));
}

TEST_CASE("box layout for box sizes 3, 1, 2") {
  // y1 in three equations, y2 in one, y3 in two; the only solution is 1, 1, 1.
  const auto sys = system_of({{1, 1, 1}, {1, 0, 1}, {1, 0, 0}}, {3, 2, 1});
  const auto enc = universality_step2(sys);
  CHECK(enc.box_sizes == std::vector<std::size_t>{3, 1, 2});
  const BigInt U = enc.bound;

  std::set<std::pair<std::size_t, std::size_t>> top;
  for (const auto& c : enc.allowed) top.insert({c.cell[0], c.cell[1]});
  const std::set<std::pair<std::size_t, std::size_t>> pattern{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 0}, {2, 2}, {3, 3},
                                                              {4, 4}, {4, 5}, {5, 4}, {5, 5}};
  CHECK(top == pattern);

  const auto face = face_point_sets(enc);
  REQUIRE(face.vertices.size() == 1);
  const auto& x = face.vertices[0];
  auto top_sum = [&](std::size_t i, std::size_t j) {
    Rational s = 0;
    for (std::size_t k = 0; k < enc.layers(); ++k) s += x[(i * enc.r() + j) * enc.layers() + k];
    return s;
  };
  const Rational y = 1, ybar = Rational(U) - 1;
  for (std::size_t i : {0, 1, 2}) CHECK(top_sum(i, i) == y);
  CHECK(top_sum(0, 1) == ybar);
  CHECK(top_sum(1, 2) == ybar);
  CHECK(top_sum(2, 0) == ybar);
  CHECK(top_sum(3, 3) == Rational(U));
  CHECK(top_sum(4, 4) == y);
  CHECK(top_sum(5, 5) == y);
  CHECK(top_sum(4, 5) == ybar);
  CHECK(top_sum(5, 4) == ybar);
  CHECK(enc.margins.u == std::vector<Rational>(6, Rational(U)));
}

TEST_CASE("bound validation") {
  // y1 - y2 = 0 is unbounded.
  CHECK_THROWS_AS(encode_universality(system_of({{1, -1}}, {0})), Error);
  // The vertex y = 5 exceeds the bound 2.
  CHECK_THROWS_AS(universality_step2(system_of({{1}}, {5}), BigInt(2)), Error);
  try {
    universality_step2(system_of({{1}}, {5}), BigInt(2));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundViolated);
  }
  CHECK_THROWS_AS(universality_step2(system_of({{1, 0}}, {1})), Error);
}

TEST_CASE("verification catches a corrupted encoding") {
  const auto enc = encode_universality(system_of({{1, 1}}, {1}));
  const auto src = source_point_sets(enc);
  const auto face = face_point_sets(enc);
  CHECK(src.vertices.size() == 2);
  CHECK(face.vertices.size() == 2);
  CHECK(src.integer_points.size() == 2);
  CHECK(face.integer_points.size() == 2);
  CHECK(verify_representation(enc, src, face));

  auto bad = enc;
  bad.margins.w[0] += 1;
  CHECK_FALSE(verify_representation(bad, src, face_point_sets(bad)));
  CHECK_FALSE(verify_representation(enc, src, PointSets{face.vertices, {}}));
}

TEST_CASE("encoded faces have the shape of the source polytope") {
  for (const auto& sys : random_systems(61, 10)) {
    const auto enc = encode_universality(sys);
    const auto source = shape_of(sys.rational_matrix(), sys.rational_rhs());
    const auto face = shape_of(enc.face_matrix(), enc.face_rhs());
    CHECK(source == face);
    CHECK(verify_representation(enc, source_point_sets(enc), face_point_sets(enc)));
  }
}

TEST_CASE("a triangle keeps its shape") {
  const auto sys = system_of({{1, 2, 3}}, {6});
  const auto enc = encode_universality(sys);
  const auto source = shape_of(sys.rational_matrix(), sys.rational_rhs());
  CHECK(source.vertices == 3);
  CHECK(source.edges == 3);
  CHECK(source.dimension == 2);
  CHECK(source == shape_of(enc.face_matrix(), enc.face_rhs()));
}

TEST_CASE("encodings round-trip through JSON") {
  const auto enc = encode_universality(system_of({{3, -5, 2}}, {7}), BigInt(10), false);
  const auto j = to_json(enc);
  const auto back = encoding_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(back.margins == enc.margins);
  CHECK(back.forbidden == enc.forbidden);
  const auto sys = integer_system_from_json(to_json(enc.source));
  CHECK(sys.A == enc.source.A);
  CHECK_THROWS_AS(encoding_from_json(Json::object()), Error);
}
