#include "transportlab/polytope3/multiway.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "transportlab/core/error.hpp"
#include "transportlab/core/random.hpp"
#include "transportlab/polytope3/basis.hpp"

namespace transportlab {
namespace {

std::vector<Table3> to_tables(const ConstraintSystem& cs, const std::vector<Point>& points) {
  std::vector<Table3> out;
  out.reserve(points.size());
  for (const auto& pt : points) {
    Table3 x(cs.shape.p, cs.shape.q, cs.shape.s);
    x.entries = pt;
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<Table3> enumerate(const ConstraintSystem& cs) {
  if (cs.A.cols() > kMaxCells3) {
    fail(ErrorKind::TooLarge, "3-way vertex enumeration is limited to " + std::to_string(kMaxCells3) + " cells");
  }
  return to_tables(cs, enumerate_basic_solutions(cs.A, cs.b));
}

bool nondegenerate(const ConstraintSystem& cs) {
  const auto vs = enumerate(cs);
  if (vs.empty()) return false;
  return std::all_of(vs.begin(), vs.end(), [&](const Table3& x) { return x.support_size() == cs.expected_rank(); });
}

}  // namespace

bool axial_feasible(const AxialMargins& m) {
  m.validate();
  const Rational t = sum(m.u);
  return sum(m.v) == t && sum(m.w) == t;
}

Table3 axial_nw_corner(const AxialMargins& m) {
  if (!axial_feasible(m)) fail(ErrorKind::Infeasible, "axial margins have different totals");
  auto u = m.u, v = m.v, w = m.w;
  Table3 x(m.p(), m.q(), m.s());
  for (std::size_t i = 0; i < m.p(); ++i) {
    for (std::size_t j = 0; j < m.q(); ++j) {
      for (std::size_t k = 0; k < m.s(); ++k) {
        const Rational t = std::min({u[i], v[j], w[k]});
        x(i, j, k) = t;
        u[i] -= t;
        v[j] -= t;
        w[k] -= t;
      }
    }
  }
  return x;
}

std::vector<Table3> enumerate_vertices_3way(const AxialMargins& m) {
  return enumerate(build_constraint_system(m));
}

std::vector<Table3> enumerate_vertices_3way(const PlanarMargins& m) {
  return enumerate(build_constraint_system(m));
}

PolytopeGraph vertex_graph_3way(const ConstraintSystem& system, const std::vector<Table3>& vertices) {
  return PolytopeGraph::from_predicate(vertices.size(), [&](std::size_t a, std::size_t b) {
    return vertices_adjacent(system.A, vertices[a].entries, vertices[b].entries);
  });
}

bool is_nondegenerate(const AxialMargins& m) { return nondegenerate(build_constraint_system(m)); }
bool is_nondegenerate(const PlanarMargins& m) { return nondegenerate(build_constraint_system(m)); }

AxialMargins generalized_birkhoff_axial(std::size_t p, std::size_t q, std::size_t s) {
  if (p == 0 || q == 0 || s == 0) fail(ErrorKind::InvalidInput, "shape dimensions must be >= 1");
  return {std::vector<Rational>(p, Rational(static_cast<long>(q * s))),
          std::vector<Rational>(q, Rational(static_cast<long>(p * s))),
          std::vector<Rational>(s, Rational(static_cast<long>(p * q)))};
}

PlanarMargins generalized_birkhoff_planar(std::size_t p, std::size_t q, std::size_t s) {
  if (p == 0 || q == 0 || s == 0) fail(ErrorKind::InvalidInput, "shape dimensions must be >= 1");
  PlanarMargins m{RationalMatrix(q, s), RationalMatrix(p, s), RationalMatrix(p, q)};
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < s; ++k) m.U(j, k) = static_cast<long>(p);
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < s; ++k) m.V(i, k) = static_cast<long>(q);
    for (std::size_t j = 0; j < q; ++j) m.W(i, j) = static_cast<long>(s);
  }
  return m;
}

PlanarMargins planar_assignment_margins(std::size_t p) {
  if (p == 0) fail(ErrorKind::InvalidInput, "size must be >= 1");
  PlanarMargins m{RationalMatrix(p, p), RationalMatrix(p, p), RationalMatrix(p, p)};
  for (std::size_t a = 0; a < p; ++a) {
    for (std::size_t b = 0; b < p; ++b) m.U(a, b) = m.V(a, b) = m.W(a, b) = 1;
  }
  return m;
}

std::vector<Table3> latin_square_vertices(std::size_t p) {
  if (p == 0) fail(ErrorKind::InvalidInput, "size must be >= 1");
  if (p > 4) fail(ErrorKind::TooLarge, "Latin square enumeration is limited to p <= 4");
  std::vector<Table3> out;
  std::vector<std::size_t> square(p * p);
  std::vector<std::vector<char>> in_row(p, std::vector<char>(p, 0)), in_col(p, std::vector<char>(p, 0));
  std::function<void(std::size_t)> fill = [&](std::size_t c) {
    if (c == p * p) {
      Table3 x(p, p, p);
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) x(i, j, square[i * p + j]) = 1;
      }
      out.push_back(std::move(x));
      return;
    }
    const std::size_t i = c / p, j = c % p;
    for (std::size_t k = 0; k < p; ++k) {
      if (in_row[i][k] || in_col[j][k]) continue;
      in_row[i][k] = in_col[j][k] = 1;
      square[c] = k;
      fill(c + 1);
      in_row[i][k] = in_col[j][k] = 0;
    }
  };
  fill(0);
  std::sort(out.begin(), out.end());
  return out;
}

Spectrum spectrum(const Table3& x) {
  std::set<Rational, std::greater<>> values;
  for (const auto& e : x.entries) {
    if (sgn(e) > 0) values.insert(e);
  }
  return {values.begin(), values.end()};
}

std::vector<Table3> planar_integer_points(const PlanarMargins& m, std::size_t limit) {
  m.validate();
  const std::size_t p = m.p(), q = m.q(), s = m.s();
  auto as_long = [](const Rational& r) {
    if (!is_integer(r)) fail(ErrorKind::InvalidInput, "integer points need integral margins");
    return to_int64(r);
  };
  std::vector<long> U(q * s), V(p * s), W(p * q);
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < s; ++k) U[j * s + k] = as_long(m.U(j, k));
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < s; ++k) V[i * s + k] = as_long(m.V(i, k));
    for (std::size_t j = 0; j < q; ++j) W[i * q + j] = as_long(m.W(i, j));
  }
  std::vector<Table3> out;
  std::vector<long> x(p * q * s, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == x.size()) {
      if (out.size() == limit) fail(ErrorKind::TooMany, "more than " + std::to_string(limit) + " integer tables");
      Table3 t(p, q, s);
      for (std::size_t e = 0; e < x.size(); ++e) t.entries[e] = x[e];
      out.push_back(std::move(t));
      return;
    }
    const std::size_t i = c / (q * s), j = (c / s) % q, k = c % s;
    long& w = W[i * q + j];
    long& v = V[i * s + k];
    long& u = U[j * s + k];
    long lo = 0, hi = std::min({w, v, u});
    // The last cell of a line is forced.
    for (auto [last, rest] : {std::pair{k + 1 == s, w}, std::pair{j + 1 == q, v}, std::pair{i + 1 == p, u}}) {
      if (last) lo = std::max(lo, rest), hi = std::min(hi, rest);
    }
    for (long t = lo; t <= hi; ++t) {
      x[c] = t;
      w -= t;
      v -= t;
      u -= t;
      rec(c + 1);
      w += t;
      v += t;
      u += t;
    }
    x[c] = 0;
  };
  rec(0);
  return out;
}

std::optional<IntegerGap> find_integer_gap(Shape shape, std::size_t trials, std::uint64_t seed, long max_entry) {
  std::mt19937_64 rng(seed);
  const std::size_t cells = shape.p * shape.q * shape.s;
  for (std::size_t t = 0; t < trials; ++t) {
    const int density = 20 + 10 * static_cast<int>(t % 4);
    Table3 x(shape.p, shape.q, shape.s);
    for (auto& e : x.entries) e = uniform_int(rng, 0, 99) < density ? uniform_int(rng, 1, max_entry) : 0;
    const auto m = x.planar_margins();
    std::vector<Table3> points;
    try {
      points = planar_integer_points(m, 200'000);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::TooMany) continue;
      throw;
    }
    for (std::size_t c = 0; c < cells; ++c) {
      std::set<Rational> seen;
      for (const auto& pt : points) seen.insert(pt.entries[c]);
      if (*seen.rbegin() - *seen.begin() + 1 == static_cast<long>(seen.size())) continue;
      IntegerGap gap{m, {c / (shape.q * shape.s), (c / shape.s) % shape.q, c % shape.s}, {}};
      for (const auto& v : seen) gap.values.push_back(v.get_num());
      return gap;
    }
  }
  return std::nullopt;
}

}  // namespace transportlab
