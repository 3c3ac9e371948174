#include "transportlab/polytope2/cube_slice.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>

#include "transportlab/core/error.hpp"
#include "transportlab/polytope2/feasibility.hpp"

namespace transportlab {
namespace {

constexpr std::size_t kMaxDim = 20;

Rational dot(const std::vector<Rational>& a, const Point& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

/// Point of H on the cube edge through `base` in direction `free`, if it lies
/// strictly inside the edge.
std::optional<Point> edge_hit(const CubeSlice& h, Point base, std::size_t free) {
  if (h.normal[free] == 0) return std::nullopt;
  base[free] = 0;
  const Rational t = (h.offset - dot(h.normal, base)) / h.normal[free];
  if (t == 0 || t == 1) fail(ErrorKind::NotGeneric, "hyperplane passes through a cube vertex");
  if (t < 0 || t > 1) return std::nullopt;
  base[free] = t;
  return base;
}

std::size_t star_of(const Point& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && v[i] != 1) return i;
  }
  fail(ErrorKind::NotGeneric, "point is a cube vertex");
}

}  // namespace

bool CubeSlice::contains(const Point& x) const {
  if (x.size() != dim()) return false;
  for (const auto& c : x) {
    if (c < 0 || c > 1) return false;
  }
  return dot(normal, x) == offset;
}

std::vector<Point> slice_vertices(const CubeSlice& slice) {
  const std::size_t d = slice.dim();
  if (d == 0) fail(ErrorKind::InvalidInput, "empty normal vector");
  if (d > kMaxDim) fail(ErrorKind::TooLarge, "cube slices limited to d <= 20");
  std::vector<Point> out;
  for (std::size_t free = 0; free < d; ++free) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << (d - 1)); ++mask) {
      Point base(d);
      for (std::size_t k = 0, bit = 0; k < d; ++k) {
        if (k == free) continue;
        base[k] = (mask >> bit++) & 1 ? 1 : 0;
      }
      if (auto hit = edge_hit(slice, base, free)) out.push_back(std::move(*hit));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SideSignature side_signature(const Point& point, const CubeSlice& slice) {
  if (!slice.contains(point)) fail(ErrorKind::NotInPolytope, "point is not in the cube slice");
  SideSignature s;
  for (const auto& c : point) s.push_back(c == 0 ? '0' : c == 1 ? '1' : '*');
  return s;
}

std::size_t hamming(const SideSignature& a, const SideSignature& b) {
  if (a.size() != b.size()) fail(ErrorKind::InvalidInput, "signatures of unequal length");
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ok = [](char c) { return c == '0' || c == '1' || c == '*'; };
    if (!ok(a[i]) || !ok(b[i])) fail(ErrorKind::InvalidInput, "signature characters must be 0, 1 or *");
    n += a[i] != b[i];
  }
  return n;
}

std::vector<Point> slice_neighbours(const CubeSlice& slice, const Point& v) {
  const std::size_t i = star_of(v);
  std::vector<Point> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j == i) continue;
    // The square spanned by coordinates i and j through v; v sits on the
    // side x_j = v_j, so look at the three other sides.
    Point base = v;
    base[j] = 1 - v[j];
    if (auto hit = edge_hit(slice, base, i)) {
      out.push_back(std::move(*hit));
      continue;
    }
    for (int side = 0; side < 2; ++side) {
      base = v;
      base[i] = side;
      if (auto hit = edge_hit(slice, base, j)) {
        out.push_back(std::move(*hit));
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolytopeGraph slice_graph(const CubeSlice& slice, const std::vector<Point>& vertices) {
  PolytopeGraph g;
  g.n = vertices.size();
  g.adjacency.assign(g.n, {});
  for (std::size_t a = 0; a < g.n; ++a) {
    for (const auto& nb : slice_neighbours(slice, vertices[a])) {
      auto it = std::lower_bound(vertices.begin(), vertices.end(), nb);
      if (it == vertices.end() || *it != nb) fail(ErrorKind::InvalidInput, "vertex list is incomplete");
      g.adjacency[a].push_back(static_cast<std::size_t>(it - vertices.begin()));
    }
    std::sort(g.adjacency[a].begin(), g.adjacency[a].end());
  }
  return g;
}

std::size_t slice_facet_count(const CubeSlice& slice) {
  Rational lo_all = 0, hi_all = 0;
  for (const auto& a : slice.normal) {
    if (a < 0) lo_all += a;
    if (a > 0) hi_all += a;
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < slice.dim(); ++i) {
    const Rational& a = slice.normal[i];
    const Rational lo_rest = lo_all - (a < 0 ? a : Rational(0));
    const Rational hi_rest = hi_all - (a > 0 ? a : Rational(0));
    for (int c = 0; c < 2; ++c) {
      const Rational lo = lo_rest + a * c;
      const Rational hi = hi_rest + a * c;
      n += lo < slice.offset && slice.offset < hi;
    }
  }
  return n;
}

namespace {

/// BFS from v to w over pivots accepted by `keep(current, next)`.
std::optional<std::vector<Point>> bfs_walk(const CubeSlice& slice, const Point& v, const Point& w,
                                           const std::function<bool(const Point&, const Point&)>& keep) {
  std::map<Point, Point> parent;
  std::deque<Point> queue{v};
  parent.emplace(v, v);
  while (!queue.empty() && !parent.count(w)) {
    const Point cur = std::move(queue.front());
    queue.pop_front();
    for (auto& nb : slice_neighbours(slice, cur)) {
      if (parent.count(nb) || !keep(cur, nb)) continue;
      parent.emplace(nb, cur);
      queue.push_back(std::move(nb));
    }
  }
  if (!parent.count(w)) return std::nullopt;
  std::vector<Point> path{w};
  while (path.back() != v) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

SignatureWalk signature_pivot_walk(const CubeSlice& slice, const Point& v, const Point& w) {
  const auto target = side_signature(w, slice);
  side_signature(v, slice);
  auto dist = [&](const Point& x) { return hamming(side_signature(x, slice), target); };
  if (auto path = bfs_walk(slice, v, w, [&](const Point& a, const Point& b) { return dist(b) < dist(a); })) {
    return {std::move(*path), true};
  }
  auto path = bfs_walk(slice, v, w, [](const Point&, const Point&) { return true; });
  if (!path) fail(ErrorKind::InvalidInput, "slice graph is disconnected");
  return {std::move(*path), false};
}

CubeSlice cube_slice_from_p_by_2(const Margins2& m) {
  if (m.q() != 2) fail(ErrorKind::InvalidInput, "expected a p x 2 instance");
  if (!is_feasible(m)) fail(ErrorKind::Infeasible, "row total differs from column total");
  if (!m.strictly_positive()) fail(ErrorKind::InvalidMargins, "margins must be strictly positive");
  return CubeSlice{m.u, m.v[0]};
}

Point table_to_slice_point(const Table2& x, const Margins2& m) {
  if (!x.satisfies(m) || m.q() != 2) fail(ErrorKind::NotInPolytope, "table is not in the p x 2 polytope");
  Point t(m.p());
  for (std::size_t i = 0; i < m.p(); ++i) t[i] = x(i, 0) / m.u[i];
  return t;
}

}  // namespace transportlab
