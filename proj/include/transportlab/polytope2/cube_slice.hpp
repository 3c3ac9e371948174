#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "transportlab/core/margins.hpp"
#include "transportlab/core/scalar.hpp"
#include "transportlab/core/table.hpp"
#include "transportlab/polytope2/graph.hpp"

namespace transportlab {

using Point = std::vector<Rational>;

/// P = [0,1]^d intersected with {x : normal . x = offset}.
struct CubeSlice {
  std::vector<Rational> normal;
  Rational offset;

  std::size_t dim() const noexcept { return normal.size(); }
  bool contains(const Point& x) const;
};

/// String over {0,1,*}; '*' marks a coordinate strictly inside (0,1).
using SideSignature = std::string;

/// Vertices sorted lexicographically. Each lies inside a cube edge. Throws
/// NotGeneric when a cube vertex lies on the hyperplane, TooLarge for d > 20.
std::vector<Point> slice_vertices(const CubeSlice& slice);

/// Throws NotInPolytope if the point is not in the slice.
SideSignature side_signature(const Point& point, const CubeSlice& slice);

/// Number of differing characters. Unequal lengths are an InvalidInput.
std::size_t hamming(const SideSignature& a, const SideSignature& b);

/// Vertices adjacent to v: the other end of H on every square face of the
/// cube that contains v.
std::vector<Point> slice_neighbours(const CubeSlice& slice, const Point& v);

PolytopeGraph slice_graph(const CubeSlice& slice, const std::vector<Point>& vertices);

/// Facets of P: cube facets {x_i = c} whose vertices H strictly separates.
std::size_t slice_facet_count(const CubeSlice& slice);

struct SignatureWalk {
  std::vector<Point> path;  // v, ..., w
  bool monotone = true;     // every pivot lowered hamming(., w)

  std::size_t length() const noexcept { return path.empty() ? 0 : path.size() - 1; }
};

/// Shortest walk from v to w in which every pivot strictly lowers
/// hamming(., w); such a walk has at most hamming(v, w) steps. Some pairs
/// admit none (in a hexagonal slice, 0*1 and 1*0 are at Hamming distance 2
/// but graph distance 3); then a shortest walk is returned with
/// `monotone = false`.
SignatureWalk signature_pivot_walk(const CubeSlice& slice, const Point& v, const Point& w);

/// A p x 2 polytope as a slice: t_i = x_{i,1}/u_i, normal u, offset v_1.
CubeSlice cube_slice_from_p_by_2(const Margins2& m);
Point table_to_slice_point(const Table2& x, const Margins2& m);

}  // namespace transportlab
