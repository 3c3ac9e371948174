#pragma once

#include <cstddef>
#include <vector>

#include "transportlab/core/matrix.hpp"
#include "transportlab/core/scalar.hpp"

namespace transportlab {

using Point = std::vector<Rational>;

/// Vertices of {x >= 0 : A x = b}, sorted lexicographically.
///
/// The affine hull is parametrized as x = x0 + K t with d = n - rank(A)
/// free parameters. A vertex is a point where d linearly independent
/// coordinates vanish, so the search walks over increasing sets of tight
/// coordinates, eliminating one parameter per step with fraction-free
/// (Bareiss) updates shared by every set with the same prefix. A branch is
/// cut as soon as a coordinate that no longer depends on the remaining
/// parameters is negative. Arithmetic runs in int64 and is redone in BigInt
/// on overflow. Degenerate vertices are reached from several tight sets and
/// deduplicated.
///
/// Requires at most 64 columns and a bounded polyhedron (an unbounded one
/// yields only its vertices, which is still correct but rarely useful).
std::vector<Point> enumerate_basic_solutions(const RationalMatrix& A, const std::vector<Rational>& b);

/// Rank of the columns of A listed in `columns`.
std::size_t column_rank(const RationalMatrix& A, const std::vector<std::size_t>& columns);

/// Two distinct vertices of {x >= 0 : A x = b} are adjacent iff the smallest
/// face containing both is an edge: |S| - rank(A_S) = 1 for S the union of
/// their supports.
bool vertices_adjacent(const RationalMatrix& A, const Point& x, const Point& y);

/// Dimension of the polytope spanned by `vertices` (its vertex set), i.e.
/// |S| - rank(A_S) for S the union of all supports; -1 when empty.
long polytope_dimension(const RationalMatrix& A, const std::vector<Point>& vertices);

/// Integer points of the polytope with the given vertex set, sorted. The
/// free coordinates of the row-reduced system range over the integer
/// bounding box of the vertices; the rest is solved and checked.
std::vector<std::vector<BigInt>> integer_points(const RationalMatrix& A, const std::vector<Rational>& b,
                                                const std::vector<Point>& vertices);

}  // namespace transportlab
