#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "transportlab/core/constraint_system.hpp"
#include "transportlab/core/margins.hpp"
#include "transportlab/core/table.hpp"
#include "transportlab/polytope2/graph.hpp"

namespace transportlab {

/// Cell guard for exhaustive 3-way vertex enumeration.
inline constexpr std::size_t kMaxCells3 = 27;

/// Axial polytopes are non-empty exactly when the three totals agree.
/// Throws InvalidMargins on a negative entry.
bool axial_feasible(const AxialMargins& m);

/// Greedy fill of the cells in lexicographic order with the smallest
/// remaining margin. Throws Infeasible when the totals differ.
Table3 axial_nw_corner(const AxialMargins& m);

/// All vertices in canonical order. Throws TooLarge above kMaxCells3 cells.
std::vector<Table3> enumerate_vertices_3way(const AxialMargins& m);
std::vector<Table3> enumerate_vertices_3way(const PlanarMargins& m);

/// Edges between vertices of the polytope cut out by `system`.
PolytopeGraph vertex_graph_3way(const ConstraintSystem& system, const std::vector<Table3>& vertices);

/// True when every vertex has exactly rank(A) positive entries. Decided by
/// enumeration, so the same cell guard applies.
bool is_nondegenerate(const AxialMargins& m);
bool is_nondegenerate(const PlanarMargins& m);

AxialMargins generalized_birkhoff_axial(std::size_t p, std::size_t q, std::size_t s);
PlanarMargins generalized_birkhoff_planar(std::size_t p, std::size_t q, std::size_t s);

/// 2-margins all equal to 1 on a p x p x p table.
PlanarMargins planar_assignment_margins(std::size_t p);

/// The 0/1 tables with every line sum 1, one per p x p Latin square, in
/// canonical order. Throws TooLarge for p > 4.
std::vector<Table3> latin_square_vertices(std::size_t p);

/// Distinct positive entries, decreasing.
using Spectrum = std::vector<Rational>;
Spectrum spectrum(const Table3& x);

/// Integer tables with the given 2-margins, in lexicographic order. Throws
/// TooMany past `limit` tables; margins must be integral.
std::vector<Table3> planar_integer_points(const PlanarMargins& m, std::size_t limit = 1'000'000);

/// A planar instance where some cell takes integer values lo < t < hi but
/// not t itself.
struct IntegerGap {
  PlanarMargins margins;
  std::array<std::size_t, 3> cell{};
  std::vector<BigInt> values;  // attained values, increasing
};

/// Random search over 2-margins of sparse p x q x s tables with entries in
/// 0..max_entry. Returns the first gap found.
std::optional<IntegerGap> find_integer_gap(Shape shape, std::size_t trials, std::uint64_t seed, long max_entry = 2);

}  // namespace transportlab
