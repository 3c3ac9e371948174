#pragma once

#include <cstddef>
#include <vector>

#include "transportlab/core/scalar.hpp"
#include "transportlab/core/table.hpp"
#include "transportlab/polytope2/graph.hpp"

namespace transportlab {

/// Degree of every vertex of B_p: sum_{k=0}^{p-2} C(p,k) (p-k-1)!.
BigInt birkhoff_degree(std::size_t p);

/// Cost alpha^{(i-1)p + (j-1)} on cell (i,j) of a p x p table, row-major.
/// Requires 0 < alpha < 1/p (InvalidAlpha).
std::vector<Rational> pak_cost(std::size_t p, const Rational& alpha);

Rational linear_cost(const std::vector<Rational>& cost, const Table2& x);

/// Longest path (in edges) along graph edges with strictly decreasing cost.
std::size_t longest_decreasing_path(const PolytopeGraph& g, const std::vector<Table2>& vertices,
                                    const std::vector<Rational>& cost);

}  // namespace transportlab
