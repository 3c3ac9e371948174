#pragma once

#include <cstddef>
#include <vector>

#include "transportlab/core/margins.hpp"
#include "transportlab/core/table.hpp"
#include "transportlab/polytope2/vertices.hpp"

namespace transportlab {

/// A walk along polytope edges: `start` followed by one vertex per pivot.
struct PivotPath {
  Table2 start;
  std::vector<Table2> steps;

  std::size_t length() const noexcept { return steps.size(); }
  const Table2& end() const { return steps.empty() ? start : steps.back(); }
  /// Vertex indices in `vs` of start and every step.
  std::vector<std::size_t> indices(const VertexSet2& vs) const;
};

/// Pivot on a non-degenerate vertex y: brings cell (i,j) into the support and
/// drops the unique blocking cell on the cycle. Throws Degenerate on a tie or
/// a zero step.
Table2 pivot_in(const Table2& y, std::size_t i, std::size_t j);

/// Walk from y to x built from common-leaf constructions: pick a node sigma
/// whose leaf neighbours in B(x) are delta_1..delta_r, pivot y until those
/// are leaves on sigma in B(y) too, contract them and repeat. The total is
/// checked against 4(p+q-2) (BudgetExceeded). Needs generic margins
/// (Degenerate otherwise).
PivotPath hurkens_walk(const Margins2& m, const Table2& x, const Table2& y);

}  // namespace transportlab
