#pragma once

#include <cstddef>
#include <vector>

#include "transportlab/core/margins.hpp"
#include "transportlab/core/table.hpp"

namespace transportlab {

struct VertexSet2 {
  Margins2 margins;
  std::vector<Table2> vertices;  // sorted, no duplicates
  bool degenerate_flag = false;  // some vertex has fewer than p+q-1 positive cells

  /// Position of x in `vertices`, or vertices.size() if absent.
  std::size_t index_of(const Table2& x) const;
};

/// Vertex test by acyclicity of the support graph. Throws NotInPolytope if
/// x does not satisfy m.
bool is_vertex(const Table2& x, const Margins2& m);

/// All vertices, from the spanning trees of K_{p,q}: each tree is solved by
/// leaf peeling and kept when non-negative. Requires positive feasible
/// margins and pq <= 36.
VertexSet2 enumerate_vertices(const Margins2& m);

/// Adjacency of two vertices of the same polytope: the union of their
/// supports carries exactly one cycle.
bool adjacent(const Table2& x, const Table2& y);

}  // namespace transportlab
