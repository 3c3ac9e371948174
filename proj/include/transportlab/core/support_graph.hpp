#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "transportlab/core/table.hpp"

namespace transportlab {

/// Bipartite graph on supplies 0..p-1 and demands 0..q-1. Edges are kept
/// sorted lexicographically.
struct SupportGraph {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Connected components over all p+q nodes (isolated nodes count).
  std::size_t components() const;
  /// Independent cycles: |E| - |V| + components.
  std::size_t cyclomatic_number() const;
  bool is_forest() const { return cyclomatic_number() == 0; }
  bool is_spanning_tree() const { return is_forest() && components() == 1; }

  friend bool operator==(const SupportGraph&, const SupportGraph&) = default;
};

SupportGraph support_graph(const Table2& x);

/// Edge union of two support graphs of the same shape.
SupportGraph graph_union(const SupportGraph& a, const SupportGraph& b);

/// Union-find over a fixed node count.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);
  std::size_t find(std::size_t x);
  /// Returns false when x and y were already joined.
  bool unite(std::size_t x, std::size_t y);
  std::size_t count() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
  std::size_t sets_;
};

}  // namespace transportlab
