#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "transportlab/core/json_io.hpp"
#include "transportlab/polytope2/vertices.hpp"

namespace transportlab {

/// Undirected graph on vertex indices 0..n-1 with sorted adjacency lists.
struct PolytopeGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t edge_count() const;
  bool has_edge(std::size_t a, std::size_t b) const;
  bool connected() const;

  /// Builds the graph from a pairwise adjacency predicate.
  static PolytopeGraph from_predicate(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& adj);
};

PolytopeGraph polytope_graph(const VertexSet2& vs);
PolytopeGraph polytope_graph(const Margins2& m);

/// BFS distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const PolytopeGraph& g, std::size_t source);

/// All-pairs BFS. Throws InvalidInput on a disconnected graph; 0 for n <= 1.
std::size_t diameter(const PolytopeGraph& g);

/// {"n": .., "edges": [[a,b], ...]} with a < b.
Json edge_list_json(const PolytopeGraph& g);
std::string to_dot(const PolytopeGraph& g, const std::string& name = "polytope");

}  // namespace transportlab
