#include "transportlab/core/support_graph.hpp"

#include <algorithm>
#include <numeric>

#include "transportlab/core/error.hpp"

namespace transportlab {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), rank_(n, 0), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) return false;
  if (rank_[x] < rank_[y]) std::swap(x, y);
  parent_[y] = x;
  if (rank_[x] == rank_[y]) ++rank_[x];
  --sets_;
  return true;
}

std::size_t SupportGraph::components() const {
  DisjointSets ds(p + q);
  for (const auto& [i, j] : edges) ds.unite(i, p + j);
  return ds.count();
}

std::size_t SupportGraph::cyclomatic_number() const { return edges.size() + components() - (p + q); }

SupportGraph support_graph(const Table2& x) {
  SupportGraph g{x.p, x.q, {}};
  for (std::size_t i = 0; i < x.p; ++i) {
    for (std::size_t j = 0; j < x.q; ++j) {
      if (x(i, j) > 0) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

SupportGraph graph_union(const SupportGraph& a, const SupportGraph& b) {
  if (a.p != b.p || a.q != b.q) fail(ErrorKind::InvalidInput, "support graphs of different shapes");
  SupportGraph g{a.p, a.q, {}};
  std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), std::back_inserter(g.edges));
  return g;
}

}  // namespace transportlab
