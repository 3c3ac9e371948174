#include "transportlab/polytope2/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <sstream>

#include "transportlab/core/error.hpp"
#include "transportlab/core/support_graph.hpp"

namespace transportlab {

std::size_t PolytopeGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency) twice += nb.size();
  return twice / 2;
}

bool PolytopeGraph::has_edge(std::size_t a, std::size_t b) const {
  const auto& nb = adjacency.at(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

bool PolytopeGraph::connected() const {
  if (n == 0) return true;
  const auto d = bfs_distances(*this, 0);
  return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == std::numeric_limits<std::size_t>::max(); });
}

PolytopeGraph PolytopeGraph::from_predicate(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& adj) {
  PolytopeGraph g;
  g.n = n;
  g.adjacency.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (adj(a, b)) {
        g.adjacency[a].push_back(b);
        g.adjacency[b].push_back(a);
      }
    }
  }
  for (auto& nb : g.adjacency) std::sort(nb.begin(), nb.end());
  return g;
}

PolytopeGraph polytope_graph(const VertexSet2& vs) {
  const std::size_t p = vs.margins.p(), q = vs.margins.q();
  // Supports as bitmasks (pq <= 36 under the enumeration guard).
  std::vector<std::uint64_t> masks;
  masks.reserve(vs.vertices.size());
  for (const auto& x : vs.vertices) {
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < x.entries.size(); ++c) {
      if (x.entries[c] > 0) mask |= std::uint64_t{1} << c;
    }
    masks.push_back(mask);
  }
  return PolytopeGraph::from_predicate(vs.vertices.size(), [&](std::size_t a, std::size_t b) {
    const std::uint64_t both = masks[a] | masks[b];
    DisjointSets ds(p + q);
    std::size_t edges = 0;
    for (std::uint64_t rest = both; rest != 0; rest &= rest - 1) {
      const auto c = static_cast<std::size_t>(__builtin_ctzll(rest));
      ds.unite(c / q, p + c % q);
      ++edges;
    }
    return edges + ds.count() == p + q + 1;
  });
}

PolytopeGraph polytope_graph(const Margins2& m) { return polytope_graph(enumerate_vertices(m)); }

std::vector<std::size_t> bfs_distances(const PolytopeGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.n, std::numeric_limits<std::size_t>::max());
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (std::size_t b : g.adjacency[a]) {
      if (dist[b] == std::numeric_limits<std::size_t>::max()) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return dist;
}

std::size_t diameter(const PolytopeGraph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.n; ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) fail(ErrorKind::InvalidInput, "graph is disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

Json edge_list_json(const PolytopeGraph& g) {
  Json edges = Json::array();
  for (std::size_t a = 0; a < g.n; ++a) {
    for (std::size_t b : g.adjacency[a]) {
      if (a < b) edges.push_back(Json::array({a, b}));
    }
  }
  return Json{{"n", g.n}, {"edges", std::move(edges)}};
}

std::string to_dot(const PolytopeGraph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t a = 0; a < g.n; ++a) out << "  v" << a << ";\n";
  for (std::size_t a = 0; a < g.n; ++a) {
    for (std::size_t b : g.adjacency[a]) {
      if (a < b) out << "  v" << a << " -- v" << b << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace transportlab
