#include "transportlab/polytope2/hurkens.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "transportlab/core/error.hpp"
#include "transportlab/core/support_graph.hpp"
#include "transportlab/polytope2/feasibility.hpp"

namespace transportlab {
namespace {

// Nodes 0..p-1 are supplies, p..p+q-1 demands.
struct Cell {
  std::size_t i, j;
};

Cell cell_of(std::size_t p, std::size_t a, std::size_t b) {
  return a < p ? Cell{a, b - p} : Cell{b, a - p};
}

std::vector<std::vector<std::size_t>> neighbours(const Table2& y) {
  std::vector<std::vector<std::size_t>> nb(y.p + y.q);
  for (std::size_t i = 0; i < y.p; ++i) {
    for (std::size_t j = 0; j < y.q; ++j) {
      if (y(i, j) > 0) {
        nb[i].push_back(y.p + j);
        nb[y.p + j].push_back(i);
      }
    }
  }
  for (auto& n : nb) std::sort(n.begin(), n.end());
  return nb;
}

struct Option {
  std::size_t sigma;
  std::vector<std::size_t> leaves;
};

class Walker {
 public:
  explicit Walker(std::vector<bool> active) : active_(std::move(active)) {}

  /// Runs the construction for one option; returns the visited vertices.
  std::vector<Table2> run(Table2 y, const Option& opt) const {
    std::vector<Table2> steps;
    const std::size_t p = y.p;
    std::vector<bool> finished(p + y.q, false);
    for (std::size_t delta : opt.leaves) {
      const Cell home = cell_of(p, opt.sigma, delta);
      if (y(home.i, home.j) == 0) {
        y = pivot_in(y, home.i, home.j);
        steps.push_back(y);
      }
      while (true) {
        const auto nb = neighbours(y);
        std::optional<std::size_t> other;
        for (std::size_t s : nb[delta]) {
          if (s != opt.sigma && active_[s]) {
            other = s;
            break;
          }
        }
        if (!other) break;
        const auto hat = pick_hat(y, nb, opt, delta, finished);
        const Cell enter = cell_of(p, *other, hat);
        y = pivot_in(y, enter.i, enter.j);
        steps.push_back(y);
      }
      finished[delta] = true;
    }
    return steps;
  }

 private:
  // Neighbour of sigma in B(y) with the largest value, preferring nodes
  // outside the current leaf set; ties go to the smallest index.
  std::size_t pick_hat(const Table2& y, const std::vector<std::vector<std::size_t>>& nb, const Option& opt,
                       std::size_t delta, const std::vector<bool>& finished) const {
    const std::size_t p = y.p;
    std::optional<std::size_t> best;
    bool best_outside = false;
    Rational best_value;
    for (std::size_t d : nb[opt.sigma]) {
      if (d == delta || finished[d] || !active_[d]) continue;
      const bool outside = !std::binary_search(opt.leaves.begin(), opt.leaves.end(), d);
      const Cell c = cell_of(p, opt.sigma, d);
      const Rational& value = y(c.i, c.j);
      if (!best || (outside && !best_outside) || (outside == best_outside && value > best_value)) {
        best = d;
        best_outside = outside;
        best_value = value;
      }
    }
    if (!best) fail(ErrorKind::BudgetExceeded, "no pivot target next to node " + std::to_string(opt.sigma));
    return *best;
  }

  std::vector<bool> active_;
};

std::vector<Option> options(const Table2& x, const std::vector<bool>& active) {
  const auto nb = neighbours(x);
  const std::size_t nodes = x.p + x.q;
  std::vector<std::size_t> degree(nodes, 0);
  for (std::size_t a = 0; a < nodes; ++a) {
    if (!active[a]) continue;
    for (std::size_t b : nb[a]) degree[a] += active[b];
  }
  std::vector<Option> out;
  for (std::size_t s = 0; s < nodes; ++s) {
    if (!active[s]) continue;
    Option opt{s, {}};
    for (std::size_t d : nb[s]) {
      if (active[d] && degree[d] == 1) opt.leaves.push_back(d);
    }
    if (!opt.leaves.empty()) out.push_back(std::move(opt));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Option& a, const Option& b) { return a.leaves.size() > b.leaves.size(); });
  return out;
}

void require_tree_vertex(const Table2& x, const Margins2& m, const char* name) {
  if (!x.satisfies(m)) fail(ErrorKind::NotInPolytope, std::string(name) + " does not satisfy the margins");
  const auto g = support_graph(x);
  if (!g.is_forest()) fail(ErrorKind::InvalidInput, std::string(name) + " is not a vertex");
  if (!g.is_spanning_tree()) fail(ErrorKind::Degenerate, std::string(name) + " is a degenerate vertex");
}

}  // namespace

std::vector<std::size_t> PivotPath::indices(const VertexSet2& vs) const {
  std::vector<std::size_t> out{vs.index_of(start)};
  for (const auto& s : steps) out.push_back(vs.index_of(s));
  return out;
}

Table2 pivot_in(const Table2& y, std::size_t i, std::size_t j) {
  const std::size_t p = y.p;
  if (i >= y.p || j >= y.q) fail(ErrorKind::InvalidInput, "pivot cell out of range");
  if (y(i, j) != 0) fail(ErrorKind::InvalidInput, "pivot cell already in the support");
  const auto nb = neighbours(y);
  // Tree path from demand j back to supply i.
  const std::size_t target = i, source = p + j;
  std::vector<std::size_t> parent(p + y.q, p + y.q);
  std::vector<std::size_t> stack{source};
  parent[source] = source;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    if (a == target) break;
    for (std::size_t b : nb[a]) {
      if (parent[b] == p + y.q) {
        parent[b] = a;
        stack.push_back(b);
      }
    }
  }
  if (parent[target] == p + y.q) fail(ErrorKind::Degenerate, "support is not a spanning tree");
  std::vector<Cell> path;  // from i towards j
  for (std::size_t a = target; a != source; a = parent[a]) path.push_back(cell_of(p, a, parent[a]));
  // Along the cycle i -> j -> ... -> i the cells alternate -, +, -, ...
  // starting at the cell touching demand j, i.e. the last one of `path`.
  std::reverse(path.begin(), path.end());
  std::optional<std::size_t> leave;
  bool tie = false;
  for (std::size_t k = 0; k < path.size(); k += 2) {
    const auto& c = path[k];
    if (!leave) {
      leave = k;
      continue;
    }
    const auto& best = path[*leave];
    if (y(c.i, c.j) < y(best.i, best.j)) {
      leave = k;
      tie = false;
    } else if (y(c.i, c.j) == y(best.i, best.j)) {
      tie = true;
    }
  }
  const Rational theta = y(path[*leave].i, path[*leave].j);
  if (tie || theta == 0) fail(ErrorKind::Degenerate, "degenerate pivot");
  Table2 out = y;
  out(i, j) += theta;
  for (std::size_t k = 0; k < path.size(); ++k) {
    const auto& c = path[k];
    if (k % 2 == 0) {
      out(c.i, c.j) -= theta;
    } else {
      out(c.i, c.j) += theta;
    }
  }
  return out;
}

PivotPath hurkens_walk(const Margins2& m, const Table2& x, const Table2& y) {
  if (!is_feasible(m)) fail(ErrorKind::Infeasible, "row total differs from column total");
  if (m.p() + m.q() <= 24 && !is_generic(m)) fail(ErrorKind::Degenerate, "margins are not generic");
  require_tree_vertex(x, m, "x");
  require_tree_vertex(y, m, "y");
  const std::size_t p = m.p(), q = m.q();
  PivotPath path{y, {}};
  Table2 current = y;
  std::vector<bool> active(p + q, true);
  std::size_t live_supplies = p, live_demands = q;
  while (live_supplies > 1 && live_demands > 1) {
    const auto opts = options(x, active);
    const Walker walker(active);
    std::optional<std::size_t> chosen;
    std::vector<Table2> chosen_steps;
    std::size_t best_excess = 0;
    for (std::size_t k = 0; k < opts.size(); ++k) {
      auto steps = walker.run(current, opts[k]);
      const std::size_t budget = 4 * opts[k].leaves.size();
      if (steps.size() <= budget) {
        chosen = k;
        chosen_steps = std::move(steps);
        break;
      }
      const std::size_t excess = steps.size() - budget;
      if (!chosen || excess < best_excess) {
        chosen = k;
        best_excess = excess;
        chosen_steps = std::move(steps);
      }
    }
    if (!chosen) throw std::logic_error("hurkens_walk: no leaf found in a tree");
    for (auto& s : chosen_steps) path.steps.push_back(std::move(s));
    if (!path.steps.empty()) current = path.steps.back();
    for (std::size_t d : opts[*chosen].leaves) {
      active[d] = false;
      if (d < p) {
        --live_supplies;
      } else {
        --live_demands;
      }
    }
  }
  if (current != x) throw std::logic_error("hurkens_walk: walk did not reach the target vertex");
  const std::size_t budget = 4 * (p + q - 2);
  if (path.length() > budget) {
    fail(ErrorKind::BudgetExceeded,
         "walk used " + std::to_string(path.length()) + " pivots, budget " + std::to_string(budget));
  }
  return path;
}

}  // namespace transportlab
