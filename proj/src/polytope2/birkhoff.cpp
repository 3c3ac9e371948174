#include "transportlab/polytope2/birkhoff.hpp"

#include <algorithm>
#include <numeric>

#include "transportlab/core/error.hpp"

namespace transportlab {

BigInt birkhoff_degree(std::size_t p) {
  if (p < 2) fail(ErrorKind::InvalidInput, "birkhoff_degree needs p >= 2");
  BigInt total = 0;
  for (std::size_t k = 0; k + 2 <= p; ++k) total += binomial(p, k) * factorial(p - k - 1);
  return total;
}

std::vector<Rational> pak_cost(std::size_t p, const Rational& alpha) {
  if (p == 0) fail(ErrorKind::InvalidInput, "p must be >= 1");
  if (alpha <= 0 || alpha >= make_rational(1, static_cast<unsigned long>(p))) {
    fail(ErrorKind::InvalidAlpha, "alpha must lie strictly between 0 and 1/p, got " + to_string(alpha));
  }
  std::vector<Rational> cost(p * p);
  Rational power = 1;
  for (auto& c : cost) {
    c = power;
    power *= alpha;
  }
  return cost;
}

Rational linear_cost(const std::vector<Rational>& cost, const Table2& x) {
  if (cost.size() != x.entries.size()) fail(ErrorKind::InvalidInput, "cost vector does not match table shape");
  Rational total = 0;
  for (std::size_t c = 0; c < cost.size(); ++c) total += cost[c] * x.entries[c];
  return total;
}

std::size_t longest_decreasing_path(const PolytopeGraph& g, const std::vector<Table2>& vertices,
                                    const std::vector<Rational>& cost) {
  if (vertices.size() != g.n) fail(ErrorKind::InvalidInput, "vertex list does not match graph");
  std::vector<Rational> value;
  value.reserve(g.n);
  for (const auto& x : vertices) value.push_back(linear_cost(cost, x));
  // Visiting in increasing cost order makes every decreasing edge point back.
  std::vector<std::size_t> order(g.n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
  std::vector<std::size_t> longest(g.n, 0);  // longest decreasing path ending below a
  std::size_t best = 0;
  for (std::size_t a : order) {
    for (std::size_t b : g.adjacency[a]) {
      if (value[b] < value[a]) longest[a] = std::max(longest[a], longest[b] + 1);
    }
    best = std::max(best, longest[a]);
  }
  return best;
}

}  // namespace transportlab
