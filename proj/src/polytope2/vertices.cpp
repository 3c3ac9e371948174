#include "transportlab/polytope2/vertices.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "transportlab/core/error.hpp"
#include "transportlab/core/support_graph.hpp"
#include "transportlab/polytope2/feasibility.hpp"

namespace transportlab {
namespace {

constexpr std::size_t kMaxCells = 36;

/// Union-find with undo, for the edge-by-edge tree search.
class RollbackSets {
 public:
  explicit RollbackSets(std::size_t n) : parent_(n), size_(n, 1) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const std::size_t b = history_.back();
    history_.pop_back();
    const std::size_t a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

template <class Int>
class TreeSearch {
 public:
  TreeSearch(std::size_t p, std::size_t q, std::vector<Int> margin)
      : p_(p), q_(q), margin_(std::move(margin)), sets_(p + q), degree_(p + q, 0) {}

  std::set<std::vector<Int>> run() {
    chosen_.reserve(p_ + q_ - 1);
    descend(0);
    return std::move(found_);
  }

 private:
  void descend(std::size_t e) {
    const std::size_t need = p_ + q_ - 1;
    if (chosen_.size() == need) {
      solve();
      return;
    }
    if (e == p_ * q_ || chosen_.size() + (p_ * q_ - e) < need) return;
    const std::size_t i = e / q_;
    const std::size_t j = e % q_;
    const bool row_ends = j + 1 == q_;
    if (sets_.unite(i, p_ + j)) {
      chosen_.push_back(e);
      ++degree_[i];
      ++degree_[p_ + j];
      descend(e + 1);
      --degree_[i];
      --degree_[p_ + j];
      chosen_.pop_back();
      sets_.undo();
    }
    // Skipping the last edge of a row leaves that supply isolated.
    if (row_ends && degree_[i] == 0) return;
    descend(e + 1);
  }

  void solve() {
    const std::size_t nodes = p_ + q_;
    std::vector<Int> residual = margin_;
    std::vector<std::size_t> deg = degree_;
    std::vector<Int> value(p_ * q_, Int(0));
    std::vector<bool> used(chosen_.size(), false);
    std::vector<std::size_t> leaves;
    for (std::size_t v = 0; v < nodes; ++v) {
      if (deg[v] == 1) leaves.push_back(v);
    }
    std::size_t done = 0;
    while (!leaves.empty() && done < chosen_.size()) {
      const std::size_t leaf = leaves.back();
      leaves.pop_back();
      if (deg[leaf] != 1) continue;
      // find the unused edge at this leaf
      std::size_t k = 0;
      for (; k < chosen_.size(); ++k) {
        if (used[k]) continue;
        const std::size_t a = chosen_[k] / q_, b = p_ + chosen_[k] % q_;
        if (a == leaf || b == leaf) break;
      }
      const std::size_t a = chosen_[k] / q_, b = p_ + chosen_[k] % q_;
      const std::size_t other = a == leaf ? b : a;
      const Int flow = residual[leaf];
      if (flow < 0) return;
      value[chosen_[k]] = flow;
      residual[other] -= flow;
      residual[leaf] = 0;
      used[k] = true;
      ++done;
      --deg[leaf];
      if (--deg[other] == 1) leaves.push_back(other);
    }
    found_.insert(std::move(value));
  }

  std::size_t p_, q_;
  std::vector<Int> margin_;
  RollbackSets sets_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> chosen_;
  std::set<std::vector<Int>> found_;
};

template <class Int>
std::set<std::vector<Int>> search_trees(std::size_t p, std::size_t q, const std::vector<BigInt>& scaled) {
  std::vector<Int> margin;
  margin.reserve(scaled.size());
  for (const auto& b : scaled) {
    if constexpr (std::is_same_v<Int, BigInt>) {
      margin.push_back(b);
    } else {
      margin.push_back(static_cast<Int>(to_int64(b)));
    }
  }
  return TreeSearch<Int>(p, q, std::move(margin)).run();
}

Rational to_rational(const BigInt& v, const BigInt& den) { return make_rational(v, den); }
Rational to_rational(std::int64_t v, const BigInt& den) { return make_rational(BigInt(std::to_string(v)), den); }

}  // namespace

std::size_t VertexSet2::index_of(const Table2& x) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), x);
  if (it != vertices.end() && *it == x) return static_cast<std::size_t>(it - vertices.begin());
  return vertices.size();
}

bool is_vertex(const Table2& x, const Margins2& m) {
  if (!x.satisfies(m)) fail(ErrorKind::NotInPolytope, "table does not satisfy the margins");
  return support_graph(x).is_forest();
}

VertexSet2 enumerate_vertices(const Margins2& m) {
  if (!is_feasible(m)) fail(ErrorKind::Infeasible, "row total differs from column total");
  if (!m.strictly_positive()) fail(ErrorKind::InvalidMargins, "vertex enumeration needs strictly positive margins");
  const std::size_t p = m.p(), q = m.q();
  if (p * q > kMaxCells) {
    fail(ErrorKind::TooLarge, "vertex enumeration limited to pq <= 36, got " + std::to_string(p * q));
  }
  std::vector<Rational> all = m.u;
  all.insert(all.end(), m.v.begin(), m.v.end());
  const BigInt den = denominator_lcm(all);
  std::vector<BigInt> scaled;
  for (const auto& a : all) scaled.push_back(BigInt(a * den));
  const BigInt total = BigInt(sum(m.u) * den);

  VertexSet2 out;
  out.margins = m;
  auto emit = [&](const auto& found) {
    for (const auto& values : found) {
      Table2 x(p, q);
      for (std::size_t c = 0; c < p * q; ++c) x.entries[c] = to_rational(values[c], den);
      if (x.support_size() < p + q - 1) out.degenerate_flag = true;
      out.vertices.push_back(std::move(x));
    }
  };
  if (total < BigInt(1) << 62) {
    emit(search_trees<std::int64_t>(p, q, scaled));
  } else {
    emit(search_trees<BigInt>(p, q, scaled));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

bool adjacent(const Table2& x, const Table2& y) {
  return graph_union(support_graph(x), support_graph(y)).cyclomatic_number() == 1;
}

}  // namespace transportlab
