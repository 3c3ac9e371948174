#include "transportlab/lattice/markov.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "transportlab/core/error.hpp"
#include "transportlab/core/random.hpp"

namespace transportlab {

IntTable2 Move::table(std::size_t p, std::size_t q) const {
  IntTable2 t(p, q);
  t(i1, j1) = 1;
  t(i2, j2) = 1;
  t(i1, j2) = -1;
  t(i2, j1) = -1;
  return t;
}

MoveBasis graver_moves(std::size_t p, std::size_t q) {
  MoveBasis basis{p, q, {}};
  for (std::size_t i1 = 0; i1 < p; ++i1) {
    for (std::size_t i2 = i1 + 1; i2 < p; ++i2) {
      for (std::size_t j1 = 0; j1 < q; ++j1) {
        for (std::size_t j2 = j1 + 1; j2 < q; ++j2) basis.moves.push_back({i1, i2, j1, j2});
      }
    }
  }
  return basis;
}

bool try_apply(IntTable2& x, const Move& move, int sign) {
  const bool blocked = sign > 0 ? x(move.i1, move.j2) == 0 || x(move.i2, move.j1) == 0
                                : x(move.i1, move.j1) == 0 || x(move.i2, move.j2) == 0;
  if (blocked) return false;
  x(move.i1, move.j1) += sign;
  x(move.i2, move.j2) += sign;
  x(move.i1, move.j2) -= sign;
  x(move.i2, move.j1) -= sign;
  return true;
}

bool moves_connect(const IntMargins2& m, std::size_t limit) {
  const auto tables = enumerate_tables(m, limit);
  if (tables.size() <= 1) return true;
  std::map<IntTable2, std::size_t> index;
  for (std::size_t a = 0; a < tables.size(); ++a) index.emplace(tables[a], a);
  const auto basis = graver_moves(m.p(), m.q());
  std::vector<char> seen(tables.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t a = queue.front();
    queue.pop_front();
    for (const auto& move : basis.moves) {
      for (int sign : {1, -1}) {
        IntTable2 y = tables[a];
        if (!try_apply(y, move, sign)) continue;
        const std::size_t b = index.at(y);
        if (seen[b]) continue;
        seen[b] = 1;
        ++reached;
        queue.push_back(b);
      }
    }
  }
  return reached == tables.size();
}

IntTable2 integer_nw_corner(const IntMargins2& m) {
  m.validate();
  if (!m.balanced()) fail(ErrorKind::Infeasible, "row and column totals differ");
  std::vector<std::int64_t> u, v;
  for (const auto& x : m.u) {
    if (!x.fits_slong_p()) fail(ErrorKind::TooLarge, "margins beyond 64 bits are not supported here");
    u.push_back(x.get_si());
  }
  for (const auto& x : m.v) {
    if (!x.fits_slong_p()) fail(ErrorKind::TooLarge, "margins beyond 64 bits are not supported here");
    v.push_back(x.get_si());
  }
  IntTable2 x(m.p(), m.q());
  std::size_t i = 0, j = 0;
  while (i < m.p() && j < m.q()) {
    const std::int64_t t = std::min(u[i], v[j]);
    x(i, j) = t;
    u[i] -= t;
    v[j] -= t;
    if (u[i] == 0 && i + 1 < m.p()) {
      ++i;
    } else {
      ++j;
    }
  }
  return x;
}

IntTable2 sample_table(const IntMargins2& m, std::uint64_t steps, std::uint64_t seed) {
  return sample_table(m, steps, seed, [](const IntTable2&) {});
}

IntTable2 sample_table(const IntMargins2& m, std::uint64_t steps, std::uint64_t seed,
                       const std::function<void(const IntTable2&)>& observe) {
  IntTable2 x = integer_nw_corner(m);
  const auto basis = graver_moves(m.p(), m.q());
  if (basis.moves.empty()) {
    for (std::uint64_t t = 0; t < steps; ++t) observe(x);
    return x;
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t choices = 2 * basis.moves.size();
  for (std::uint64_t t = 0; t < steps; ++t) {
    const std::uint64_t c = uniform_below(rng, choices);
    try_apply(x, basis.moves[c / 2], c % 2 == 0 ? 1 : -1);
    observe(x);
  }
  return x;
}

}  // namespace transportlab
