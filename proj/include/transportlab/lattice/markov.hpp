#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "transportlab/lattice/counting.hpp"

namespace transportlab {

/// The move +1 at (i1, j1) and (i2, j2), -1 at (i1, j2) and (i2, j1), with
/// i1 < i2 and j1 < j2. Its negative is the other half of the pair.
struct Move {
  std::size_t i1 = 0, i2 = 0, j1 = 0, j2 = 0;

  IntTable2 table(std::size_t p, std::size_t q) const;
  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveBasis {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<Move> moves;  // ordered by (i1, i2, j1, j2)
};

/// All C(p,2) * C(q,2) rectangle moves. Empty when p or q is below 2.
MoveBasis graver_moves(std::size_t p, std::size_t q);

/// Applies sign * move to x if every entry stays non-negative.
bool try_apply(IntTable2& x, const Move& move, int sign);

/// BFS over the enumerated tables along moves that keep entries
/// non-negative. True when one component covers every table (vacuously for
/// zero or one table). Throws TooMany with enumerate_tables.
bool moves_connect(const IntMargins2& m, std::size_t limit = 1'000'000);

/// Hold-on-reject walk from the northwest corner: each step picks a move and
/// a sign uniformly and applies them when the result stays non-negative.
/// Deterministic for a fixed seed (mt19937_64 with rejection-sampled draws).
/// Throws Infeasible when the totals differ.
IntTable2 sample_table(const IntMargins2& m, std::uint64_t steps, std::uint64_t seed);

/// The walk with a callback after every step, for inspection.
IntTable2 sample_table(const IntMargins2& m, std::uint64_t steps, std::uint64_t seed,
                       const std::function<void(const IntTable2&)>& observe);

/// Northwest-corner integer table.
IntTable2 integer_nw_corner(const IntMargins2& m);

}  // namespace transportlab
