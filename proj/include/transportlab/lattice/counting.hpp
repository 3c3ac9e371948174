#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "transportlab/core/json_io.hpp"
#include "transportlab/core/margins.hpp"
#include "transportlab/core/scalar.hpp"

namespace transportlab {

/// Integral 2-way margins.
struct IntMargins2 {
  std::vector<BigInt> u;
  std::vector<BigInt> v;

  std::size_t p() const noexcept { return u.size(); }
  std::size_t q() const noexcept { return v.size(); }
  /// Throws InvalidMargins on an empty side or a negative entry.
  void validate() const;
  bool balanced() const;
  /// Throws InvalidMargins when some margin is not an integer.
  static IntMargins2 from(const Margins2& m);
  Margins2 rational() const;
};

/// Non-negative integer table, row-major.
struct IntTable2 {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::int64_t> entries;

  IntTable2() = default;
  IntTable2(std::size_t p_, std::size_t q_) : p(p_), q(q_), entries(p_ * q_, 0) {}

  std::int64_t& operator()(std::size_t i, std::size_t j) { return entries[i * q + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries[i * q + j]; }
  bool satisfies(const IntMargins2& m) const;

  friend bool operator==(const IntTable2&, const IntTable2&) = default;
  friend auto operator<=>(const IntTable2&, const IntTable2&) = default;
};

Json to_json(const IntTable2& x);

/// Number of non-negative integer tables with margins m (0 when the totals
/// differ). The rows are split in two halves; for every vector w of column
/// sums of the top half, the counts of both halves are multiplied. A half
/// with two rows is a bounded-composition count, read off as a coefficient
/// of prod_j (1 + x + ... + x^{w_j}) by inclusion-exclusion; larger halves
/// recurse. Sub-counts are memoized on sorted margins. Throws TooLarge when
/// the number of intermediate vectors exceeds 5 * 10^7.
BigInt count_tables(const IntMargins2& m);

/// All integer tables in lexicographic order. Throws TooMany when there are
/// more than `limit`.
std::vector<IntTable2> enumerate_tables(const IntMargins2& m, std::size_t limit = 1'000'000);

/// Smallest and largest value of cell (i, j) over the integer tables:
/// max(0, u_i + v_j - total) and min(u_i, v_j). Throws Infeasible when the
/// totals differ.
std::pair<BigInt, BigInt> integer_range(const IntMargins2& m, std::size_t i, std::size_t j);

}  // namespace transportlab
