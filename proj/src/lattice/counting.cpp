#include "transportlab/lattice/counting.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>

#include "transportlab/core/error.hpp"
#include "transportlab/core/parallel.hpp"

namespace transportlab {
namespace {

using i128 = __int128;
using Vec = std::vector<std::int64_t>;

constexpr std::uint64_t kMaxIntermediate = 50'000'000;

BigInt to_big(i128 x) {
  const bool neg = x < 0;
  unsigned __int128 a = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
  BigInt out = static_cast<unsigned long>(static_cast<std::uint64_t>(a >> 64));
  out <<= 64;
  out += static_cast<unsigned long>(static_cast<std::uint64_t>(a));
  return neg ? BigInt(-out) : out;
}

// C(n, k); false on overflow.
bool small_binomial(std::int64_t n, std::int64_t k, i128& out) {
  if (k < 0 || n < k) {
    out = 0;
    return true;
  }
  k = std::min(k, n - k);
  i128 r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    i128 t;
    if (__builtin_mul_overflow(r, static_cast<i128>(n - i), &t)) return false;
    r = t / (i + 1);
  }
  out = r;
  return true;
}

// Exact count, held in 128 bits while it fits.
struct Coefficient {
  i128 small = 0;
  bool overflow = false;
  BigInt big;
};

// Small path of the count below: inclusion-exclusion over the caps that can
// be exceeded. False when that would overflow or take too many terms.
bool two_row_small(std::int64_t a, const std::int64_t* caps, std::size_t n, std::int64_t total, i128& out) {
  a = std::min(a, total - a);
  std::int64_t tight[64];
  std::size_t m = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (caps[j] < a) tight[m++] = caps[j];
  }
  if (m > 16) return false;
  const auto k = static_cast<std::int64_t>(n) - 1;
  i128 acc = 0;
  bool ok = true;
  std::function<void(std::size_t, std::int64_t, int)> rec = [&](std::size_t j, std::int64_t rem, int sign) {
    if (!ok) return;
    if (j == m) {
      i128 b;
      if (!small_binomial(rem + k, k, b) || __builtin_add_overflow(acc, sign * b, &acc)) ok = false;
      return;
    }
    rec(j + 1, rem, sign);
    if (rem - (tight[j] + 1) >= 0) rec(j + 1, rem - (tight[j] + 1), -sign);
  };
  rec(0, a, 1);
  out = acc;
  return ok;
}

std::size_t nonzero_caps(const std::int64_t* w, std::size_t q, std::int64_t* caps, std::int64_t& total) {
  std::size_t n = 0;
  total = 0;
  for (std::size_t j = 0; j < q; ++j) {
    if (w[j] == 0) continue;
    if (n == 64) fail(ErrorKind::TooLarge, "counting is limited to 64 columns");
    total += w[j];
    caps[n++] = w[j];
  }
  return n;
}

// Coefficient of x^a in prod_j (1 + ... + x^{w_j}), i.e. the number of
// 2-row tables with row sums (a, sum w - a) and column sums w.
Coefficient two_row(std::int64_t a, const std::int64_t* w, std::size_t q) {
  std::int64_t caps[64];
  std::int64_t total = 0;
  const std::size_t n = nonzero_caps(w, q, caps, total);
  Coefficient c;
  if (a < 0 || a > total) return c;
  if (n == 0) {
    c.small = 1;
    return c;
  }
  if (two_row_small(a, caps, n, total, c.small)) return c;
  a = std::min(a, total - a);
  // Plain polynomial product.
  if (a > 10'000'000) fail(ErrorKind::TooLarge, "bounded-composition count is too large to expand");
  std::vector<BigInt> poly(static_cast<std::size_t>(a) + 1, 0);
  poly[0] = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<BigInt> next(poly.size(), 0);
    BigInt window = 0;
    for (std::size_t d = 0; d < poly.size(); ++d) {
      window += poly[d];
      if (d >= static_cast<std::size_t>(caps[j]) + 1) window -= poly[d - static_cast<std::size_t>(caps[j]) - 1];
      next[d] = window;
    }
    poly = std::move(next);
  }
  c.overflow = true;
  c.big = poly.back();
  return c;
}

struct Accumulator {
  i128 small = 0;
  BigInt big = 0;

  void add_product(const Coefficient& x, const Coefficient& y) {
    if (!x.overflow && !y.overflow) {
      i128 p, s;
      if (!__builtin_mul_overflow(x.small, y.small, &p) && !__builtin_add_overflow(small, p, &s)) {
        small = s;
        return;
      }
    }
    big += (x.overflow ? x.big : to_big(x.small)) * (y.overflow ? y.big : to_big(y.small));
  }
  BigInt value() const { return big + to_big(small); }
};

class Counter {
 public:
  explicit Counter(std::atomic<std::uint64_t>& budget) : budget_(budget) {}

  // Rows u against columns v; both balanced and non-negative.
  Coefficient count(Vec u, Vec v) {
    std::erase(u, 0);
    std::erase(v, 0);
    if (u.size() > v.size()) std::swap(u, v);
    Coefficient c;
    if (u.size() <= 1) {
      c.small = 1;
      return c;
    }
    if (u.size() == 2) return two_row(u[0], v.data(), v.size());
    std::sort(u.begin(), u.end(), std::greater<>());
    std::sort(v.begin(), v.end(), std::greater<>());
    auto key = std::make_pair(u, v);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t top = (u.size() + 1) / 2;
    const Vec top_u(u.begin(), u.begin() + static_cast<long>(top));
    const Vec bottom_u(u.begin() + static_cast<long>(top), u.end());
    charge(std::accumulate(top_u.begin(), top_u.end(), std::int64_t{0}), v);
    Accumulator acc;
    for_each_split(top_u, v, [&](const Vec& w, const Vec& rest) {
      acc.add_product(count(top_u, w), count(bottom_u, rest));
    });
    Coefficient out;
    out.overflow = true;
    out.big = acc.value();
    memo_.emplace(std::move(key), out);
    return out;
  }

  // Calls f(w, v - w) for every w in 0..v with sum equal to the top total,
  // w_0 fixed when `first` is set.
  template <class F>
  void for_each_split(const Vec& top_u, const Vec& v, F&& f, std::int64_t first = -1) {
    const std::int64_t total = std::accumulate(top_u.begin(), top_u.end(), std::int64_t{0});
    const std::size_t q = v.size();
    Vec suffix(q + 1, 0);
    for (std::size_t j = q; j-- > 0;) suffix[j] = suffix[j + 1] + v[j];
    Vec w(q, 0), rest(q, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t j, std::int64_t rem) {
      if (j + 1 == q) {
        w[j] = rem;
        rest[j] = v[j] - rem;
        f(w, rest);
        return;
      }
      std::int64_t lo = std::max<std::int64_t>(0, rem - suffix[j + 1]);
      std::int64_t hi = std::min(v[j], rem);
      if (j == 0 && first >= 0) lo = std::max(lo, first), hi = std::min(hi, first);
      for (std::int64_t t = lo; t <= hi; ++t) {
        w[j] = t;
        rest[j] = v[j] - t;
        rec(j + 1, rem - t);
      }
    };
    if (total <= suffix[0]) rec(0, total);
  }

  // Adds the number of splits of `total` under v to the shared guard.
  void charge(std::int64_t total, const Vec& v) {
    std::int64_t caps[64];
    std::int64_t sum = 0;
    const std::size_t n = nonzero_caps(v.data(), v.size(), caps, sum);
    i128 splits = 0;
    if (n > 0 && total <= sum && !two_row_small(total, caps, n, sum, splits)) splits = kMaxIntermediate + 1;
    const std::uint64_t add =
        splits > static_cast<i128>(kMaxIntermediate) ? kMaxIntermediate + 1 : static_cast<std::uint64_t>(splits);
    if (budget_.fetch_add(add) + add > kMaxIntermediate) {
      fail(ErrorKind::TooLarge, "counting needs more than 5e7 intermediate column-sum vectors");
    }
  }

 private:
  std::atomic<std::uint64_t>& budget_;
  std::map<std::pair<Vec, Vec>, Coefficient> memo_;
};

Vec narrow(const std::vector<BigInt>& xs) {
  Vec out;
  out.reserve(xs.size());
  for (const auto& x : xs) {
    if (!x.fits_slong_p()) fail(ErrorKind::TooLarge, "margins beyond 64 bits are not supported here");
    out.push_back(x.get_si());
  }
  return out;
}

}  // namespace

void IntMargins2::validate() const {
  if (u.empty() || v.empty()) fail(ErrorKind::InvalidMargins, "margins must have at least one row and one column");
  for (const auto* side : {&u, &v}) {
    for (const auto& x : *side) {
      if (sgn(x) < 0) fail(ErrorKind::InvalidMargins, "margins must be non-negative");
    }
  }
}

bool IntMargins2::balanced() const {
  BigInt a = 0, b = 0;
  for (const auto& x : u) a += x;
  for (const auto& x : v) b += x;
  return a == b;
}

IntMargins2 IntMargins2::from(const Margins2& m) {
  IntMargins2 out;
  for (const auto* side : {&m.u, &m.v}) {
    auto& dst = side == &m.u ? out.u : out.v;
    for (const auto& x : *side) {
      if (!is_integer(x)) fail(ErrorKind::InvalidMargins, "integer tables need integral margins");
      dst.push_back(x.get_num());
    }
  }
  out.validate();
  return out;
}

Margins2 IntMargins2::rational() const {
  Margins2 out;
  for (const auto& x : u) out.u.emplace_back(x);
  for (const auto& x : v) out.v.emplace_back(x);
  return out;
}

bool IntTable2::satisfies(const IntMargins2& m) const {
  if (m.p() != p || m.q() != q) return false;
  for (const auto e : entries) {
    if (e < 0) return false;
  }
  for (std::size_t i = 0; i < p; ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < q; ++j) s += static_cast<long>((*this)(i, j));
    if (s != m.u[i]) return false;
  }
  for (std::size_t j = 0; j < q; ++j) {
    BigInt s = 0;
    for (std::size_t i = 0; i < p; ++i) s += static_cast<long>((*this)(i, j));
    if (s != m.v[j]) return false;
  }
  return true;
}

Json to_json(const IntTable2& x) {
  Json out = Json::array();
  for (std::size_t i = 0; i < x.p; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < x.q; ++j) row.push_back(x(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

BigInt count_tables(const IntMargins2& m) {
  m.validate();
  if (!m.balanced()) return 0;
  Vec u = narrow(m.u), v = narrow(m.v);
  std::erase(u, 0);
  std::erase(v, 0);
  if (u.size() > v.size()) std::swap(u, v);
  std::atomic<std::uint64_t> budget{0};
  if (u.size() <= 2) {
    Counter c(budget);
    const auto r = c.count(u, v);
    return r.overflow ? r.big : to_big(r.small);
  }
  std::sort(u.begin(), u.end(), std::greater<>());
  std::sort(v.begin(), v.end(), std::greater<>());
  const std::size_t top = (u.size() + 1) / 2;
  const Vec top_u(u.begin(), u.begin() + static_cast<long>(top));
  const Vec bottom_u(u.begin() + static_cast<long>(top), u.end());

  // One task per value of w_0; the guard is charged once up front.
  const std::int64_t t0 = std::accumulate(top_u.begin(), top_u.end(), std::int64_t{0});
  Counter(budget).charge(t0, v);
  const std::size_t tasks = static_cast<std::size_t>(std::min(v[0], t0)) + 1;
  std::vector<BigInt> parts(tasks);
  parallel_for(tasks, [&](std::size_t t) {
    Counter c(budget);
    Accumulator acc;
    c.for_each_split(
        top_u, v, [&](const Vec& w, const Vec& rest) { acc.add_product(c.count(top_u, w), c.count(bottom_u, rest)); },
        static_cast<std::int64_t>(t));
    parts[t] = acc.value();
  });
  BigInt total = 0;
  for (const auto& x : parts) total += x;
  return total;
}

std::vector<IntTable2> enumerate_tables(const IntMargins2& m, std::size_t limit) {
  m.validate();
  if (!m.balanced()) return {};
  const BigInt n = count_tables(m);
  if (n > static_cast<unsigned long>(limit)) {
    fail(ErrorKind::TooMany, to_string(n) + " tables exceed the limit of " + std::to_string(limit));
  }
  const std::size_t p = m.p(), q = m.q();
  Vec r = narrow(m.u), c = narrow(m.v);
  std::vector<IntTable2> out;
  out.reserve(n.get_ui());
  IntTable2 x(p, q);
  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (cell == p * q) {
      out.push_back(x);
      return;
    }
    const std::size_t i = cell / q, j = cell % q;
    std::int64_t later = 0;
    for (std::size_t l = j + 1; l < q; ++l) later += c[l];
    std::int64_t lo = std::max<std::int64_t>(0, r[i] - later);
    std::int64_t hi = std::min(r[i], c[j]);
    if (i + 1 == p) lo = hi = c[j];
    for (std::int64_t t = lo; t <= hi; ++t) {
      x(i, j) = t;
      r[i] -= t;
      c[j] -= t;
      rec(cell + 1);
      r[i] += t;
      c[j] += t;
    }
    x(i, j) = 0;
  };
  rec(0);
  return out;
}

std::pair<BigInt, BigInt> integer_range(const IntMargins2& m, std::size_t i, std::size_t j) {
  m.validate();
  if (i >= m.p() || j >= m.q()) fail(ErrorKind::InvalidInput, "cell index out of range");
  if (!m.balanced()) fail(ErrorKind::Infeasible, "row and column totals differ");
  BigInt total = 0;
  for (const auto& x : m.u) total += x;
  BigInt lo = m.u[i] + m.v[j] - total;
  if (sgn(lo) < 0) lo = 0;
  BigInt hi = m.u[i] < m.v[j] ? m.u[i] : m.v[j];
  return {lo, hi};
}

}  // namespace transportlab
