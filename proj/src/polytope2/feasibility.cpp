#include "transportlab/polytope2/feasibility.hpp"

#include <algorithm>
#include <unordered_set>

#include "transportlab/core/error.hpp"

namespace transportlab {
namespace {

std::vector<Rational> subset_sums(const std::vector<Rational>& xs) {
  std::vector<Rational> sums(std::size_t{1} << xs.size());
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const auto bit = static_cast<std::size_t>(__builtin_ctzll(low));
    sums[mask] = sums[mask ^ low] + xs[bit];
  }
  return sums;
}

}  // namespace

bool is_feasible(const Margins2& m) {
  m.validate();
  return sum(m.u) == sum(m.v);
}

std::size_t dimension2(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) fail(ErrorKind::InvalidInput, "shape dimensions must be >= 1");
  return (p - 1) * (q - 1);
}

Table2 northwest_corner(const Margins2& m) {
  if (!is_feasible(m)) fail(ErrorKind::Infeasible, "row total differs from column total");
  Table2 x(m.p(), m.q());
  auto row = m.u;
  auto col = m.v;
  for (std::size_t i = 0; i < m.p(); ++i) {
    for (std::size_t j = 0; j < m.q(); ++j) {
      const Rational t = std::min(row[i], col[j]);
      x(i, j) = t;
      row[i] -= t;
      col[j] -= t;
    }
  }
  return x;
}

bool is_generic(const Margins2& m) {
  if (!is_feasible(m)) fail(ErrorKind::Infeasible, "row total differs from column total");
  if (m.p() + m.q() > 24) fail(ErrorKind::TooLargeForExactCheck, "genericity check limited to p+q <= 24");
  const auto su = subset_sums(m.u);
  const auto sv = subset_sums(m.v);
  // A proper side summing to the full total needs a zero margin.
  for (const auto& x : m.u) {
    if (x == 0 && m.p() > 1) return false;
  }
  for (const auto& x : m.v) {
    if (x == 0 && m.q() > 1) return false;
  }
  std::vector<Rational> left(su.begin() + 1, su.end() - 1);
  std::vector<Rational> right(sv.begin() + 1, sv.end() - 1);
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  std::size_t a = 0, b = 0;
  while (a < left.size() && b < right.size()) {
    if (left[a] == right[b]) return false;
    if (left[a] < right[b]) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

Margins2 birkhoff_margins(std::size_t p) {
  if (p == 0) fail(ErrorKind::InvalidInput, "p must be >= 1");
  return Margins2{std::vector<Rational>(p, Rational(1)), std::vector<Rational>(p, Rational(1))};
}

Margins2 central_margins(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) fail(ErrorKind::InvalidInput, "p and q must be >= 1");
  return Margins2{std::vector<Rational>(p, Rational(static_cast<unsigned long>(q))),
                  std::vector<Rational>(q, Rational(static_cast<unsigned long>(p)))};
}

Margins2 perturb_to_generic(const Margins2& m) {
  auto x = northwest_corner(m);
  std::vector<Rational> all = m.u;
  all.insert(all.end(), m.v.begin(), m.v.end());
  const Rational eps = make_rational(1, 4 * denominator_lcm(all));
  Rational power = 1;
  for (auto& e : x.entries) {
    power *= eps;
    e += power;
  }
  Margins2 out{x.row_sums(), x.column_sums()};
  if (out.p() + out.q() <= 24 && !is_generic(out)) {
    fail(ErrorKind::Degenerate, "perturbation did not produce generic margins");
  }
  return out;
}

}  // namespace transportlab
