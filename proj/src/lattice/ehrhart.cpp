#include "transportlab/lattice/ehrhart.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "transportlab/core/error.hpp"
#include "transportlab/lattice/counting.hpp"

namespace transportlab {

Json to_json(const EhrhartSamples& s) {
  Json samples = Json::array();
  for (const auto& [t, n] : s.samples) samples.push_back({{"t", t}, {"count", to_json(n)}});
  return {{"polytope", s.polytope}, {"samples", samples}};
}

EhrhartSamples ehrhart_samples_from_json(const Json& j) {
  EhrhartSamples s;
  s.polytope = j.value("polytope", "");
  for (const auto& e : j.at("samples")) {
    const Rational n = rational_from_json(e.at("count"));
    if (!is_integer(n)) fail(ErrorKind::InvalidInput, "sample counts must be integers");
    s.samples.emplace_back(e.at("t").get<long>(), n.get_num());
  }
  return s;
}

Rational evaluate(const Polynomial& poly, const Rational& t) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial ehrhart_interpolate(const EhrhartSamples& samples, std::size_t dim) {
  std::vector<Rational> xs, ys;
  for (const auto& [t, n] : samples.samples) {
    const auto at = std::find(xs.begin(), xs.end(), Rational(t));
    if (at != xs.end()) {
      if (ys[static_cast<std::size_t>(at - xs.begin())] != Rational(n)) {
        fail(ErrorKind::InvalidInput, "conflicting counts for dilation " + std::to_string(t));
      }
      continue;
    }
    xs.emplace_back(t);
    ys.emplace_back(n);
  }
  if (xs.size() < dim + 1) {
    fail(ErrorKind::NeedMoreSamples, "degree " + std::to_string(dim) + " needs " + std::to_string(dim + 1) +
                                         " distinct dilations, got " + std::to_string(xs.size()));
  }
  const std::size_t n = dim + 1;
  // Divided differences in place.
  std::vector<Rational> coef(ys.begin(), ys.begin() + static_cast<long>(n));
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  // Newton form to monomial coefficients.
  Polynomial poly(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    // poly = poly * (t - xs[i]) + coef[i]
    Polynomial next(n, 0);
    for (std::size_t d = 0; d + 1 < n; ++d) next[d + 1] += poly[d];
    for (std::size_t d = 0; d < n; ++d) next[d] -= xs[i] * poly[d];
    next[0] += coef[i];
    poly = std::move(next);
  }
  for (std::size_t i = n; i < xs.size(); ++i) {
    if (evaluate(poly, xs[i]) != ys[i]) {
      fail(ErrorKind::InvalidInput, "samples do not lie on a polynomial of degree " + std::to_string(dim));
    }
  }
  return poly;
}

BigInt semi_magic_count(std::size_t p, long t) {
  if (p == 0) fail(ErrorKind::InvalidInput, "size must be >= 1");
  if (t < 0) fail(ErrorKind::InvalidInput, "line sum must be non-negative");
  if (p > 5 || t > 20) fail(ErrorKind::TooLarge, "semi-magic counting is limited to p <= 5 and t <= 20");
  using State = std::vector<long>;
  std::map<std::pair<std::size_t, State>, BigInt> memo;
  // Tables with k rows left, each summing to t, under column sums c.
  std::function<BigInt(std::size_t, const State&)> rows_left = [&](std::size_t k, const State& c) -> BigInt {
    if (k <= 1) return 1;
    if (k == 2) {
      IntMargins2 m{{t, t}, {}};
      for (const long x : c) m.v.emplace_back(x);
      return count_tables(m);
    }
    const auto key = std::make_pair(k, c);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    State row(c.size(), 0), next(c.size());
    std::function<void(std::size_t, long)> fill = [&](std::size_t j, long rem) {
      if (j + 1 == c.size()) {
        if (rem > c[j]) return;
        row[j] = rem;
        for (std::size_t l = 0; l < c.size(); ++l) next[l] = c[l] - row[l];
        State sorted = next;
        std::sort(sorted.begin(), sorted.end());
        total += rows_left(k - 1, sorted);
        return;
      }
      for (long x = 0; x <= std::min(rem, c[j]); ++x) {
        row[j] = x;
        fill(j + 1, rem - x);
      }
    };
    fill(0, t);
    memo.emplace(key, total);
    return total;
  };
  return rows_left(p, State(p, t));
}

EhrhartSamples birkhoff_samples(std::size_t p) {
  if (p == 0) fail(ErrorKind::InvalidInput, "size must be >= 1");
  if (p > 5) fail(ErrorKind::TooLarge, "Birkhoff volumes are limited to p <= 5");
  const long dim = static_cast<long>((p - 1) * (p - 1));
  EhrhartSamples s{"B_" + std::to_string(p), {}};
  for (long t = 0; t <= dim; ++t) s.samples.emplace_back(t, semi_magic_count(p, t));
  return s;
}

BigInt birkhoff_normalized_volume(std::size_t p) {
  const auto samples = birkhoff_samples(p);
  const std::size_t dim = (p - 1) * (p - 1);
  const auto poly = ehrhart_interpolate(samples, dim);
  const Rational volume = poly.back() * Rational(factorial(dim));
  if (!is_integer(volume)) fail(ErrorKind::InvalidInput, "normalized volume is not an integer");
  return volume.get_num();
}

}  // namespace transportlab
