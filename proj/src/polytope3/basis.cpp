#include "transportlab/polytope3/basis.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>

#include "transportlab/core/error.hpp"
#include "transportlab/core/parallel.hpp"

namespace transportlab {
namespace {

struct Overflow {};

std::int64_t bareiss(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t e, std::int64_t div) {
  __int128 v = static_cast<__int128>(a) * b - static_cast<__int128>(c) * e;
  v /= div;
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Overflow{};
  }
  return static_cast<std::int64_t>(v);
}

BigInt bareiss(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& e, const BigInt& div) {
  BigInt v = a * b - c * e;
  mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), div.get_mpz_t());
  return v;
}

int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }
int sign_of(const BigInt& v) { return sgn(v); }
BigInt to_big(std::int64_t v) { return BigInt(static_cast<long>(v)); }
BigInt to_big(const BigInt& v) { return v; }

template <class T>
T from_big(const BigInt& v);
template <>
std::int64_t from_big<std::int64_t>(const BigInt& v) {
  if (!v.fits_slong_p()) throw Overflow{};
  return v.get_si();
}
template <>
BigInt from_big<BigInt>(const BigInt& v) {
  return v;
}

/// Integer tableau [K | x0]: row i gives x_i = (x0_i + K_i t) / scale.
struct Tableau {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<BigInt> entries;  // n x (d + 1)
  BigInt scale = 1;
};

template <class T>
class TightSetSearch {
 public:
  explicit TightSetSearch(const Tableau& tab)
      : n_(tab.n), d_(tab.d), w_(tab.d + 1), scale_(tab.scale), levels_(tab.d + 1), pivots_(tab.d + 1),
        chosen_(tab.n, 0), used_(tab.d + 1, 0) {
    levels_[0].reserve(tab.entries.size());
    for (const auto& e : tab.entries) levels_[0].push_back(from_big<T>(e));
    for (std::size_t k = 1; k <= d_; ++k) levels_[k].assign(n_ * w_, T(0));
    pivots_[0] = T(1);
  }

  /// Explores every tight set whose smallest coordinate is `first`.
  void run(std::size_t first, std::set<Point>& out) {
    out_ = &out;
    if (!consistent(0)) return;
    if (d_ == 0) {
      if (first == 0) emit(0);
      return;
    }
    if (!pivotable(0, first)) return;
    descend(0, first);
  }

 private:
  std::size_t n_, d_, w_;
  BigInt scale_;
  std::vector<std::vector<T>> levels_;
  std::vector<T> pivots_;
  std::vector<char> chosen_;
  std::vector<char> used_;
  std::set<Point>* out_ = nullptr;

  const T& at(std::size_t k, std::size_t i, std::size_t l) const { return levels_[k][i * w_ + l]; }

  bool pivotable(std::size_t k, std::size_t i) const {
    for (std::size_t l = 0; l < d_; ++l) {
      if (!used_[l] && sign_of(at(k, i, l)) != 0) return true;
    }
    return false;
  }

  /// False if some coordinate is already fixed on the current face and
  /// negative there.
  bool consistent(std::size_t k) const {
    const int ps = sign_of(pivots_[k]);
    for (std::size_t i = 0; i < n_; ++i) {
      if (chosen_[i] || pivotable(k, i)) continue;
      if (sign_of(at(k, i, d_)) * ps < 0) return false;
    }
    return true;
  }

  void emit(std::size_t k) {
    Point x(n_);
    const BigInt den = to_big(pivots_[k]) * scale_;
    for (std::size_t i = 0; i < n_; ++i) {
      if (chosen_[i]) continue;
      x[i] = Rational(to_big(at(k, i, d_)), den);
      x[i].canonicalize();
    }
    out_->insert(std::move(x));
  }

  void descend(std::size_t k, std::size_t c) {
    std::size_t j = 0;
    while (used_[j] || sign_of(at(k, c, j)) == 0) ++j;
    const T& pc = at(k, c, j);
    const T& prev = pivots_[k];
    auto& next = levels_[k + 1];
    for (std::size_t i = 0; i < n_; ++i) {
      if (chosen_[i] || i == c) continue;
      const T& pij = at(k, i, j);
      for (std::size_t l = 0; l <= d_; ++l) {
        if (l == j || (l < d_ && used_[l])) continue;
        next[i * w_ + l] = bareiss(pc, at(k, i, l), pij, at(k, c, l), prev);
      }
    }
    pivots_[k + 1] = pc;
    chosen_[c] = 1;
    used_[j] = 1;
    search(k + 1, c + 1);
    chosen_[c] = 0;
    used_[j] = 0;
  }

  void search(std::size_t k, std::size_t start) {
    if (!consistent(k)) return;
    if (k == d_) {
      emit(k);
      return;
    }
    std::size_t candidates = 0;
    for (std::size_t i = start; i < n_; ++i) {
      if (!chosen_[i] && pivotable(k, i)) ++candidates;
    }
    if (candidates < d_ - k) return;
    for (std::size_t c = start; c < n_; ++c) {
      if (chosen_[c] || !pivotable(k, c)) continue;
      descend(k, c);
    }
  }
};

template <class T>
std::set<Point> run_search(const Tableau& tab) {
  const std::size_t roots = tab.d == 0 ? 1 : tab.n;
  std::vector<std::set<Point>> parts(roots);
  parallel_for(roots, [&](std::size_t first) {
    TightSetSearch<T> search(tab);
    search.run(first, parts[first]);
  });
  std::set<Point> all;
  for (auto& part : parts) all.merge(part);
  return all;
}

bool all_integral(const RationalMatrix& A) {
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) {
      if (A(r, c).get_den() != 1) return false;
    }
  }
  return true;
}

std::size_t int64_rank(std::vector<std::int64_t> m, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  std::int64_t prev = 1;
  std::vector<char> used(rows, 0);
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pr = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      if (!used[r] && m[r * cols + c] != 0) {
        pr = r;
        break;
      }
    }
    if (pr == rows) continue;
    used[pr] = 1;
    const std::int64_t pv = m[pr * cols + c];
    for (std::size_t r = 0; r < rows; ++r) {
      if (used[r]) continue;
      const std::int64_t f = m[r * cols + c];
      for (std::size_t l = c + 1; l < cols; ++l) {
        m[r * cols + l] = bareiss(pv, m[r * cols + l], f, m[pr * cols + l], prev);
      }
      m[r * cols + c] = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<Point> enumerate_basic_solutions(const RationalMatrix& A, const std::vector<Rational>& b) {
  const std::size_t n = A.cols();
  if (b.size() != A.rows()) fail(ErrorKind::InvalidInput, "right-hand side length does not match the system");
  if (n > 64) fail(ErrorKind::TooLarge, "basis enumeration is limited to 64 columns");

  RationalMatrix aug(A.rows(), n + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = A(r, c);
    aug(r, n) = b[r];
  }
  const auto ech = row_reduce(std::move(aug), true);
  for (std::size_t r = ech.rank(); r < A.rows(); ++r) {
    if (sgn(ech.reduced(r, n)) != 0) return {};
  }

  std::vector<char> is_pivot(n, 0);
  for (auto c : ech.pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  const std::size_t d = free_cols.size();

  std::vector<Rational> rat(n * (d + 1));
  for (std::size_t t = 0; t < d; ++t) rat[free_cols[t] * (d + 1) + t] = 1;
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    const std::size_t pc = ech.pivots[r];
    for (std::size_t t = 0; t < d; ++t) rat[pc * (d + 1) + t] = -ech.reduced(r, free_cols[t]);
    rat[pc * (d + 1) + d] = ech.reduced(r, n);
  }

  Tableau tab;
  tab.n = n;
  tab.d = d;
  tab.entries.resize(n * (d + 1));
  for (std::size_t l = 0; l <= d; ++l) {
    std::vector<Rational> column;
    for (std::size_t i = 0; i < n; ++i) column.push_back(rat[i * (d + 1) + l]);
    const BigInt f = denominator_lcm(column);
    for (std::size_t i = 0; i < n; ++i) {
      const Rational v = column[i] * f;
      tab.entries[i * (d + 1) + l] = v.get_num();
    }
    if (l == d) tab.scale = f;
  }

  std::set<Point> found;
  try {
    found = run_search<std::int64_t>(tab);
  } catch (const Overflow&) {
    found = run_search<BigInt>(tab);
  }
  return {found.begin(), found.end()};
}

std::size_t column_rank(const RationalMatrix& A, const std::vector<std::size_t>& columns) {
  if (all_integral(A)) {
    std::vector<std::int64_t> m;
    m.reserve(A.rows() * columns.size());
    bool fits = true;
    for (std::size_t r = 0; r < A.rows() && fits; ++r) {
      for (auto c : columns) {
        const BigInt& v = A(r, c).get_num();
        if (!v.fits_slong_p()) {
          fits = false;
          break;
        }
        m.push_back(v.get_si());
      }
    }
    if (fits) {
      try {
        return int64_rank(std::move(m), A.rows(), columns.size());
      } catch (const Overflow&) {
      }
    }
  }
  return rank(A.select_columns(columns));
}

bool vertices_adjacent(const RationalMatrix& A, const Point& x, const Point& y) {
  if (x == y) return false;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (sgn(x[c]) != 0 || sgn(y[c]) != 0) support.push_back(c);
  }
  if (support.size() > A.rows() + 1) return false;
  return support.size() == column_rank(A, support) + 1;
}

long polytope_dimension(const RationalMatrix& A, const std::vector<Point>& vertices) {
  if (vertices.empty()) return -1;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < A.cols(); ++c) {
    for (const auto& v : vertices) {
      if (sgn(v[c]) != 0) {
        support.push_back(c);
        break;
      }
    }
  }
  return static_cast<long>(support.size()) - static_cast<long>(column_rank(A, support));
}

std::vector<std::vector<BigInt>> integer_points(const RationalMatrix& A, const std::vector<Rational>& b,
                                                const std::vector<Point>& vertices) {
  if (vertices.empty()) return {};
  const std::size_t n = A.cols();
  RationalMatrix aug(A.rows(), n + 1);
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = A(r, c);
    aug(r, n) = b[r];
  }
  const auto ech = row_reduce(std::move(aug), true);
  std::vector<char> is_pivot(n, 0);
  for (auto c : ech.pivots) is_pivot[c] = 1;

  std::vector<std::size_t> free_cols;
  std::vector<BigInt> lo, hi;
  BigInt combos = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    Rational mn = vertices[0][c], mx = vertices[0][c];
    for (const auto& v : vertices) {
      mn = std::min(mn, v[c]);
      mx = std::max(mx, v[c]);
    }
    free_cols.push_back(c);
    lo.push_back(ceil(mn));
    hi.push_back(floor(mx));
    if (lo.back() > hi.back()) return {};
    combos *= hi.back() - lo.back() + 1;
  }
  if (combos > 10'000'000) fail(ErrorKind::TooMany, "integer point box exceeds 10^7 candidates");

  std::vector<std::vector<BigInt>> out;
  std::vector<BigInt> cur = lo;
  for (;;) {
    std::vector<BigInt> x(n);
    bool ok = true;
    for (std::size_t t = 0; t < free_cols.size(); ++t) x[free_cols[t]] = cur[t];
    for (std::size_t r = 0; r < ech.rank() && ok; ++r) {
      Rational val = ech.reduced(r, n);
      for (std::size_t t = 0; t < free_cols.size(); ++t) val -= ech.reduced(r, free_cols[t]) * cur[t];
      if (val.get_den() != 1 || sgn(val) < 0) ok = false;
      else x[ech.pivots[r]] = val.get_num();
    }
    if (ok) out.push_back(std::move(x));
    std::size_t t = 0;
    while (t < cur.size() && cur[t] == hi[t]) {
      cur[t] = lo[t];
      ++t;
    }
    if (t == cur.size()) break;
    ++cur[t];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace transportlab
