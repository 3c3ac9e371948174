#include "transportlab/core/table.hpp"

#include "transportlab/core/error.hpp"

namespace transportlab {
namespace {

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    if (a[k] < b[k]) return true;
    if (b[k] < a[k]) return false;
  }
  return a.size() < b.size();
}

}  // namespace

Table2 Table2::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return Table2();
  Table2 t(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < t.p; ++i) {
    if (rows[i].size() != t.q) fail(ErrorKind::InvalidInput, "ragged table rows");
    for (std::size_t j = 0; j < t.q; ++j) t(i, j) = rows[i][j];
  }
  return t;
}

std::vector<Rational> Table2::row_sums() const {
  std::vector<Rational> out(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) out[i] += (*this)(i, j);
  }
  return out;
}

std::vector<Rational> Table2::column_sums() const {
  std::vector<Rational> out(q);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) out[j] += (*this)(i, j);
  }
  return out;
}

bool Table2::nonnegative() const {
  for (const auto& x : entries) {
    if (x < 0) return false;
  }
  return true;
}

bool Table2::satisfies(const Margins2& m) const {
  return p == m.p() && q == m.q() && nonnegative() && row_sums() == m.u && column_sums() == m.v;
}

std::size_t Table2::support_size() const {
  std::size_t n = 0;
  for (const auto& x : entries) n += x != 0;
  return n;
}

AxialMargins Table3::axial_margins() const {
  AxialMargins m{std::vector<Rational>(p), std::vector<Rational>(q), std::vector<Rational>(s)};
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t k = 0; k < s; ++k) {
        const auto& x = (*this)(i, j, k);
        m.u[i] += x;
        m.v[j] += x;
        m.w[k] += x;
      }
    }
  }
  return m;
}

PlanarMargins Table3::planar_margins() const {
  PlanarMargins m{RationalMatrix(q, s), RationalMatrix(p, s), RationalMatrix(p, q)};
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t k = 0; k < s; ++k) {
        const auto& x = (*this)(i, j, k);
        m.U(j, k) += x;
        m.V(i, k) += x;
        m.W(i, j) += x;
      }
    }
  }
  return m;
}

bool Table3::nonnegative() const {
  for (const auto& x : entries) {
    if (x < 0) return false;
  }
  return true;
}

std::size_t Table3::support_size() const {
  std::size_t n = 0;
  for (const auto& x : entries) n += x != 0;
  return n;
}

bool operator<(const Table2& a, const Table2& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.q != b.q) return a.q < b.q;
  return lex_less(a.entries, b.entries);
}

bool operator<(const Table3& a, const Table3& b) {
  if (a.p != b.p) return a.p < b.p;
  if (a.q != b.q) return a.q < b.q;
  if (a.s != b.s) return a.s < b.s;
  return lex_less(a.entries, b.entries);
}

}  // namespace transportlab
