#pragma once

#include <cstddef>
#include <vector>

#include "transportlab/core/margins.hpp"
#include "transportlab/core/scalar.hpp"

namespace transportlab {

struct Table2 {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<Rational> entries;  // row-major

  Table2() = default;
  Table2(std::size_t p_, std::size_t q_) : p(p_), q(q_), entries(p_ * q_) {}
  static Table2 from_rows(const std::vector<std::vector<Rational>>& rows);

  Rational& operator()(std::size_t i, std::size_t j) { return entries[i * q + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries[i * q + j]; }

  std::vector<Rational> row_sums() const;
  std::vector<Rational> column_sums() const;
  bool nonnegative() const;
  bool satisfies(const Margins2& m) const;
  std::size_t support_size() const;

  friend bool operator==(const Table2&, const Table2&) = default;
};

struct Table3 {
  std::size_t p = 0;
  std::size_t q = 0;
  std::size_t s = 0;
  std::vector<Rational> entries;  // index (i*q + j)*s + k

  Table3() = default;
  Table3(std::size_t p_, std::size_t q_, std::size_t s_)
      : p(p_), q(q_), s(s_), entries(p_ * q_ * s_) {}

  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return entries[(i * q + j) * s + k]; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries[(i * q + j) * s + k];
  }

  AxialMargins axial_margins() const;
  PlanarMargins planar_margins() const;
  bool nonnegative() const;
  std::size_t support_size() const;

  friend bool operator==(const Table3&, const Table3&) = default;
};

/// Canonical order: shape first, then entries lexicographically.
bool operator<(const Table2& a, const Table2& b);
bool operator<(const Table3& a, const Table3& b);

}  // namespace transportlab
