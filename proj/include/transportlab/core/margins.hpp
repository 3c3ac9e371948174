#pragma once

#include <cstddef>
#include <vector>

#include "transportlab/core/matrix.hpp"
#include "transportlab/core/scalar.hpp"

namespace transportlab {

/// Row sums u (length p) and column sums v (length q) of a 2-way table.
struct Margins2 {
  std::vector<Rational> u;
  std::vector<Rational> v;

  std::size_t p() const noexcept { return u.size(); }
  std::size_t q() const noexcept { return v.size(); }

  /// Throws InvalidMargins on an empty side or a negative entry.
  void validate() const;
  bool strictly_positive() const;
  friend bool operator==(const Margins2&, const Margins2&) = default;
};

/// 1-margins of a p x q x s table.
struct AxialMargins {
  std::vector<Rational> u;
  std::vector<Rational> v;
  std::vector<Rational> w;

  std::size_t p() const noexcept { return u.size(); }
  std::size_t q() const noexcept { return v.size(); }
  std::size_t s() const noexcept { return w.size(); }

  void validate() const;
  friend bool operator==(const AxialMargins&, const AxialMargins&) = default;
};

/// 2-margins of a p x q x s table: U(j,k) sums over i, V(i,k) over j,
/// W(i,j) over k.
struct PlanarMargins {
  RationalMatrix U;  // q x s
  RationalMatrix V;  // p x s
  RationalMatrix W;  // p x q

  std::size_t p() const noexcept { return W.rows(); }
  std::size_t q() const noexcept { return W.cols(); }
  std::size_t s() const noexcept { return V.cols(); }

  /// Checks shapes agree and entries are non-negative.
  void validate() const;
  friend bool operator==(const PlanarMargins&, const PlanarMargins&) = default;
};

}  // namespace transportlab
