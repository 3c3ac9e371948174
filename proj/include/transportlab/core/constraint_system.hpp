#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "transportlab/core/margins.hpp"
#include "transportlab/core/matrix.hpp"

namespace transportlab {

enum class SystemKind { TwoWay, Axial, Planar };

/// Table shape; `s` is ignored for 2-way systems.
struct Shape {
  std::size_t p = 1;
  std::size_t q = 1;
  std::size_t s = 1;
};

/// Margin equations A x = b over cells in lexicographic order.
///
/// Row order:
///   2-way  : u_1..u_p, v_1..v_q
///   axial  : u_1..u_p, v_1..v_q, w_1..w_s
///   planar : W(i,j) for all (i,j), V(i,k) for all (i,k), U(j,k) for all (j,k)
struct ConstraintSystem {
  SystemKind kind = SystemKind::TwoWay;
  Shape shape;
  RationalMatrix A;
  std::vector<Rational> b;               // zeros unless built from margins
  std::vector<std::array<std::size_t, 3>> cells;  // column -> (i, j, k)

  std::size_t column_of(std::size_t i, std::size_t j, std::size_t k = 0) const;
  /// Rank predicted by the closed formulas.
  std::size_t expected_rank() const;
};

ConstraintSystem build_constraint_system(SystemKind kind, Shape shape);
ConstraintSystem build_constraint_system(const Margins2& m);
ConstraintSystem build_constraint_system(const AxialMargins& m);
ConstraintSystem build_constraint_system(const PlanarMargins& m);

}  // namespace transportlab
