#pragma once

#include <optional>
#include <vector>

#include "transportlab/core/margins.hpp"
#include "transportlab/core/table.hpp"

namespace transportlab {

/// Linear program over an axial polytope. An absent cost means zero cost.
struct AxialProblem {
  AxialMargins margins;
  std::optional<Table3> cost;

  Rational objective(const Table3& x) const;
};

struct PlanarProblem {
  PlanarMargins margins;
  std::optional<Table3> cost;

  Rational objective(const Table3& y) const;
};

/// Which cells carry the penalty M.
enum class JungingerPenalty {
  OneInRange,  // cells with two indices out of range; restrictions stay feasible
  TwoInRange,  // cells with one index out of range, as in the usual statement
};

/// Result of lifting a p x q x s axial problem to a (p+1) x (q+1) x (s+1)
/// planar one.
struct JungingerReduction {
  PlanarProblem planar;
  Rational beta;  // largest 1-margin
  Rational M;
  JungingerPenalty penalty = JungingerPenalty::OneInRange;
};

/// Penalty large enough that every optimal planar vertex leaves the
/// penalized cells empty: 1 + 2 * sum|c| * B * D * L, where B is the largest
/// 2-margin, D bounds the vertex denominators (3^(rank/2), Hadamard) and L
/// is the denominator lcm of the margins.
Rational default_junginger_m(const AxialProblem& problem);

/// Builds the planar problem. In-range 2-margins are beta, the six one-out
/// families are (count) * beta minus the matching 1-margin, the two-out
/// margins are beta. The cost is c in range, M on the penalized cells and 0
/// elsewhere. With the default penalty an optimal planar vertex restricts to
/// an optimal axial vertex with the same objective value; with TwoInRange
/// the penalty pushes mass into the in-range block instead and the
/// restriction can leave the axial polytope. Throws Infeasible when the
/// axial totals differ.
JungingerReduction junginger_reduce(const AxialProblem& problem, const std::optional<Rational>& M = std::nullopt,
                                    JungingerPenalty penalty = JungingerPenalty::OneInRange);

/// The unique planar table extending x: in-range cells copied, the rest
/// solved from the 2-margins.
Table3 junginger_lift(const JungingerReduction& red, const Table3& x);

/// The in-range p x q x s block of y.
Table3 junginger_restrict(const Table3& y);

}  // namespace transportlab
