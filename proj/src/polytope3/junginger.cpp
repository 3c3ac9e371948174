#include "transportlab/polytope3/junginger.hpp"

#include <algorithm>

#include "transportlab/core/constraint_system.hpp"
#include "transportlab/core/error.hpp"
#include "transportlab/polytope3/multiway.hpp"

namespace transportlab {
namespace {

Rational dot(const std::optional<Table3>& cost, const Table3& x) {
  if (!cost) return 0;
  if (cost->p != x.p || cost->q != x.q || cost->s != x.s) fail(ErrorKind::InvalidInput, "cost shape does not match");
  Rational total = 0;
  for (std::size_t c = 0; c < x.entries.size(); ++c) total += cost->entries[c] * x.entries[c];
  return total;
}

}  // namespace

Rational AxialProblem::objective(const Table3& x) const { return dot(cost, x); }
Rational PlanarProblem::objective(const Table3& y) const { return dot(cost, y); }

Rational default_junginger_m(const AxialProblem& problem) {
  const auto& m = problem.margins;
  Rational abs_cost = 0;
  if (problem.cost) {
    for (const auto& c : problem.cost->entries) abs_cost += abs(c);
  }
  if (sgn(abs_cost) == 0) return 1;
  Rational beta = 0;
  std::vector<Rational> all;
  for (const auto* side : {&m.u, &m.v, &m.w}) {
    for (const auto& x : *side) {
      beta = std::max(beta, x);
      all.push_back(x);
    }
  }
  const auto big = static_cast<long>(std::max({m.p(), m.q(), m.s(), std::size_t{1}}));
  const Rational B = beta * big;
  const ConstraintSystem shape = build_constraint_system(SystemKind::Planar, {m.p() + 1, m.q() + 1, m.s() + 1});
  BigInt D;
  mpz_ui_pow_ui(D.get_mpz_t(), 3, (shape.expected_rank() + 1) / 2);
  return 1 + 2 * abs_cost * B * Rational(D) * Rational(denominator_lcm(all));
}

JungingerReduction junginger_reduce(const AxialProblem& problem, const std::optional<Rational>& M,
                                    JungingerPenalty penalty) {
  const auto& m = problem.margins;
  if (!axial_feasible(m)) fail(ErrorKind::Infeasible, "axial margins have different totals");
  const std::size_t p = m.p(), q = m.q(), s = m.s();
  if (problem.cost && (problem.cost->p != p || problem.cost->q != q || problem.cost->s != s)) {
    fail(ErrorKind::InvalidInput, "cost shape does not match the margins");
  }

  JungingerReduction red;
  red.penalty = penalty;
  red.beta = 0;
  for (const auto* side : {&m.u, &m.v, &m.w}) {
    for (const auto& x : *side) red.beta = std::max(red.beta, x);
  }
  red.M = M ? *M : default_junginger_m(problem);
  const Rational& beta = red.beta;
  const Rational P = static_cast<long>(p), Q = static_cast<long>(q), S = static_cast<long>(s);

  PlanarMargins pm{RationalMatrix(q + 1, s + 1), RationalMatrix(p + 1, s + 1), RationalMatrix(p + 1, q + 1)};
  for (std::size_t j = 0; j <= q; ++j) {
    for (std::size_t k = 0; k <= s; ++k) {
      if (j < q && k < s) pm.U(j, k) = beta;
      else if (j == q && k < s) pm.U(j, k) = P * beta - m.w[k];
      else if (j < q && k == s) pm.U(j, k) = P * beta - m.v[j];
      else pm.U(j, k) = beta;
    }
  }
  for (std::size_t i = 0; i <= p; ++i) {
    for (std::size_t k = 0; k <= s; ++k) {
      if (i < p && k < s) pm.V(i, k) = beta;
      else if (i < p && k == s) pm.V(i, k) = Q * beta - m.u[i];
      else if (i == p && k < s) pm.V(i, k) = Q * beta - m.w[k];
      else pm.V(i, k) = beta;
    }
    for (std::size_t j = 0; j <= q; ++j) {
      if (i < p && j < q) pm.W(i, j) = beta;
      else if (i == p && j < q) pm.W(i, j) = S * beta - m.v[j];
      else if (i < p && j == q) pm.W(i, j) = S * beta - m.u[i];
      else pm.W(i, j) = beta;
    }
  }

  Table3 cost(p + 1, q + 1, s + 1);
  for (std::size_t i = 0; i <= p; ++i) {
    for (std::size_t j = 0; j <= q; ++j) {
      for (std::size_t k = 0; k <= s; ++k) {
        const int in_range = (i < p) + (j < q) + (k < s);
        if (in_range == 3) {
          if (problem.cost) cost(i, j, k) = (*problem.cost)(i, j, k);
        } else if ((in_range == 1 && penalty == JungingerPenalty::OneInRange) ||
                   (in_range == 2 && penalty == JungingerPenalty::TwoInRange)) {
          cost(i, j, k) = red.M;
        }
      }
    }
  }
  red.planar = PlanarProblem{std::move(pm), std::move(cost)};
  return red;
}

Table3 junginger_lift(const JungingerReduction& red, const Table3& x) {
  const auto& pm = red.planar.margins;
  const std::size_t p = pm.p() - 1, q = pm.q() - 1, s = pm.s() - 1;
  if (x.p != p || x.q != q || x.s != s) fail(ErrorKind::InvalidInput, "table shape does not match the reduction");
  const Rational& beta = red.beta;
  Table3 y(p + 1, q + 1, s + 1);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t k = 0; k < s; ++k) y(i, j, k) = x(i, j, k);
    }
  }
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < s; ++k) {
      Rational t = beta;
      for (std::size_t i = 0; i < p; ++i) t -= x(i, j, k);
      y(p, j, k) = t;
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < s; ++k) {
      Rational t = beta;
      for (std::size_t j = 0; j < q; ++j) t -= x(i, j, k);
      y(i, q, k) = t;
    }
    for (std::size_t j = 0; j < q; ++j) {
      Rational t = beta;
      for (std::size_t k = 0; k < s; ++k) t -= x(i, j, k);
      y(i, j, s) = t;
    }
  }
  // Cells with two indices out of range vanish; the corner takes the rest.
  y(p, q, s) = beta;
  if (!y.nonnegative() || y.planar_margins() != pm) {
    fail(ErrorKind::NotInPolytope, "table does not satisfy the axial margins of the reduction");
  }
  return y;
}

Table3 junginger_restrict(const Table3& y) {
  if (y.p == 0 || y.q == 0 || y.s == 0) fail(ErrorKind::InvalidInput, "cannot restrict an empty table");
  Table3 x(y.p - 1, y.q - 1, y.s - 1);
  for (std::size_t i = 0; i < x.p; ++i) {
    for (std::size_t j = 0; j < x.q; ++j) {
      for (std::size_t k = 0; k < x.s; ++k) x(i, j, k) = y(i, j, k);
    }
  }
  return x;
}

}  // namespace transportlab
