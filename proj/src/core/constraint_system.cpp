#include "transportlab/core/constraint_system.hpp"

#include "transportlab/core/error.hpp"

namespace transportlab {

std::size_t ConstraintSystem::column_of(std::size_t i, std::size_t j, std::size_t k) const {
  if (kind == SystemKind::TwoWay) return i * shape.q + j;
  return (i * shape.q + j) * shape.s + k;
}

std::size_t ConstraintSystem::expected_rank() const {
  const auto [p, q, s] = shape;
  switch (kind) {
    case SystemKind::TwoWay:
      return p + q - 1;
    case SystemKind::Axial:
      return p + q + s - 2;
    case SystemKind::Planar:
      return p * q + p * s + q * s - p - q - s + 1;
  }
  return 0;
}

ConstraintSystem build_constraint_system(SystemKind kind, Shape shape) {
  if (shape.p == 0 || shape.q == 0 || shape.s == 0) fail(ErrorKind::InvalidInput, "shape dimensions must be >= 1");
  ConstraintSystem cs;
  cs.kind = kind;
  const auto [p, q, s] = shape;
  if (kind == SystemKind::TwoWay) {
    cs.shape = {p, q, 1};
    cs.A = RationalMatrix(p + q, p * q);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        const std::size_t c = i * q + j;
        cs.cells.push_back({i, j, 0});
        cs.A(i, c) = 1;
        cs.A(p + j, c) = 1;
      }
    }
  } else if (kind == SystemKind::Axial) {
    cs.shape = shape;
    cs.A = RationalMatrix(p + q + s, p * q * s);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        for (std::size_t k = 0; k < s; ++k) {
          const std::size_t c = (i * q + j) * s + k;
          cs.cells.push_back({i, j, k});
          cs.A(i, c) = 1;
          cs.A(p + j, c) = 1;
          cs.A(p + q + k, c) = 1;
        }
      }
    }
  } else {
    cs.shape = shape;
    cs.A = RationalMatrix(p * q + p * s + q * s, p * q * s);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        for (std::size_t k = 0; k < s; ++k) {
          const std::size_t c = (i * q + j) * s + k;
          cs.cells.push_back({i, j, k});
          cs.A(i * q + j, c) = 1;
          cs.A(p * q + i * s + k, c) = 1;
          cs.A(p * q + p * s + j * s + k, c) = 1;
        }
      }
    }
  }
  cs.b.assign(cs.A.rows(), Rational(0));
  return cs;
}

ConstraintSystem build_constraint_system(const Margins2& m) {
  m.validate();
  auto cs = build_constraint_system(SystemKind::TwoWay, {m.p(), m.q(), 1});
  for (std::size_t i = 0; i < m.p(); ++i) cs.b[i] = m.u[i];
  for (std::size_t j = 0; j < m.q(); ++j) cs.b[m.p() + j] = m.v[j];
  return cs;
}

ConstraintSystem build_constraint_system(const AxialMargins& m) {
  m.validate();
  auto cs = build_constraint_system(SystemKind::Axial, {m.p(), m.q(), m.s()});
  for (std::size_t i = 0; i < m.p(); ++i) cs.b[i] = m.u[i];
  for (std::size_t j = 0; j < m.q(); ++j) cs.b[m.p() + j] = m.v[j];
  for (std::size_t k = 0; k < m.s(); ++k) cs.b[m.p() + m.q() + k] = m.w[k];
  return cs;
}

ConstraintSystem build_constraint_system(const PlanarMargins& m) {
  m.validate();
  const std::size_t p = m.p(), q = m.q(), s = m.s();
  auto cs = build_constraint_system(SystemKind::Planar, {p, q, s});
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) cs.b[i * q + j] = m.W(i, j);
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < s; ++k) cs.b[p * q + i * s + k] = m.V(i, k);
  }
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < s; ++k) cs.b[p * q + p * s + j * s + k] = m.U(j, k);
  }
  return cs;
}

}  // namespace transportlab
