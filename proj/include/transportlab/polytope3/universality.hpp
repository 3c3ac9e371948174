#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "transportlab/core/json_io.hpp"
#include "transportlab/core/margins.hpp"
#include "transportlab/polytope3/basis.hpp"

namespace transportlab {

/// Dense integer matrix, row-major as nested vectors.
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Integer system {y >= 0 : A y = b}.
struct IntegerSystem {
  IntMatrix A;
  std::vector<BigInt> b;

  std::size_t rows() const noexcept { return A.size(); }
  std::size_t cols() const noexcept { return A.empty() ? 0 : A[0].size(); }
  void validate() const;
  RationalMatrix rational_matrix() const;
  std::vector<Rational> rational_rhs() const;
};

/// Output of the coefficient reduction: every source variable y_j becomes a
/// chain x_{j,0}, ..., x_{j,k_j} with x_{j,s+1} = 2 x_{j,s}.
struct ReducedSystem {
  IntegerSystem system;                                  // entries of C in {-1, 0, 1, 2}
  std::vector<std::array<std::size_t, 2>> variables;     // column -> (j, s)
  std::vector<std::size_t> designated;                   // source j -> column of x_{j,0}
};

/// Doubling equations 2 x_{j,s} - x_{j,s+1} = 0 first (by j, then s), then
/// each original equation with a_{k,j} y_j replaced by the signed binary
/// digits of |a_{k,j}| spread over x_{j,0..k_j}.
ReducedSystem universality_step1(const IntegerSystem& source);

/// Role of an allowed cell inside the box of a reduced variable.
struct BoxCell {
  std::array<std::size_t, 3> cell{};
  std::size_t variable = 0;  // reduced column
  bool complement = false;   // carries U - x instead of x
};

/// A face of an r x r x (m+1) axial polytope: the cells outside `allowed`
/// are forced to zero. Inside the box of variable j the allowed cells form
/// a cycle of r_j diagonal cells (each equal to x_j) and r_j off-diagonal
/// cells (each equal to U - x_j), so the vertical plane sums U tie them
/// together. A diagonal cell sits on layer k when it pays for a positive
/// coefficient of equation k, an off-diagonal one when it pays for a
/// negative coefficient; all others sit on the slack layer m+1.
struct UniversalityEncoding {
  IntegerSystem source;
  ReducedSystem reduced;
  BigInt bound;                         // U
  std::vector<std::size_t> box_sizes;   // r_j per reduced variable
  AxialMargins margins;
  std::vector<BoxCell> allowed;         // lexicographic by cell
  std::vector<std::array<std::size_t, 3>> forbidden;
  std::vector<std::array<std::size_t, 3>> coordinate_map;  // source j -> designated cell

  std::size_t r() const noexcept { return margins.p(); }
  std::size_t layers() const noexcept { return margins.s(); }

  /// Axial margin equations restricted to the allowed cells.
  RationalMatrix face_matrix() const;
  std::vector<Rational> face_rhs() const;
  /// Expands a point over the allowed cells to the full r*r*(m+1) table.
  Point expand(const Point& face_point) const;
  /// Source coordinates of a full table, read off the designated cells.
  Point project(const Point& table) const;
};

/// Box construction for an already reduced system. `bound` defaults to
/// max(1, sum |d_k|). With `validate` the reduced polytope is enumerated:
/// BoundViolated if it is unbounded or a vertex coordinate exceeds the
/// bound; a variable in no equation also raises BoundViolated. Negative
/// layer sums mean no point fits under the bound: Infeasible.
UniversalityEncoding universality_step2(const ReducedSystem& reduced, const std::optional<BigInt>& bound = std::nullopt,
                                        bool validate = true);

/// Treats (C, d) as its own source.
UniversalityEncoding universality_step2(const IntegerSystem& reduced, const std::optional<BigInt>& bound = std::nullopt,
                                        bool validate = true);

/// Steps 1 and 2 in sequence.
UniversalityEncoding encode_universality(const IntegerSystem& source, const std::optional<BigInt>& bound = std::nullopt,
                                         bool validate = true);

/// Vertices and integer points of one side of the representation.
struct PointSets {
  std::vector<Point> vertices;
  std::vector<std::vector<BigInt>> integer_points;
};

PointSets source_point_sets(const UniversalityEncoding& enc);
/// Points of the face, as full tables.
PointSets face_point_sets(const UniversalityEncoding& enc);

/// The projection onto the designated cells must map the face vertices
/// bijectively onto the source vertices and the face integer points
/// bijectively onto the source integer points; every face point must also
/// satisfy the margins with all forbidden cells empty.
bool verify_representation(const UniversalityEncoding& enc, const PointSets& source_points,
                           const PointSets& face_points);

Json to_json(const IntegerSystem& system);
IntegerSystem integer_system_from_json(const Json& j);
Json to_json(const UniversalityEncoding& enc);
UniversalityEncoding encoding_from_json(const Json& j);

}  // namespace transportlab
