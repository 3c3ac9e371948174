#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "transportlab/core/json_io.hpp"
#include "transportlab/core/scalar.hpp"

namespace transportlab {

/// Lattice-point counts of dilations t * P.
struct EhrhartSamples {
  std::string polytope;
  std::vector<std::pair<long, BigInt>> samples;  // (t, count)
};

Json to_json(const EhrhartSamples& s);
EhrhartSamples ehrhart_samples_from_json(const Json& j);

/// Coefficients c_0, ..., c_dim of c_0 + c_1 t + ... + c_dim t^dim.
using Polynomial = std::vector<Rational>;

Rational evaluate(const Polynomial& poly, const Rational& t);

/// Newton interpolation through the first dim+1 distinct dilations; any
/// further samples must lie on the result (InvalidInput otherwise).
/// NeedMoreSamples with fewer than dim+1 distinct dilations.
Polynomial ehrhart_interpolate(const EhrhartSamples& samples, std::size_t dim);

/// p x p non-negative integer matrices with every line sum t. Rows are
/// filled one at a time; the state is the sorted vector of remaining column
/// sums, and the last two rows are counted in closed form. TooLarge for
/// p > 5 or t > 20.
BigInt semi_magic_count(std::size_t p, long t);

/// semi_magic_count(p, t) for t = 0..(p-1)^2.
EhrhartSamples birkhoff_samples(std::size_t p);

/// dim! times the leading Ehrhart coefficient of B_p, dim = (p-1)^2.
/// TooLarge for p > 5.
BigInt birkhoff_normalized_volume(std::size_t p);

}  // namespace transportlab
