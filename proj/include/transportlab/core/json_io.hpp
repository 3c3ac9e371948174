#pragma once

#include <variant>
#include <vector>

#include <json.hpp>

#include "transportlab/core/margins.hpp"
#include "transportlab/core/scalar.hpp"
#include "transportlab/core/table.hpp"

namespace transportlab {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 become JSON numbers; everything else becomes
/// the string "a/b" (or a decimal string for big integers).
Json to_json(const Rational& value);
Json to_json(const BigInt& value);
Json to_json(const std::vector<Rational>& values);
Json to_json(const RationalMatrix& m);
Json to_json(const Table2& x);
Json to_json(const Table3& x);
Json to_json(const Margins2& m);
Json to_json(const AxialMargins& m);
Json to_json(const PlanarMargins& m);

/// Accepts integer numbers and strings "a" / "a/b". Floats are rejected.
Rational rational_from_json(const Json& j);
std::vector<Rational> vector_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
Table2 table2_from_json(const Json& j);
Table3 table3_from_json(const Json& j);

using Instance = std::variant<Margins2, AxialMargins, PlanarMargins>;

/// Parses {"kind": "2way"|"axial"|"planar", ...}; validates margins.
Instance instance_from_json(const Json& j);
Json to_json(const Instance& instance);

}  // namespace transportlab
