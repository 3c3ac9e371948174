#include "transportlab/core/json_io.hpp"

#include <limits>
#include <string>

#include "transportlab/core/error.hpp"

namespace transportlab {
namespace {

bool fits_int64(const BigInt& v) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return v >= lo && v <= hi;
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorKind::InvalidInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json to_json(const BigInt& value) {
  if (fits_int64(value)) return Json(to_int64(value));
  return Json(to_string(value));
}

Json to_json(const Rational& value) {
  if (is_integer(value) && fits_int64(value.get_num())) return Json(to_int64(value));
  return Json(to_string(value));
}

Json to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_json(v));
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Table2& x) {
  Json out = Json::array();
  for (std::size_t i = 0; i < x.p; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < x.q; ++j) row.push_back(to_json(x(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Table3& x) {
  Json out = Json::array();
  for (std::size_t i = 0; i < x.p; ++i) {
    Json slab = Json::array();
    for (std::size_t j = 0; j < x.q; ++j) {
      Json row = Json::array();
      for (std::size_t k = 0; k < x.s; ++k) row.push_back(to_json(x(i, j, k)));
      slab.push_back(std::move(row));
    }
    out.push_back(std::move(slab));
  }
  return out;
}

Json to_json(const Margins2& m) { return Json{{"kind", "2way"}, {"u", to_json(m.u)}, {"v", to_json(m.v)}}; }

Json to_json(const AxialMargins& m) {
  return Json{{"kind", "axial"}, {"u", to_json(m.u)}, {"v", to_json(m.v)}, {"w", to_json(m.w)}};
}

Json to_json(const PlanarMargins& m) {
  return Json{{"kind", "planar"}, {"U", to_json(m.U)}, {"V", to_json(m.V)}, {"W", to_json(m.W)}};
}

Json to_json(const Instance& instance) {
  return std::visit([](const auto& m) { return to_json(m); }, instance);
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(BigInt(std::to_string(j.get<std::uint64_t>())));
    return Rational(BigInt(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) fail(ErrorKind::InvalidInput, "floating-point value " + j.dump() + " is not exact; use \"a/b\"");
  fail(ErrorKind::InvalidInput, "expected a rational, got " + j.dump());
}

std::vector<Rational> vector_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "expected an array, got " + j.dump());
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(rational_from_json(e));
  return out;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::InvalidInput, "expected a non-empty nested array");
  const std::size_t rows = j.size();
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = vector_from_json(j[r]);
    if (row.size() != cols) fail(ErrorKind::InvalidInput, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

Table2 table2_from_json(const Json& j) {
  const auto m = matrix_from_json(j);
  Table2 t(m.rows(), m.cols());
  for (std::size_t i = 0; i < t.p; ++i) {
    for (std::size_t k = 0; k < t.q; ++k) t(i, k) = m(i, k);
  }
  return t;
}

Table3 table3_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorKind::InvalidInput, "expected a 3-level nested array");
  std::vector<RationalMatrix> slabs;
  for (const auto& s : j) slabs.push_back(matrix_from_json(s));
  Table3 t(slabs.size(), slabs.front().rows(), slabs.front().cols());
  for (std::size_t i = 0; i < t.p; ++i) {
    if (slabs[i].rows() != t.q || slabs[i].cols() != t.s) fail(ErrorKind::InvalidInput, "ragged 3-way table");
    for (std::size_t a = 0; a < t.q; ++a) {
      for (std::size_t b = 0; b < t.s; ++b) t(i, a, b) = slabs[i](a, b);
    }
  }
  return t;
}

Instance instance_from_json(const Json& j) {
  const auto& kind = member(j, "kind");
  if (!kind.is_string()) fail(ErrorKind::InvalidInput, "'kind' must be a string");
  const auto k = kind.get<std::string>();
  if (k == "2way") {
    Margins2 m{vector_from_json(member(j, "u")), vector_from_json(member(j, "v"))};
    m.validate();
    return m;
  }
  if (k == "axial") {
    AxialMargins m{vector_from_json(member(j, "u")), vector_from_json(member(j, "v")),
                   vector_from_json(member(j, "w"))};
    m.validate();
    return m;
  }
  if (k == "planar") {
    PlanarMargins m{matrix_from_json(member(j, "U")), matrix_from_json(member(j, "V")),
                    matrix_from_json(member(j, "W"))};
    m.validate();
    return m;
  }
  fail(ErrorKind::InvalidInput, "unknown instance kind '" + k + "'");
}

}  // namespace transportlab
