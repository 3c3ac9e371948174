#include "transportlab/polytope3/universality.hpp"

#include <algorithm>
#include <set>

#include "transportlab/core/error.hpp"
#include "transportlab/core/table.hpp"

namespace transportlab {
namespace {

std::size_t bit_length(const BigInt& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

std::size_t cell_index(const std::array<std::size_t, 3>& c, std::size_t r, std::size_t layers) {
  return (c[0] * r + c[1]) * layers + c[2];
}

template <class T>
std::vector<T> expand_cells(const UniversalityEncoding& enc, const std::vector<T>& face_point) {
  std::vector<T> full(enc.r() * enc.r() * enc.layers(), T(0));
  for (std::size_t c = 0; c < enc.allowed.size(); ++c) {
    full[cell_index(enc.allowed[c].cell, enc.r(), enc.layers())] = face_point[c];
  }
  return full;
}

template <class T>
std::vector<T> project_cells(const UniversalityEncoding& enc, const std::vector<T>& table) {
  std::vector<T> y;
  for (const auto& c : enc.coordinate_map) y.push_back(table.at(cell_index(c, enc.r(), enc.layers())));
  return y;
}

bool on_face(const UniversalityEncoding& enc, const Point& table) {
  const std::size_t r = enc.r(), L = enc.layers();
  if (table.size() != r * r * L) return false;
  Table3 x(r, r, L);
  x.entries = table;
  if (!x.nonnegative() || x.axial_margins() != enc.margins) return false;
  return std::all_of(enc.forbidden.begin(), enc.forbidden.end(),
                     [&](const auto& c) { return sgn(table[cell_index(c, r, L)]) == 0; });
}

template <class T>
bool bijective_image(const UniversalityEncoding& enc, const std::vector<std::vector<T>>& face,
                     const std::vector<std::vector<T>>& source) {
  std::set<std::vector<T>> image;
  for (const auto& pt : face) image.insert(project_cells(enc, pt));
  const std::set<std::vector<T>> target(source.begin(), source.end());
  return image.size() == face.size() && target.size() == source.size() && image == target;
}

Json cell_json(const std::array<std::size_t, 3>& c) { return Json::array({c[0], c[1], c[2]}); }

std::array<std::size_t, 3> cell_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) fail(ErrorKind::InvalidInput, "a cell is an array [i, j, k]");
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>(), j[2].get<std::size_t>()};
}

Json int_vector_json(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

BigInt bigint_from_json(const Json& j) {
  const Rational r = rational_from_json(j);
  if (!is_integer(r)) fail(ErrorKind::InvalidInput, "expected an integer");
  return r.get_num();
}

std::vector<BigInt> int_vector_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorKind::InvalidInput, "expected an array of integers");
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(bigint_from_json(x));
  return out;
}

}  // namespace

void IntegerSystem::validate() const {
  if (A.size() != b.size()) fail(ErrorKind::InvalidInput, "system has " + std::to_string(A.size()) + " rows but " +
                                                              std::to_string(b.size()) + " right-hand sides");
  if (A.empty() || A[0].empty()) fail(ErrorKind::InvalidInput, "system needs at least one equation and one variable");
  for (const auto& row : A) {
    if (row.size() != A[0].size()) fail(ErrorKind::InvalidInput, "ragged coefficient matrix");
  }
}

RationalMatrix IntegerSystem::rational_matrix() const {
  RationalMatrix m(rows(), cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols(); ++c) m(r, c) = Rational(A[r][c]);
  }
  return m;
}

std::vector<Rational> IntegerSystem::rational_rhs() const {
  std::vector<Rational> out;
  for (const auto& x : b) out.emplace_back(x);
  return out;
}

ReducedSystem universality_step1(const IntegerSystem& source) {
  source.validate();
  const std::size_t m = source.rows(), n = source.cols();
  ReducedSystem red;
  std::vector<std::size_t> first(n);
  std::vector<std::size_t> width(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t bits = 1;
    for (std::size_t k = 0; k < m; ++k) bits = std::max(bits, bit_length(abs(source.A[k][j])));
    first[j] = red.variables.size();
    width[j] = bits;
    red.designated.push_back(first[j]);
    for (std::size_t s = 0; s < bits; ++s) red.variables.push_back({j, s});
  }
  const std::size_t cols = red.variables.size();
  auto& C = red.system.A;
  auto& d = red.system.b;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t s = 0; s + 1 < width[j]; ++s) {
      std::vector<BigInt> row(cols, 0);
      row[first[j] + s] = 2;
      row[first[j] + s + 1] = -1;
      C.push_back(std::move(row));
      d.push_back(0);
    }
  }
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<BigInt> row(cols, 0);
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt& a = source.A[k][j];
      const BigInt mag = abs(a);
      for (std::size_t s = 0; s < width[j]; ++s) {
        if (mpz_tstbit(mag.get_mpz_t(), s)) row[first[j] + s] = sgn(a);
      }
    }
    C.push_back(std::move(row));
    d.push_back(source.b[k]);
  }
  return red;
}

UniversalityEncoding universality_step2(const IntegerSystem& reduced, const std::optional<BigInt>& bound,
                                        bool validate) {
  reduced.validate();
  ReducedSystem identity{reduced, {}, {}};
  for (std::size_t j = 0; j < reduced.cols(); ++j) {
    identity.variables.push_back({j, 0});
    identity.designated.push_back(j);
  }
  auto enc = universality_step2(identity, bound, validate);
  enc.source = reduced;
  return enc;
}

UniversalityEncoding universality_step2(const ReducedSystem& reduced, const std::optional<BigInt>& bound,
                                        bool validate) {
  const auto& sys = reduced.system;
  sys.validate();
  const std::size_t m = sys.rows(), n = sys.cols();

  BigInt U = 0;
  if (bound) {
    U = *bound;
  } else {
    for (const auto& x : sys.b) U += abs(x);
    if (U < 1) U = 1;
  }
  if (U < 1) fail(ErrorKind::BoundViolated, "the entry bound must be a positive integer");

  UniversalityEncoding enc;
  enc.reduced = reduced;
  enc.bound = U;
  std::vector<std::size_t> offset(n);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n; ++j) {
    BigInt pos = 0, neg = 0;
    for (std::size_t k = 0; k < m; ++k) {
      if (sgn(sys.A[k][j]) > 0) pos += sys.A[k][j];
      else neg -= sys.A[k][j];
    }
    const BigInt rj = std::max(pos, neg);
    if (rj == 0) fail(ErrorKind::BoundViolated, "variable " + std::to_string(j) + " appears in no equation");
    if (rj > 4096) fail(ErrorKind::TooLarge, "box sizes are limited to 4096");
    offset[j] = r;
    enc.box_sizes.push_back(rj.get_ui());
    r += enc.box_sizes.back();
  }

  if (validate) {
    const auto A = sys.rational_matrix();
    const auto verts = enumerate_basic_solutions(A, sys.rational_rhs());
    if (!verts.empty()) {
      RationalMatrix ray(m + 1, n);
      std::vector<Rational> rhs(m + 1, Rational(0));
      for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = 0; j < n; ++j) ray(k, j) = A(k, j);
      }
      for (std::size_t j = 0; j < n; ++j) ray(m, j) = 1;
      rhs[m] = 1;
      if (!enumerate_basic_solutions(ray, rhs).empty()) fail(ErrorKind::BoundViolated, "the polytope is unbounded");
      for (const auto& v : verts) {
        for (const auto& x : v) {
          if (x > Rational(U)) fail(ErrorKind::BoundViolated, "a vertex coordinate exceeds the bound " + to_string(U));
        }
      }
    }
  }

  const std::size_t layers = m + 1;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t rj = enc.box_sizes[j];
    std::vector<std::size_t> diag_layer(rj, m), off_layer(rj, m);
    std::size_t next_diag = 0, next_off = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const BigInt& a = sys.A[k][j];
      const std::size_t times = BigInt(abs(a)).get_ui();
      for (std::size_t t = 0; t < times; ++t) {
        if (sgn(a) > 0) diag_layer[next_diag++] = k;
        else off_layer[next_off++] = k;
      }
    }
    for (std::size_t a = 0; a < rj; ++a) {
      const std::size_t row = offset[j] + a;
      enc.allowed.push_back({{row, row, diag_layer[a]}, j, false});
      enc.allowed.push_back({{row, offset[j] + (a + 1) % rj, off_layer[a]}, j, true});
    }
  }
  std::sort(enc.allowed.begin(), enc.allowed.end(), [](const BoxCell& a, const BoxCell& b) { return a.cell < b.cell; });

  std::vector<Rational> w(layers, Rational(0));
  Rational used = 0;
  for (std::size_t k = 0; k < m; ++k) {
    BigInt neg = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(sys.A[k][j]) < 0) neg -= sys.A[k][j];
    }
    w[k] = Rational(sys.b[k] + U * neg);
    used += w[k];
  }
  w[m] = Rational(U) * static_cast<long>(r) - used;
  for (const auto& x : w) {
    if (sgn(x) < 0) fail(ErrorKind::Infeasible, "no point of the system fits under the bound " + to_string(U));
  }
  enc.margins = AxialMargins{std::vector<Rational>(r, Rational(U)), std::vector<Rational>(r, Rational(U)), w};

  std::set<std::array<std::size_t, 3>> allowed_cells;
  for (const auto& c : enc.allowed) allowed_cells.insert(c.cell);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t jj = 0; jj < r; ++jj) {
      for (std::size_t k = 0; k < layers; ++k) {
        if (!allowed_cells.count({i, jj, k})) enc.forbidden.push_back({i, jj, k});
      }
    }
  }

  enc.source = sys;
  for (const auto col : reduced.designated) {
    for (const auto& c : enc.allowed) {
      if (c.variable == col && !c.complement) {
        enc.coordinate_map.push_back(c.cell);
        break;
      }
    }
  }
  return enc;
}

UniversalityEncoding encode_universality(const IntegerSystem& source, const std::optional<BigInt>& bound,
                                         bool validate) {
  auto enc = universality_step2(universality_step1(source), bound, validate);
  enc.source = source;
  return enc;
}

RationalMatrix UniversalityEncoding::face_matrix() const {
  const std::size_t n = r();
  RationalMatrix A(2 * n + layers(), allowed.size());
  for (std::size_t c = 0; c < allowed.size(); ++c) {
    const auto& cell = allowed[c].cell;
    A(cell[0], c) = 1;
    A(n + cell[1], c) = 1;
    A(2 * n + cell[2], c) = 1;
  }
  return A;
}

std::vector<Rational> UniversalityEncoding::face_rhs() const {
  std::vector<Rational> rhs = margins.u;
  rhs.insert(rhs.end(), margins.v.begin(), margins.v.end());
  rhs.insert(rhs.end(), margins.w.begin(), margins.w.end());
  return rhs;
}

Point UniversalityEncoding::expand(const Point& face_point) const { return expand_cells(*this, face_point); }
Point UniversalityEncoding::project(const Point& table) const { return project_cells(*this, table); }

PointSets source_point_sets(const UniversalityEncoding& enc) {
  const auto A = enc.source.rational_matrix();
  const auto b = enc.source.rational_rhs();
  PointSets out;
  out.vertices = enumerate_basic_solutions(A, b);
  out.integer_points = integer_points(A, b, out.vertices);
  return out;
}

PointSets face_point_sets(const UniversalityEncoding& enc) {
  const auto A = enc.face_matrix();
  const auto b = enc.face_rhs();
  PointSets out;
  const auto verts = enumerate_basic_solutions(A, b);
  for (const auto& v : verts) out.vertices.push_back(enc.expand(v));
  for (const auto& pt : integer_points(A, b, verts)) out.integer_points.push_back(expand_cells(enc, pt));
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.integer_points.begin(), out.integer_points.end());
  return out;
}

bool verify_representation(const UniversalityEncoding& enc, const PointSets& source_points,
                           const PointSets& face_points) {
  for (const auto& v : face_points.vertices) {
    if (!on_face(enc, v)) return false;
  }
  for (const auto& pt : face_points.integer_points) {
    Point as_rational(pt.begin(), pt.end());
    if (!on_face(enc, as_rational)) return false;
  }
  return bijective_image(enc, face_points.vertices, source_points.vertices) &&
         bijective_image(enc, face_points.integer_points, source_points.integer_points);
}

Json to_json(const IntegerSystem& system) {
  Json A = Json::array();
  for (const auto& row : system.A) A.push_back(int_vector_json(row));
  return Json{{"A", A}, {"b", int_vector_json(system.b)}};
}

IntegerSystem integer_system_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("b")) {
    fail(ErrorKind::InvalidInput, "a system is an object with \"A\" and \"b\"");
  }
  IntegerSystem sys;
  if (!j["A"].is_array()) fail(ErrorKind::InvalidInput, "\"A\" must be an array of rows");
  for (const auto& row : j["A"]) sys.A.push_back(int_vector_from_json(row));
  sys.b = int_vector_from_json(j["b"]);
  sys.validate();
  return sys;
}

Json to_json(const UniversalityEncoding& enc) {
  Json reduced = to_json(enc.reduced.system);
  Json vars = Json::array();
  for (const auto& v : enc.reduced.variables) vars.push_back(Json::array({v[0], v[1]}));
  reduced["variables"] = vars;
  reduced["designated"] = enc.reduced.designated;
  Json allowed = Json::array();
  for (const auto& c : enc.allowed) {
    allowed.push_back(Json{{"cell", cell_json(c.cell)}, {"variable", c.variable}, {"complement", c.complement}});
  }
  Json forbidden = Json::array();
  for (const auto& c : enc.forbidden) forbidden.push_back(cell_json(c));
  Json coords = Json::array();
  for (const auto& c : enc.coordinate_map) coords.push_back(cell_json(c));
  return Json{{"source", to_json(enc.source)},
              {"reduced", reduced},
              {"bound", to_json(enc.bound)},
              {"box_sizes", enc.box_sizes},
              {"shape", Json::array({enc.r(), enc.r(), enc.layers()})},
              {"margins", to_json(enc.margins)},
              {"allowed", allowed},
              {"forbidden", forbidden},
              {"coordinate_map", coords}};
}

UniversalityEncoding encoding_from_json(const Json& j) {
  for (const char* key : {"source", "reduced", "bound", "box_sizes", "margins", "allowed", "forbidden",
                          "coordinate_map"}) {
    if (!j.contains(key)) fail(ErrorKind::InvalidInput, std::string("encoding is missing \"") + key + "\"");
  }
  try {
    UniversalityEncoding enc;
    enc.source = integer_system_from_json(j["source"]);
    const Json& red = j["reduced"];
    enc.reduced.system = integer_system_from_json(red);
    for (const auto& v : red.at("variables")) enc.reduced.variables.push_back({v.at(0).get<std::size_t>(),
                                                                               v.at(1).get<std::size_t>()});
    enc.reduced.designated = red.at("designated").get<std::vector<std::size_t>>();
    enc.bound = bigint_from_json(j["bound"]);
    enc.box_sizes = j["box_sizes"].get<std::vector<std::size_t>>();
    const auto inst = instance_from_json(j["margins"]);
    if (!std::holds_alternative<AxialMargins>(inst)) fail(ErrorKind::InvalidInput, "encoding margins must be axial");
    enc.margins = std::get<AxialMargins>(inst);
    for (const auto& c : j["allowed"]) {
      enc.allowed.push_back({cell_from_json(c.at("cell")), c.at("variable").get<std::size_t>(),
                             c.at("complement").get<bool>()});
    }
    for (const auto& c : j["forbidden"]) enc.forbidden.push_back(cell_from_json(c));
    for (const auto& c : j["coordinate_map"]) enc.coordinate_map.push_back(cell_from_json(c));
    const std::size_t r = enc.r(), L = enc.layers();
    for (const auto& c : enc.allowed) {
      if (c.cell[0] >= r || c.cell[1] >= r || c.cell[2] >= L) fail(ErrorKind::InvalidInput, "allowed cell out of range");
    }
    for (const auto& c : enc.coordinate_map) {
      if (c[0] >= r || c[1] >= r || c[2] >= L) fail(ErrorKind::InvalidInput, "designated cell out of range");
    }
    if (enc.coordinate_map.size() != enc.source.cols()) {
      fail(ErrorKind::InvalidInput, "coordinate map must cover every source variable");
    }
    return enc;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed encoding: ") + e.what());
  }
}

}  // namespace transportlab
