#include "transportlab/core/margins.hpp"

#include <string>

#include "transportlab/core/error.hpp"

namespace transportlab {
namespace {

void check_side(const std::vector<Rational>& side, const char* name) {
  if (side.empty()) fail(ErrorKind::InvalidMargins, std::string("margin '") + name + "' is empty");
  for (const auto& x : side) {
    if (x < 0) fail(ErrorKind::InvalidMargins, std::string("negative entry in margin '") + name + "'");
  }
}

void check_matrix(const RationalMatrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols) {
    fail(ErrorKind::InvalidMargins, std::string("margin matrix '") + name + "' has shape " +
                                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                                        ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (m(r, c) < 0) fail(ErrorKind::InvalidMargins, std::string("negative entry in margin '") + name + "'");
    }
  }
}

}  // namespace

void Margins2::validate() const {
  check_side(u, "u");
  check_side(v, "v");
}

bool Margins2::strictly_positive() const {
  for (const auto& x : u) {
    if (x <= 0) return false;
  }
  for (const auto& x : v) {
    if (x <= 0) return false;
  }
  return true;
}

void AxialMargins::validate() const {
  check_side(u, "u");
  check_side(v, "v");
  check_side(w, "w");
}

void PlanarMargins::validate() const {
  if (W.rows() == 0 || W.cols() == 0 || V.cols() == 0) fail(ErrorKind::InvalidMargins, "empty planar margins");
  check_matrix(W, p(), q(), "W");
  check_matrix(V, p(), s(), "V");
  check_matrix(U, q(), s(), "U");
}

}  // namespace transportlab
