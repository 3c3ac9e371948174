#include "transportlab/polytope2/facets.hpp"

#include <string>

#include "transportlab/core/error.hpp"
#include "transportlab/polytope2/feasibility.hpp"

namespace transportlab {

bool facet_indicator(const Margins2& m, std::size_t i, std::size_t j) {
  if (!is_feasible(m)) fail(ErrorKind::Infeasible, "row total differs from column total");
  if (m.p() * m.q() <= 4) fail(ErrorKind::LemmaOutOfRange, "facet characterization needs pq > 4");
  if (i >= m.p() || j >= m.q()) {
    fail(ErrorKind::InvalidInput, "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") out of range");
  }
  return m.u[i] + m.v[j] < sum(m.u);
}

std::vector<bool> facet_cells(const Margins2& m) {
  std::vector<bool> out;
  out.reserve(m.p() * m.q());
  for (std::size_t i = 0; i < m.p(); ++i) {
    for (std::size_t j = 0; j < m.q(); ++j) out.push_back(facet_indicator(m, i, j));
  }
  return out;
}

std::size_t facet_count(const Margins2& m) {
  std::size_t n = 0;
  for (bool f : facet_cells(m)) n += f;
  return n;
}

}  // namespace transportlab
