#pragma once

#include <cstddef>
#include <vector>

#include "transportlab/core/margins.hpp"

namespace transportlab {

/// Whether x_{i,j} = 0 cuts out a facet: u_i + v_j < total. Indices are
/// 0-based. Requires pq > 4 (LemmaOutOfRange otherwise).
bool facet_indicator(const Margins2& m, std::size_t i, std::size_t j);

/// Number of cells whose zero set is a facet.
std::size_t facet_count(const Margins2& m);

/// Row-major p x q indicator matrix.
std::vector<bool> facet_cells(const Margins2& m);

}  // namespace transportlab
