#pragma once

#include <cstddef>

#include "transportlab/core/margins.hpp"
#include "transportlab/core/table.hpp"

namespace transportlab {

/// Non-empty iff the row and column totals agree. Throws InvalidMargins on
/// negative entries.
bool is_feasible(const Margins2& m);

/// Dimension (p-1)(q-1) of a non-empty p x q polytope with positive margins.
std::size_t dimension2(std::size_t p, std::size_t q);

/// Northwest-corner rule: cells in lexicographic order, each gets the
/// smaller of the remaining row and column mass.
Table2 northwest_corner(const Margins2& m);

/// True iff no non-empty Y of rows and non-empty Z of columns, other than
/// (all rows, all columns), have equal sums. Exhaustive; refuses p+q > 24.
bool is_generic(const Margins2& m);

Margins2 birkhoff_margins(std::size_t p);
Margins2 central_margins(std::size_t p, std::size_t q);

/// Generic margins near m: the northwest-corner vertex gets eps^k added to
/// cell k (k = 1..pq) and the sums are recomputed. eps = 1/(4L) where L is
/// the denominator lcm, so the eps mass stays below every non-zero
/// subset-sum gap of m.
Margins2 perturb_to_generic(const Margins2& m);

}  // namespace transportlab
