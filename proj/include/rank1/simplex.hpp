#pragma once

#include <cstddef>
#include <vector>

#include "rank1/linalg.hpp"

namespace rank1 {

/** max c^T v  subject to  A v = b,  v >= 0. */
struct StandardLp
{
    RMatrix a;
    RVector b;
    RVector c;
};

struct LpSolution
{
    RVector v;
    Rational objective;
    /** Basic variable of each retained constraint row. */
    std::vector<std::size_t> basic;
    /** Indices of constraint rows found redundant in phase 1 and dropped. */
    std::vector<std::size_t> dropped_rows;

    bool is_basic(std::size_t var) const;
};

/**
 * Dense two-phase tableau simplex in exact arithmetic with Bland's rule.
 * Throws InfeasibleError or UnboundedError.
 */
LpSolution solve_standard_lp(const StandardLp& lp);

}   // namespace rank1
