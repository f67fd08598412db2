#pragma once

#include <vector>

#include "rank1/execution.hpp"
#include "rank1/game.hpp"

namespace rank1 {

struct OracleOptions
{
    /** Search every support pair, not only those of equal size. */
    bool strict = false;
    Execution exec = Execution::Parallel;
};

struct OracleResult
{
    std::vector<EquilibriumPoint> equilibria;
    /**
     * Set when some equilibrium found has more pure best responses than
     * its support size, i.e. the game is degenerate and the list may be
     * incomplete.
     */
    bool degenerate_suspect = false;
};

/**
 * Brute-force support enumeration. For each support pair the indifference
 * system is solved exactly; solutions with nonnegative probabilities and
 * no profitable deviation outside the support are kept. Results follow the
 * order (support size, S1, S2) and are deduplicated by strategy pair.
 */
OracleResult support_enumeration(const BimatrixGame& g, const OracleOptions& options = {});

}   // namespace rank1
