#pragma once

#include <cstddef>
#include <vector>

namespace rank1 {

/**
 * Kernels that iterate over independent subsets (vertex enumeration,
 * support enumeration) come in two flavours. `Serial` is the reference
 * loop; `Parallel` spreads the loop over OpenMP threads and merges results
 * in the same order, so both produce identical output.
 */
enum class Execution { Serial, Parallel };

/** All k-subsets of {0, ..., n-1} in lexicographic order. */
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}   // namespace rank1
