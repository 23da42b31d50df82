#pragma once

#include <cstdint>

#include "maxdet/sign_matrix.hpp"

namespace maxdet {

struct BruteForceResult {
    std::int64_t maxdet;
    SignMatrix witness;
};

/// Exhaustive md(n) for 1 <= n <= 6. Throws std::invalid_argument outside that range.
BruteForceResult brute_force_maxdet(std::size_t n);

}  // namespace maxdet
