#include "maxdet/oracle.hpp"

#include <array>
#include <stdexcept>

namespace maxdet {

namespace {

constexpr std::size_t kMaxOracleOrder = 6;

// Fraction-free elimination in machine integers; for n <= 6 every intermediate is a minor of a
// sign matrix, so |x| <= 6^3 and int64 cannot overflow.
std::int64_t small_det(std::array<std::int64_t, kMaxOracleOrder * kMaxOracleOrder> a, std::size_t n) {
    auto at = [&](std::size_t i, std::size_t j) -> std::int64_t& { return a[i * kMaxOracleOrder + j]; };
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

}  // namespace

BruteForceResult brute_force_maxdet(std::size_t n) {
    if (n < 1 || n > kMaxOracleOrder)
        throw std::invalid_argument("brute_force_maxdet: n must be in [1, 6], got " + std::to_string(n));

    // Negating a row or a column only flips the sign of the determinant, so every matrix is
    // equivalent (in |det|) to one whose first row and first column are all +1. That leaves
    // (n-1)^2 free entries.
    const std::size_t free_bits = (n - 1) * (n - 1);
    const std::uint64_t count = std::uint64_t{1} << free_bits;

    std::int64_t best = -1;
    std::uint64_t best_mask = 0;
    std::array<std::int64_t, kMaxOracleOrder * kMaxOracleOrder> a{};
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (std::size_t j = 0; j < n; ++j) a[j] = 1;
        std::size_t bit = 0;
        for (std::size_t i = 1; i < n; ++i) {
            a[i * kMaxOracleOrder] = 1;
            for (std::size_t j = 1; j < n; ++j, ++bit) a[i * kMaxOracleOrder + j] = (mask >> bit) & 1 ? -1 : 1;
        }
        std::int64_t d = small_det(a, n);
        if (d < 0) d = -d;
        if (d > best) {
            best = d;
            best_mask = mask;
        }
    }

    SignMatrix witness(n);
    std::size_t bit = 0;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j, ++bit)
            if ((best_mask >> bit) & 1) witness.flip(i, j);
    return {best, std::move(witness)};
}

}  // namespace maxdet
