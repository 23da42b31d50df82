#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "maxdet/sign_matrix.hpp"

namespace maxdet {

/// Antisymmetric conference matrix: zero diagonal, +-1 elsewhere, C^T = -C, C C^T = (m-1) I.
/// The constructor checks all three properties exactly.
class ConferenceMatrix {
public:
    explicit ConferenceMatrix(IntMatrix entries);

    std::size_t order() const noexcept { return c_.size(); }
    int operator()(std::size_t i, std::size_t j) const { return static_cast<int>(c_(i, j)); }
    const IntMatrix& matrix() const noexcept { return c_; }

    friend bool operator==(const ConferenceMatrix&, const ConferenceMatrix&) = default;

private:
    IntMatrix c_;
};

/// k x k block over {-1, 0, +1} with B B^T = k I - J, i.e. Gram diagonal k-1 and off-diagonal -1.
class CoreBlock {
public:
    explicit CoreBlock(IntMatrix entries);

    std::size_t order() const noexcept { return b_.size(); }
    int operator()(std::size_t i, std::size_t j) const { return static_cast<int>(b_(i, j)); }
    const IntMatrix& matrix() const noexcept { return b_; }

private:
    IntMatrix b_;
};

bool is_prime(std::uint64_t p);
/// Quadratic-residue character modulo an odd prime p; chi(0) = 0.
int quadratic_character(std::int64_t a, std::uint64_t p);

/// Q_ij = chi(i - j mod p) for a prime p = 3 (mod 4). Q is antisymmetric with Q Q^T = p I - J.
IntMatrix jacobsthal(std::uint64_t p);

/// Order p+1: first row (0, 1, ..., 1), first column (0, -1, ..., -1)^T, Jacobsthal matrix below.
ConferenceMatrix paley_conference(std::uint64_t p);

/// Order 2m from order m: with the skew Hadamard H = C + I, returns [[H, H], [-H^T, H^T]] - I.
ConferenceMatrix skew_double(const ConferenceMatrix& c);

/// Orders q+1 and 2^t (q+1) for primes q = 3 (mod 4), built by Paley and repeated doubling.
/// A direct Paley construction is preferred when m-1 is itself such a prime. Throws
/// std::invalid_argument for any other order.
ConferenceMatrix antisym_conference(std::size_t m);
bool conference_order_supported(std::size_t m);

/// Negates row/column pairs so that c_{0j} = +1 for j > 0 (and hence c_{i0} = -1 for i > 0).
ConferenceMatrix normalize_conference(const ConferenceMatrix& c);

/// Drops the first row and column of a normalized conference matrix of order k+1.
CoreBlock core_block(const ConferenceMatrix& normalized);

using Hadamard4 = std::array<std::array<int, 4>, 4>;

/// Regular Hadamard matrix of order 4 (J - 2 x antidiagonal); every row sums to 2.
inline constexpr Hadamard4 kRegularH4 = {{{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}}};

bool is_hadamard4(const Hadamard4& h);
/// Negates columns so the first row is all +1, then rows so the first column is all +1.
Hadamard4 normalize_hadamard4(const Hadamard4& h);

/// Dimensions n = 15 (mod 16) with k = (n-3)/4 in {7, 11, 15, 19, 23}.
bool mod16_15_supported(std::size_t n);

/// The n = 4k+3 construction:
///   body   (rows/cols 3..n-1): B (x) H4 with each zero block of B replaced by -J4;
///   border (rows 0..2):        rows 2..4 of normalize(H4), repeated k times;
///   border (cols 0..2):        columns 2..4 of normalize(H4), repeated k times;
///   corner (3 x 3):            rows 2..4 x columns 2..4 of normalize(H4).
/// B is the core block of the normalized antisymmetric conference matrix of order k+1.
SignMatrix build_mod16_15(std::size_t n, const Hadamard4& h4 = kRegularH4);

}  // namespace maxdet
