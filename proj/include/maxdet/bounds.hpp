#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "maxdet/factored_integer.hpp"

namespace maxdet {

/// Square of the best known theoretical upper bound on md(n), kept exact. Squaring clears the
/// radicals in the n = 1, 3 (mod 4) formulas.
struct BoundSquare {
    std::size_t n = 0;
    Rational value_sq;
    unsigned residue_class = 0;         // n mod 4
    std::optional<unsigned> ehlich_s;   // block count, n = 3 (mod 4) only

    /// floor(sqrt(value_sq)) as a decimal string.
    std::string floor_bound() const;
};

/// n^n (the Hadamard bound squared). Valid for every n >= 1.
Rational hadamard_bound_sq(std::size_t n);
/// (2n-1)(n-1)^(n-1), n = 1 (mod 4).
Rational barba_bound_sq(std::size_t n);
/// ((2n-2)(n-2)^((n-2)/2))^2, n = 2 (mod 4).
Rational ehlich_wojtas_bound_sq(std::size_t n);

struct EhlichBound {
    Rational value_sq;
    unsigned s;
};
/// n = 3 (mod 4): the maximum over s = 1..7 of
///   (n-3)^(n-s) (n-3+4r)^u (n+1+4r)^v (1 - u r/(n-3+4r) - v (r+1)/(n+1+4r)),
/// with r = floor(n/s), v = n - s r, u = s - v. Ties go to the smaller s.
EhlichBound ehlich_bound_sq(std::size_t n);

/// Dispatch on n mod 4.
BoundSquare upper_bound_sq(std::size_t n);

/// |det| / sqrt(upper_bound_sq(n)), evaluated from an exact integer square root so that the
/// result is correct to double precision.
double fraction_of_bound(const BigInt& det, std::size_t n);

/// Fixed-point decimal rendering with `places` digits after the point.
std::string format_fraction(double value, int places = 6);

}  // namespace maxdet
