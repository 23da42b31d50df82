#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace maxdet {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Signed product of (base, exponent) pairs, e.g. 2^26 * 6^11 * 518.
///
/// Bases need not be prime and may repeat, so the representation is not canonical; equality and
/// ordering compare the expanded values.
class FactoredInteger {
public:
    struct Factor {
        std::uint64_t base;
        unsigned exponent;
        friend bool operator==(const Factor&, const Factor&) = default;
    };

    /// The value 1.
    FactoredInteger() = default;
    FactoredInteger(int sign, std::vector<Factor> factors);

    /// Parses "2^23*5^11", "-2^22*3*5^6*67*211", "2^{26}x6^{11}x518" or "0". Throws
    /// std::invalid_argument on malformed input.
    static FactoredInteger parse(std::string_view text);

    int sign() const noexcept { return sign_; }
    const std::vector<Factor>& factors() const noexcept { return factors_; }

    BigInt value() const;
    /// Canonical printable form, "2^23*5^11"; "1" for the empty product, "0" for zero.
    std::string to_string() const;

    friend bool operator==(const FactoredInteger& a, const FactoredInteger& b) { return a.value() == b.value(); }
    friend bool operator==(const FactoredInteger& a, const BigInt& b) { return a.value() == b; }

private:
    int sign_ = 1;
    std::vector<Factor> factors_;
};

}  // namespace maxdet
