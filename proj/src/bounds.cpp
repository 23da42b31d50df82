#include "maxdet/bounds.hpp"

#include <cstdio>
#include <stdexcept>

namespace maxdet {

namespace {

BigInt pow_ui(std::size_t base, std::size_t exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

void require_class(std::size_t n, unsigned residue, const char* who) {
    if (n == 0 || n % 4 != residue)
        throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(n) + " is not " +
                                    std::to_string(residue) + " (mod 4)");
}

}  // namespace

std::string BoundSquare::floor_bound() const {
    // floor(sqrt(x)) == floor(sqrt(floor(x))) for x >= 0.
    BigInt whole = value_sq.get_num() / value_sq.get_den();
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), whole.get_mpz_t());
    return root.get_str();
}

Rational hadamard_bound_sq(std::size_t n) {
    if (n == 0) throw std::invalid_argument("hadamard_bound_sq: n must be positive");
    return Rational(pow_ui(n, n));
}

Rational barba_bound_sq(std::size_t n) {
    require_class(n, 1, "barba_bound_sq");
    return Rational(BigInt(static_cast<unsigned long>(2 * n - 1)) * pow_ui(n - 1, n - 1));
}

Rational ehlich_wojtas_bound_sq(std::size_t n) {
    require_class(n, 2, "ehlich_wojtas_bound_sq");
    BigInt b = BigInt(static_cast<unsigned long>(2 * n - 2)) * pow_ui(n - 2, (n - 2) / 2);
    return Rational(b * b);
}

EhlichBound ehlich_bound_sq(std::size_t n) {
    require_class(n, 3, "ehlich_bound_sq");
    std::optional<EhlichBound> best;
    for (std::size_t s = 1; s <= 7 && s <= n; ++s) {
        const std::size_t r = n / s;
        const std::size_t v = n - s * r;
        const std::size_t u = s - v;
        const std::size_t a = n - 3 + 4 * r;
        const std::size_t b = n + 1 + 4 * r;
        const Rational tail = Rational(1) - Rational(BigInt(static_cast<unsigned long>(u * r)), BigInt(static_cast<unsigned long>(a))) -
                              Rational(BigInt(static_cast<unsigned long>(v * (r + 1))), BigInt(static_cast<unsigned long>(b)));
        if (sgn(tail) <= 0) continue;
        Rational value(pow_ui(n - 3, n - s) * pow_ui(a, u) * pow_ui(b, v));
        value *= tail;
        value.canonicalize();
        if (!best || value > best->value_sq) best = EhlichBound{value, static_cast<unsigned>(s)};
    }
    if (!best) throw std::logic_error("ehlich_bound_sq: no admissible block count");
    return *best;
}

BoundSquare upper_bound_sq(std::size_t n) {
    if (n == 0) throw std::invalid_argument("upper_bound_sq: n must be positive");
    BoundSquare out;
    out.n = n;
    out.residue_class = static_cast<unsigned>(n % 4);
    switch (out.residue_class) {
        case 0:
            out.value_sq = hadamard_bound_sq(n);
            break;
        case 1:
            out.value_sq = barba_bound_sq(n);
            break;
        case 2:
            out.value_sq = ehlich_wojtas_bound_sq(n);
            break;
        default: {
            auto e = ehlich_bound_sq(n);
            out.value_sq = e.value_sq;
            out.ehlich_s = e.s;
        }
    }
    return out;
}

double fraction_of_bound(const BigInt& det, std::size_t n) {
    if (det == 0) return 0.0;
    constexpr unsigned kDigits = 30;
    const BoundSquare bound = upper_bound_sq(n);
    // fraction^2 = det^2 * den / num; scale by 10^(2*kDigits) before the integer square root.
    BigInt scale = pow_ui(10, 2 * kDigits);
    BigInt num = det * det * bound.value_sq.get_den() * scale;
    BigInt q = num / bound.value_sq.get_num();
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), q.get_mpz_t());
    mpf_class f(root, 256);
    f /= mpf_class(pow_ui(10, kDigits), 256);
    return f.get_d();
}

std::string format_fraction(double value, int places) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", places, value);
    return buf;
}

}  // namespace maxdet
