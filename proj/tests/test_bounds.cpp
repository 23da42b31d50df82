#include <doctest.h>

#include <cmath>
#include <string>

#include "maxdet/bounds.hpp"
#include "maxdet/oracle.hpp"

using namespace maxdet;

namespace {

BigInt pow_big(unsigned long b, unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), b, e);
    return out;
}

/// Straightforward floating-point evaluation of the n = 3 (mod 4) bound for one s; returns the
/// natural log of the squared bound.
double ehlich_log_sq(std::size_t n, unsigned s) {
    const double nd = static_cast<double>(n);
    const std::size_t r = n / s;
    const std::size_t v = n - s * r;
    const std::size_t u = s - v;
    const double a = nd - 3 + 4.0 * r;
    const double b = nd + 1 + 4.0 * r;
    const double tail = 1.0 - u * static_cast<double>(r) / a - v * (r + 1.0) / b;
    return (nd - s) * std::log(nd - 3) + u * std::log(a) + v * std::log(b) + std::log(tail);
}

double log_of(const Rational& q) {
    long en = 0, ed = 0;
    const double mn = mpz_get_d_2exp(&en, q.get_num_mpz_t());
    const double md = mpz_get_d_2exp(&ed, q.get_den_mpz_t());
    return std::log(mn / md) + (en - ed) * std::log(2.0);
}

struct Printed {
    std::size_t n;
    const char* coefficient;
    std::uint64_t radicand;
    const char* fraction;
    const char* det;
};

// Bound expressions, fractions and determinants as printed next to each listed record matrix.
const Printed kPrinted[] = {
    {22, "2^21*3*5^10*7", 1, "0.95", "2^23*5^11"},
    {23, "2^22*3*5^6*675", 505, "0.931983", "2^22*3*5^6*67*211"},
    {27, "2^26*5*6^10*44", 237, "0.917665", "2^26*6^11*518"},
    {29, "2^28*7^12*49", 57, "0.865001", "2^28*7^12*320"},
    {31, "2^30*7^12*144", 1589, "0.927499", "2^30*7^12*5324"},
    {33, "2^32*8^14*64", 65, "0.854677", "2^32*8^14*441"},
    {34, "2^33*8^16*33", 1, "0.848485", "2^33*8^16*28"},
    {35, "2^34*8^15*98", 134, "0.840907", "2^34*9^12*23*5167"},
    {39, "2^38*9^17*80", 357, "0.821009", "2^38*9^17*1241"},
    {45, "2^44*11^22", 89, "0.799817", "2^44*11^21*83"},
    {47, "2^46*11^20*19^2", 5665, "0.923897", "2^46*11^18*15^4*60"},
    {53, "2^52*13^26", 105, "0.788227", "2^52*13^25*105"},
    {63, "2^64*15^28*12^3*2", 33, "0.889364", "2^64*15^24*19^7"},
    {69, "2^68*17^34", 137, "0.778973", "2^68*17^33*155"},
    {73, "2^72*18^36", 145, "0.752023", "2^72*18^35*163"},
    {77, "2^76*19^38", 153, "0.753137", "2^76*19^37*177"},
    {79, "2^78*4*19^36*225", 40145, "0.84924", "2^78*4*19^30*23^9"},
    {93, "2^92*23^46", 185, "0.738411", "2^92*23^45*231"},
    {95, "2^96*23^44*333", 69153, "0.810642", "2^96*23^36*27^11"},
};

/// Number of digits after the decimal point in a printed fraction.
int places(const std::string& s) { return static_cast<int>(s.size() - s.find('.') - 1); }

}  // namespace

TEST_CASE("hadamard_bound_sq") {
    CHECK(hadamard_bound_sq(1) == 1);
    CHECK(hadamard_bound_sq(4) == 256);
    CHECK(hadamard_bound_sq(12) == Rational(pow_big(12, 12)));
}

TEST_CASE("barba_bound_sq") {
    CHECK(barba_bound_sq(1) == 1);
    CHECK(barba_bound_sq(5) == 9 * 256);
    CHECK(barba_bound_sq(9) == Rational(17 * pow_big(8, 8)));
    CHECK_THROWS_AS(barba_bound_sq(7), std::invalid_argument);
}

TEST_CASE("ehlich_wojtas_bound_sq") {
    CHECK(ehlich_wojtas_bound_sq(2) == 4);
    CHECK(ehlich_wojtas_bound_sq(6) == 160 * 160);
    CHECK(ehlich_wojtas_bound_sq(22) == Rational(BigInt(42 * pow_big(20, 10)) * BigInt(42 * pow_big(20, 10))));
    CHECK_THROWS_AS(ehlich_wojtas_bound_sq(8), std::invalid_argument);
}

TEST_CASE("ehlich_bound_sq") {
    CHECK(ehlich_bound_sq(3).value_sq == 16);
    CHECK_THROWS_AS(ehlich_bound_sq(9), std::invalid_argument);

    // Against an independent floating-point evaluation of every s.
    for (std::size_t n = 7; n <= 199; n += 4) {
        CAPTURE(n);
        double best = -1e300;
        unsigned best_s = 0;
        for (unsigned s = 1; s <= 7; ++s) {
            const double v = ehlich_log_sq(n, s);
            if (v > best + 1e-12 * std::abs(v)) {
                best = v;
                best_s = s;
            }
        }
        const EhlichBound e = ehlich_bound_sq(n);
        CHECK(std::abs(log_of(e.value_sq) - best) <= 1e-9 * best);
        CHECK(e.s == best_s);
        CHECK(ehlich_bound_sq(n).s == e.s);  // deterministic
    }
}

TEST_CASE("ehlich block counts for the listed dimensions") {
    for (std::size_t n : {23, 27, 31, 35, 39, 47}) CHECK(ehlich_bound_sq(n).s == 6);
    for (std::size_t n : {63, 79, 95}) CHECK(ehlich_bound_sq(n).s == 7);
}

TEST_CASE("upper_bound_sq dispatch") {
    for (std::size_t n = 1; n <= 200; ++n) {
        CAPTURE(n);
        const BoundSquare b = upper_bound_sq(n);
        CHECK(b.n == n);
        CHECK(b.residue_class == n % 4);
        CHECK(b.ehlich_s.has_value() == (n % 4 == 3));
        const Rational h = hadamard_bound_sq(n);
        CHECK(b.value_sq <= h);
        CHECK((b.value_sq == h) == (n % 4 == 0 || n <= 2));
    }
    CHECK_THROWS_AS(upper_bound_sq(0), std::invalid_argument);
    CHECK(upper_bound_sq(22).floor_bound() == "430080000000000");
    CHECK(upper_bound_sq(5).floor_bound() == "48");
}

TEST_CASE("brute-force maxima respect the bound, with equality for n <= 6") {
    for (std::size_t n = 1; n <= 5; ++n) {
        const BigInt md = brute_force_maxdet(n).maxdet;
        CHECK(Rational(md * md) == upper_bound_sq(n).value_sq);
    }
    // md(6) = 160 and md(7) = 576 are known values.
    CHECK(upper_bound_sq(6).value_sq == 160 * 160);
    CHECK(Rational(576 * 576) < upper_bound_sq(7).value_sq);
}

TEST_CASE("printed bound expressions equal the computed bounds") {
    for (const Printed& p : kPrinted) {
        CAPTURE(p.n);
        const BigInt c = FactoredInteger::parse(p.coefficient).value();
        CHECK(Rational(c * c * p.radicand) == upper_bound_sq(p.n).value_sq);
    }
}

TEST_CASE("printed fractions match to the printed precision") {
    for (const Printed& p : kPrinted) {
        CAPTURE(p.n);
        const double f = fraction_of_bound(FactoredInteger::parse(p.det).value(), p.n);
        CHECK(format_fraction(f, places(p.fraction)) == p.fraction);
    }
}

TEST_CASE("fraction_of_bound") {
    CHECK(fraction_of_bound(0, 22) == 0.0);
    CHECK(fraction_of_bound(16, 4) == 1.0);
    CHECK(fraction_of_bound(-16, 4) == 1.0);
    CHECK(fraction_of_bound(8, 4) == 0.5);
    CHECK(format_fraction(0.1234567) == "0.123457");
    CHECK(format_fraction(0.5, 2) == "0.50");
}
