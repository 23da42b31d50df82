#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "maxdet/determinant.hpp"
#include "maxdet/factored_integer.hpp"
#include "maxdet/oracle.hpp"
#include "maxdet/records.hpp"
#include "maxdet/sign_matrix.hpp"
#include "oracles.hpp"

using namespace maxdet;
using namespace maxdet::testing;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

BigInt pow_big(unsigned long b, unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), b, e);
    return out;
}

}  // namespace

TEST_CASE("parse_sign_matrix maps characters and tolerates whitespace") {
    CHECK(parse_sign_matrix("+-\n-+") == SignMatrix::from_rows({{1, -1}, {-1, 1}}));
    CHECK(parse_sign_matrix("\n\n  +-\r\n-+  \r\n\n") == SignMatrix::from_rows({{1, -1}, {-1, 1}}));
    CHECK(parse_sign_matrix("+") == SignMatrix(1));
}

TEST_CASE("parse_sign_matrix reports the offending position") {
    SUBCASE("ragged") {
        try {
            parse_sign_matrix("+-\n-");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("foreign character") {
        try {
            parse_sign_matrix("+-\n-x");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(e.column() == 2);
        }
    }
    SUBCASE("no rows") {
        CHECK_THROWS_AS(parse_sign_matrix(""), ParseError);
        CHECK_THROWS_AS(parse_sign_matrix(" \n\n"), ParseError);
    }
    SUBCASE("too many rows") { CHECK_THROWS_AS(parse_sign_matrix("++\n++\n++"), ParseError); }
}

TEST_CASE("serialize") {
    CHECK(serialize(SignMatrix(1)) == "+");
    CHECK(serialize(SignMatrix::from_rows({{1, -1}, {-1, 1}})) == "+-\n-+");
}

TEST_CASE("corpus listings parse and re-serialize byte for byte") {
    for (std::size_t n : corpus_dimensions()) {
        CAPTURE(n);
        const std::string text = slurp(corpus_path(n));
        const SignMatrix m = parse_sign_matrix(text);
        CHECK(m.size() == n);
        CHECK(serialize(m) + "\n" == text);
    }
    CHECK(corpus_dimensions().size() == 19);
}

TEST_CASE("text and JSON round trips on random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        const SignMatrix m = random_matrix(1 + rng() % 30, rng);
        CHECK(parse_sign_matrix(serialize(m)) == m);
        CHECK(from_json(to_json(m)) == m);
        CHECK(read_matrix(to_json(m)) == m);
        CHECK(read_matrix(serialize(m)) == m);
    }
}

TEST_CASE("JSON form rejects inconsistent input") {
    CHECK_THROWS_AS(from_json(R"({"n": 3, "rows": ["+-", "-+"]})"), ParseError);
    CHECK_THROWS_AS(from_json(R"({"rows": "+-"})"), ParseError);
    CHECK_THROWS_AS(from_json("{not json"), ParseError);
}

TEST_CASE("SignMatrix rejects entries outside {+1, -1}") {
    CHECK_THROWS_AS(SignMatrix::from_rows({{1, 0}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SignMatrix(0), std::invalid_argument);
    SignMatrix m(2);
    CHECK_THROWS_AS(m.set(0, 0, 2), std::invalid_argument);
}

TEST_CASE("FactoredInteger compares by value") {
    const auto a = FactoredInteger::parse("2^23*5^11");
    CHECK(a.value() == pow_big(2, 23) * pow_big(5, 11));
    CHECK(a == FactoredInteger::parse("2^{23}x5^{11}"));
    CHECK(FactoredInteger::parse("2^4*3") == FactoredInteger::parse("4*12"));
    CHECK(FactoredInteger::parse("-2^3").value() == -8);
    CHECK(FactoredInteger::parse("0").value() == 0);
    CHECK(FactoredInteger::parse("2^26*6^11*518").to_string() == "2^26*6^11*518");
    CHECK(FactoredInteger::parse("2^23\xC3\x97" "5^11") == a);
    CHECK_THROWS_AS(FactoredInteger::parse("2^"), std::invalid_argument);
    CHECK_THROWS_AS(FactoredInteger::parse("2^3 junk"), std::invalid_argument);
    CHECK_THROWS_AS(FactoredInteger(1, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("determinant_exact small cases") {
    CHECK(determinant_exact(h2()) == -2);
    CHECK(determinant_exact(SignMatrix(3)) == 0);
    CHECK(determinant_exact(SignMatrix(1)) == 1);
    CHECK(determinant_exact(SignMatrix(1).negated()) == -1);
    CHECK(abs(determinant_exact(h4_normalized())) == 16);
}

TEST_CASE("determinant_exact on the transcribed records") {
    CHECK(abs(determinant_exact(load_corpus_matrix(22))) == pow_big(2, 23) * pow_big(5, 11));
    CHECK(abs(determinant_exact(load_corpus_matrix(23))) == pow_big(2, 22) * 3 * pow_big(5, 6) * 67 * 211);
}

TEST_CASE("determinant_exact agrees with Laplace expansion") {
    SUBCASE("exhaustive n <= 3") {
        for (std::size_t n = 1; n <= 3; ++n)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
                const SignMatrix m = from_mask(n, mask);
                REQUIRE(determinant_exact(m) == laplace_det(m));
            }
    }
    SUBCASE("random n = 4, 5") {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 1000; ++t) {
            const SignMatrix m = random_matrix(4 + t % 2, rng);
            REQUIRE(determinant_exact(m) == laplace_det(m));
        }
    }
}

TEST_CASE("determinant_exact algebraic properties up to n = 20") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 20;
        CAPTURE(n);
        const SignMatrix m = random_matrix(n, rng);
        const BigInt d = determinant_exact(m);

        // Hadamard inequality: d^2 <= n^n.
        BigInt nn;
        mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
        CHECK(d * d <= nn);

        CHECK(determinant_exact(m.transpose()) == d);

        if (n >= 2) {
            const std::size_t a = rng() % n;
            std::size_t b = rng() % n;
            if (a == b) b = (a + 1) % n;
            std::vector<std::int8_t> swapped(m.entries().begin(), m.entries().end());
            for (std::size_t j = 0; j < n; ++j) std::swap(swapped[a * n + j], swapped[b * n + j]);
            CHECK(determinant_exact(SignMatrix(n, swapped)) == -d);
        }

        SignMatrix neg = m;
        const std::size_t r = rng() % n;
        for (std::size_t j = 0; j < n; ++j) neg.flip(r, j);
        CHECK(determinant_exact(neg) == -d);
    }
}

TEST_CASE("determinant_exact handles a zero leading pivot") {
    // Row 0 minus row 1 vanishes in column 0 after the first step; exercise the swap path via
    // an integer matrix with a zero in the corner.
    IntMatrix a(3);
    a(0, 0) = 0; a(0, 1) = 1; a(0, 2) = 2;
    a(1, 0) = 1; a(1, 1) = 0; a(1, 2) = 3;
    a(2, 0) = 4; a(2, 1) = -3; a(2, 2) = 8;
    std::vector<std::vector<std::int64_t>> rows = {{0, 1, 2}, {1, 0, 3}, {4, -3, 8}};
    CHECK(determinant_exact(a) == laplace_det(rows));
}

TEST_CASE("determinant_log") {
    const LogDet h = determinant_log(h2());
    CHECK(h.sign == -1);
    CHECK(h.log_magnitude == doctest::Approx(std::log(2.0)));
    CHECK(determinant_log(SignMatrix(4)).sign == 0);

    const LogDet r = determinant_log(load_corpus_matrix(22));
    const double want = 23 * std::log(2.0) + 11 * std::log(5.0);
    CHECK(std::abs(r.log_magnitude - want) <= 1e-6 * want);
}

TEST_CASE("determinant_log agrees with determinant_exact on the corpus") {
    for (std::size_t n : corpus_dimensions()) {
        CAPTURE(n);
        const SignMatrix m = load_corpus_matrix(n);
        const BigInt d = determinant_exact(m);
        const LogDet l = determinant_log(m);
        CHECK(l.sign == sgn(d));
        long exp = 0;
        const double mant = mpz_get_d_2exp(&exp, d.get_mpz_t());
        const double exact_log = std::log(std::abs(mant)) + exp * std::log(2.0);
        CHECK(std::abs(l.log_magnitude - exact_log) <= 1e-6 * exact_log);
    }
}

TEST_CASE("determinant_log sign agrees with exact sign on random matrices") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        const SignMatrix m = random_matrix(1 + rng() % 12, rng);
        const BigInt d = determinant_exact(m);
        const LogDet l = determinant_log(m);
        CHECK(l.sign == sgn(d));
    }
}

TEST_CASE("gram and is_hadamard") {
    CHECK(gram(h2()) == IntMatrix::identity(2, 2));
    CHECK(is_hadamard(h2()));
    CHECK(is_hadamard(h4_normalized()));
    CHECK(gram(h4_normalized()) == IntMatrix::identity(4, 4));
    CHECK_FALSE(is_hadamard(SignMatrix(2)));
    CHECK(is_hadamard(SignMatrix(1)));
}

TEST_CASE("excess") {
    CHECK(excess(SignMatrix(2)) == 4);
    CHECK(excess(h4_normalized()) == 4);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng() % 15;
        const SignMatrix m = random_matrix(n, rng);
        CHECK((excess(m) - static_cast<std::int64_t>(n * n)) % 2 == 0);
    }
}

TEST_CASE("delete_row_col") {
    CHECK(delete_row_col(h2(), 0, 0) == SignMatrix::from_rows({{-1}}));
    CHECK(delete_row_col(h4_normalized(), 1, 2) == SignMatrix::from_rows({{1, 1, 1}, {1, 1, -1}, {1, -1, 1}}));
    CHECK_THROWS_AS(delete_row_col(h2(), 2, 2), std::out_of_range);
    CHECK_THROWS_AS(delete_row_col(SignMatrix(1), 0, 0), std::invalid_argument);

    const SignMatrix sub = delete_row_col(load_corpus_matrix(73), 0, 0);
    CHECK(sub.size() == 72);
    CHECK(is_hadamard(sub));
}

TEST_CASE("brute_force_maxdet") {
    CHECK(brute_force_maxdet(1).maxdet == 1);
    CHECK(brute_force_maxdet(2).maxdet == 2);
    CHECK(brute_force_maxdet(3).maxdet == 4);
    CHECK(brute_force_maxdet(4).maxdet == 16);
    const auto five = brute_force_maxdet(5);
    CHECK(five.maxdet == 48);
    CHECK(abs(determinant_exact(five.witness)) == 48);
    CHECK_THROWS_AS(brute_force_maxdet(0), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_maxdet(7), std::invalid_argument);
}

TEST_CASE("brute_force_maxdet matches an independent Laplace enumeration") {
    // Full enumeration for n <= 3; normalized enumeration for n = 4, 5 (every matrix is row/column
    // negation equivalent to one with first row and column all +1).
    for (std::size_t n = 1; n <= 3; ++n) {
        std::int64_t best = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask)
            best = std::max(best, std::abs(laplace_det(from_mask(n, mask))));
        CHECK(brute_force_maxdet(n).maxdet == best);
    }
    for (std::size_t n = 4; n <= 5; ++n) {
        std::int64_t best = 0;
        const std::size_t bits = (n - 1) * (n - 1);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 1));
            std::size_t bit = 0;
            for (std::size_t i = 1; i < n; ++i)
                for (std::size_t j = 1; j < n; ++j, ++bit) a[i][j] = (mask >> bit) & 1 ? -1 : 1;
            best = std::max(best, std::abs(laplace_det(a)));
        }
        CHECK(brute_force_maxdet(n).maxdet == best);
    }
}
