#include "maxdet/construct.hpp"

#include <stdexcept>
#include <string>

namespace maxdet {

namespace {

void check_conference(const IntMatrix& c) {
    const std::size_t m = c.size();
    if (m < 2) throw std::invalid_argument("conference matrix: order must be at least 2");
    for (std::size_t i = 0; i < m; ++i) {
        if (c(i, i) != 0) throw std::invalid_argument("conference matrix: nonzero diagonal entry");
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && c(i, j) != 1 && c(i, j) != -1)
                throw std::invalid_argument("conference matrix: off-diagonal entry not +-1");
            if (c(i, j) != -c(j, i)) throw std::invalid_argument("conference matrix: not antisymmetric");
        }
    }
    if (c * c.transpose() != IntMatrix::identity(m, static_cast<std::int64_t>(m) - 1))
        throw std::invalid_argument("conference matrix: C C^T != (m-1) I");
}

std::string supported_orders_hint() {
    std::string list;
    for (std::size_t m = 2; m <= 64; ++m)
        if (conference_order_supported(m)) list += (list.empty() ? "" : ", ") + std::to_string(m);
    return "supported orders are q+1 and 2^t(q+1) for primes q = 3 (mod 4): " + list + ", ...";
}

}  // namespace

ConferenceMatrix::ConferenceMatrix(IntMatrix entries) : c_(std::move(entries)) { check_conference(c_); }

CoreBlock::CoreBlock(IntMatrix entries) : b_(std::move(entries)) {
    const std::size_t k = b_.size();
    const IntMatrix g = b_ * b_.transpose();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const std::int64_t want = i == j ? static_cast<std::int64_t>(k) - 1 : -1;
            if (g(i, j) != want) throw std::invalid_argument("core block: B B^T != k I - J");
        }
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int quadratic_character(std::int64_t a, std::uint64_t p) {
    const auto mod = static_cast<std::int64_t>(p);
    std::uint64_t base = static_cast<std::uint64_t>(((a % mod) + mod) % mod);
    if (base == 0) return 0;
    // Euler's criterion: a^((p-1)/2) = +-1 (mod p).
    std::uint64_t result = 1;
    std::uint64_t e = (p - 1) / 2;
    while (e) {
        if (e & 1) result = static_cast<std::uint64_t>((static_cast<unsigned __int128>(result) * base) % p);
        base = static_cast<std::uint64_t>((static_cast<unsigned __int128>(base) * base) % p);
        e >>= 1;
    }
    return result == 1 ? 1 : -1;
}

IntMatrix jacobsthal(std::uint64_t p) {
    if (!is_prime(p) || p % 4 != 3)
        throw std::invalid_argument("jacobsthal: p = " + std::to_string(p) + " is not a prime = 3 (mod 4)");
    IntMatrix q(p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            q(i, j) = quadratic_character(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(j), p);
    return q;
}

ConferenceMatrix paley_conference(std::uint64_t p) {
    const IntMatrix q = jacobsthal(p);
    IntMatrix c(p + 1);
    for (std::size_t j = 1; j <= p; ++j) {
        c(0, j) = 1;
        c(j, 0) = -1;
    }
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) c(i + 1, j + 1) = q(i, j);
    return ConferenceMatrix(std::move(c));
}

ConferenceMatrix skew_double(const ConferenceMatrix& c) {
    const std::size_t m = c.order();
    IntMatrix k(2 * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const std::int64_t h = c(i, j) + (i == j ? 1 : 0);   // H = C + I
            const std::int64_t ht = c(j, i) + (i == j ? 1 : 0);  // (H^T)_ij
            k(i, j) = h;
            k(i, j + m) = h;
            k(i + m, j) = -ht;
            k(i + m, j + m) = ht;
        }
    for (std::size_t i = 0; i < 2 * m; ++i) k(i, i) -= 1;
    return ConferenceMatrix(std::move(k));
}

bool conference_order_supported(std::size_t m) {
    while (m >= 4) {
        const std::size_t q = m - 1;
        if (q % 4 == 3 && is_prime(q)) return true;
        if (m % 2 != 0) return false;
        m /= 2;
    }
    return false;
}

ConferenceMatrix antisym_conference(std::size_t m) {
    if (!conference_order_supported(m))
        throw std::invalid_argument("antisym_conference: order " + std::to_string(m) + " unsupported; " +
                                    supported_orders_hint());
    const std::size_t q = m - 1;
    if (q % 4 == 3 && is_prime(q)) return paley_conference(q);
    return skew_double(antisym_conference(m / 2));
}

ConferenceMatrix normalize_conference(const ConferenceMatrix& c) {
    IntMatrix out = c.matrix();
    const std::size_t m = out.size();
    for (std::size_t j = 1; j < m; ++j) {
        if (out(0, j) == 1) continue;
        // Negating row j and column j together keeps antisymmetry and the Gram identity.
        for (std::size_t t = 0; t < m; ++t) out(j, t) = -out(j, t);
        for (std::size_t t = 0; t < m; ++t) out(t, j) = -out(t, j);
    }
    return ConferenceMatrix(std::move(out));
}

CoreBlock core_block(const ConferenceMatrix& normalized) {
    const std::size_t m = normalized.order();
    for (std::size_t j = 1; j < m; ++j)
        if (normalized(0, j) != 1 || normalized(j, 0) != -1)
            throw std::invalid_argument("core_block: conference matrix is not normalized");
    IntMatrix b(m - 1);
    for (std::size_t i = 1; i < m; ++i)
        for (std::size_t j = 1; j < m; ++j) b(i - 1, j - 1) = normalized(i, j);
    return CoreBlock(std::move(b));
}

bool is_hadamard4(const Hadamard4& h) {
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            int dot = 0;
            for (std::size_t t = 0; t < 4; ++t) {
                if (h[i][t] != 1 && h[i][t] != -1) return false;
                dot += h[i][t] * h[j][t];
            }
            if (dot != (i == j ? 4 : 0)) return false;
        }
    return true;
}

Hadamard4 normalize_hadamard4(const Hadamard4& h) {
    Hadamard4 out = h;
    for (std::size_t j = 0; j < 4; ++j)
        if (out[0][j] < 0)
            for (auto& row : out) row[j] = -row[j];
    for (auto& row : out)
        if (row[0] < 0)
            for (auto& x : row) x = -x;
    return out;
}

bool mod16_15_supported(std::size_t n) {
    if (n % 16 != 15) return false;
    const std::size_t k = (n - 3) / 4;
    return k == 7 || k == 11 || k == 15 || k == 19 || k == 23;
}

SignMatrix build_mod16_15(std::size_t n, const Hadamard4& h4) {
    if (!mod16_15_supported(n))
        throw std::invalid_argument("build_mod16_15: n = " + std::to_string(n) +
                                    " unsupported; n must be 15 (mod 16) with (n-3)/4 in {7, 11, 15, 19, 23}, "
                                    "i.e. n in {31, 47, 63, 79, 95}");
    if (!is_hadamard4(h4)) throw std::invalid_argument("build_mod16_15: H4 is not a Hadamard matrix");

    const std::size_t k = (n - 3) / 4;
    const CoreBlock b = core_block(normalize_conference(antisym_conference(k + 1)));
    const Hadamard4 nh = normalize_hadamard4(h4);

    SignMatrix out(n);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) out.set(i, j, nh[i + 1][j + 1]);
        for (std::size_t j = 0; j < 4 * k; ++j) out.set(i, 3 + j, nh[i + 1][j % 4]);
    }
    for (std::size_t i = 0; i < 4 * k; ++i) {
        for (std::size_t j = 0; j < 3; ++j) out.set(3 + i, j, nh[i % 4][j + 1]);
        for (std::size_t j = 0; j < 4 * k; ++j) {
            const int bij = b(i / 4, j / 4);
            out.set(3 + i, 3 + j, bij == 0 ? -1 : bij * h4[i % 4][j % 4]);
        }
    }
    return out;
}

}  // namespace maxdet
