#include "maxdet/determinant.hpp"

#include <cmath>
#include <numbers>
#include <utility>

namespace maxdet {

double LogDet::log10_magnitude() const { return log_magnitude / std::numbers::ln10; }

namespace {

// Bareiss elimination: after step k every entry below/right of the pivot is a (k+1)x(k+1)
// minor of the input, so the division by the previous pivot is exact and intermediates stay
// bounded by the Hadamard bound of those minors.
BigInt bareiss(std::vector<BigInt> a, std::size_t n) {
    int sign = 1;
    BigInt prev = 1;
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(p, j));
            sign = -sign;
        }
        const BigInt& pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const BigInt& lead = at(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt& x = at(i, j);
                x *= pivot;
                x -= lead * at(k, j);
                mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = pivot;
    }
    BigInt det = at(n - 1, n - 1);
    return sign < 0 ? BigInt(-det) : det;
}

}  // namespace

BigInt determinant_exact(const SignMatrix& m) {
    const std::size_t n = m.size();
    std::vector<BigInt> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i) a[i] = static_cast<long>(m.entries()[i]);
    return bareiss(std::move(a), n);
}

BigInt determinant_exact(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<BigInt> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<long>(m(i, j));
    return bareiss(std::move(a), n);
}

namespace {

struct Lu {
    std::size_t n;
    std::vector<double> a;         // packed L (unit, below diagonal) and U
    std::vector<std::size_t> perm; // row i of PA is row perm[i] of A
    LogDet logdet;
};

Lu factor(const SignMatrix& m) {
    const std::size_t n = m.size();
    Lu lu{n, std::vector<double>(m.entries().begin(), m.entries().end()), std::vector<std::size_t>(n), {1, 0.0}};
    for (std::size_t i = 0; i < n; ++i) lu.perm[i] = i;
    auto& a = lu.a;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(a[k * n + k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::abs(a[i * n + k]);
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best < kSingularPivot) {
            lu.logdet = {0, 0.0};
            return lu;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            std::swap(lu.perm[k], lu.perm[p]);
            lu.logdet.sign = -lu.logdet.sign;
        }
        const double pivot = a[k * n + k];
        if (pivot < 0) lu.logdet.sign = -lu.logdet.sign;
        lu.logdet.log_magnitude += std::log(std::abs(pivot));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double l = a[i * n + k] / pivot;
            a[i * n + k] = l;
            if (l == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] -= l * a[k * n + j];
        }
    }
    return lu;
}

}  // namespace

LogDet determinant_log(const SignMatrix& m) { return factor(m).logdet; }

std::optional<InverseWithDet> invert(const SignMatrix& m) {
    const Lu lu = factor(m);
    if (lu.logdet.sign == 0) return std::nullopt;
    const std::size_t n = lu.n;
    const auto& a = lu.a;
    InverseWithDet out{n, std::vector<double>(n * n), lu.logdet};
    std::vector<double> col(n);
    // Solve A x = e_c for each column c: P A = L U, so L U x = P e_c.
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < n; ++i) col[i] = lu.perm[i] == c ? 1.0 : 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double s = col[i];
            for (std::size_t k = 0; k < i; ++k) s -= a[i * n + k] * col[k];
            col[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            double s = col[i];
            for (std::size_t k = i + 1; k < n; ++k) s -= a[i * n + k] * col[k];
            col[i] = s / a[i * n + i];
        }
        for (std::size_t i = 0; i < n; ++i) out.inverse[i * n + c] = col[i];
    }
    return out;
}

}  // namespace maxdet
