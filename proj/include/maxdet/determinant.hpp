#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxdet/factored_integer.hpp"
#include "maxdet/sign_matrix.hpp"

namespace maxdet {

/// Float companion of an exact determinant: sign and natural log of the magnitude.
/// sign == 0 means (numerically) singular and log_magnitude is meaningless.
struct LogDet {
    int sign = 0;
    double log_magnitude = 0.0;

    double log10_magnitude() const;
};

/// Pivot magnitude below which determinant_log declares the matrix singular. Rows of a sign
/// matrix all have max-norm 1, so this is the threshold after row scaling.
inline constexpr double kSingularPivot = 1e-9;

/// Exact determinant by Bareiss fraction-free elimination over GMP integers.
BigInt determinant_exact(const SignMatrix& m);
/// Same algorithm for a general integer matrix (conference matrices, Gram matrices).
BigInt determinant_exact(const IntMatrix& m);

/// Partially pivoted LU in double precision, accumulating log|pivot|.
LogDet determinant_log(const SignMatrix& m);

/// Row-major dense inverse of a sign matrix together with its log-determinant, obtained from one
/// LU factorization. Returns nullopt when a pivot falls under kSingularPivot.
struct InverseWithDet {
    std::size_t n = 0;
    std::vector<double> inverse;  // inverse[i * n + j] = (A^-1)_{ij}
    LogDet logdet;
};
std::optional<InverseWithDet> invert(const SignMatrix& m);

}  // namespace maxdet
