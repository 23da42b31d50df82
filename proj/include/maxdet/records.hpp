#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "maxdet/factored_integer.hpp"
#include "maxdet/sign_matrix.hpp"

namespace maxdet {

/// Printed form of a theoretical bound: coefficient * sqrt(radicand).
struct BoundExpression {
    FactoredInteger coefficient;
    std::uint64_t radicand = 1;

    Rational squared() const;
    std::string to_string() const;
};

struct RecordClaim {
    std::size_t n = 0;
    FactoredInteger det;
    std::optional<BoundExpression> bound;  // absent for the table-only dimensions
    std::string fraction_printed;
    std::string source;                    // "listing" or "table"
    std::string notes;
    std::optional<std::int64_t> excess;    // excess of the lower-right (n-1)x(n-1) Hadamard block
    std::optional<std::string> prior_record;  // commentary only, never checked
};

/// All published claims: 19 listed record matrices plus 6 table-only dimensions, ordered by n.
const std::vector<RecordClaim>& registry();
std::optional<RecordClaim> find_claim(std::size_t n);

std::string registry_to_json();
std::vector<RecordClaim> registry_from_json(const std::string& json);

/// Excess of the (n-1)x(n-1) block left after deleting the first row and column. `sum` is the raw
/// entry sum; `excess` is |sum|, the excess of whichever of +-block has a nonnegative sum (negating
/// a Hadamard matrix gives another Hadamard matrix).
struct ExcessReport {
    bool hadamard = false;
    std::int64_t sum = 0;
    std::int64_t excess = 0;
    std::int64_t expected = 0;
    bool matches = false;
};

struct VerificationReport {
    std::size_t n = 0;
    BigInt claimed_det;
    BigInt computed_det;
    bool match = false;       // |computed| == claimed
    double fraction_computed = 0.0;
    Rational bound_sq;
    std::optional<ExcessReport> hadamard_submatrix_excess;
    double elapsed_ms = 0.0;

    std::string to_json() const;
};

/// Deletes the first row and column, checks Hadamardness and the excess. Throws std::domain_error
/// when the submatrix is not Hadamard, std::invalid_argument when n < 2.
ExcessReport verify_excess_claim(const SignMatrix& m, std::int64_t expected_excess);

/// Exact determinant against the claim, fraction of bound, and the excess check when the claim
/// carries one. Determinant signs are not part of the claims, so magnitudes are compared.
/// Throws std::invalid_argument on a dimension mismatch.
VerificationReport verify_record(const SignMatrix& m, const RecordClaim& claim);

/// $MAXDET_DATA_DIR if set, else the data directory configured at build time.
std::filesystem::path data_dir();
/// data_dir()/records/nNN.txt
std::filesystem::path corpus_path(std::size_t n);
/// Dimensions with a transcribed matrix on disk.
std::vector<std::size_t> corpus_dimensions();
SignMatrix load_corpus_matrix(std::size_t n);

}  // namespace maxdet
