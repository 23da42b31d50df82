#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maxdet {

/// Raised by the text/JSON readers; carries the 1-based line and column of the offending character
/// (column 0 when the whole line is at fault).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Dense square integer matrix, row-major. Used for Gram products, conference matrices and
/// anything else whose entries leave {+1, -1}.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n, std::int64_t fill = 0) : n_(n), data_(n * n, fill) {}
    static IntMatrix identity(std::size_t n, std::int64_t scale = 1);

    std::size_t size() const noexcept { return n_; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator-() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::int64_t> data_;
};

/// Square matrix with every entry exactly +1 or -1.
///
/// Entries are stored row-major as int8_t. Construction validates the alphabet, so a SignMatrix
/// that exists is always well formed. The mutators (`flip`, `set`) keep that invariant; shared
/// instances should be passed as const.
class SignMatrix {
public:
    /// All-ones matrix of order n.
    explicit SignMatrix(std::size_t n);
    SignMatrix(std::size_t n, std::vector<std::int8_t> entries);
    /// Convenience for literals: `SignMatrix::from_rows({{1, -1}, {-1, 1}})`.
    static SignMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t size() const noexcept { return n_; }
    int operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::span<const std::int8_t> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
    std::span<const std::int8_t> entries() const noexcept { return entries_; }

    void set(std::size_t i, std::size_t j, int value);
    void flip(std::size_t i, std::size_t j) { entries_[i * n_ + j] = static_cast<std::int8_t>(-entries_[i * n_ + j]); }

    SignMatrix transpose() const;
    SignMatrix negated() const;
    IntMatrix to_int() const;

    friend bool operator==(const SignMatrix&, const SignMatrix&) = default;

private:
    std::size_t n_;
    std::vector<std::int8_t> entries_;
};

/// Reads the '+'/'-' text format: n lines of n characters. Blank lines and surrounding
/// whitespace are ignored, carriage returns are stripped.
SignMatrix parse_sign_matrix(std::string_view text);
SignMatrix parse_sign_matrix(std::istream& in);

/// Inverse of parse_sign_matrix. Rows are newline separated, no trailing newline.
std::string serialize(const SignMatrix& m);

/// Row strings ("+-+...") as used inside the JSON form {"n": int, "rows": [...]}.
std::vector<std::string> row_strings(const SignMatrix& m);
std::string to_json(const SignMatrix& m);
SignMatrix from_json(std::string_view json);

/// Accepts either the JSON object form or the +/- text form.
SignMatrix read_matrix(std::string_view text);
SignMatrix read_matrix_file(const std::string& path);

IntMatrix gram(const SignMatrix& m);
bool is_hadamard(const SignMatrix& m);
/// Sum of all entries.
std::int64_t excess(const SignMatrix& m);
/// 0-based indices; throws std::out_of_range when i or j >= n, std::invalid_argument when n < 2.
SignMatrix delete_row_col(const SignMatrix& m, std::size_t i, std::size_t j);

}  // namespace maxdet
