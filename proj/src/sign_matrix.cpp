#include "maxdet/sign_matrix.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace maxdet {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(column == 0 ? "line " + std::to_string(line) + ": " + what
                                     : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                           ": " + what),
      line_(line),
      column_(column) {}

IntMatrix IntMatrix::identity(std::size_t n, std::int64_t scale) {
    IntMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = scale;
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (rhs.n_ != n_) throw std::invalid_argument("IntMatrix product: dimension mismatch");
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const std::int64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(*this);
    for (auto& v : out.data_) v = -v;
    return out;
}

SignMatrix::SignMatrix(std::size_t n) : n_(n), entries_(n * n, 1) {
    if (n == 0) throw std::invalid_argument("SignMatrix: dimension must be positive");
}

SignMatrix::SignMatrix(std::size_t n, std::vector<std::int8_t> entries) : n_(n), entries_(std::move(entries)) {
    if (n == 0) throw std::invalid_argument("SignMatrix: dimension must be positive");
    if (entries_.size() != n * n) throw std::invalid_argument("SignMatrix: expected n*n entries");
    for (auto e : entries_)
        if (e != 1 && e != -1) throw std::invalid_argument("SignMatrix: entries must be +1 or -1");
}

SignMatrix SignMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    const std::size_t n = rows.size();
    std::vector<std::int8_t> entries;
    entries.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("SignMatrix::from_rows: matrix is not square");
        for (int v : r) entries.push_back(static_cast<std::int8_t>(v));
    }
    return SignMatrix(n, std::move(entries));
}

void SignMatrix::set(std::size_t i, std::size_t j, int value) {
    if (value != 1 && value != -1) throw std::invalid_argument("SignMatrix::set: value must be +1 or -1");
    entries_[i * n_ + j] = static_cast<std::int8_t>(value);
}

SignMatrix SignMatrix::transpose() const {
    SignMatrix out(*this);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out.entries_[j * n_ + i] = entries_[i * n_ + j];
    return out;
}

SignMatrix SignMatrix::negated() const {
    SignMatrix out(*this);
    for (auto& e : out.entries_) e = static_cast<std::int8_t>(-e);
    return out;
}

IntMatrix SignMatrix::to_int() const {
    IntMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(i, j);
    return out;
}

namespace {

bool is_blank(std::string_view s) {
    return s.find_first_not_of(" \t\r\f\v") == std::string_view::npos;
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\f\v");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\f\v");
    return s.substr(b, e - b + 1);
}

}  // namespace

SignMatrix parse_sign_matrix(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;  // (1-based line number, content)
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        ++line_no;
        const std::string_view raw = text.substr(pos, end - pos);
        if (!is_blank(raw)) lines.emplace_back(line_no, trim(raw));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (lines.empty()) throw ParseError("no matrix rows found", line_no == 0 ? 1 : line_no, 0);

    const std::size_t n = lines.size();
    std::vector<std::int8_t> entries;
    entries.reserve(n * n);
    for (const auto& [ln, row] : lines) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            const char ch = row[c];
            if (ch == '+')
                entries.push_back(1);
            else if (ch == '-')
                entries.push_back(-1);
            else
                throw ParseError(std::string("unexpected character '") + ch + "'", ln, c + 1);
        }
        if (row.size() != n)
            throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n) +
                                 " (one per row of the matrix)",
                             ln, 0);
    }
    return SignMatrix(n, std::move(entries));
}

SignMatrix parse_sign_matrix(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_sign_matrix(std::string_view(text));
}

std::vector<std::string> row_strings(const SignMatrix& m) {
    std::vector<std::string> rows;
    rows.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::string r;
        r.reserve(m.size());
        for (auto e : m.row(i)) r.push_back(e > 0 ? '+' : '-');
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string serialize(const SignMatrix& m) {
    std::string out;
    out.reserve(m.size() * (m.size() + 1));
    for (const auto& r : row_strings(m)) {
        if (!out.empty()) out.push_back('\n');
        out += r;
    }
    return out;
}

std::string to_json(const SignMatrix& m) {
    nlohmann::json j;
    j["n"] = m.size();
    j["rows"] = row_strings(m);
    return j.dump();
}

SignMatrix from_json(std::string_view json) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 0);
    }
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw ParseError("JSON matrix must be an object with a \"rows\" array", 1, 0);
    std::string text;
    for (const auto& r : j["rows"]) {
        if (!r.is_string()) throw ParseError("JSON matrix rows must be strings", 1, 0);
        text += r.get<std::string>();
        text.push_back('\n');
    }
    SignMatrix m = parse_sign_matrix(std::string_view(text));
    if (j.contains("n") && j["n"].get<std::size_t>() != m.size())
        throw ParseError("JSON \"n\" does not match the number of rows", 1, 0);
    return m;
}

SignMatrix read_matrix(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return from_json(text);
    return parse_sign_matrix(text);
}

SignMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_matrix(buf.str());
}

IntMatrix gram(const SignMatrix& m) {
    const std::size_t n = m.size();
    IntMatrix g(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ri = m.row(i);
        for (std::size_t j = i; j < n; ++j) {
            const auto rj = m.row(j);
            std::int64_t s = 0;
            for (std::size_t k = 0; k < n; ++k) s += ri[k] * rj[k];
            g(i, j) = s;
            g(j, i) = s;
        }
    }
    return g;
}

bool is_hadamard(const SignMatrix& m) {
    return gram(m) == IntMatrix::identity(m.size(), static_cast<std::int64_t>(m.size()));
}

std::int64_t excess(const SignMatrix& m) {
    std::int64_t s = 0;
    for (auto e : m.entries()) s += e;
    return s;
}

SignMatrix delete_row_col(const SignMatrix& m, std::size_t i, std::size_t j) {
    const std::size_t n = m.size();
    if (n < 2) throw std::invalid_argument("delete_row_col: matrix must have order >= 2");
    if (i >= n || j >= n)
        throw std::out_of_range("delete_row_col: index (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") out of range for order " + std::to_string(n));
    std::vector<std::int8_t> entries;
    entries.reserve((n - 1) * (n - 1));
    for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) entries.push_back(static_cast<std::int8_t>(m(r, c)));
    }
    return SignMatrix(n - 1, std::move(entries));
}

}  // namespace maxdet
