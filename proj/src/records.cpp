#include "maxdet/records.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

#include "maxdet/bounds.hpp"
#include "maxdet/determinant.hpp"

#ifndef MAXDET_DEFAULT_DATA_DIR
#define MAXDET_DEFAULT_DATA_DIR "data"
#endif

namespace maxdet {

Rational BoundExpression::squared() const {
    const BigInt c = coefficient.value();
    return Rational(c * c * BigInt(static_cast<unsigned long>(radicand)));
}

std::string BoundExpression::to_string() const {
    std::string out = coefficient.to_string();
    if (radicand != 1) out += "*sqrt(" + std::to_string(radicand) + ")";
    return out;
}

namespace {

struct Row {
    std::size_t n;
    const char* det;
    const char* bound_coefficient;  // nullptr for table rows
    std::uint64_t radicand;
    const char* fraction;
    const char* notes;
    std::int64_t excess;            // 0 = none
    const char* prior;              // nullptr = none
};

// Determinants and bounds in the mixed-base form they were published in.
constexpr Row kRows[] = {
    {22, "2^23*5^11", "2^21*3*5^10*7", 1, "0.95", "conjectured to equal md(22)", 0, "2^21*3^2*23^2*197^2 (90.1%)"},
    {23, "2^22*3*5^6*67*211", "2^22*3*5^6*675", 505, "0.931983", "", 0, "2^22*19*5741^2 (88%)"},
    {27, "2^26*6^11*518", "2^26*5*6^10*44", 237, "0.917665", "", 0, "2^27*11*90481^2 (88%)"},
    {29, "2^28*7^12*320", "2^28*7^12*49", 57, "0.865001", "", 0, "2^28*7^13*43 (81.4%)"},
    {31, "2^30*7^12*5324", "2^30*7^12*144", 1589, "0.927499", "also produced by the conference-matrix construction",
     0, "2^30*5^4*7^2*11^2*29^2*149^2 (87%)"},
    {33, "2^32*8^14*441", "2^32*8^14*64", 65, "0.854677", "", 0, "2^32*8^15*51 (79%)"},
    {34, "2^33*8^16*28", "2^33*8^16*33", 1, "0.848485", "", 0,
     "none published; tensoring n=17 and n=2 maximizers gives 2^33*8^16*25 (75.76%)"},
    {35, "2^34*9^12*23*5167", "2^34*8^15*98", 134, "0.840907", "", 0, nullptr},
    {39, "2^38*9^17*1241", "2^38*9^17*80", 357, "0.821009", "", 0,
     "printed as 2^28*9^17*1197 (79.2%); the 2^28 exponent looks inconsistent"},
    {45, "2^44*11^21*83", "2^44*11^22", 89, "0.799817", "", 0, "2^44*11^21*81 (78%)"},
    {47, "2^46*11^18*15^4*60", "2^46*11^20*19^2", 5665, "0.923897", "conference-matrix construction", 0,
     "2^46*11^21*1896 (76.8%)"},
    {53, "2^52*13^25*105", "2^52*13^26", 105, "0.788227", "", 0, "2^52*13^25*104 (78.1%)"},
    {63, "2^64*15^24*19^7", "2^64*15^28*12^3*2", 33, "0.889364", "conference-matrix construction", 0, nullptr},
    {69, "2^68*17^33*155", "2^68*17^34", 137, "0.778973", "", 0, "2^68*17^33*153 (76.9%)"},
    {73, "2^72*18^35*163", "2^72*18^36", 145, "0.752023",
     "lower-right 72x72 block is a Hadamard matrix of excess 580 (previous best 576)", 580,
     "2^72*18^35*162 (74.7%)"},
    {77, "2^76*19^37*177", "2^76*19^38", 153, "0.753137",
     "a different n=77 matrix yields a 76x76 Hadamard of excess 628", 0, "2^76*19^37*174 (74.04%)"},
    {79, "2^78*4*19^30*23^9", "2^78*4*19^36*225", 40145, "0.84924", "conference-matrix construction", 0, nullptr},
    {93, "2^92*23^45*231", "2^92*23^46", 185, "0.738411", "", 0, "2^92*23^45*230 (73.52%)"},
    {95, "2^96*23^36*27^11", "2^96*23^44*333", 69153, "0.810642", "conference-matrix construction", 0, nullptr},
    {67, "2^66*16^31*4765", nullptr, 1, "0.7677", "", 0, nullptr},
    {75, "2^74*18^35*6064", nullptr, 1, "0.7303", "", 0, nullptr},
    {83, "2^82*20^38*157788", nullptr, 1, "0.7322", "", 0, nullptr},
    {87, "2^86*21^41*8777", nullptr, 1, "0.7220", "", 0, nullptr},
    {91, "2^90*22^43*9826", nullptr, 1, "0.7203", "", 0, nullptr},
    {99, "2^98*24^47*12118", nullptr, 1, "0.7160", "", 0, nullptr},
};

std::vector<RecordClaim> build_registry() {
    std::vector<RecordClaim> out;
    for (const Row& r : kRows) {
        RecordClaim c;
        c.n = r.n;
        c.det = FactoredInteger::parse(r.det);
        if (r.bound_coefficient) c.bound = BoundExpression{FactoredInteger::parse(r.bound_coefficient), r.radicand};
        c.fraction_printed = r.fraction;
        c.source = r.bound_coefficient ? "listing" : "table";
        c.notes = r.notes;
        if (r.excess) c.excess = r.excess;
        if (r.prior) c.prior_record = r.prior;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), [](const RecordClaim& a, const RecordClaim& b) { return a.n < b.n; });
    return out;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

}  // namespace

const std::vector<RecordClaim>& registry() {
    static const std::vector<RecordClaim> claims = build_registry();
    return claims;
}

std::optional<RecordClaim> find_claim(std::size_t n) {
    for (const auto& c : registry())
        if (c.n == n) return c;
    return std::nullopt;
}

std::string registry_to_json() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : registry()) {
        nlohmann::ordered_json j;
        j["n"] = c.n;
        j["det"] = c.det.to_string();
        j["det_decimal"] = c.det.value().get_str();
        if (c.bound) {
            j["bound"] = {{"coefficient", c.bound->coefficient.to_string()}, {"radicand", c.bound->radicand}};
        } else {
            j["bound"] = nullptr;
        }
        j["fraction_printed"] = c.fraction_printed;
        j["source"] = c.source;
        j["notes"] = c.notes;
        j["excess"] = c.excess ? nlohmann::ordered_json(*c.excess) : nlohmann::ordered_json(nullptr);
        j["prior_record"] = c.prior_record ? nlohmann::ordered_json(*c.prior_record) : nlohmann::ordered_json(nullptr);
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<RecordClaim> registry_from_json(const std::string& json) {
    const auto arr = nlohmann::json::parse(json);
    if (!arr.is_array()) throw std::invalid_argument("claims JSON must be an array");
    std::vector<RecordClaim> out;
    for (const auto& j : arr) {
        RecordClaim c;
        c.n = j.at("n").get<std::size_t>();
        c.det = FactoredInteger::parse(j.at("det").get<std::string>());
        if (j.contains("det_decimal") && c.det.value().get_str() != j["det_decimal"].get<std::string>())
            throw std::invalid_argument("claims JSON: det and det_decimal disagree for n = " + std::to_string(c.n));
        if (j.contains("bound") && !j["bound"].is_null())
            c.bound = BoundExpression{FactoredInteger::parse(j["bound"].at("coefficient").get<std::string>()),
                                      j["bound"].at("radicand").get<std::uint64_t>()};
        c.fraction_printed = j.at("fraction_printed").get<std::string>();
        c.source = j.value("source", "");
        c.notes = j.value("notes", "");
        if (j.contains("excess") && !j["excess"].is_null()) c.excess = j["excess"].get<std::int64_t>();
        if (j.contains("prior_record") && !j["prior_record"].is_null())
            c.prior_record = j["prior_record"].get<std::string>();
        out.push_back(std::move(c));
    }
    return out;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["claimed_det"] = claimed_det.get_str();
    j["computed_det"] = computed_det.get_str();
    j["match"] = match;
    j["fraction_computed"] = format_fraction(fraction_computed);
    j["bound_sq"] = rational_string(bound_sq);
    if (hadamard_submatrix_excess) {
        const auto& e = *hadamard_submatrix_excess;
        j["hadamard_submatrix_excess"] = {
            {"hadamard", e.hadamard}, {"sum", e.sum}, {"excess", e.excess}, {"expected", e.expected}, {"matches", e.matches}};
    }
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

ExcessReport verify_excess_claim(const SignMatrix& m, std::int64_t expected_excess) {
    if (m.size() < 2) throw std::invalid_argument("verify_excess_claim: matrix must have order >= 2");
    const SignMatrix sub = delete_row_col(m, 0, 0);
    if (!is_hadamard(sub))
        throw std::domain_error("verify_excess_claim: the " + std::to_string(sub.size()) + "x" +
                                std::to_string(sub.size()) + " submatrix is not a Hadamard matrix");
    ExcessReport r;
    r.hadamard = true;
    r.sum = excess(sub);
    r.excess = r.sum < 0 ? -r.sum : r.sum;
    r.expected = expected_excess;
    r.matches = r.excess == expected_excess;
    return r;
}

VerificationReport verify_record(const SignMatrix& m, const RecordClaim& claim) {
    if (m.size() != claim.n)
        throw std::invalid_argument("verify_record: matrix has order " + std::to_string(m.size()) +
                                    " but the claim is for n = " + std::to_string(claim.n));
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.n = claim.n;
    r.claimed_det = claim.det.value();
    r.computed_det = determinant_exact(m);
    r.match = abs(r.computed_det) == abs(r.claimed_det);
    r.fraction_computed = fraction_of_bound(r.computed_det, claim.n);
    r.bound_sq = upper_bound_sq(claim.n).value_sq;
    if (claim.excess) {
        try {
            r.hadamard_submatrix_excess = verify_excess_claim(m, *claim.excess);
        } catch (const std::domain_error&) {
            const std::int64_t sum = excess(delete_row_col(m, 0, 0));
            r.hadamard_submatrix_excess = ExcessReport{false, sum, sum < 0 ? -sum : sum, *claim.excess, false};
        }
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("MAXDET_DATA_DIR"); env && *env) return env;
    return MAXDET_DEFAULT_DATA_DIR;
}

std::filesystem::path corpus_path(std::size_t n) {
    const std::string name = (n < 10 ? "n0" : "n") + std::to_string(n) + ".txt";
    return data_dir() / "records" / name;
}

std::vector<std::size_t> corpus_dimensions() {
    std::vector<std::size_t> out;
    for (const auto& c : registry())
        if (std::filesystem::exists(corpus_path(c.n))) out.push_back(c.n);
    return out;
}

SignMatrix load_corpus_matrix(std::size_t n) {
    const auto path = corpus_path(n);
    if (!std::filesystem::exists(path)) throw std::runtime_error("no corpus matrix at " + path.string());
    return read_matrix_file(path.string());
}

}  // namespace maxdet
