#include "maxdet/factored_integer.hpp"

#include <cctype>
#include <stdexcept>

namespace maxdet {

FactoredInteger::FactoredInteger(int sign, std::vector<Factor> factors) : sign_(sign), factors_(std::move(factors)) {
    if (sign < -1 || sign > 1) throw std::invalid_argument("FactoredInteger: sign must be -1, 0 or +1");
    for (const auto& f : factors_) {
        if (f.base < 2) throw std::invalid_argument("FactoredInteger: base must be >= 2");
        if (f.exponent < 1) throw std::invalid_argument("FactoredInteger: exponent must be >= 1");
    }
    if (sign_ == 0) factors_.clear();
}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_space() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= s_.size();
    }
    bool accept(std::string_view tok) {
        skip_space();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    std::uint64_t number() {
        skip_space();
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            const std::uint64_t d = static_cast<std::uint64_t>(s_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10) fail("number too large");
            v = v * 10 + d;
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("FactoredInteger::parse: " + why + " at offset " + std::to_string(pos_) + " in \"" +
                                    std::string(s_) + "\"");
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

FactoredInteger FactoredInteger::parse(std::string_view text) {
    Cursor cur(text);
    int sign = 1;
    if (cur.accept("-")) sign = -1;
    std::vector<Factor> factors;
    bool first = true;
    while (true) {
        if (!first && !(cur.accept("*") || cur.accept("x") || cur.accept("\xC3\x97") /* U+00D7 */)) break;
        first = false;
        const std::uint64_t base = cur.number();
        unsigned exponent = 1;
        if (cur.accept("^")) {
            const bool braced = cur.accept("{");
            exponent = static_cast<unsigned>(cur.number());
            if (braced && !cur.accept("}")) cur.fail("unbalanced brace");
        }
        if (base == 0) {
            if (factors.empty() && cur.done()) return FactoredInteger(0, {});
            cur.fail("zero factor");
        }
        if (base == 1) continue;
        if (exponent == 0) continue;
        factors.push_back({base, exponent});
    }
    if (!cur.done()) cur.fail("trailing characters");
    return FactoredInteger(sign, std::move(factors));
}

BigInt FactoredInteger::value() const {
    if (sign_ == 0) return 0;
    BigInt v = 1;
    for (const auto& f : factors_) {
        BigInt p;
        BigInt base;
        mpz_set_ui(base.get_mpz_t(), f.base);
        mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), f.exponent);
        v *= p;
    }
    return sign_ < 0 ? BigInt(-v) : v;
}

std::string FactoredInteger::to_string() const {
    if (sign_ == 0) return "0";
    std::string out = sign_ < 0 ? "-" : "";
    if (factors_.empty()) return out + "1";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += '*';
        out += std::to_string(factors_[i].base);
        if (factors_[i].exponent != 1) out += '^' + std::to_string(factors_[i].exponent);
    }
    return out;
}

}  // namespace maxdet
