#include "fuzzyseg/degree.hpp"

#include "fuzzyseg/errors.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace fuzzyseg {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("degree arithmetic overflow: " + std::to_string(a) +
                                  " * " + std::to_string(b));
    return out;
}

std::int64_t parse_int(std::string_view s, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw input_error(std::string("malformed degree ") + what + ": '" + std::string(s) + "'");
    return value;
}

} // namespace

Degree Degree::from_ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0)
        throw input_error("degree denominator must be positive, got " + std::to_string(den));
    if (num < 0 || num > den)
        throw input_error("degree " + std::to_string(num) + "/" + std::to_string(den) +
                          " lies outside [0, 1]");
    const std::int64_t g = std::gcd(num, den);
    Degree d;
    d.num_ = num / g;
    d.den_ = den / g;
    return d;
}

Degree Degree::one() { return from_ratio(1, 1); }

std::strong_ordering Degree::operator<=>(const Degree& other) const {
    // 64-bit operands cannot overflow a 128-bit product.
    const __int128 lhs = static_cast<__int128>(num_) * other.den_;
    const __int128 rhs = static_cast<__int128>(other.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Degree::str() const {
    if (num_ == 0) return "0";
    if (num_ == den_) return "1";
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Degree Degree::parse(std::string_view text) {
    if (text.empty()) throw input_error("empty degree string");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const std::int64_t p = parse_int(text.substr(0, slash), "numerator");
        const std::int64_t q = parse_int(text.substr(slash + 1), "denominator");
        return from_ratio(p, q);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18)
            throw input_error("malformed decimal degree '" + std::string(text) + "'");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den = checked_mul(den, 10);
        const std::int64_t w = whole.empty() ? 0 : parse_int(whole, "integer part");
        const std::int64_t f = parse_int(frac, "fractional part");
        return from_ratio(checked_mul(w, den) + f, den);
    }
    const std::int64_t v = parse_int(text, "value");
    return from_ratio(v, 1);
}

Degree accumulate(AccumulatorKind kind, Degree a, Degree b) {
    switch (kind) {
    case AccumulatorKind::minimum:
        return a <= b ? a : b;
    case AccumulatorKind::product: {
        // Cross-reduce before multiplying to keep the factors small.
        const std::int64_t g1 = std::gcd(a.num(), b.den());
        const std::int64_t g2 = std::gcd(b.num(), a.den());
        return Degree::from_ratio(checked_mul(a.num() / g1, b.num() / g2),
                                  checked_mul(a.den() / g2, b.den() / g1));
    }
    }
    throw std::logic_error("unknown accumulator kind");
}

} // namespace fuzzyseg
