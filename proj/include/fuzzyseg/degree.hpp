#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fuzzyseg {

/// An element of the linearly ordered measure set: an exact rational in
/// [0, 1], stored in lowest terms. Comparison is by rational value (exact,
/// via 128-bit cross multiplication); equality is structural, which
/// coincides with value equality because of the lowest-terms invariant.
class Degree {
public:
    constexpr Degree() = default; // zero

    static Degree from_ratio(std::int64_t num, std::int64_t den);
    static Degree zero() { return Degree{}; }
    static Degree one();

    /// Accepts "p/q", "0", "1", or a decimal like "0.75" (converted exactly).
    static Degree parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == den_; }

    std::strong_ordering operator<=>(const Degree& other) const;
    bool operator==(const Degree& other) const = default;

    /// "p/q" in lowest terms, or "0" / "1".
    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

enum class AccumulatorKind { product, minimum };

/// Monoid accumulation on degrees: neutral 1, absorbing 0, monotone.
/// Product multiplies exactly (overflow raises std::overflow_error after
/// cross reduction); minimum takes the smaller value.
Degree accumulate(AccumulatorKind kind, Degree a, Degree b);

} // namespace fuzzyseg
