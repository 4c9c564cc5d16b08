#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace fpnfr {

/// Exact rational number with decimal parsing and rendering.
///
/// All adjustment arithmetic (0.65 + 0.01*k, UFP*VAF, swings, deltas) must be
/// exact: table-driven results are compared with zero tolerance and reports
/// must never show binary-float artifacts like 0.6500000000000001. Inputs are
/// decimal literals, which keeps numerators and denominators small, so an
/// int64 fraction with 128-bit intermediates covers the whole domain.
///
/// Invariants: denominator > 0, gcd(|numerator|, denominator) == 1. Equal
/// values therefore have identical representations and operator== is
/// bit-for-bit.
class Decimal {
public:
    constexpr Decimal() : num_(0), den_(1) {}
    constexpr Decimal(std::int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit by design

    /// Exact fraction num/den. Throws std::domain_error when den == 0.
    static Decimal ratio(std::int64_t num, std::int64_t den);

    /// Parses a plain decimal literal: [+-]digits[.digits]. No exponent form.
    /// Returns nullopt for malformed text or values that do not fit.
    static std::optional<Decimal> parse(std::string_view text);

    /// Interprets a double as the shortest decimal literal that round-trips
    /// to the same value (i.e. what a person typed). Throws std::domain_error
    /// for non-finite input, std::overflow_error when out of range.
    static Decimal from_double(double value);

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const;

    /// Exact decimal text with no trailing zeros ("0.65", "1.7", "100").
    /// Falls back to "num/den" when the reduced denominator has a prime
    /// factor other than 2 or 5 (cannot happen for values built from decimal
    /// literals by +,-,*).
    std::string to_string() const;

    Decimal operator-() const;
    Decimal& operator+=(const Decimal& rhs);
    Decimal& operator-=(const Decimal& rhs);
    Decimal& operator*=(const Decimal& rhs);
    Decimal& operator/=(const Decimal& rhs);

    friend Decimal operator+(Decimal lhs, const Decimal& rhs) { return lhs += rhs; }
    friend Decimal operator-(Decimal lhs, const Decimal& rhs) { return lhs -= rhs; }
    friend Decimal operator*(Decimal lhs, const Decimal& rhs) { return lhs *= rhs; }
    friend Decimal operator/(Decimal lhs, const Decimal& rhs) { return lhs /= rhs; }

    friend bool operator==(const Decimal& lhs, const Decimal& rhs) = default;
    friend std::strong_ordering operator<=>(const Decimal& lhs, const Decimal& rhs);

private:
    Decimal(std::int64_t num, std::int64_t den, int) : num_(num), den_(den) {}

    std::int64_t num_;
    std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Decimal& value);

}  // namespace fpnfr
