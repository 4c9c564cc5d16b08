#include "fpnfr/decimal.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace fpnfr {

namespace {

using Int128 = __int128;

Int128 abs128(Int128 v) { return v < 0 ? -v : v; }

Int128 gcd128(Int128 a, Int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        Int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr Int128 kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr Int128 kInt64Min = std::numeric_limits<std::int64_t>::min();

// Reduces num/den, normalizes the sign onto the numerator, and checks the
// result still fits an int64 fraction.
Decimal make_reduced(Int128 num, Int128 den) {
    if (den == 0) {
        throw std::domain_error("decimal: division by zero");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        return Decimal(0);
    }
    const Int128 g = gcd128(num, den);
    num /= g;
    den /= g;
    if (num > kInt64Max || num < kInt64Min || den > kInt64Max) {
        throw std::overflow_error("decimal: value does not fit 64-bit fraction");
    }
    return Decimal::ratio(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::string digits128(Int128 value) {
    // value >= 0
    if (value == 0) {
        return "0";
    }
    std::string out;
    while (value > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

Decimal Decimal::ratio(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw std::domain_error("decimal: division by zero");
    }
    if (num == 0) {
        return Decimal(0);
    }
    // Signed-min denominators cannot be negated in int64; route through 128-bit.
    Int128 n = num;
    Int128 d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const Int128 g = gcd128(n, d);
    n /= g;
    d /= g;
    if (n > kInt64Max || n < kInt64Min || d > kInt64Max) {
        throw std::overflow_error("decimal: value does not fit 64-bit fraction");
    }
    return Decimal(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), 0);
}

std::optional<Decimal> Decimal::parse(std::string_view text) {
    if (text.empty()) {
        return std::nullopt;
    }
    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    Int128 mantissa = 0;
    int int_digits = 0;
    int frac_digits = 0;
    int total_digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        if (++total_digits > 37) {
            return std::nullopt;
        }
        mantissa = mantissa * 10 + (text[pos] - '0');
        ++int_digits;
        ++pos;
    }
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (++total_digits > 37) {
                return std::nullopt;
            }
            mantissa = mantissa * 10 + (text[pos] - '0');
            ++frac_digits;
            ++pos;
        }
        if (frac_digits == 0) {
            return std::nullopt;  // "1." is not a decimal literal
        }
    }
    if (pos != text.size() || int_digits == 0) {
        return std::nullopt;
    }
    Int128 den = 1;
    for (int i = 0; i < frac_digits; ++i) {
        den *= 10;
    }
    try {
        return make_reduced(negative ? -mantissa : mantissa, den);
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
}

Decimal Decimal::from_double(double value) {
    if (!std::isfinite(value)) {
        throw std::domain_error("decimal: non-finite value");
    }
    std::array<char, 512> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed);
    if (result.ec != std::errc{}) {
        throw std::overflow_error("decimal: value out of range");
    }
    const auto parsed = parse(std::string_view(buf.data(), result.ptr - buf.data()));
    if (!parsed) {
        throw std::overflow_error("decimal: value out of range");
    }
    return *parsed;
}

double Decimal::to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Decimal::to_string() const {
    Int128 den = den_;
    int twos = 0;
    int fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }
    const int scale = std::max(twos, fives);
    Int128 scaled = abs128(Int128(num_));
    for (int i = 0; i < scale - twos; ++i) {
        scaled *= 2;
    }
    for (int i = 0; i < scale - fives; ++i) {
        scaled *= 5;
    }
    std::string digits = digits128(scaled);
    std::string out;
    if (num_ < 0) {
        out.push_back('-');
    }
    if (scale == 0) {
        out += digits;
        return out;
    }
    if (static_cast<int>(digits.size()) <= scale) {
        digits.insert(digits.begin(), scale + 1 - digits.size(), '0');
    }
    const std::size_t point = digits.size() - static_cast<std::size_t>(scale);
    std::string frac = digits.substr(point);
    while (!frac.empty() && frac.back() == '0') {
        frac.pop_back();
    }
    out += digits.substr(0, point);
    if (!frac.empty()) {
        out += '.';
        out += frac;
    }
    return out;
}

Decimal Decimal::operator-() const {
    return make_reduced(-Int128(num_), den_);
}

Decimal& Decimal::operator+=(const Decimal& rhs) {
    *this = make_reduced(Int128(num_) * rhs.den_ + Int128(rhs.num_) * den_, Int128(den_) * rhs.den_);
    return *this;
}

Decimal& Decimal::operator-=(const Decimal& rhs) {
    *this = make_reduced(Int128(num_) * rhs.den_ - Int128(rhs.num_) * den_, Int128(den_) * rhs.den_);
    return *this;
}

Decimal& Decimal::operator*=(const Decimal& rhs) {
    *this = make_reduced(Int128(num_) * rhs.num_, Int128(den_) * rhs.den_);
    return *this;
}

Decimal& Decimal::operator/=(const Decimal& rhs) {
    if (rhs.num_ == 0) {
        throw std::domain_error("decimal: division by zero");
    }
    *this = make_reduced(Int128(num_) * rhs.den_, Int128(den_) * rhs.num_);
    return *this;
}

std::strong_ordering operator<=>(const Decimal& lhs, const Decimal& rhs) {
    const Int128 a = Int128(lhs.num_) * rhs.den_;
    const Int128 b = Int128(rhs.num_) * lhs.den_;
    if (a < b) {
        return std::strong_ordering::less;
    }
    if (a > b) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Decimal& value) {
    return os << value.to_string();
}

}  // namespace fpnfr
