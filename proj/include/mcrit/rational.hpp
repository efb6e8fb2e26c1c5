#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mcrit {

/// Exact rational number p/q with q > 0, always kept in lowest terms.
/// Arithmetic that would overflow 64 bits throws std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    /// Accepts integers ("-3"), finite decimals ("0.125") and fractions ("7/3").
    /// Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    /// Nearest rational with denominator 2^bits (ties away from zero).
    static Rational snap(double value, int bits = 32);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Shortest exact decimal when the denominator is of the form 2^a 5^b,
    /// otherwise "p/q".
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    Rational operator-() const;

private:
    static Rational reduced(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace mcrit
