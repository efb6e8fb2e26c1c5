#include "mcrit/rational.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mcrit {

namespace {

using wide = __int128;

std::int64_t narrow(wide v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("rational arithmetic overflow");
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational Rational::reduced(wide num, wide den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    wide a = num < 0 ? -num : num;
    wide b = den;
    while (b != 0) {
        wide t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        num /= a;
        den /= a;
    }
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

wide parse_unsigned(std::string_view s, std::string_view whole) {
    wide v = 0;
    for (char c : s) {
        v = v * 10 + (c - '0');
        if (v > std::numeric_limits<std::int64_t>::max())
            throw std::invalid_argument("number out of range: " + std::string(whole));
    }
    return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = reduced(num, den);
}

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    auto fail = [&]() -> Rational { throw std::invalid_argument("not a number: '" + std::string(whole) + "'"); };
    if (text.empty()) return fail();

    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }

    wide num = 0;
    wide den = 1;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto p = text.substr(0, slash);
        auto q = text.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) return fail();
        num = parse_unsigned(p, whole);
        den = parse_unsigned(q, whole);
        if (den == 0) return fail();
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto ip = text.substr(0, dot);
        auto fp = text.substr(dot + 1);
        if (ip.empty() && fp.empty()) return fail();
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) return fail();
        // strip trailing zeros so that "1.50000" does not blow the denominator
        while (!fp.empty() && fp.back() == '0') fp.remove_suffix(1);
        // 37 digits still fit in 128 bits; the reduced value must then fit in 64
        if (ip.size() + fp.size() > 37) throw std::invalid_argument("too many digits: " + std::string(whole));
        for (char c : ip) num = num * 10 + (c - '0');
        for (char c : fp) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        try {
            return reduced(negative ? -num : num, den);
        } catch (const std::overflow_error&) {
            throw std::invalid_argument("number out of range: " + std::string(whole));
        }
    } else {
        if (!all_digits(text)) return fail();
        num = parse_unsigned(text, whole);
    }
    return reduced(negative ? -num : num, den);
}

Rational Rational::snap(double value, int bits) {
    if (!std::isfinite(value)) throw std::invalid_argument("cannot snap a non-finite value");
    const double scale = std::ldexp(1.0, bits);
    const double scaled = value * scale;
    if (std::fabs(scaled) >= 9.0e18) throw std::overflow_error("value too large to snap");
    return reduced(static_cast<wide>(std::llround(scaled)), static_cast<wide>(1) << bits);
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);

    std::int64_t d = den_;
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);

    std::string out;
    wide n = num_;
    if (n < 0) {
        out.push_back('-');
        n = -n;
    }
    out += std::to_string(static_cast<std::int64_t>(n / den_));
    out.push_back('.');
    wide rem = n % den_;
    while (rem != 0) {
        rem *= 10;
        out.push_back(static_cast<char>('0' + static_cast<int>(rem / den_)));
        rem %= den_;
    }
    return out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const wide lhs = static_cast<wide>(a.num_) * b.den_;
    const wide rhs = static_cast<wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::reduced(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                   static_cast<wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::reduced(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-static_cast<wide>(num_));
    r.den_ = den_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace mcrit
