#include "sbp/exact_num.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace sbp {

BigCount big_pow(const BigCount& base, unsigned long long exp) {
    BigCount result = 1;
    BigCount square = base;
    while (exp != 0) {
        if (exp & 1ULL) {
            result *= square;
        }
        exp >>= 1ULL;
        if (exp != 0) {
            square *= square;
        }
    }
    return result;
}

ScaledFloat ScaledFloat::normalized(double mantissa, std::int64_t exponent, std::uint64_t ops) {
    ScaledFloat out;
    if (mantissa == 0.0) {
        return out;
    }
    assert(mantissa > 0.0 && std::isfinite(mantissa));
    int shift = 0;
    double frac = std::frexp(mantissa, &shift);  // frac in [0.5, 1)
    out.mantissa_ = frac * 2.0;
    out.exponent_ = exponent + shift - 1;
    out.ops_ = ops;
    return out;
}

ScaledFloat ScaledFloat::from_integer(std::uint64_t v) {
    if (v == 0) {
        return {};
    }
    std::uint64_t ops = (v >> 53) != 0 ? 1 : 0;
    return normalized(static_cast<double>(v), 0, ops);
}

double ScaledFloat::to_double() const {
    if (is_zero()) {
        return 0.0;
    }
    if (exponent_ > 1030) {
        return std::numeric_limits<double>::infinity();
    }
    if (exponent_ < -1080) {
        return 0.0;
    }
    return std::ldexp(mantissa_, static_cast<int>(exponent_));
}

double ScaledFloat::log2_value() const {
    if (is_zero()) {
        return -std::numeric_limits<double>::infinity();
    }
    return static_cast<double>(exponent_) + std::log2(mantissa_);
}

std::string ScaledFloat::to_decimal_string(int significant_digits) const {
    significant_digits = std::clamp(significant_digits, 1, 17);
    if (is_zero()) {
        return "0";
    }
    // value = 10^t with t = e*log10(2) + log10(mantissa); split t into the
    // decimal exponent and a leading digit string in [1, 10).
    const double log10_2 = 0.30102999566398119521;
    double t = static_cast<double>(exponent_) * log10_2 + std::log10(mantissa_);
    double ipart = std::floor(t);
    double lead = std::pow(10.0, t - ipart);
    // pow can land a hair outside [1, 10)
    if (lead >= 10.0) {
        lead /= 10.0;
        ipart += 1.0;
    }
    if (lead < 1.0) {
        lead *= 10.0;
        ipart -= 1.0;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", significant_digits - 1, lead);
    // rounding in snprintf may push "9.99..9" to "10.00..0"
    if (buf[0] == '1' && buf[1] == '0') {
        ipart += 1.0;
        std::snprintf(buf, sizeof(buf), "%.*f", significant_digits - 1, 1.0);
    }
    char out[96];
    std::snprintf(out, sizeof(out), "%se%+03lld", buf, static_cast<long long>(ipart));
    return out;
}

std::strong_ordering ScaledFloat::compare(const ScaledFloat& other) const {
    if (is_zero() && other.is_zero()) {
        return std::strong_ordering::equal;
    }
    if (is_zero()) {
        return std::strong_ordering::less;
    }
    if (other.is_zero()) {
        return std::strong_ordering::greater;
    }
    if (exponent_ != other.exponent_) {
        return exponent_ < other.exponent_ ? std::strong_ordering::less
                                           : std::strong_ordering::greater;
    }
    if (mantissa_ < other.mantissa_) {
        return std::strong_ordering::less;
    }
    if (mantissa_ > other.mantissa_) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

ScaledFloat operator*(const ScaledFloat& a, const ScaledFloat& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    return ScaledFloat::normalized(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_,
                                   a.ops_ + b.ops_ + 1);
}

ScaledFloat operator+(const ScaledFloat& a, const ScaledFloat& b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    const ScaledFloat& hi = a.exponent_ >= b.exponent_ ? a : b;
    const ScaledFloat& lo = a.exponent_ >= b.exponent_ ? b : a;
    std::int64_t gap = hi.exponent_ - lo.exponent_;
    std::uint64_t ops = std::max(a.ops_, b.ops_) + 1;
    if (gap > 53) {  // sticky: the smaller operand is below one ulp
        ScaledFloat out = hi;
        out.ops_ = ops;
        return out;
    }
    double sum = hi.mantissa_ + std::ldexp(lo.mantissa_, -static_cast<int>(gap));
    return ScaledFloat::normalized(sum, hi.exponent_, ops);
}

ScaledFloat operator/(const ScaledFloat& a, const ScaledFloat& b) {
    if (b.is_zero()) {
        throw std::domain_error("ScaledFloat: division by zero");
    }
    if (a.is_zero()) {
        return {};
    }
    return ScaledFloat::normalized(a.mantissa_ / b.mantissa_, a.exponent_ - b.exponent_,
                                   a.ops_ + b.ops_ + 1);
}

ScaledFloat to_scaled(const BigCount& x) {
    if (x < 0) {
        throw std::invalid_argument("to_scaled: negative input");
    }
    if (x == 0) {
        return {};
    }
    std::uint64_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 53) {
        return ScaledFloat::from_integer(x.convert_to<std::uint64_t>());
    }
    // Keep 54 bits and round-half-up the last one: error <= half an ulp of a
    // 53-bit mantissa, i.e. <= kUnitRoundoff relative.
    BigCount top = x >> (bits - 54);
    std::uint64_t hi54 = top.convert_to<std::uint64_t>();
    std::uint64_t hi = (hi54 + 1) >> 1;  // in [2^52, 2^53], exact as double
    return ScaledFloat::normalized(static_cast<double>(hi),
                                   static_cast<std::int64_t>(bits) - 53, 1);
}

ScaledFloat to_scaled(const ExactRational& q) {
    return to_scaled(BigCount(boost::multiprecision::numerator(q))) /
           to_scaled(BigCount(boost::multiprecision::denominator(q)));
}

std::strong_ordering rational_cmp(const ExactRational& p, const ExactRational& q) {
    int c = p.compare(q);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

BigCount parse_bigcount(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("parse_bigcount: empty string");
    }
    std::size_t i = text[0] == '-' ? 1 : 0;
    if (i == text.size()) {
        throw std::invalid_argument("parse_bigcount: no digits");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("parse_bigcount: non-digit character");
        }
    }
    return BigCount(std::string(text));
}

std::string to_decimal_string(const BigCount& x) {
    return x.str();
}

ExactRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigCount num = parse_bigcount(text.substr(0, slash));
        BigCount den = parse_bigcount(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("parse_rational: zero denominator");
        }
        return ExactRational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return ExactRational(parse_bigcount(text));
    }
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) {
        throw std::invalid_argument("parse_rational: trailing dot");
    }
    bool negative = !whole.empty() && whole[0] == '-';
    BigCount whole_part = whole.empty() || (negative && whole.size() == 1)
                              ? BigCount(0)
                              : parse_bigcount(whole);
    BigCount frac_part = parse_bigcount(frac);
    if (frac_part < 0) {
        throw std::invalid_argument("parse_rational: malformed fraction digits");
    }
    BigCount scale = big_pow(10, frac.size());
    BigCount numerator = boost::multiprecision::abs(whole_part) * scale + frac_part;
    if (negative) {
        numerator = -numerator;
    }
    return ExactRational(numerator, scale);
}

std::string to_fraction_string(const ExactRational& q) {
    return boost::multiprecision::numerator(q).str() + "/" +
           boost::multiprecision::denominator(q).str();
}

std::string to_fixed_decimal_string(const ExactRational& q, int digits) {
    if (q < 0) {
        throw std::invalid_argument("to_fixed_decimal_string: negative value");
    }
    if (digits < 0) {
        digits = 0;
    }
    BigCount num = boost::multiprecision::numerator(q);
    BigCount den = boost::multiprecision::denominator(q);
    BigCount scaled = num * big_pow(10, digits);
    BigCount quot = scaled / den;
    BigCount rem = scaled % den;
    BigCount twice = rem * 2;
    if (twice > den || (twice == den && (quot & 1) != 0)) {
        ++quot;
    }
    std::string s = quot.str();
    if (digits == 0) {
        return s;
    }
    if (s.size() <= static_cast<std::size_t>(digits)) {
        s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return s;
}

}  // namespace sbp
