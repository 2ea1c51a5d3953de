#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbp {

// Unbounded integer used for all assignment/partition counts. Signed values
// appear only inside inclusion-exclusion partial sums; every public counting
// operation returns a non-negative result.
using BigCount = boost::multiprecision::cpp_int;

// Exact probability as a ratio of BigCounts, always canonical (lowest terms,
// positive denominator).
using ExactRational = boost::multiprecision::cpp_rational;

// Thrown when a scan or enumeration exceeds its configured resource cap.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// base^exp computed exactly by square-and-multiply. big_pow(x, 0) == 1 for
// every x, including 0.
BigCount big_pow(const BigCount& base, unsigned long long exp);

// Non-negative real stored as mantissa in [1,2) (or exactly 0) times
// 2^exponent. Overflow-immune across the exponent ranges this project
// produces; the op counter carries a forward relative-error bound of
// op_count() * kUnitRoundoff.
//
// Addition of operands whose exponents differ by more than the mantissa
// width returns the larger operand unchanged (sticky add); term magnitudes
// in the sweeps span thousands of binary orders, so this case is routine.
class ScaledFloat {
public:
    static constexpr double kUnitRoundoff = 0x1p-53;

    ScaledFloat() = default;  // zero

    // Exact for v < 2^53; one rounding otherwise.
    static ScaledFloat from_integer(std::uint64_t v);

    bool is_zero() const { return mantissa_ == 0.0; }
    double mantissa() const { return mantissa_; }
    std::int64_t exponent() const { return exponent_; }
    std::uint64_t op_count() const { return ops_; }
    double relative_error_bound() const { return static_cast<double>(ops_) * kUnitRoundoff; }

    // mantissa * 2^exponent as a plain double; +inf/0 outside double range.
    double to_double() const;
    double log2_value() const;  // -inf for zero

    // Scientific-notation decimal rendering, e.g. "4.92702765676015e-01".
    // Good to ~15 significant digits for moderate exponents, slightly fewer
    // when |exponent| is huge (the base-10 conversion is done in doubles).
    std::string to_decimal_string(int significant_digits = 15) const;

    // Value ordering; the op counters do not participate.
    std::strong_ordering compare(const ScaledFloat& other) const;

    friend ScaledFloat operator*(const ScaledFloat& a, const ScaledFloat& b);
    friend ScaledFloat operator+(const ScaledFloat& a, const ScaledFloat& b);
    friend ScaledFloat operator/(const ScaledFloat& a, const ScaledFloat& b);
    friend ScaledFloat to_scaled(const BigCount& x);

private:
    static ScaledFloat normalized(double mantissa, std::int64_t exponent, std::uint64_t ops);

    double mantissa_ = 0.0;
    std::int64_t exponent_ = 0;
    std::uint64_t ops_ = 0;
};

// x >= 0 required. Relative error <= kUnitRoundoff; for x > 0 the exponent
// equals bit-length(x) - 1 unless rounding carries the mantissa up to 2.0.
ScaledFloat to_scaled(const BigCount& x);
ScaledFloat to_scaled(const ExactRational& q);

// Exact three-way comparison (cross-multiplication underneath, no rounding).
std::strong_ordering rational_cmp(const ExactRational& p, const ExactRational& q);

// Decimal-string round trips for the machine channel.
BigCount parse_bigcount(std::string_view text);
std::string to_decimal_string(const BigCount& x);

// Accepts "999/1000" or a plain decimal like "0.999" (exact: 999/1000).
// Rejects anything else; never goes through machine floats.
ExactRational parse_rational(std::string_view text);

std::string to_fraction_string(const ExactRational& q);  // "numerator/denominator"

// Fixed-point rendering of a non-negative rational with `digits` fractional
// digits, round-half-even.
std::string to_fixed_decimal_string(const ExactRational& q, int digits);

}  // namespace sbp
