#ifndef EVOMINE_RATIONAL_HPP
#define EVOMINE_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace evomine {

// Frequencies, thresholds and growth rates are kept as exact rationals from
// input parsing to report output. Strict comparisons (freq > alpha, GR > beta)
// and raw growth-rate equality tests would not survive floating point.
using Rational = boost::rational<long long>;

// Parses "0.3", "-2", "1e-2", "7/20" into an exact rational.
// Throws ConfigError on malformed input or overflow.
Rational parse_rational(std::string_view text);

// "3/10" for proper fractions, "3" when the denominator is 1.
std::string rational_to_string(const Rational& r);

double rational_to_double(const Rational& r);

// Exact rational for the shortest decimal string that round-trips to `x`,
// so a Python-side 0.3 means 3/10 rather than its binary expansion.
Rational rational_from_double(double x);

// Extended nonnegative growth rate: a finite rational, +infinity (frequency
// appeared from zero) or undefined (zero over zero, excluded from every
// detector).
class GrowthRate {
public:
    enum class Kind { Finite, Infinite, Undefined };

    static GrowthRate finite(const Rational& v) { return GrowthRate(Kind::Finite, v); }
    static GrowthRate infinite() { return GrowthRate(Kind::Infinite, Rational(0)); }
    static GrowthRate undefined() { return GrowthRate(Kind::Undefined, Rational(0)); }

    // numer/denom with the zero cases totalized as above.
    static GrowthRate ratio(const Rational& numer, const Rational& denom);

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_undefined() const { return kind_ == Kind::Undefined; }

    // Finite value; throws InternalError otherwise.
    const Rational& value() const;

    // "9", "9/2" or "inf". Undefined serializes as "undefined" (never reported).
    std::string str() const;
    double to_double() const; // +inf / NaN for the extended kinds

    bool operator==(const GrowthRate& o) const;

    // Total order over defined values: finite by value, infinity above all.
    // Comparing an undefined rate throws InternalError.
    bool less(const GrowthRate& o) const;
    bool greater(const GrowthRate& o) const { return o.less(*this); }

    // gr > threshold, infinity exceeding every finite threshold.
    bool exceeds(const Rational& threshold) const;

private:
    GrowthRate(Kind k, const Rational& v) : kind_(k), value_(v) {}

    Kind kind_;
    Rational value_;
};

} // namespace evomine

#endif
