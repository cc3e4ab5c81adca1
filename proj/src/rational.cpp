#include "evomine/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include "evomine/errors.hpp"

namespace evomine {

namespace {

long long checked_pow10(int exp) {
    // int64 holds 10^18
    if (exp < 0 || exp > 18)
        throw ConfigError("decimal literal needs more than 18 fractional digits");
    long long v = 1;
    for (int i = 0; i < exp; ++i) v *= 10;
    return v;
}

long long parse_int(std::string_view s, std::string_view full) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ConfigError("not a number: '" + std::string(full) + "'");
    return v;
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ConfigError("empty number");

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        long long num = parse_int(s.substr(0, slash), text);
        long long den = parse_int(s.substr(slash + 1), text);
        if (den == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    int exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = s.substr(e + 1);
        if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
        exponent = static_cast<int>(parse_int(exp_text, text));
        if (exponent < -18 || exponent > 18)
            throw ConfigError("exponent out of range in '" + std::string(text) + "'");
        s = s.substr(0, e);
    }

    std::string digits;
    int frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot) throw ConfigError("not a number: '" + std::string(text) + "'");
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            seen_digit = true;
            digits.push_back(c);
            if (seen_dot) ++frac_digits;
        } else {
            throw ConfigError("not a number: '" + std::string(text) + "'");
        }
    }
    if (!seen_digit) throw ConfigError("not a number: '" + std::string(text) + "'");
    if (digits.size() > 18) {
        // drop leading zeros before giving up
        auto nz = digits.find_first_not_of('0');
        digits = nz == std::string::npos ? "0" : digits.substr(nz);
        if (digits.size() > 18)
            throw ConfigError("number too large: '" + std::string(text) + "'");
    }

    long long mantissa = digits.empty() ? 0 : parse_int(digits, text);
    if (negative) mantissa = -mantissa;

    int net_exp = exponent - frac_digits;
    Rational r(mantissa);
    if (net_exp > 0)
        r *= Rational(checked_pow10(net_exp));
    else if (net_exp < 0)
        r /= Rational(checked_pow10(-net_exp));
    return r;
}

std::string rational_to_string(const Rational& r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) {
        s += '/';
        s += std::to_string(r.denominator());
    }
    return s;
}

double rational_to_double(const Rational& r) {
    return boost::rational_cast<double>(r);
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ConfigError("non-finite number");
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) throw ConfigError("unrepresentable number");
    return parse_rational(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
}

GrowthRate GrowthRate::ratio(const Rational& numer, const Rational& denom) {
    if (denom == Rational(0))
        return numer == Rational(0) ? undefined() : infinite();
    return finite(numer / denom);
}

const Rational& GrowthRate::value() const {
    if (kind_ != Kind::Finite) throw InternalError("growth rate has no finite value");
    return value_;
}

std::string GrowthRate::str() const {
    switch (kind_) {
    case Kind::Finite: return rational_to_string(value_);
    case Kind::Infinite: return "inf";
    default: return "undefined";
    }
}

double GrowthRate::to_double() const {
    switch (kind_) {
    case Kind::Finite: return rational_to_double(value_);
    case Kind::Infinite: return std::numeric_limits<double>::infinity();
    default: return std::numeric_limits<double>::quiet_NaN();
    }
}

bool GrowthRate::operator==(const GrowthRate& o) const {
    if (kind_ != o.kind_) return false;
    return kind_ != Kind::Finite || value_ == o.value_;
}

bool GrowthRate::less(const GrowthRate& o) const {
    if (is_undefined() || o.is_undefined())
        throw InternalError("undefined growth rate is unordered");
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return value_ < o.value_;
}

bool GrowthRate::exceeds(const Rational& threshold) const {
    if (is_undefined()) return false;
    return is_infinite() || value_ > threshold;
}

} // namespace evomine
