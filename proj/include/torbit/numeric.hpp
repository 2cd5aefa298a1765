#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace torbit {

// Arbitrary-precision scalars. Every arithmetic path in the library is exact;
// there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

inline int sign(const Int& x) { return x.sign(); }

/// Renders a rational as "p" or "p/q" with q > 1.
inline std::string rat_to_string(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

/// Checked narrowing for JSON output; all desk-scale data fits comfortably.
inline long long to_int64(const Int& x) {
    if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max())
        throw std::overflow_error("integer too large for JSON output: " + x.str());
    return x.convert_to<long long>();
}

/// Parses "p" or "p/q" (whitespace-free) into an exact rational.
inline Rat rat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        const Int num(text.substr(0, slash));
        const Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    }
}

}  // namespace torbit
