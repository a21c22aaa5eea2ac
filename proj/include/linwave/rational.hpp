#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace linwave {

// Arbitrary-precision rational; always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt rational_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rational_den(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Renders as "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& q) {
    if (rational_den(q) == 1) return rational_num(q).str();
    return rational_num(q).str() + "/" + rational_den(q).str();
}

/// Parses "p" or "p/q" (q > 0 after normalization; "1/0" is rejected).
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed rational: '" + text + "'");
    }
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace linwave
