#pragma once
/*
================================================================================
 rational.hpp — exact rational scalar used by the series expansion
--------------------------------------------------------------------------------
 Thin layer over boost::multiprecision::cpp_rational: parsing from integer,
 fraction ("p/q") or finite-decimal ("1.25") strings, and printing back as a
 normalized fraction. The expansion keeps every coefficient exact so the
 low-order values can be compared bit-for-bit against known tables.
================================================================================
*/

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace helix {

using Rational = boost::multiprecision::cpp_rational;
using BigInt   = boost::multiprecision::cpp_int;

// Parse "3", "-4/9" or "0.125" into an exact rational.
inline Rational rational_from_string(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("rational_from_string: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("rational_from_string: zero denominator");
        return Rational(num, den);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos)
        return Rational(BigInt(text));
    // finite decimal: digits after the dot scale the denominator
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t places = text.size() - dot - 1;
    if (places == 0)
        return Rational(BigInt(digits));
    BigInt den = 1;
    for (std::size_t i = 0; i < places; ++i) den *= 10;
    return Rational(BigInt(digits), den);
}

inline std::string to_fraction_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace helix
