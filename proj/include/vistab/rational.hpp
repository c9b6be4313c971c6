#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace vistab {

// All arithmetic in this library is exact. Integers and rationals are
// arbitrary precision; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, long long e) {
    if (e < 0)
        throw std::invalid_argument("int_pow: negative exponent");
    Int r = 1, b = base;
    while (e) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Canonical text form: "n" when the denominator is 1, otherwise "n/d".
inline std::string rat_to_string(const Rat& r) {
    return r.str();
}

inline Rat rat_from_string(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw std::invalid_argument("rat_from_string: cannot parse '" + s + "'");
    }
}

// Exact conversion; throws when r is not an integer.
inline Int rat_to_int(const Rat& r) {
    if (denominator(r) != 1)
        throw std::domain_error("rat_to_int: " + r.str() + " is not an integer");
    return numerator(r);
}

}  // namespace vistab
