#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace vulnet {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "3/7", or just "3" for integers
inline std::string fraction_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

} // namespace vulnet
