#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace npg {

// All arithmetic in the combinatorial layers is exact: arbitrary-precision
// integers and rationals, no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Ceiling of a/b for machine integers, b > 0.
inline long long ceil_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// Floor of a/b for machine integers, b > 0.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Int rat_floor(const Rat& x) {
    Int num = numerator(x), den = denominator(x);
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

inline Int rat_ceil(const Rat& x) {
    Int num = numerator(x), den = denominator(x);
    Int q = num / den;
    if (num % den != 0 && num > 0) ++q;
    return q;
}

// Fractional part x - floor(x), in [0,1).
inline Rat rat_frac(const Rat& x) { return x - Rat(rat_floor(x)); }

// Canonical "num/den" rendering (cpp_rational keeps den > 0 and reduced).
inline std::string rat_string(const Rat& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace npg
