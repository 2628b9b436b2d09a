#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "wpb/errors.hpp"

namespace wpb {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar; always reduced, denominator positive, zero is 0/1.
using Rat = boost::multiprecision::cpp_rational;

inline Rat rat(long num, long den = 1) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw DivisionByZeroSeries("0^negative");
        return Rat(0);
    }
    Rat b = base;
    long n = e;
    if (n < 0) {
        b = Rat(1) / b;
        n = -n;
    }
    Rat acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Exact square root of a perfect-square rational; throws MissingRoot otherwise.
inline Rat rat_sqrt(const Rat& x) {
    if (x < 0) throw MissingRoot("negative value has no rational square root");
    Int n = boost::multiprecision::numerator(x);
    Int d = boost::multiprecision::denominator(x);
    Int rn = boost::multiprecision::sqrt(n);
    Int rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d)
        throw MissingRoot("value is not a perfect rational square");
    return Rat(rn, rd);
}

inline std::string rat_str(const Rat& x) {
    Int n = boost::multiprecision::numerator(x);
    Int d = boost::multiprecision::denominator(x);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

}  // namespace wpb
