#pragma once

#include <string>

#include "wpb/rational.hpp"

namespace wpb {

// c * w^e with rational c.  Parameters of every identity live here: a plain
// rational is e = 0, p-dependent parameters such as d/p carry e = -2 and
// d*p^{1/2} carries e = 1 (p = w^2).
struct Monomial {
    Rat c{0};
    int e = 0;

    Monomial() = default;
    Monomial(Rat coeff, int wexp = 0) : c(std::move(coeff)), e(c == 0 ? 0 : wexp) {}
    Monomial(long coeff) : c(coeff) {}

    bool is_zero() const { return c == 0; }

    friend Monomial operator*(const Monomial& x, const Monomial& y) {
        return Monomial(x.c * y.c, x.e + y.e);
    }
    friend Monomial operator/(const Monomial& x, const Monomial& y) {
        if (y.c == 0) throw DivisionByZeroSeries("monomial division by zero");
        return Monomial(x.c / y.c, x.e - y.e);
    }
    Monomial operator-() const { return Monomial(-c, e); }

    friend bool operator==(const Monomial& x, const Monomial& y) {
        if (x.c != y.c) return false;
        return x.c == 0 || x.e == y.e;
    }
    friend bool operator!=(const Monomial& x, const Monomial& y) { return !(x == y); }

    Monomial pow(long n) const {
        if (n == 0) return Monomial(Rat(1));
        if (c == 0) {
            if (n < 0) throw DivisionByZeroSeries("0^negative");
            return Monomial(Rat(0));
        }
        return Monomial(rat_pow(c, n), static_cast<int>(e * n));
    }

    // Multiply by q^j, q a pure rational base.
    Monomial qshift(const Rat& q, long j) const { return Monomial(c * rat_pow(q, j), e); }

    std::string str() const {
        if (e == 0) return rat_str(c);
        return rat_str(c) + "*w^" + std::to_string(e);
    }
};

inline Monomial mono(long num, long den = 1, int wexp = 0) {
    return Monomial(Rat(num, den), wexp);
}

// Exact square root of a monomial with even w-exponent and square coefficient.
inline Monomial mono_sqrt(const Monomial& m) {
    if (m.e % 2 != 0) throw MissingRoot("odd w-exponent has no monomial square root");
    return Monomial(rat_sqrt(m.c), m.e / 2);
}

}  // namespace wpb
