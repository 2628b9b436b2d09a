#pragma once

#include <span>
#include <vector>

#include "wpb/nome_series.hpp"

namespace wpb {

// Base q and nome for a family of shifted factorials.  The nome is w^nome_exp:
// nome_exp = 0 is the basic (p = 0) mode, 2 is nome p, 4 is nome p^2.
struct FactorialSpec {
    Rat q;
    int nome_exp = 0;

    FactorialSpec(Rat base, int nome = 0) : q(std::move(base)), nome_exp(nome) {
        if (q == 0 || q == 1 || q == -1) throw ConstraintViolation("base must avoid {0,1,-1}");
        if (nome_exp < 0 || nome_exp % 2 != 0)
            throw ConstraintViolation("nome exponent must be even and nonnegative");
    }

    bool basic() const { return nome_exp == 0; }

    // Base and nome both squared (the Thm 3e base change).
    FactorialSpec squared() const { return FactorialSpec(q * q, 2 * nome_exp); }
    // Base squared, nome kept.
    FactorialSpec base_squared() const { return FactorialSpec(q * q, nome_exp); }
    // Base raised to an integer power, nome kept.
    FactorialSpec base_pow(long i) const { return FactorialSpec(rat_pow(q, i), nome_exp); }
};

// theta(z; p) = prod_{j>=0} (1 - z p^j)(1 - p^{j+1}/z), truncated below w^order.
// In basic mode the product collapses to 1 - z and the result is exact.
NomeSeries theta(const Monomial& z, int nome_exp, int order);
NomeSeries theta(const Monomial& z, const FactorialSpec& spec, int order);

// (a; q, p)_n = prod_{j=0}^{n-1} theta(a q^j; p), n >= 0.
NomeSeries qfact(const Monomial& a, long n, const FactorialSpec& spec, int order);

// Same with the standard negative-index convention
// (a; q, p)_{-n} = 1 / (a q^{-n}; q, p)_n.
NomeSeries qfact_int(const Monomial& a, long n, const FactorialSpec& spec, int order);

NomeSeries qfact_multi(std::span<const Monomial> args, long n, const FactorialSpec& spec,
                       int order);
NomeSeries qfact_multi(std::initializer_list<Monomial> args, long n, const FactorialSpec& spec,
                       int order);

// theta(a q^{2k}; p) / theta(a; p).
NomeSeries theta_shift_quotient(const Monomial& a, long k, const FactorialSpec& spec, int order);

enum class ShiftDirection { Add, Subtract };

// (a;q,p)_{n+k} or (a;q,p)_{n-k} computed through the factorial shift
// rewritings rather than the direct product.
NomeSeries qfact_shift(const Monomial& a, long n, long k, const FactorialSpec& spec,
                       ShiftDirection dir, int order);

// Basic-mode factorial as an exact rational, for closed-form right sides.
Rat qfact_basic(const Rat& a, long n, const Rat& q);

}  // namespace wpb
