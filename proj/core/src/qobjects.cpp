#include "wpb/qobjects.hpp"

#include <algorithm>

namespace wpb {

NomeSeries theta(const Monomial& z, int nome_exp, int order) {
    if (z.is_zero()) throw ConstraintViolation("theta argument must be nonzero");
    if (nome_exp == 0) {
        return NomeSeries::from_monomial(Monomial(Rat(1), 0)) - NomeSeries::from_monomial(z);
    }
    const int m = nome_exp;
    const int e = z.e;
    // Total negative valuation contributed by factors whose non-unit term has
    // a negative exponent; the scan threshold is widened by |V| so the omitted
    // tail cannot disturb anything below w^order.
    long V = 0;
    for (long j = 0; e + m * j < 0; ++j) V += e + m * j;
    for (long j = 0; m * (j + 1) - e < 0; ++j) V += m * (j + 1) - e;
    const long threshold = order - V;

    // Factors are exact binomials; the product stays exact and is truncated
    // once at the end, so negative-valuation factors cost no precision.
    NomeSeries acc = NomeSeries::one();
    const NomeSeries unit = NomeSeries::one();
    for (long j = 0; e + m * j < threshold; ++j) {
        NomeSeries factor =
            unit - NomeSeries::from_monomial(Monomial(z.c, static_cast<int>(e + m * j)));
        acc = acc * factor;
        if (acc.is_zero()) return NomeSeries::zero(order);
    }
    const Rat zinv = Rat(1) / z.c;
    for (long j = 0; m * (j + 1) - e < threshold; ++j) {
        NomeSeries factor =
            unit - NomeSeries::from_monomial(Monomial(zinv, static_cast<int>(m * (j + 1) - e)));
        acc = acc * factor;
        if (acc.is_zero()) return NomeSeries::zero(order);
    }
    return acc.truncated(order);
}

NomeSeries theta(const Monomial& z, const FactorialSpec& spec, int order) {
    return theta(z, spec.nome_exp, order);
}

NomeSeries qfact(const Monomial& a, long n, const FactorialSpec& spec, int order) {
    if (n < 0) throw IndexRangeError("qfact needs n >= 0");
    NomeSeries acc = NomeSeries::one();
    Monomial arg = a;
    for (long j = 0; j < n; ++j) {
        acc = acc * theta(arg, spec.nome_exp, order);
        if (acc.is_zero()) break;
        arg = arg.qshift(spec.q, 1);
    }
    return acc;
}

NomeSeries qfact_int(const Monomial& a, long n, const FactorialSpec& spec, int order) {
    if (n >= 0) return qfact(a, n, spec, order);
    NomeSeries denom = qfact(a.qshift(spec.q, n), -n, spec, order);
    if (denom.is_zero()) throw DivisionByZeroSeries("negative-index factorial pole");
    return denom.inverse(order);
}

NomeSeries qfact_multi(std::span<const Monomial> args, long n, const FactorialSpec& spec,
                       int order) {
    NomeSeries acc = NomeSeries::one();
    for (const auto& a : args) acc = acc * qfact(a, n, spec, order);
    return acc;
}

NomeSeries qfact_multi(std::initializer_list<Monomial> args, long n, const FactorialSpec& spec,
                       int order) {
    return qfact_multi(std::span<const Monomial>(args.begin(), args.size()), n, spec, order);
}

NomeSeries theta_shift_quotient(const Monomial& a, long k, const FactorialSpec& spec, int order) {
    if (k == 0) return NomeSeries::one();
    NomeSeries denom = theta(a, spec.nome_exp, order);
    if (denom.is_zero()) throw DivisionByZeroSeries("theta(a;p) vanishes");
    return div(theta(a.qshift(spec.q, 2 * k), spec.nome_exp, order), denom, order);
}

NomeSeries qfact_shift(const Monomial& a, long n, long k, const FactorialSpec& spec,
                       ShiftDirection dir, int order) {
    if (n < 0) throw IndexRangeError("qfact_shift needs n >= 0");
    if (k < 0) throw IndexRangeError("qfact_shift needs k >= 0");
    NomeSeries base = qfact(a, n, spec, order);
    if (dir == ShiftDirection::Add) {
        // (a)_{n+k} = (a)_n (a q^n)_k
        return base * qfact(a.qshift(spec.q, n), k, spec, order);
    }
    // (a)_{n-k} = (a)_n (-q^{1-n}/a)^k q^{binom(k,2)} / (q^{1-n}/a;q,p)_k
    if (n - k < 0) throw IndexRangeError("negative length in subtract rewriting");
    Monomial q1na = Monomial(rat_pow(spec.q, 1 - n)) / a;
    NomeSeries denom = qfact(q1na, k, spec, order);
    if (denom.is_zero()) throw DivisionByZeroSeries("shift denominator vanishes");
    Monomial scale = (-q1na).pow(k);
    scale.c *= rat_pow(spec.q, k * (k - 1) / 2);
    return div(base * NomeSeries::from_monomial(scale), denom, order);
}

Rat qfact_basic(const Rat& a, long n, const Rat& q) {
    Rat acc(1);
    Rat arg = a;
    for (long j = 0; j < n; ++j) {
        acc *= (Rat(1) - arg);
        arg *= q;
    }
    return acc;
}

}  // namespace wpb
