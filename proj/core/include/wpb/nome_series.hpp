#pragma once

#include <string>
#include <vector>

#include "wpb/monomial.hpp"
#include "wpb/rational.hpp"

namespace wpb {

// Truncated Laurent series in the formal half-nome w, p = w^2.
//
// A series is known modulo w^order().  Exact values (Laurent polynomials
// produced from monomials or rationals) carry order() == kExact and survive
// arithmetic without precision loss; a truncated operand degrades the result
// by the min-rule.  Fewer than kMinSignificant surviving significant orders
// in a nonzero product or quotient raises InsufficientTruncation.
class NomeSeries {
public:
    static constexpr int kExact = 1 << 28;
    static constexpr int kMinSignificant = 4;

    NomeSeries() : order_(kExact) {}

    static NomeSeries zero(int order = kExact);
    static NomeSeries constant(const Rat& c, int order = kExact);
    static NomeSeries from_monomial(const Monomial& m, int order = kExact);
    static NomeSeries one() { return constant(Rat(1)); }

    // Construct from explicit coefficients, c[i] the coefficient of w^{val+i}.
    NomeSeries(int val, std::vector<Rat> coeffs, int order);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_exact() const { return order_ >= kExact; }
    int order() const { return order_; }
    // Valuation of a nonzero series; for the canonical zero this returns
    // order() (a lower bound on the valuation of whatever was truncated away).
    int valuation() const { return coeffs_.empty() ? order_ : val_; }
    int num_terms() const { return static_cast<int>(coeffs_.size()); }

    const Rat& coeff(int wexp) const;  // zero when absent

    NomeSeries truncated(int order) const;

    friend NomeSeries operator+(const NomeSeries& x, const NomeSeries& y);
    friend NomeSeries operator-(const NomeSeries& x, const NomeSeries& y);
    friend NomeSeries operator*(const NomeSeries& x, const NomeSeries& y);
    NomeSeries operator-() const;

    NomeSeries scaled(const Rat& c) const;
    NomeSeries shifted(int wexp) const;  // multiply by w^wexp

    // Multiplicative inverse.  A non-monomial exact operand needs an explicit
    // truncation order for the geometric expansion.
    NomeSeries inverse(int order_if_exact = -1) const;

    NomeSeries substitute_nome_power(int m) const;  // w -> w^m

    // Coefficient of w^0; throws PoleAtZeroNome when valuation() < 0.
    Rat constant_term() const;

    std::string str() const;

private:
    void normalize();

    int val_ = 0;
    int order_;
    std::vector<Rat> coeffs_;  // empty => canonical zero
};

NomeSeries div(const NomeSeries& x, const NomeSeries& y, int order_if_exact = -1);

// Equality modulo min(x.order, y.order); the comparison order is reported.
struct SeriesEq {
    bool equal;
    int order;  // order at which the comparison was decided
};
SeriesEq series_eq(const NomeSeries& x, const NomeSeries& y);

inline bool operator==(const NomeSeries& x, const NomeSeries& y) {
    return series_eq(x, y).equal;
}

NomeSeries pow(const NomeSeries& x, long n, int order_if_exact = -1);

}  // namespace wpb
