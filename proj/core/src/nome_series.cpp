#include "wpb/nome_series.hpp"

#include <algorithm>

#include "wpb/errors.hpp"

namespace wpb {

namespace {

int ord_plus(int order, int shift) {
    if (order >= NomeSeries::kExact) return NomeSeries::kExact;
    return order + shift;
}

const Rat kZeroRat{0};

}  // namespace

NomeSeries NomeSeries::zero(int order) {
    NomeSeries s;
    s.order_ = order;
    return s;
}

NomeSeries NomeSeries::constant(const Rat& c, int order) {
    return from_monomial(Monomial(c, 0), order);
}

NomeSeries NomeSeries::from_monomial(const Monomial& m, int order) {
    NomeSeries s;
    s.order_ = order;
    if (m.c != 0 && m.e < order) {
        s.val_ = m.e;
        s.coeffs_ = {m.c};
    }
    return s;
}

NomeSeries::NomeSeries(int val, std::vector<Rat> coeffs, int order)
    : val_(val), order_(order), coeffs_(std::move(coeffs)) {
    normalize();
}

void NomeSeries::normalize() {
    if (order_ < kExact) {
        int keep = order_ - val_;
        if (keep < 0) keep = 0;
        if (static_cast<int>(coeffs_.size()) > keep) coeffs_.resize(keep);
    }
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + lead);
        val_ += static_cast<int>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.empty()) val_ = 0;
}

const Rat& NomeSeries::coeff(int wexp) const {
    if (coeffs_.empty()) return kZeroRat;
    int i = wexp - val_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZeroRat;
    return coeffs_[i];
}

NomeSeries NomeSeries::truncated(int order) const {
    NomeSeries s = *this;
    s.order_ = std::min(order_, order);
    s.normalize();
    return s;
}

NomeSeries operator+(const NomeSeries& x, const NomeSeries& y) {
    int order = std::min(x.order_, y.order_);
    if (x.is_zero() && y.is_zero()) return NomeSeries::zero(order);
    int lo = std::min(x.is_zero() ? y.val_ : x.val_, y.is_zero() ? x.val_ : y.val_);
    int hi_x = x.val_ + static_cast<int>(x.coeffs_.size());
    int hi_y = y.val_ + static_cast<int>(y.coeffs_.size());
    int hi = std::min(std::max(hi_x, hi_y), order);
    if (hi <= lo) return NomeSeries::zero(order);
    std::vector<Rat> c(hi - lo);
    for (int e = lo; e < hi; ++e) c[e - lo] = x.coeff(e) + y.coeff(e);
    return NomeSeries(lo, std::move(c), order);
}

NomeSeries NomeSeries::operator-() const {
    NomeSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

NomeSeries operator-(const NomeSeries& x, const NomeSeries& y) { return x + (-y); }

NomeSeries operator*(const NomeSeries& x, const NomeSeries& y) {
    int order = std::min(ord_plus(x.order_, y.valuation()), ord_plus(y.order_, x.valuation()));
    if (x.is_zero() || y.is_zero()) return NomeSeries::zero(order);
    int val = x.val_ + y.val_;
    int len;
    if (order >= NomeSeries::kExact) {
        len = static_cast<int>(x.coeffs_.size() + y.coeffs_.size()) - 1;
    } else {
        len = order - val;
        if (len <= 0) return NomeSeries::zero(order);
        len = std::min<int>(len, static_cast<int>(x.coeffs_.size() + y.coeffs_.size()) - 1);
    }
    std::vector<Rat> c(len);
    for (size_t i = 0; i < x.coeffs_.size(); ++i) {
        if (x.coeffs_[i] == 0) continue;
        for (size_t j = 0; i + j < static_cast<size_t>(len) && j < y.coeffs_.size(); ++j) {
            if (y.coeffs_[j] == 0) continue;
            c[i + j] += x.coeffs_[i] * y.coeffs_[j];
        }
    }
    NomeSeries r(val, std::move(c), order);
    if (!r.is_zero() && r.order_ < NomeSeries::kExact &&
        r.order_ - r.val_ < NomeSeries::kMinSignificant)
        throw InsufficientTruncation("product retains fewer than 4 significant orders");
    return r;
}

NomeSeries NomeSeries::scaled(const Rat& c) const {
    if (c == 0) return zero(order_);
    NomeSeries s = *this;
    for (auto& x : s.coeffs_) x *= c;
    return s;
}

NomeSeries NomeSeries::shifted(int wexp) const {
    NomeSeries s = *this;
    s.order_ = ord_plus(order_, wexp);
    if (!s.coeffs_.empty()) s.val_ += wexp;
    return s;
}

NomeSeries NomeSeries::inverse(int order_if_exact) const {
    if (is_zero()) throw DivisionByZeroSeries();
    int v = val_;
    if (coeffs_.size() == 1) {
        // Monomial inverse; exact when the operand is exact.
        int order = is_exact() ? kExact : order_ - 2 * v;
        return from_monomial(Monomial(Rat(1) / coeffs_[0], -v), order);
    }
    int sig;  // significant terms wanted in the unit-part inverse
    int order;
    if (is_exact()) {
        if (order_if_exact < 0)
            throw Error("inverse of an exact multi-term series needs a truncation order");
        order = order_if_exact;
        sig = order + v;
    } else {
        order = order_ - 2 * v;
        sig = order_ - v;
    }
    if (sig <= 0) throw InsufficientTruncation("no significant orders left for inversion");
    std::vector<Rat> inv(sig);
    const Rat& u0 = coeffs_[0];
    inv[0] = Rat(1) / u0;
    for (int k = 1; k < sig; ++k) {
        Rat acc{0};
        int jmax = std::min<int>(k, static_cast<int>(coeffs_.size()) - 1);
        for (int j = 1; j <= jmax; ++j) acc += coeffs_[j] * inv[k - j];
        inv[k] = -acc / u0;
    }
    NomeSeries r(-v, std::move(inv), order);
    if (!r.is_zero() && r.order_ < kExact && r.order_ - r.val_ < kMinSignificant)
        throw InsufficientTruncation("inverse retains fewer than 4 significant orders");
    return r;
}

NomeSeries div(const NomeSeries& x, const NomeSeries& y, int order_if_exact) {
    int oie = order_if_exact;
    if (y.is_exact() && y.num_terms() > 1 && oie < 0 && !x.is_exact())
        oie = x.order() - y.valuation() + x.valuation();
    return x * y.inverse(oie);
}

NomeSeries NomeSeries::substitute_nome_power(int m) const {
    if (m < 1) throw Error("nome power substitution needs m >= 1");
    if (m == 1) return *this;
    NomeSeries s;
    s.order_ = is_exact() ? kExact : order_ * m;
    if (is_zero()) return s;
    s.val_ = val_ * m;
    s.coeffs_.assign((coeffs_.size() - 1) * m + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i * m] = coeffs_[i];
    s.normalize();
    return s;
}

Rat NomeSeries::constant_term() const {
    if (valuation() < 0) throw PoleAtZeroNome();
    if (order_ <= 0) throw InsufficientTruncation("constant term not determined");
    return coeff(0);
}

SeriesEq series_eq(const NomeSeries& x, const NomeSeries& y) {
    int order = std::min(x.order(), y.order());
    int lo = std::min(x.valuation(), y.valuation());
    if (lo >= order) return {true, order};
    for (int e = lo; e < order; ++e) {
        bool past_x = e >= x.valuation() + x.num_terms();
        bool past_y = e >= y.valuation() + y.num_terms();
        if (past_x && past_y) break;
        if (x.coeff(e) != y.coeff(e)) return {false, order};
    }
    return {true, order};
}

NomeSeries pow(const NomeSeries& x, long n, int order_if_exact) {
    if (n == 0) return NomeSeries::one();
    NomeSeries b = n < 0 ? x.inverse(order_if_exact) : x;
    long m = n < 0 ? -n : n;
    NomeSeries acc = NomeSeries::one();
    while (m > 0) {
        if (m & 1) acc = acc * b;
        b = (m >>= 1) > 0 ? b * b : b;
    }
    return acc;
}

std::string NomeSeries::str() const {
    std::string out;
    if (coeffs_.empty()) {
        out = "0";
    } else {
        bool first = true;
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!first) out += " + ";
            int e = val_ + static_cast<int>(i);
            if (e == 0) {
                out += rat_str(coeffs_[i]);
            } else {
                out += rat_str(coeffs_[i]) + "*w^" + std::to_string(e);
            }
            first = false;
        }
    }
    if (order_ < kExact) out += " (mod w^" + std::to_string(order_) + ")";
    return out;
}

}  // namespace wpb
