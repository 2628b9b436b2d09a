#include "wpb/series.hpp"

namespace wpb {

SeriesSpec SeriesSpec::phi(std::vector<Monomial> upper, std::vector<Monomial> lower, Monomial z,
                           FactorialSpec fs, long n) {
    return SeriesSpec{SeriesKind::Phi, std::move(fs), Monomial(Rat(0)), std::move(upper),
                      std::move(lower), std::move(z), n};
}

SeriesSpec SeriesSpec::w(Monomial a1, std::vector<Monomial> trailing, Monomial z,
                         FactorialSpec fs, long n) {
    return SeriesSpec{SeriesKind::W, std::move(fs), std::move(a1), std::move(trailing),
                      {}, std::move(z), n};
}

SeriesSpec SeriesSpec::v(Monomial a1, std::vector<Monomial> trailing, FactorialSpec fs, long n) {
    Monomial z(fs.q);
    return SeriesSpec{SeriesKind::V, std::move(fs), std::move(a1), std::move(trailing),
                      {}, std::move(z), n};
}

namespace {

NomeSeries theta_or_throw(const Monomial& z, int nome_exp, int order, const char* where) {
    NomeSeries t = theta(z, nome_exp, order);
    if (t.is_zero()) throw DivisionByZeroSeries(where);
    return t;
}

}  // namespace

NomeSeries eval_phi(const SeriesSpec& spec, int order) {
    const Rat& q = spec.fs.q;
    const int p = spec.fs.nome_exp;
    NomeSeries sum = NomeSeries::one();
    NomeSeries term = NomeSeries::one();
    for (long k = 0; k < spec.terminating_index; ++k) {
        for (const auto& a : spec.num) term = term * theta(a.qshift(q, k), p, order);
        term = div(term, theta_or_throw(Monomial(rat_pow(q, k + 1)), p, order, "phi: (q;q)_k"), order);
        for (const auto& b : spec.den)
            term = div(term, theta_or_throw(b.qshift(q, k), p, order, "phi: lower parameter"), order);
        term = term * NomeSeries::from_monomial(spec.z);
        if (term.is_zero()) break;
        sum = sum + term;
    }
    return sum;
}

// Shared very-well-poised engine: W is the p = 0 case, V fixes z = q.
static NomeSeries eval_vwp(const SeriesSpec& spec, int order) {
    const Rat& q = spec.fs.q;
    const int p = spec.fs.nome_exp;
    NomeSeries sum = NomeSeries::one();
    NomeSeries term = NomeSeries::one();
    for (long k = 0; k < spec.terminating_index; ++k) {
        // weight ratio theta(a1 q^{2k+2})/theta(a1 q^{2k})
        term = term * theta(spec.a1.qshift(q, 2 * k + 2), p, order);
        term = div(term, theta_or_throw(spec.a1.qshift(q, 2 * k), p, order, "vwp: weight"), order);
        term = term * theta(spec.a1.qshift(q, k), p, order);
        term = div(term, theta_or_throw(Monomial(rat_pow(q, k + 1)), p, order, "vwp: (q;q)_k"), order);
        for (const auto& a : spec.num) {
            term = term * theta(a.qshift(q, k), p, order);
            Monomial lower = (spec.a1 / a).qshift(q, k + 1);
            term = div(term, theta_or_throw(lower, p, order, "vwp: lower parameter"), order);
        }
        term = term * NomeSeries::from_monomial(spec.z);
        if (term.is_zero()) break;
        sum = sum + term;
    }
    return sum;
}

NomeSeries eval_w(const SeriesSpec& spec, int order) {
    if (spec.kind != SeriesKind::W) throw ConstraintViolation("eval_w needs a W spec");
    if (!spec.fs.basic()) throw ConstraintViolation("W series are basic");
    return eval_vwp(spec, order);
}

NomeSeries eval_v(const SeriesSpec& spec, int order) {
    if (spec.kind != SeriesKind::V) throw ConstraintViolation("eval_v needs a V spec");
    return eval_vwp(spec, order);
}

NomeSeries eval_series(const SeriesSpec& spec, int order) {
    switch (spec.kind) {
        case SeriesKind::Phi: return eval_phi(spec, order);
        case SeriesKind::W: return eval_w(spec, order);
        case SeriesKind::V: return eval_v(spec, order);
    }
    throw Error("unreachable");
}

Classification classify(const SeriesSpec& spec) {
    Classification c;
    const Rat& q = spec.fs.q;
    if (spec.kind == SeriesKind::W || spec.kind == SeriesKind::V) {
        c.well_poised = true;
        c.very_well_poised = true;
    } else {
        if (spec.num.size() == spec.den.size() + 1 && !spec.num.empty()) {
            Monomial a1 = spec.num[0];
            bool wp = true;
            for (size_t i = 0; i < spec.den.size(); ++i)
                if (spec.num[i + 1] * spec.den[i] != a1.qshift(q, 1)) wp = false;
            c.well_poised = wp;
            if (wp && spec.num.size() >= 3) {
                c.very_well_poised = spec.num[1] == -spec.num[2] &&
                                     spec.num[1] * spec.num[1] == a1.qshift(q, 2);
            }
        }
    }
    if (spec.kind == SeriesKind::V) {
        // a6...a_{r+1} q = (a1 q)^{(r-5)/2}; trailing count t gives r = t + 4
        long t = static_cast<long>(spec.num.size());
        if ((t - 1) % 2 == 0) {
            Monomial prod(Rat(1));
            for (const auto& a : spec.num) prod = prod * a;
            prod = prod * Monomial(q);
            c.balanced = prod == (spec.a1 * Monomial(q)).pow((t - 1) / 2);
        }
    }
    return c;
}

Rat sum_lemma1(const Rat& a, const Rat& b, const Rat& c, long n, const Rat& q) {
    if (c != -a * b * q && c != a * a * q / b)
        throw ConstraintViolation("lemma 1 needs c = -abq or c = a^2 q/b");
    Rat a2 = a * a;
    Rat pre = (Rat(1) + a * rat_pow(q, n) / b) / (Rat(1) + a / b);
    Rat num = qfact_basic(c / (a2 * q), n, q) * qfact_basic(c / (b * q), n, q);
    Rat den = qfact_basic(c, n, q) * qfact_basic(c / (a2 * b * q), n, q);
    return pre * num / den;
}

Rat sum_lemma2(const Rat& a, const Rat& b_root, long n, const Rat& q) {
    if (b_root == 0) throw MissingRoot("lemma 2 needs the declared root of b");
    Rat b = b_root * b_root;
    Rat q2 = q * q;
    Rat r = qfact_basic(-a / b, 2 * n, q) / qfact_basic(-a * q, 2 * n, q);
    r *= qfact_basic(a * a * q2, n, q2) * qfact_basic(b, n, q2);
    r /= qfact_basic(Rat(1) / b, n, q2) * qfact_basic(a * a * q2 / (b * b), n, q2);
    return r * rat_pow(q / b, n);
}

NomeSeries sum_elliptic_jackson(const Monomial& a, const Monomial& b, const Monomial& c,
                                const Monomial& d, const Monomial& e, long n,
                                const FactorialSpec& spec, int order) {
    if (b * c * d * e != a.pow(2).qshift(spec.q, n + 1))
        throw ConstraintViolation("elliptic Jackson needs bcde = a^2 q^{n+1}");
    Monomial aq = a.qshift(spec.q, 1);
    Monomial num[] = {aq, aq / (b * c), aq / (b * d), aq / (c * d)};
    Monomial den[] = {aq / b, aq / c, aq / d, aq / (b * c * d)};
    return div(qfact_multi(num, n, spec, order), qfact_multi(den, n, spec, order), order);
}

NomeSeries sum_new_bibasic(const Monomial& a, const Monomial& b, long n,
                           const FactorialSpec& spec, int order) {
    const Rat& q = spec.q;
    FactorialSpec sq = spec.squared();  // (q^2, p^2)
    NomeSeries r = div(theta((-a / b).qshift(q, 2 * n - 1), spec.nome_exp, order),
                       theta_or_throw((-a / b).qshift(q, -1), spec.nome_exp, order,
                                      "new bibasic: theta(-a/bq)"),
                       order);
    Monomial num1[] = {a.qshift(q, 1), (-a / b).qshift(q, -1)};
    Monomial den1[] = {Monomial(-q), (Monomial(Rat(1)) / b).qshift(q, -1)};
    r = r * div(qfact_multi(num1, n, spec, order), qfact_multi(den1, n, spec, order), order);
    Monomial num2 = (Monomial(Rat(1)) / b).qshift(q, -2);
    Monomial den2 = (a.pow(2) / b).qshift(q, 2);
    r = r * div(qfact(num2, n, sq, order), qfact(den2, n, sq, order), order);
    return r.scaled(rat_pow(q, n));
}

NomeSeries new_bibasic_lhs(const Monomial& a, const Monomial& b, long n,
                           const FactorialSpec& spec, int order) {
    const Rat& q = spec.q;
    FactorialSpec sq = spec.squared();
    Monomial a2 = a.pow(2);
    NomeSeries sum = NomeSeries::zero();
    for (long k = 0; k <= n; ++k) {
        NomeSeries t = theta_shift_quotient(a2, k, sq, order);
        Monomial num1[] = {a2, b};
        Monomial den1[] = {Monomial(sq.q), (a2 / b).qshift(q, 2)};
        t = t * div(qfact_multi(num1, k, sq, order), qfact_multi(den1, k, sq, order), order);
        Monomial num2[] = {(a / b).qshift(q, n - 1), Monomial(rat_pow(q, -n))};
        Monomial den2[] = {b.qshift(q, 2 - n), a.qshift(q, n + 1)};
        t = t * div(qfact_multi(num2, k, spec, order), qfact_multi(den2, k, spec, order), order);
        sum = sum + t.scaled(rat_pow(q, 2 * k));
    }
    return sum;
}

}  // namespace wpb
