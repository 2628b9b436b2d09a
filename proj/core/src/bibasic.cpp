#include "wpb/bibasic.hpp"

namespace wpb {

namespace {

NomeSeries P(const Monomial& x, long n) { return NomeSeries::from_monomial(x.pow(n)); }

long choose2(long n) { return n * (n - 1) / 2; }

}  // namespace

NomeSeries bibasic_kernel(long i, long n, long r, const Monomial& a, const Monomial& k,
                          const FactorialSpec& spec, int order) {
    if (r < 0 || r > n) throw IndexRangeError("bibasic_kernel needs 0 <= r <= n");
    const Rat& q = spec.q;
    FactorialSpec fsi = spec.base_pow(i);
    return div(qfact_int(k / a, n - i * r, spec, order),
               qfact(Monomial(fsi.q), n - r, fsi, order), order) *
           div(qfact(k, n + i * r, spec, order),
               qfact(a.qshift(fsi.q, 1), n + r, fsi, order), order);
}

BibasicPair bibasic_closed_form(long i, const Monomial& a, const Monomial& k, const Monomial& b,
                                const FactorialSpec& spec) {
    if (i < 1) throw ConstraintViolation("bibasic index i must be positive");
    Rat q = spec.q;
    FactorialSpec fsi = spec.base_pow(i);
    Rat qi = fsi.q;
    Evaluator A = [=](long n, int order) {
        return theta_shift_quotient(a, i * n, spec, order) *
               div(qfact_multi({a, b, a / b}, n, fsi, order),
                   qfact_multi({Monomial(qi), a.qshift(qi, 1) / b, b.qshift(qi, 1)}, n, fsi,
                               order),
                   order) *
               div(qfact(a.qshift(q, 1) / k, i * n, spec, order),
                   qfact(k, i * n, spec, order), order) *
               P(-(k / a), i * n)
                   .scaled(rat_pow(Rat(-1), n) * rat_pow(q, -choose2(i) * n * n));
    };
    Evaluator B = [=](long n, int order) {
        return div(qfact_multi({b * k / a, k / b}, n, spec, order),
                   qfact_multi({a.qshift(qi, 1) / b, b.qshift(qi, 1)}, n, fsi, order), order);
    };
    return BibasicPair{i, a, k, spec, std::move(A), std::move(B)};
}

PairCheck verify_bibasic(const BibasicPair& pair, long n_max, int order) {
    PairCheck res;
    res.pass = true;
    res.order = order;
    for (long n = 0; n <= n_max; ++n) {
        try {
            NomeSeries rhs = NomeSeries::zero();
            for (long r = 0; r <= n; ++r)
                rhs = rhs + bibasic_kernel(pair.i, n, r, pair.a, pair.k, pair.fs, order) *
                                pair.A(r, order);
            SeriesEq eq = series_eq(pair.B(n, order), rhs);
            res.order = std::min(res.order, eq.order);
            if (!eq.equal) {
                res.pass = false;
                res.first_fail = n;
                return res;
            }
        } catch (const Error& e) {
            res.pass = false;
            res.degenerate = true;
            res.first_fail = n;
            res.note = e.what();
            return res;
        }
    }
    return res;
}

WPPair lift_bibasic2(const BibasicPair& input, const Monomial& out_k) {
    if (input.i != 2) throw ConstraintViolation("lift_bibasic2 needs an i = 2 pair");
    const Monomial a = input.a, m = input.k, K = out_k;
    const FactorialSpec fs = input.fs;
    const Rat q = fs.q;
    FactorialSpec fs2 = fs.base_squared();
    Rat q2 = fs2.q;
    Monomial m2q = m.pow(2).qshift(fs.q, 1);
    Monomial akqm2 = (a * K).qshift(q, 1) / m.pow(2);
    Evaluator Ain = input.A, Bin = input.B;
    Evaluator alpha = [=](long n, int order) {
        return div(qfact(m2q / K, n, fs2, order), qfact(akqm2, n, fs2, order), order) *
               P(-(a * K) / m.pow(2), n).scaled(rat_pow(q, n * n)) * Ain(n, order);
    };
    Evaluator beta = [=](long n, int order) {
        NomeSeries pre = div(qfact(m2q / a, n, fs2, order), qfact(akqm2, n, fs2, order), order);
        NomeSeries sum = NomeSeries::zero();
        for (long r = 0; r <= n; ++r) {
            NomeSeries t = div(theta(m.qshift(q, 3 * r), fs.nome_exp, order),
                               theta(m, fs.nome_exp, order), order);
            t = t * div(qfact(a.qshift(q, 1) / m, r, fs, order),
                        qfact(m2q / a, r, fs2, order), order);
            t = t * div(qfact(m2q / K, r, fs2, order), qfact(K / m, r, fs, order), order);
            t = t * div(qfact(K / m, 2 * n - r, fs, order),
                        qfact(Monomial(q2), n - r, fs2, order), order);
            t = t * div(qfact(K, n + r, fs2, order),
                        qfact(m.qshift(q, 1), 2 * n + r, fs, order), order);
            t = t * P(K / m, r).scaled(rat_pow(q, choose2(r)));
            sum = sum + t * Bin(r, order);
        }
        return pre * sum;
    };
    return WPPair(a, K, fs2, std::move(alpha), std::move(beta));
}

WPPair lift_bibasic3(const BibasicPair& input, const Monomial& out_k, const ExponentLaw& law) {
    if (input.i != 3) throw ConstraintViolation("lift_bibasic3 needs an i = 3 pair");
    const Monomial a = input.a, m = input.k, K = out_k;
    if (m.pow(3) != a * K) throw ConstraintViolation("lift_bibasic3 needs m^3 = ak");
    const FactorialSpec fs = input.fs;
    const Rat q = fs.q;
    FactorialSpec fs3 = fs.base_pow(3);
    Rat q3 = fs3.q;
    Evaluator Ain = input.A, Bin = input.B;
    Evaluator alpha = [=](long n, int order) {
        return NomeSeries::from_monomial(law(n)).scaled(rat_pow(q, 3 * n * n)) * Ain(n, order);
    };
    Evaluator beta = [=](long n, int order) {
        NomeSeries sum = NomeSeries::zero();
        for (long r = 0; r <= n; ++r) {
            NomeSeries t = theta_shift_quotient(m, 2 * r, fs, order);
            t = t * div(qfact(a.qshift(q, 1) / m, 2 * r, fs, order),
                        qfact(m.pow(2) / a, 2 * r, fs, order), order);
            t = t * div(qfact(K / m, 3 * n - r, fs, order),
                        qfact(Monomial(q3), n - r, fs3, order), order);
            t = t * div(qfact(K, n + r, fs3, order),
                        qfact(m.qshift(q, 1), 3 * n + r, fs, order), order);
            t = t * P(K / m, r).scaled(rat_pow(q, 2 * choose2(r)));
            sum = sum + t * Bin(r, order);
        }
        return sum;
    };
    return WPPair(a, K, fs3, std::move(alpha), std::move(beta));
}

}  // namespace wpb
