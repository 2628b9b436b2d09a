#include "wpb/registry.hpp"

#include <algorithm>

#include "wpb/bibasic.hpp"
#include "wpb/wp_bailey.hpp"

namespace wpb {
namespace {

using Checks = std::vector<IdentityCheck>;

Monomial M(const Rat& r) { return Monomial(r); }
Monomial Mq(const Rat& q, long j) { return Monomial(rat_pow(q, j)); }

NomeSeries fr(std::initializer_list<Monomial> num, std::initializer_list<Monomial> den, long n,
              const FactorialSpec& fs, int order) {
    return div(qfact_multi(num, n, fs, order), qfact_multi(den, n, fs, order), order);
}

// theta(z q^j; p) / theta(z; p), any integer shift j.
NomeSeries theta_ratio(const Monomial& z, long j, const FactorialSpec& fs, int order) {
    NomeSeries d = theta(z, fs.nome_exp, order);
    if (d.is_zero()) throw DivisionByZeroSeries("theta ratio denominator vanishes");
    return div(theta(z.qshift(fs.q, j), fs.nome_exp, order), d, order);
}

NomeSeries delta(bool one, int) { return one ? NomeSeries::one() : NomeSeries::zero(); }

ParamPoint base_point(Sampler& s) {
    ParamPoint pt;
    pt.seed = s.seed();
    pt.q_value = s.base();
    return pt;
}

// ---- inverse relations -----------------------------------------------------

IdentityCase make_inverse(bool elliptic) {
    IdentityCase c;
    c.name = elliptic ? "wp-inverse-elliptic" : "wp-inverse";
    c.display = elliptic ? "elliptic kernel inverse relation sum_s Mt(n,s) M(s,r) = delta(n,r)"
                         : "kernel inverse relation sum_s Mt(n,s) M(s,r) = delta(n,r)";
    c.default_order = elliptic ? 12 : 16;
    c.default_n_max = elliptic ? 5 : 6;
    int ne = elliptic ? 2 : 0;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        pt.set("a", M(s.rational()));
        Rat k = s.rational();
        if (k == pt.at("a").c) k += 1;
        pt.set("k", M(k));
        return pt;
    };
    c.eval = [ne](const ParamPoint& pt, long n, int o) {
        FactorialSpec fs(pt.q_value, ne);
        Monomial a = pt.at("a"), k = pt.at("k");
        Checks out;
        for (long r = 0; r <= n; ++r) {
            NomeSeries sum = NomeSeries::zero();
            for (long s = r; s <= n; ++s)
                sum = sum + kernel_Mtilde(n, s, a, k, fs, o) * kernel_M(s, r, a, k, fs, o);
            out.push_back({"r=" + std::to_string(r), sum, delta(n == r, o)});
        }
        return out;
    };
    return c;
}

// ---- closed-form sums ------------------------------------------------------

IdentityCase make_rogers_delta() {
    IdentityCase c;
    c.name = "rogers-delta";
    c.display = "6W5 evaluation behind the basic inverse relation equals delta(n,r)";
    c.default_n_max = 6;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        pt.set("a", M(s.rational()));
        pt.set("k", M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        Monomial a = pt.at("a"), k = pt.at("k");
        Checks out;
        for (long r = 0; r <= n; ++r) {
            Monomial a1 = k.qshift(q, 2 * r);
            std::vector<Monomial> tr = {k / a, a.qshift(q, n + r), Mq(q, -(n - r))};
            SeriesSpec spec = SeriesSpec::w(a1, tr, M(q), FactorialSpec(q), n - r);
            out.push_back({"r=" + std::to_string(r), eval_w(spec, o), delta(n == r, o)});
        }
        return out;
    };
    return c;
}

IdentityCase make_lemma1(bool minus) {
    IdentityCase c;
    c.name = minus ? "lemma1-minus" : "lemma1-square";
    c.display = std::string("4phi3 summation at c = ") + (minus ? "-abq" : "a^2 q/b");
    c.default_n_max = 5;
    c.sample = [minus](Sampler& s) {
        ParamPoint pt = base_point(s);
        Rat a = s.rational(), b = s.rational();
        pt.set("a", M(a));
        pt.set("b", M(b));
        pt.set("c", M(minus ? Rat(-a * b * pt.q_value) : Rat(a * a * pt.q_value / b)));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        Rat a = pt.at("a").c, b = pt.at("b").c, cc = pt.at("c").c;
        std::vector<Monomial> up = {M(a * q), M(a * a), M(b), Mq(q, -n)};
        std::vector<Monomial> lo = {M(a), M(cc), M(a * a * b * rat_pow(q, 2 - n) / cc)};
        SeriesSpec spec = SeriesSpec::phi(up, lo, M(q), FactorialSpec(q), n);
        return Checks{{"sum", eval_phi(spec, o), NomeSeries::constant(sum_lemma1(a, b, cc, n, q))}};
    };
    return c;
}

IdentityCase make_lemma2() {
    IdentityCase c;
    c.name = "lemma2";
    c.display = "8W7 summation with argument q^2; b entered through its declared root";
    c.default_n_max = 5;
    c.required_roots = {"b"};
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        pt.set("a", M(s.rational()));
        Rat rb;
        Rat b = s.square(&rb);
        pt.set("b", M(b));
        pt.declare_root("b", rb, b);
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        Rat a = pt.at("a").c, rb = pt.root("b");
        Rat qn = rat_pow(q, n);
        std::vector<Monomial> tr = {M(rb * rb), M(a * qn / rb), M(-a * qn / rb), Mq(q, -n),
                                    M(-rat_pow(q, -n))};
        SeriesSpec spec = SeriesSpec::w(M(a), tr, M(q * q), FactorialSpec(q), 2 * n);
        Rat rhs = sum_lemma2(a, rb, n, q);
        return Checks{{"sum", eval_w(spec, o), NomeSeries::constant(rhs)},
                      {"root-sign", NomeSeries::constant(rhs),
                       NomeSeries::constant(sum_lemma2(a, -rb, n, q))}};
    };
    return c;
}

IdentityCase make_elliptic_jackson() {
    IdentityCase c;
    c.name = "elliptic-jackson";
    c.display = "Frenkel-Turaev 10V9 sum, bcde = a^2 q^{n+1} solved for e";
    c.default_n_max = 4;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        for (const char* sym : {"a", "b", "c", "d"}) pt.set(sym, M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        FactorialSpec fs(q, 2);
        Monomial a = pt.at("a"), b = pt.at("b"), cc = pt.at("c"), d = pt.at("d");
        Monomial e = a.pow(2).qshift(q, n + 1) / (b * cc * d);
        std::vector<Monomial> tr = {b, cc, d, e, Mq(q, -n)};
        return Checks{{"sum", eval_v(SeriesSpec::v(a, tr, fs, n), o),
                       sum_elliptic_jackson(a, b, cc, d, e, n, fs, o)}};
    };
    return c;
}

// ---- structure lemmas ------------------------------------------------------

IdentityCase make_theta_quotient() {
    IdentityCase c;
    c.name = "theta-quotient";
    c.display = "theta(aq^{2k})/theta(a) as the eight-factorial quotient times (-1/q)^k";
    c.default_order = 12;
    c.default_n_max = 4;
    c.required_roots = {"a"};
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        Rat r;
        Rat a = s.square(&r);
        pt.set("a", M(a));
        pt.declare_root("a", r, a);
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        FactorialSpec fs(q, 2);
        Rat r = pt.root("a");
        std::initializer_list<Monomial> num = {M(r * q), M(-r * q), Monomial(r * q, -1),
                                               Monomial(-r * q, 1)};
        std::initializer_list<Monomial> den = {M(r), M(-r), Monomial(r, 1), Monomial(-r, -1)};
        NomeSeries lhs = fr(num, den, n, fs, o).scaled(rat_pow(Rat(-1) / q, n));
        return Checks{{"product", lhs, theta_shift_quotient(pt.at("a"), n, fs, o)}};
    };
    return c;
}

IdentityCase make_theta_square() {
    IdentityCase c;
    c.name = "theta-square";
    c.display = "theta(a^2;p) = theta(a)theta(-a)theta(ap^{1/2})theta(-a/p^{1/2}) p^{1/2}/a";
    c.default_order = 12;
    c.default_n_max = 0;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        pt.set("a", M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long, int o) {
        Rat a = pt.at("a").c;
        NomeSeries rhs = theta(M(a), 2, o) * theta(M(-a), 2, o) * theta(Monomial(a, 1), 2, o) *
                         theta(Monomial(-a, -1), 2, o);
        rhs = rhs.shifted(1).scaled(Rat(1) / a);
        return Checks{{"square", theta(M(a * a), 2, o), rhs}};
    };
    return c;
}

IdentityCase make_fact_ratio_squares() {
    IdentityCase c;
    c.name = "fact-ratio-squares";
    c.display = "(a^2;q^2,p)_n/(b^2;q^2,p)_n through base-q factorials with p^{1/2} shifts";
    c.default_order = 12;
    c.default_n_max = 4;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        pt.set("a", M(s.rational()));
        pt.set("b", M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        FactorialSpec fs(q, 2), fs2(q * q, 2);
        Rat a = pt.at("a").c, b = pt.at("b").c;
        NomeSeries lhs = fr({M(a * a)}, {M(b * b)}, n, fs2, o);
        NomeSeries rhs =
            fr({M(a), M(-a), Monomial(a, 1), Monomial(-a, -1)},
               {M(b), M(-b), Monomial(b, -1), Monomial(-b, 1)}, n, fs, o)
                .scaled(rat_pow(-b / a, n));
        return Checks{{"ratio", lhs, rhs}};
    };
    return c;
}

IdentityCase make_sm_shifts() {
    IdentityCase c;
    c.name = "sm-shifts";
    c.display = "shifted-factorial rewritings (a)_{n+k}, (a)_{n-k} and (a^2;q^2,p^2)_n";
    c.default_order = 12;
    c.default_n_max = 4;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        pt.set("a", M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        FactorialSpec fs(q, 2);
        Monomial a = pt.at("a");
        long k = n / 2;
        Checks out;
        out.push_back({"add", qfact(a, n + k, fs, o),
                       qfact(a, n, fs, o) * qfact(a.qshift(q, n), k, fs, o)});
        out.push_back({"add-full", qfact(a, 2 * n, fs, o),
                       qfact(a, n, fs, o) * qfact(a.qshift(q, n), n, fs, o)});
        Monomial w = Mq(q, 1 - n) / a;
        NomeSeries sub = qfact(a, n, fs, o)
                             .scaled(rat_pow(-w.c, k) * rat_pow(q, k * (k - 1) / 2));
        out.push_back({"subtract", qfact(a, n - k, fs, o), div(sub, qfact(w, k, fs, o), o)});
        out.push_back({"square-split", qfact(a.pow(2), n, fs.squared(), o),
                       qfact_multi({a, -a}, n, fs, o)});
        return out;
    };
    return c;
}

IdentityCase make_v_to_w() {
    IdentityCase c;
    c.name = "v-to-w";
    c.display = "V series at p = 0 equals the W series with argument q";
    c.default_order = 12;
    c.default_n_max = 4;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        for (const char* sym : {"a", "b", "c", "d"}) pt.set(sym, M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        Monomial a = pt.at("a");
        std::vector<Monomial> tr = {pt.at("b"), pt.at("c"), pt.at("d"), Mq(q, -n)};
        NomeSeries ell = eval_v(SeriesSpec::v(a, tr, FactorialSpec(q, 2), n), o);
        NomeSeries bas = eval_w(SeriesSpec::w(a, tr, M(q), FactorialSpec(q), n), o);
        return Checks{{"limit", NomeSeries::constant(ell.constant_term()),
                       NomeSeries::constant(bas.constant_term())}};
    };
    return c;
}

// ---- pairs -----------------------------------------------------------------

IdentityCase make_unit_pair(bool elliptic) {
    IdentityCase c;
    c.name = elliptic ? "unit-pair-elliptic" : "unit-pair";
    c.display = elliptic ? "elliptic unit WP Bailey pair: forward delta and inverted alpha"
                         : "unit WP Bailey pair: forward delta and inverted alpha";
    c.default_order = elliptic ? 12 : 16;
    c.default_n_max = elliptic ? 4 : 6;
    int ne = elliptic ? 2 : 0;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        pt.set("a", M(s.rational()));
        Rat k = s.rational();
        if (k == pt.at("a").c) k += 1;
        pt.set("k", M(k));
        return pt;
    };
    c.eval = [ne](const ParamPoint& pt, long n, int o) {
        FactorialSpec fs(pt.q_value, ne);
        Monomial a = pt.at("a"), k = pt.at("k");
        WPPair pair = unit_pair(a, k, fs);
        NomeSeries fwd = NomeSeries::zero();
        for (long r = 0; r <= n; ++r) fwd = fwd + kernel_M(n, r, a, k, fs, o) * pair.alpha(r, o);
        return Checks{{"forward", fwd, delta(n == 0, o)},
                      {"backward", pair.alpha(n, o), kernel_Mtilde(n, 0, a, k, fs, o)}};
    };
    return c;
}

IdentityCase make_spiridonov_pair() {
    IdentityCase c;
    c.name = "spiridonov-pair";
    c.display = "unit pair through the squared-base transform vs the printed closed forms";
    c.default_order = 12;
    c.default_n_max = 4;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        pt.set("a", M(s.rational()));
        pt.set("k", M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        FactorialSpec fs(q, 2);
        Monomial a = pt.at("a"), K = pt.at("k");
        Monomial m = K / a.qshift(q, 1);
        TransformStep step;
        step.tag = TransformTag::T3e;
        step.out_k = K;
        WPPair out = apply_transform(step, unit_pair(a, m, fs));
        NomeSeries ca = theta_ratio(a, 2 * n, fs, o) *
                        fr({a, a.pow(2).qshift(q, 1) / K}, {M(q), K / a}, n, fs, o) *
                        NomeSeries::from_monomial((K / a.pow(2).qshift(q, 1)).pow(n));
        FactorialSpec fsq = fs.squared();
        NomeSeries cb =
            div(qfact(-(K / a), 2 * n, fs, o), qfact(-a.qshift(q, 1), 2 * n, fs, o), o) *
            fr({K, a.pow(2).qshift(q, 2) / K}, {M(q * q), K.pow(2) / a.pow(2)}, n, fsq, o) *
            NomeSeries::from_monomial((m / a).pow(n));
        return Checks{{"alpha", out.alpha(n, o), ca}, {"beta", out.beta(n, o), cb}};
    };
    return c;
}

// ---- named 14V13 transformations ------------------------------------------

void sample_1413b(Sampler& s, ParamPoint& pt) {
    pt.set("a", M(s.rational()));
    for (const char* sym : {"b", "c", "k"}) {
        Rat r;
        Rat v = s.square(&r);
        pt.set(sym, M(v));
        pt.declare_root(sym, r, v);
    }
}

struct Sides1413b {
    NomeSeries lhs, rhs;
};

Sides1413b eval_1413b(const ParamPoint& pt, long n, int o, bool basic_limit) {
    const Rat& q = pt.q_value;
    Rat a = pt.at("a").c, b = pt.at("b").c, cc = pt.at("c").c, k = pt.at("k").c;
    Rat rb = pt.root("b"), rc = pt.root("c"), rk = pt.root("k");
    Rat m = b * cc * k / (a * a * q * q);
    Rat d = -m / a;
    Rat qn = rat_pow(q, n);
    std::vector<Monomial> tr = {M(a * a * q / m), M(rb),      M(-rb),       M(rc),      M(-rc),
                                M(rk * qn),       M(-rk * qn), Mq(q, -n),   M(-rat_pow(q, -n))};
    FactorialSpec fs(q, basic_limit ? 0 : 2);
    FactorialSpec fsq(q * q, basic_limit ? 0 : 4);
    NomeSeries lhs = basic_limit ? eval_w(SeriesSpec::w(M(a), tr, M(q), fs, n), o)
                                 : eval_v(SeriesSpec::v(M(a), tr, fs, n), o);
    NomeSeries pre = fr({M(a * a * q * q), M(k / m), M(m * q * q / b), M(m * q * q / cc)},
                        {M(m * q * q), M(k / (a * a)), M(a * a * q * q / b),
                         M(a * a * q * q / cc)},
                        n, fsq, o);
    Rat q2n = rat_pow(q, 2 * n);
    NomeSeries inner;
    if (basic_limit) {
        std::vector<Monomial> tr2 = {M(a * a * q * q / m), M(d), M(d * q), M(b), M(cc),
                                     M(k * q2n), Mq(q, -2 * n)};
        inner = eval_w(SeriesSpec::w(M(m), tr2, M(m * q / (a * a)), fsq, n), o);
    } else {
        std::vector<Monomial> tr2 = {M(a * a * q * q / m), M(d),       M(d * q),
                                     Monomial(d, -2),      Monomial(d * q, 2),
                                     M(b),                 M(cc),
                                     M(k * q2n),           Mq(q, -2 * n)};
        inner = eval_v(SeriesSpec::v(M(m), tr2, fsq, n), o);
    }
    return {lhs, pre * inner};
}

IdentityCase make_1413b() {
    IdentityCase c;
    c.name = "thm-1413b";
    c.display = "14V13 transformation with p-dependent parameters d/p and dqp";
    c.default_order = 24;
    c.default_n_max = 3;
    c.required_roots = {"b", "c", "k"};
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        sample_1413b(s, pt);
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        Sides1413b sd = eval_1413b(pt, n, o, false);
        return Checks{{"transform", sd.lhs, sd.rhs}};
    };
    return c;
}

IdentityCase make_1413b_limit() {
    IdentityCase c;
    c.name = "thm-1413b-limit";
    c.display = "p -> 0 limit of thm-1413b against the 12W11 / 10W9 basic identity";
    c.default_order = 16;
    c.default_n_max = 3;
    c.required_roots = {"b", "c", "k"};
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        sample_1413b(s, pt);
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        Sides1413b ell = eval_1413b(pt, n, o, false);
        Sides1413b bas = eval_1413b(pt, n, o, true);
        return Checks{
            {"lhs-limit", NomeSeries::constant(ell.lhs.constant_term()),
             NomeSeries::constant(bas.lhs.constant_term())},
            {"rhs-limit", NomeSeries::constant(ell.rhs.constant_term()),
             NomeSeries::constant(bas.rhs.constant_term())},
            {"basic-identity", bas.lhs, bas.rhs}};
    };
    return c;
}

void sample_1413c(Sampler& s, ParamPoint& pt) {
    Rat h, g;
    Rat a = s.square(&h);
    pt.set("a", M(a));
    pt.declare_root("a", h, a);
    Rat q = s.square(&g);
    pt.q_value = q;
    pt.declare_root("q", g, q);
    for (const char* sym : {"b", "c", "k"}) pt.set(sym, M(s.rational()));
}

struct Sides1413c {
    NomeSeries lhs, rhs_plus, rhs_minus;
};

Sides1413c eval_1413c(const ParamPoint& pt, long n, int o, bool basic_limit) {
    const Rat& q = pt.q_value;
    Rat a = pt.at("a").c, b = pt.at("b").c, cc = pt.at("c").c, k = pt.at("k").c;
    Rat h = pt.root("a"), g = pt.root("q");
    Rat dscale = pt.assignments.count("d_scale") ? pt.assignments.at("d_scale").c : Rat(1);
    Rat m = b * cc * k / (a * q);
    Rat qn = rat_pow(q, n);
    std::vector<Monomial> tr = {M(a * a / (m * m)), M(b),  M(b * q),     M(cc),       M(cc * q),
                                M(k * qn),          M(k * qn * q), Mq(q, -n), Mq(q, 1 - n)};
    int ne = basic_limit ? 0 : 2;
    FactorialSpec fs(q, ne), fsq(q * q, ne);
    NomeSeries lhs = basic_limit ? eval_w(SeriesSpec::w(M(a), tr, M(q * q), fsq, n), o)
                                 : eval_v(SeriesSpec::v(M(a), tr, fsq, n), o);
    NomeSeries pre = fr({M(a * q), M(k / m), M(m * q / b), M(m * q / cc)},
                        {M(m * q), M(k / a), M(a * q / b), M(a * q / cc)}, n, fs, o);
    Sides1413c out;
    out.lhs = lhs;
    for (int sigma : {1, -1}) {
        Rat d = Rat(sigma) * dscale * m * g / h;
        NomeSeries inner;
        if (basic_limit) {
            std::vector<Monomial> tr2 = {M(a / m), M(d),      M(-d),     M(b),
                                         M(cc),    M(k * qn), Mq(q, -n)};
            inner = eval_w(SeriesSpec::w(M(m), tr2, M(-m * q / a), fs, n), o);
        } else {
            std::vector<Monomial> tr2 = {M(a / m),        M(d),  M(-d),     Monomial(d, 1),
                                         Monomial(-d, -1), M(b), M(cc),     M(k * qn),
                                         Mq(q, -n)};
            inner = eval_v(SeriesSpec::v(M(m), tr2, fs, n), o);
        }
        (sigma == 1 ? out.rhs_plus : out.rhs_minus) = pre * inner;
    }
    return out;
}

IdentityCase make_1413c() {
    IdentityCase c;
    c.name = "thm-1413c";
    c.display = "14V13 transformation with d = +-m(q/a)^{1/2}, both signs checked";
    c.default_order = 16;
    c.default_n_max = 4;
    c.required_roots = {"a", "q"};
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        sample_1413c(s, pt);
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        Sides1413c sd = eval_1413c(pt, n, o, false);
        return Checks{{"sigma=+1", sd.lhs, sd.rhs_plus}, {"sigma=-1", sd.lhs, sd.rhs_minus}};
    };
    c.perturb = [](ParamPoint& pt) { pt.set("d_scale", M(Rat(2))); };
    return c;
}

IdentityCase make_1413c_limit() {
    IdentityCase c;
    c.name = "thm-1413c-limit";
    c.display = "p -> 0 limit of thm-1413c against the 12W11 / 10W9 basic identity";
    c.default_order = 16;
    c.default_n_max = 3;
    c.required_roots = {"a", "q"};
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        sample_1413c(s, pt);
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        Sides1413c ell = eval_1413c(pt, n, o, false);
        Sides1413c bas = eval_1413c(pt, n, o, true);
        return Checks{
            {"lhs-limit", NomeSeries::constant(ell.lhs.constant_term()),
             NomeSeries::constant(bas.lhs.constant_term())},
            {"rhs-limit+", NomeSeries::constant(ell.rhs_plus.constant_term()),
             NomeSeries::constant(bas.rhs_plus.constant_term())},
            {"rhs-limit-", NomeSeries::constant(ell.rhs_minus.constant_term()),
             NomeSeries::constant(bas.rhs_minus.constant_term())},
            {"basic+", bas.lhs, bas.rhs_plus},
            {"basic-", bas.lhs, bas.rhs_minus}};
    };
    c.perturb = [](ParamPoint& pt) { pt.set("d_scale", M(Rat(2))); };
    return c;
}

// ---- 12W11 applications ----------------------------------------------------

IdentityCase make_w12_nearly_poised() {
    IdentityCase c;
    c.name = "w12-nearly-poised";
    c.display = "12W11 to 6phi5 nearly-poised transformation at m = a^2/k";
    c.default_order = 16;
    c.default_n_max = 5;
    c.required_roots = {"k", "q"};
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        Rat g, rk;
        pt.q_value = s.square(&g);
        pt.declare_root("q", g, pt.q_value);
        Rat k = s.square(&rk);
        pt.set("k", M(k));
        pt.declare_root("k", rk, k);
        pt.set("a", M(s.positive_rational()));
        pt.set("b", M(s.rational()));
        pt.set("c", M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        Rat a = pt.at("a").c, b = pt.at("b").c, cc = pt.at("c").c, k = pt.at("k").c;
        Rat rk = pt.root("k"), g = pt.root("q");
        Rat m = a * a / k, rm = a / rk;
        Rat qn = rat_pow(q, n);
        std::vector<Monomial> tr = {M(b),       M(cc),     M(k * q / (b * cc)), M(rm * g),
                                    M(rm * q),  M(-rm),    M(-rm * g),          M(k * qn),
                                    Mq(q, -n)};
        NomeSeries lhs = eval_w(SeriesSpec::w(M(a), tr, M(q), FactorialSpec(q), n), o);
        Rat pre = (1 + rk) / (1 + rk * qn) * qfact_basic(a * q, n, q) * qfact_basic(k / m, n, q) /
                  (qfact_basic(k, n, q) * qfact_basic(k / a, n, q));
        std::vector<Monomial> up = {M(m),           M(rm * q), M(b * m / a),
                                    M(cc * m / a),  M(a * q / (b * cc)), Mq(q, -n)};
        std::vector<Monomial> lo = {M(rm), M(a * q / b), M(a * q / cc), M(b * cc * m / a),
                                    M(m * rat_pow(q, 1 - n) / k)};
        NomeSeries phi = eval_phi(SeriesSpec::phi(up, lo, M(q), FactorialSpec(q), n), o);
        return Checks{{"transform", lhs, phi.scaled(pre)}};
    };
    return c;
}

IdentityCase make_w12_bailey() {
    IdentityCase c;
    c.name = "w12-bailey-109";
    c.display = "12W11 to 10W9 transformation at m = k/a with (-a)^{1/2} parameters";
    c.default_order = 16;
    c.default_n_max = 5;
    c.required_roots = {"k", "-a"};
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        Rat h, rk;
        Rat negA = s.square(&h);
        pt.set("a", M(-negA));
        pt.declare_root("-a", h, negA);
        Rat k = s.square(&rk);
        pt.set("k", M(k));
        pt.declare_root("k", rk, k);
        pt.set("b", M(s.rational()));
        pt.set("c", M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        Rat a = pt.at("a").c, b = pt.at("b").c, cc = pt.at("c").c, k = pt.at("k").c;
        Rat h = pt.root("-a"), rk = pt.root("k");
        Rat m = k / a;
        Rat qn = rat_pow(q, n);
        std::vector<Monomial> tr = {M(b),        M(cc),        M(a * a * q / (b * cc * m)),
                                    M(h * q),    M(-h * q),    M(rk * qn),
                                    M(-rk * qn), Mq(q, -n),    M(-rat_pow(q, -n))};
        NomeSeries lhs = eval_w(SeriesSpec::w(M(a), tr, M(q), FactorialSpec(q), n), o);
        Rat q2 = q * q;
        Rat pre = qfact_basic(-m * q, 2 * n, q) / qfact_basic(-a, 2 * n, q) *
                  qfact_basic(a * a * q2, n, q2) * qfact_basic(k / (m * m), n, q2) /
                  (qfact_basic(m * m * q2, n, q2) * qfact_basic(k / (a * a), n, q2)) *
                  rat_pow(m / (a * q), n);
        std::vector<Monomial> tr2 = {M(b * m / a), M(cc * m / a), M(a * q / (b * cc)),
                                     M(rk * qn),   M(-rk * qn),   Mq(q, -n),
                                     M(-rat_pow(q, -n))};
        NomeSeries w9 = eval_w(SeriesSpec::w(M(m), tr2, M(q2), FactorialSpec(q), n), o);
        return Checks{{"transform", lhs, w9.scaled(pre)}};
    };
    return c;
}

// ---- note-added-in-proof layer ---------------------------------------------

IdentityCase make_new_bibasic(bool limit) {
    IdentityCase c;
    c.name = limit ? "nr-limit" : "new-bibasic-sum";
    c.display = limit ? "p -> 0 limit of the new bibasic summation (Nassrallah-Rahman form)"
                      : "new elliptic bibasic summation, direct sum vs closed form";
    c.default_order = 16;
    c.default_n_max = 4;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        pt.set("a", M(s.rational()));
        pt.set("b", M(s.rational()));
        return pt;
    };
    if (!limit) {
        c.eval = [](const ParamPoint& pt, long n, int o) {
            FactorialSpec fs(pt.q_value, 2);
            return Checks{{"sum", new_bibasic_lhs(pt.at("a"), pt.at("b"), n, fs, o),
                           sum_new_bibasic(pt.at("a"), pt.at("b"), n, fs, o)}};
        };
    } else {
        c.eval = [](const ParamPoint& pt, long n, int o) {
            FactorialSpec ell(pt.q_value, 2), bas(pt.q_value, 0);
            Monomial a = pt.at("a"), b = pt.at("b");
            NomeSeries lb = new_bibasic_lhs(a, b, n, bas, o);
            NomeSeries rb = sum_new_bibasic(a, b, n, bas, o);
            return Checks{
                {"lhs-limit",
                 NomeSeries::constant(new_bibasic_lhs(a, b, n, ell, o).constant_term()),
                 NomeSeries::constant(lb.constant_term())},
                {"rhs-limit",
                 NomeSeries::constant(sum_new_bibasic(a, b, n, ell, o).constant_term()),
                 NomeSeries::constant(rb.constant_term())},
                {"basic-identity", lb, rb}};
        };
    }
    return c;
}

IdentityCase make_v14_lambda() {
    IdentityCase c;
    c.name = "v14-lambda";
    c.display = "mixed-nome summation to 14V13 with lambda = a^4 q^2/bcd and e = lambda/aq";
    c.default_order = 24;
    c.default_n_max = 3;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        for (const char* sym : {"a", "b", "c", "d"}) pt.set(sym, M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        FactorialSpec fs(q, 2), fsq(q * q, 4);
        Rat a = pt.at("a").c, b = pt.at("b").c, cc = pt.at("c").c, d = pt.at("d").c;
        Rat lam = rat_pow(a, 4) * q * q / (b * cc * d);
        Rat e = lam / (a * q);
        Rat a2 = a * a, q2 = q * q, qn = rat_pow(q, n);
        NomeSeries lhs = NomeSeries::zero();
        for (long j = 0; j <= n; ++j) {
            NomeSeries t = theta_shift_quotient(M(a2), j, fsq, o);
            t = t * fr({M(a2), M(b), M(cc), M(d)},
                       {M(q2), M(a2 * q2 / b), M(a2 * q2 / cc), M(a2 * q2 / d)}, j, fsq, o);
            t = t * div(qfact_multi({M(e * qn), Mq(q, -n)}, j, fs, o),
                        qfact_multi({M(a * rat_pow(q, 1 - n) / e), M(a * qn * q)}, j, fs, o), o);
            t = t.scaled(rat_pow(q, 2 * j));
            lhs = lhs + t;
        }
        NomeSeries rhs = theta_ratio(M(-e), 2 * n, fs, o) *
                         fr({M(-e), M(a * q)}, {M(-q), M(e / a)}, n, fs, o) *
                         fr({M(e / (a * q))}, {M(lam * q2)}, n, fsq, o);
        rhs = rhs.scaled(qn);
        Rat q2n = rat_pow(q, 2 * n);
        std::vector<Monomial> tr = {M(-a * q),          M(-a * q2),
                                    Monomial(-a * q, -2), Monomial(-a * q2, 2),
                                    M(lam * b / a2),    M(lam * cc / a2),
                                    M(lam * d / a2),    M(e * e * q2n),
                                    Mq(q, -2 * n)};
        rhs = rhs * eval_v(SeriesSpec::v(M(lam), tr, fsq, n), o);
        return Checks{{"transform", lhs, rhs}};
    };
    return c;
}

IdentityCase make_exotic_pair() {
    IdentityCase c;
    c.name = "exotic-pair";
    c.display = "closed-form elliptic WP pair at (a,k;q^2,p) with theta(mq^{3r}) weights";
    c.default_order = 16;
    c.default_n_max = 3;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        for (const char* sym : {"a", "b", "m", "k"}) pt.set(sym, M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        FactorialSpec fs(q, 2), fs2(q * q, 2);
        Monomial a = pt.at("a"), b = pt.at("b"), m = pt.at("m"), k = pt.at("k");
        Monomial q2 = M(q * q);
        auto alpha = [&](long r) {
            return theta_ratio(a, 4 * r, fs, o) *
                   fr({a, m.pow(2).qshift(q, 1) / k, b, a / b},
                      {q2, (a * k / m.pow(2)).qshift(q, 1), (a / b).qshift(q, 2),
                       b.qshift(q, 2)},
                      r, fs2, o) *
                   div(qfact((a / m).qshift(q, 1), 2 * r, fs, o), qfact(m, 2 * r, fs, o), o) *
                   NomeSeries::from_monomial((k / a).pow(r));
        };
        NomeSeries beta = NomeSeries::zero();
        for (long r = 0; r <= n; ++r) {
            NomeSeries t = theta_ratio(m, 3 * r, fs, o);
            t = t * div(qfact_multi({(a / m).qshift(q, 1), b * m / a, m / b}, r, fs, o),
                        qfact_multi({m.pow(2).qshift(q, 1) / a, (a / b).qshift(q, 2),
                                     b.qshift(q, 2)},
                                    r, fs2, o),
                        o);
            t = t * div(qfact(m.pow(2).qshift(q, 1) / k, r, fs2, o),
                        qfact(k / m, r, fs, o), o);
            t = t * div(qfact(k / m, 2 * n - r, fs, o), qfact(q2, n - r, fs2, o), o);
            t = t * div(qfact(k, n + r, fs2, o), qfact(m.qshift(q, 1), 2 * n + r, fs, o), o);
            t = t.scaled(rat_pow(q, r * (r - 1) / 2));
            t = t * NomeSeries::from_monomial((k / m).pow(r));
            beta = beta + t;
        }
        beta = fr({m.pow(2).qshift(q, 1) / a}, {(a * k / m.pow(2)).qshift(q, 1)}, n, fs2, o) *
               beta;
        NomeSeries fwd = NomeSeries::zero();
        for (long r = 0; r <= n; ++r) fwd = fwd + kernel_M(n, r, a, k, fs2, o) * alpha(r);
        return Checks{{"pair", beta, fwd}};
    };
    return c;
}

IdentityCase make_v12_transformation() {
    IdentityCase c;
    c.name = "v12-transformation";
    c.display = "theta(mq^{3r}) sum equals a 12V11, the transformation behind the exotic pair";
    c.default_order = 16;
    c.default_n_max = 3;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        for (const char* sym : {"a", "b", "m", "k"}) pt.set(sym, M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        const Rat& q = pt.q_value;
        FactorialSpec fs(q, 2), fs2(q * q, 2);
        Monomial a = pt.at("a"), b = pt.at("b"), m = pt.at("m"), k = pt.at("k");
        NomeSeries lhs = NomeSeries::zero();
        for (long r = 0; r <= n; ++r) {
            NomeSeries t = theta_ratio(m, 3 * r, fs, o);
            t = t * div(qfact_multi({(a / m).qshift(q, 1), b * m / a, m / b}, r, fs, o),
                        qfact_multi({m.pow(2).qshift(q, 1) / a, (a / b).qshift(q, 2),
                                     b.qshift(q, 2)},
                                    r, fs2, o),
                        o);
            t = t * div(qfact_multi({m.pow(2).qshift(q, 1) / k, k.qshift(q, 2 * n),
                                     Mq(q, -2 * n)},
                                    r, fs2, o),
                        qfact_multi({k / m, (m / k).qshift(q, 1 - 2 * n),
                                     m.qshift(q, 2 * n + 1)},
                                    r, fs, o),
                        o);
            t = t.scaled(rat_pow(q, r));
            lhs = lhs + t;
        }
        NomeSeries rhs =
            fr({k / a, (a * k / m.pow(2)).qshift(q, 1)},
               {a.qshift(q, 2), m.pow(2).qshift(q, 1) / a}, n, fs2, o) *
            div(qfact(m.qshift(q, 1), 2 * n, fs, o), qfact(k / m, 2 * n, fs, o), o);
        std::vector<Monomial> tr = {b,
                                    a / b,
                                    m.pow(2).qshift(q, 1) / k,
                                    (a / m).qshift(q, 1),
                                    (a / m).qshift(q, 2),
                                    k.qshift(q, 2 * n),
                                    Mq(q, -2 * n)};
        rhs = rhs * eval_v(SeriesSpec::v(a, tr, fs2, n), o);
        return Checks{{"transform", lhs, rhs}};
    };
    return c;
}

// ---- bibasic ---------------------------------------------------------------

IdentityCase make_bibasic_def(long i) {
    IdentityCase c;
    c.name = "bibasic-def-i" + std::to_string(i);
    c.display = "closed-form bibasic pair satisfies the i = " + std::to_string(i) +
                " defining relation";
    c.default_order = 12;
    c.default_n_max = i == 3 ? 3 : 4;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        for (const char* sym : {"a", "k", "b"}) pt.set(sym, M(s.rational()));
        return pt;
    };
    c.eval = [i](const ParamPoint& pt, long n, int o) {
        FactorialSpec fs(pt.q_value, 2);
        BibasicPair pair = bibasic_closed_form(i, pt.at("a"), pt.at("k"), pt.at("b"), fs);
        NomeSeries fwd = NomeSeries::zero();
        for (long r = 0; r <= n; ++r)
            fwd = fwd + bibasic_kernel(i, n, r, pair.a, pair.k, fs, o) * pair.A(r, o);
        return Checks{{"relation", fwd, pair.B(n, o)}};
    };
    return c;
}

IdentityCase make_bibasic_closed_form() {
    IdentityCase c;
    c.name = "bibasic-closed-form";
    c.display = "closed-form pairs for i = 1, 2, 3 plus i = 1 kernel consistency";
    c.default_order = 12;
    c.default_n_max = 3;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        for (const char* sym : {"a", "k", "b"}) pt.set(sym, M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        FactorialSpec fs(pt.q_value, 2);
        Monomial a = pt.at("a"), k = pt.at("k"), b = pt.at("b");
        Checks out;
        for (long i = 1; i <= 3; ++i) {
            BibasicPair pair = bibasic_closed_form(i, a, k, b, fs);
            NomeSeries fwd = NomeSeries::zero();
            for (long r = 0; r <= n; ++r)
                fwd = fwd + bibasic_kernel(i, n, r, a, k, fs, o) * pair.A(r, o);
            out.push_back({"i=" + std::to_string(i), fwd, pair.B(n, o)});
        }
        out.push_back({"i=1-kernel", bibasic_kernel(1, n, n / 2, a, k, fs, o),
                       kernel_M(n, n / 2, a, k, fs, o)});
        return out;
    };
    return c;
}

IdentityCase make_lift2() {
    IdentityCase c;
    c.name = "lift2";
    c.display = "i = 2 bibasic pair lifted to a WP pair at (a,k;q^2,p), m free";
    c.default_order = 12;
    c.default_n_max = 3;
    c.sample = [](Sampler& s) {
        ParamPoint pt = base_point(s);
        for (const char* sym : {"a", "m", "b", "k"}) pt.set(sym, M(s.rational()));
        return pt;
    };
    c.eval = [](const ParamPoint& pt, long n, int o) {
        FactorialSpec fs(pt.q_value, 2);
        BibasicPair input =
            bibasic_closed_form(2, pt.at("a"), pt.at("m"), pt.at("b"), fs);
        WPPair wp = lift_bibasic2(input, pt.at("k"));
        NomeSeries fwd = NomeSeries::zero();
        for (long r = 0; r <= n; ++r)
            fwd = fwd + kernel_M(n, r, wp.a(), wp.k(), wp.fs(), o) * wp.alpha(r, o);
        return Checks{{"pair", wp.beta(n, o), fwd}};
    };
    return c;
}

IdentityCase make_lift3_probe() {
    IdentityCase c;
    c.name = "lift3-probe";
    c.display = "exponent-law probe for the i = 3 lift (driven by probe-lift3 / the harness)";
    c.default_order = 12;
    c.default_n_max = 3;
    c.sample = [](Sampler& s) { return base_point(s); };
    c.eval = [](const ParamPoint&, long, int) { return Checks{}; };
    return c;
}

std::vector<IdentityCase> build_registry() {
    std::vector<IdentityCase> cases;
    cases.push_back(make_inverse(false));
    cases.push_back(make_inverse(true));
    cases.push_back(make_rogers_delta());
    cases.push_back(make_lemma1(true));
    cases.push_back(make_lemma1(false));
    cases.push_back(make_lemma2());
    cases.push_back(make_elliptic_jackson());
    cases.push_back(make_theta_quotient());
    cases.push_back(make_theta_square());
    cases.push_back(make_fact_ratio_squares());
    cases.push_back(make_sm_shifts());
    cases.push_back(make_v_to_w());
    cases.push_back(make_unit_pair(false));
    cases.push_back(make_unit_pair(true));
    cases.push_back(make_spiridonov_pair());
    cases.push_back(make_1413b());
    cases.push_back(make_1413b_limit());
    cases.push_back(make_1413c());
    cases.push_back(make_1413c_limit());
    cases.push_back(make_w12_nearly_poised());
    cases.push_back(make_w12_bailey());
    cases.push_back(make_new_bibasic(false));
    cases.push_back(make_new_bibasic(true));
    cases.push_back(make_v14_lambda());
    cases.push_back(make_exotic_pair());
    cases.push_back(make_v12_transformation());
    cases.push_back(make_bibasic_def(2));
    cases.push_back(make_bibasic_def(3));
    cases.push_back(make_bibasic_closed_form());
    cases.push_back(make_lift2());
    cases.push_back(make_lift3_probe());
    std::sort(cases.begin(), cases.end(),
              [](const IdentityCase& x, const IdentityCase& y) { return x.name < y.name; });
    return cases;
}

}  // namespace

const std::vector<IdentityCase>& registry() {
    static const std::vector<IdentityCase> cases = build_registry();
    return cases;
}

const IdentityCase* find_case(const std::string& name) {
    for (const auto& c : registry())
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace wpb
