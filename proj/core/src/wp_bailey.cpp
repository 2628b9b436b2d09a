#include "wpb/wp_bailey.hpp"

namespace wpb {

namespace {

NomeSeries P(const Monomial& x, long n) { return NomeSeries::from_monomial(x.pow(n)); }

NomeSeries fratio(const Monomial& num, const Monomial& den, long n, const FactorialSpec& fs,
                  int order) {
    return div(qfact(num, n, fs, order), qfact(den, n, fs, order), order);
}

std::vector<long> full_range(long n) {
    std::vector<long> r(n + 1);
    for (long i = 0; i <= n; ++i) r[i] = i;
    return r;
}

}  // namespace

const char* tag_name(TransformTag tag) {
    switch (tag) {
        case TransformTag::T1: return "T1";
        case TransformTag::T2: return "T2";
        case TransformTag::T2b: return "T2b";
        case TransformTag::T3: return "T3";
        case TransformTag::T4: return "T4";
        case TransformTag::T5: return "T5";
        case TransformTag::T1e: return "T1e";
        case TransformTag::T3e: return "T3e";
        case TransformTag::T5e: return "T5e";
        case TransformTag::Tnew1: return "Tnew1";
        case TransformTag::Tnew2: return "Tnew2";
    }
    return "?";
}

std::optional<TransformTag> tag_from_name(const std::string& name) {
    static const std::pair<const char*, TransformTag> table[] = {
        {"T1", TransformTag::T1},       {"T2", TransformTag::T2},
        {"T2b", TransformTag::T2b},     {"T3", TransformTag::T3},
        {"T4", TransformTag::T4},       {"T5", TransformTag::T5},
        {"T1e", TransformTag::T1e},     {"T3e", TransformTag::T3e},
        {"T5e", TransformTag::T5e},     {"Tnew1", TransformTag::Tnew1},
        {"Tnew2", TransformTag::Tnew2},
    };
    for (const auto& [s, t] : table)
        if (name == s) return t;
    return std::nullopt;
}

WPPair::WPPair(Monomial a, Monomial k, FactorialSpec fs, Evaluator alpha, Evaluator beta)
    : a_(std::move(a)),
      k_(std::move(k)),
      fs_(std::move(fs)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      amemo_(std::make_shared<Memo>()),
      bmemo_(std::make_shared<Memo>()) {}

NomeSeries WPPair::alpha(long n, int order) const {
    auto key = std::make_pair(n, order);
    if (auto it = amemo_->find(key); it != amemo_->end()) return it->second;
    NomeSeries v = alpha_(n, order);
    amemo_->emplace(key, v);
    return v;
}

NomeSeries WPPair::beta(long n, int order) const {
    auto key = std::make_pair(n, order);
    if (auto it = bmemo_->find(key); it != bmemo_->end()) return it->second;
    NomeSeries v = beta_(n, order);
    bmemo_->emplace(key, v);
    return v;
}

NomeSeries kernel_M(long n, long r, const Monomial& a, const Monomial& k,
                    const FactorialSpec& spec, int order) {
    if (r < 0 || r > n) throw IndexRangeError("kernel_M needs 0 <= r <= n");
    const Rat& q = spec.q;
    return fratio(k / a, Monomial(q), n - r, spec, order) *
           fratio(k, a.qshift(q, 1), n + r, spec, order);
}

NomeSeries kernel_Mtilde(long n, long r, const Monomial& a, const Monomial& k,
                         const FactorialSpec& spec, int order) {
    if (r < 0 || r > n) throw IndexRangeError("kernel_Mtilde needs 0 <= r <= n");
    const Rat& q = spec.q;
    return theta_shift_quotient(a, n, spec, order) * theta_shift_quotient(k, r, spec, order) *
           fratio(a / k, Monomial(q), n - r, spec, order) *
           fratio(a, k.qshift(q, 1), n + r, spec, order) * P(k / a, n - r);
}

std::vector<NomeSeries> forward(const WPPair& pair, long n_max, int order) {
    std::vector<NomeSeries> out;
    for (long n = 0; n <= n_max; ++n) {
        NomeSeries s = NomeSeries::zero();
        for (long r = 0; r <= n; ++r)
            s = s + kernel_M(n, r, pair.a(), pair.k(), pair.fs(), order) * pair.alpha(r, order);
        out.push_back(s);
    }
    return out;
}

std::vector<NomeSeries> backward(const WPPair& pair, long n_max, int order) {
    std::vector<NomeSeries> out;
    for (long n = 0; n <= n_max; ++n) {
        NomeSeries s = NomeSeries::zero();
        for (long r = 0; r <= n; ++r)
            s = s + kernel_Mtilde(n, r, pair.a(), pair.k(), pair.fs(), order) *
                        pair.beta(r, order);
        out.push_back(s);
    }
    return out;
}

WPPair unit_pair(const Monomial& a, const Monomial& k, const FactorialSpec& spec) {
    Rat q = spec.q;
    Evaluator alpha = [a, k, spec, q](long n, int order) {
        return theta_shift_quotient(a, n, spec, order) *
               div(qfact_multi({a, a / k}, n, spec, order),
                   qfact_multi({Monomial(q), k.qshift(q, 1)}, n, spec, order), order) *
               P(k / a, n);
    };
    Evaluator beta = [](long n, int) {
        return n == 0 ? NomeSeries::one() : NomeSeries::zero();
    };
    return WPPair(a, k, spec, std::move(alpha), std::move(beta));
}

TransformData make_transform(const TransformStep& step, const Monomial& in_a,
                             const FactorialSpec& in_fs) {
    TransformData td(in_fs);
    const Monomial a = in_a;
    const Monomial K = step.out_k;
    const Rat q = in_fs.q;
    const Monomial Q(q);
    const FactorialSpec fs = in_fs;

    bool basic_tag = step.tag == TransformTag::T1 || step.tag == TransformTag::T2 ||
                     step.tag == TransformTag::T2b || step.tag == TransformTag::T3 ||
                     step.tag == TransformTag::T4 || step.tag == TransformTag::T5;
    if (basic_tag && !fs.basic())
        throw ConstraintViolation(std::string(tag_name(step.tag)) + " needs the basic mode");

    td.out_a = a;
    td.out_k = K;
    td.out_fs = fs;
    td.alpha_index = [](long n) { return std::optional<long>(n); };
    td.L = [](long, int) { return NomeSeries::one(); };
    td.beta_indices = full_range;

    switch (step.tag) {
        case TransformTag::T1:
        case TransformTag::T1e: {
            if (step.b.is_zero() || step.c.is_zero())
                throw ConstraintViolation("T1 needs parameters b and c");
            Monomial b = step.b, c = step.c;
            Monomial m = (b * c * K) / a.qshift(q, 1);
            Monomial aq = a.qshift(q, 1), mq = m.qshift(q, 1);
            Monomial km = K / m;
            td.m = m;
            td.L = [=](long n, int o) {
                return div(qfact_multi({b, c}, n, fs, o),
                           qfact_multi({aq / b, aq / c}, n, fs, o), o) *
                       P(km, n);
            };
            td.N = [=](long n, long r, int o) {
                return div(qfact_multi({mq / b, mq / c}, n, fs, o),
                           qfact_multi({aq / b, aq / c}, n, fs, o), o) *
                       theta_shift_quotient(m, r, fs, o) *
                       div(qfact_multi({b, c}, r, fs, o),
                           qfact_multi({mq / b, mq / c}, r, fs, o), o) *
                       fratio(km, Q, n - r, fs, o) * fratio(K, mq, n + r, fs, o) * P(km, r);
            };
            break;
        }
        case TransformTag::T2: {
            Monomial m = a.pow(2).qshift(q, 1) / K;
            Monomial km = K / m;
            td.m = m;
            td.L = [=](long n, int o) { return fratio(m, K, 2 * n, fs, o) * P(km, n); };
            td.N = [=](long n, long r, int o) {
                return fratio(km, Q, n - r, fs, o) * P(km, r);
            };
            break;
        }
        case TransformTag::T2b: {
            Monomial m = a.pow(2) / K;
            if (K.e != 0 || m.e != 0)
                throw ConstraintViolation("T2b needs nome-free k and m");
            Rat kr = step.k_root, mr = step.m_root;
            if (kr * kr != K.c || mr * mr != m.c)
                throw MissingRoot("T2b needs declared roots of k and m");
            Rat sg(step.sigma);
            if (sg != 1 && sg != -1) throw ConstraintViolation("sigma must be +-1");
            Monomial km = K / m;
            td.m = m;
            auto kfac = [=](long n) {
                Rat den = Rat(1) - sg * kr * rat_pow(q, n);
                if (den == 0) throw DivisionByZeroSeries("T2b prefactor");
                return (Rat(1) - sg * kr) / den;
            };
            auto mfac = [=](long n) {
                Rat den = Rat(1) + sg * mr;
                if (den == 0) throw DivisionByZeroSeries("T2b prefactor");
                return (Rat(1) + sg * mr * rat_pow(q, n)) / den;
            };
            td.L = [=](long n, int o) {
                return fratio(m, K, 2 * n, fs, o).scaled(kfac(n) * mfac(n)) * P(km, n);
            };
            td.N = [=](long n, long r, int o) {
                return fratio(km, Q, n - r, fs, o).scaled(kfac(n) * mfac(r)) * P(km, r);
            };
            break;
        }
        case TransformTag::T3:
        case TransformTag::T3e: {
            Monomial m = K / a.qshift(q, 1);
            FactorialSpec sq = fs.squared();
            Monomial m2 = m.pow(2), m2q2 = m.pow(2).qshift(sq.q, 1);
            Monomial Q2(sq.q);
            td.m = m;
            td.out_a = a.pow(2);
            td.out_fs = sq;
            td.N = [=](long n, long r, int o) {
                return fratio(-m.qshift(q, 1), -a.qshift(q, 1), 2 * n, fs, o) *
                       theta_shift_quotient(m, r, fs, o) *
                       fratio(K / m2, Q2, n - r, sq, o) * fratio(K, m2q2, n + r, sq, o) *
                       P(m / a, n - r);
            };
            break;
        }
        case TransformTag::T4: {
            Monomial m = K / a;
            FactorialSpec sq = fs.squared();
            Monomial m2 = m.pow(2), m2q2 = m.pow(2).qshift(sq.q, 1);
            Monomial Q2(sq.q);
            td.m = m;
            td.out_a = a.pow(2);
            td.out_fs = sq;
            td.L = [=](long n, int o) {
                return theta_shift_quotient(-a, n, fs, o)
                    .scaled(rat_pow(q, -n));
            };
            td.N = [=](long n, long r, int o) {
                return fratio(-m.qshift(q, 1), -a, 2 * n, fs, o)
                           .scaled(rat_pow(q, -n)) *
                       theta_shift_quotient(m, r, fs, o) *
                       fratio(K / m2, Q2, n - r, sq, o) * fratio(K, m2q2, n + r, sq, o) *
                       P(m / a, n - r);
            };
            break;
        }
        case TransformTag::T5:
        case TransformTag::T5e: {
            Rat qq = step.q_root;
            if (qq * qq != q) throw MissingRoot("T5 needs the declared root of the base");
            FactorialSpec out(qq, fs.nome_exp);
            Monomial m = K.pow(2) / a;
            Monomial Qout(qq);
            td.m = m;
            td.out_fs = out;
            td.alpha_index = [](long n) {
                return n % 2 == 0 ? std::optional<long>(n / 2) : std::nullopt;
            };
            td.beta_indices = [](long n) { return full_range(n / 2); };
            td.N = [=](long n, long r, int o) {
                return fratio(m.qshift(qq, 1), a.qshift(qq, 1), n, fs, o) *
                       theta_shift_quotient(m, 2 * r, out, o) *
                       fratio(K / m, Qout, n - 2 * r, out, o) *
                       fratio(K, m.qshift(qq, 1), n + 2 * r, out, o) * P(-(K / a), n - 2 * r);
            };
            break;
        }
        case TransformTag::Tnew1: {
            Monomial m = a.pow(2) / K;
            FactorialSpec fs2 = fs.base_squared();
            Monomial Q2(fs2.q);
            td.m = m;
            td.L = [=](long n, int o) {
                return fratio(m.qshift(q, 1), K.qshift(q, 1), n, fs2, o) * P(-(a / m), n);
            };
            td.beta_indices = [](long n) {
                std::vector<long> r;
                for (long i = n % 2; i <= n; i += 2) r.push_back(i);
                return r;
            };
            td.N = [=](long n, long r, int o) {
                return theta_shift_quotient(m, r, fs, o) *
                       fratio(K / m, Q2, (n - r) / 2, fs2, o) *
                       fratio(K, m.qshift(q, 2), (n + r) / 2, fs2, o) * P(-(a / m), r);
            };
            break;
        }
        case TransformTag::Tnew2: {
            Rat qr = step.q_root, kr = step.k_root;
            if (qr * qr != q) throw MissingRoot("Tnew2 needs the declared root of the base");
            if (K.e != 0 || kr * kr != K.c)
                throw MissingRoot("Tnew2 needs the declared root of k");
            if (fs.nome_exp % 4 != 0)
                throw ConstraintViolation("Tnew2 needs a square nome");
            FactorialSpec fsh(qr, fs.nome_exp / 2);
            Monomial kk(kr);
            Monomial m = a / kk.qshift(qr, 1);
            Monomial m2 = m.pow(2);
            td.m = m2;
            td.L = [=](long n, int o) {
                return fratio(-m.qshift(qr, 1), -kk.qshift(qr, 1), 2 * n, fsh, o) *
                       P(a / m2.qshift(qr, 1), n);
            };
            td.N = [=](long n, long r, int o) {
                return div(NomeSeries::one().truncated(o),
                           theta_shift_quotient(-kk, n, fsh, o), o)
                           .scaled(rat_pow(qr, -n)) *
                       theta_shift_quotient(m2, r, fs, o) *
                       fratio(kk / m, Monomial(qr), n - r, fsh, o) *
                       fratio(kk, m.qshift(qr, 1), n + r, fsh, o) * P(a / m2, r);
            };
            break;
        }
    }
    return td;
}

WPPair apply_transform(const TransformStep& step, const WPPair& input) {
    TransformData td = make_transform(step, input.a(), input.fs());
    if (input.k() != td.m)
        throw ConstraintViolation(std::string("input pair is at k = ") + input.k().str() +
                                  " but " + tag_name(step.tag) + " needs m = " + td.m.str());
    WPPair in = input;  // shares the memo tables
    TransformData tdc = td;
    Evaluator alpha = [in, tdc](long n, int order) {
        auto i = tdc.alpha_index(n);
        if (!i) return NomeSeries::zero();
        return tdc.L(n, order) * in.alpha(*i, order);
    };
    Evaluator beta = [in, tdc](long n, int order) {
        NomeSeries s = NomeSeries::zero();
        for (long r : tdc.beta_indices(n)) s = s + tdc.N(n, r, order) * in.beta(r, order);
        return s;
    };
    WPPair out(td.out_a, td.out_k, td.out_fs, std::move(alpha), std::move(beta));
    out.provenance = input.provenance;
    TransformStep recorded = step;
    recorded.derived_m = td.m;
    out.provenance.push_back(recorded);
    return out;
}

PairCheck verify_pair(const WPPair& pair, long n_max, int order) {
    PairCheck res;
    res.pass = true;
    res.order = order;
    for (long n = 0; n <= n_max; ++n) {
        try {
            NomeSeries rhs = NomeSeries::zero();
            for (long r = 0; r <= n; ++r)
                rhs = rhs +
                      kernel_M(n, r, pair.a(), pair.k(), pair.fs(), order) * pair.alpha(r, order);
            SeriesEq eq = series_eq(pair.beta(n, order), rhs);
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

}  // namespace wpb
