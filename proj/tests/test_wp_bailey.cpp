#include <random>

#include "doctest.h"
#include "wpb/bibasic.hpp"

using namespace wpb;

namespace {

NomeSeries mono_pow(const Monomial& x, long n) {
    return NomeSeries::from_monomial(x.pow(n));
}

// Random alpha sequence for linearity / round-trip checks.
Evaluator random_alpha(unsigned seed) {
    auto vals = std::make_shared<std::vector<Rat>>();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 16; ++i) vals->push_back(Rat(d(rng), 1 + (i % 4)));
    return [vals](long n, int) { return NomeSeries::constant((*vals)[n]); };
}

}  // namespace

TEST_CASE("kernel_M examples") {
    FactorialSpec basic(Rat(3));
    Monomial a(Rat(4)), k(Rat(2));
    CHECK(kernel_M(0, 0, a, k, basic, 12) == NomeSeries::one());
    CHECK(kernel_M(1, 0, a, k, basic, 12) == NomeSeries::constant(Rat(-1, 44)));
}

TEST_CASE("kernel_M well-poised refactoring") {
    Rat q(2, 3);
    FactorialSpec fs(q, 2);
    Monomial a(Rat(4)), k(Rat(5, 2));
    for (long n = 0; n <= 4; ++n)
        for (long r = 0; r <= n; ++r) {
            NomeSeries lhs = kernel_M(n, r, a, k, fs, 12);
            NomeSeries rhs =
                div(qfact_multi({k, k / a}, n, fs, 14),
                    qfact_multi({Monomial(q), a.qshift(q, 1)}, n, fs, 14)) *
                div(qfact_multi({k.qshift(q, n), Monomial(rat_pow(q, -n))}, r, fs, 14),
                    qfact_multi({a.qshift(q, 1 - n) / k, a.qshift(q, n + 1)}, r, fs, 14)) *
                mono_pow(a.qshift(q, 1) / k, r);
            CHECK(series_eq(lhs, rhs).equal);
        }
}

TEST_CASE("inverse relations, basic and elliptic") {
    struct Pt {
        Rat a, k, q;
    };
    for (const Pt& pt : {Pt{Rat(4), Rat(2), Rat(3)}, Pt{Rat(5, 2), Rat(7, 3), Rat(2, 3)},
                         Pt{Rat(-3), Rat(5), Rat(3, 5)}}) {
        Monomial a(pt.a), k(pt.k);
        FactorialSpec basic(pt.q);
        for (long n = 0; n <= 6; ++n)
            for (long r = 0; r <= n; ++r) {
                NomeSeries s1 = NomeSeries::zero(), s2 = NomeSeries::zero();
                for (long s = r; s <= n; ++s) {
                    s1 = s1 + kernel_Mtilde(n, s, a, k, basic, 12) *
                                  kernel_M(s, r, a, k, basic, 12);
                    s2 = s2 + kernel_M(n, s, a, k, basic, 12) *
                                  kernel_Mtilde(s, r, a, k, basic, 12);
                }
                CHECK(s1 == NomeSeries::constant(Rat(n == r ? 1 : 0)));
                CHECK(s2 == NomeSeries::constant(Rat(n == r ? 1 : 0)));
            }
        FactorialSpec ell(pt.q, 2);
        for (long n = 0; n <= 5; ++n)
            for (long r = 0; r <= n; ++r) {
                NomeSeries s1 = NomeSeries::zero(), s2 = NomeSeries::zero();
                for (long s = r; s <= n; ++s) {
                    s1 = s1 +
                         kernel_Mtilde(n, s, a, k, ell, 12) * kernel_M(s, r, a, k, ell, 12);
                    s2 = s2 +
                         kernel_M(n, s, a, k, ell, 12) * kernel_Mtilde(s, r, a, k, ell, 12);
                }
                CHECK(s1 == NomeSeries::constant(Rat(n == r ? 1 : 0), 12));
                CHECK(s2 == NomeSeries::constant(Rat(n == r ? 1 : 0), 12));
            }
    }
}

TEST_CASE("unit pair") {
    FactorialSpec basic(Rat(3));
    Monomial a(Rat(4)), k(Rat(2));
    WPPair u = unit_pair(a, k, basic);
    CHECK(u.alpha(0, 12) == NomeSeries::one());
    CHECK(u.beta(0, 12) == NomeSeries::one());
    CHECK(u.alpha(1, 12) == NomeSeries::constant(Rat(7, 4)));

    // forward reproduces the Kronecker delta
    auto betas = forward(u, 6, 12);
    for (long n = 0; n <= 6; ++n)
        CHECK(betas[n] == NomeSeries::constant(Rat(n == 0 ? 1 : 0)));
    CHECK(verify_pair(u, 6, 12).pass);

    // backward of the delta reproduces the closed-form alpha
    auto alphas = backward(u, 6, 12);
    for (long n = 0; n <= 6; ++n) CHECK(series_eq(alphas[n], u.alpha(n, 12)).equal);

    // elliptic flavour
    WPPair ue = unit_pair(a, k, FactorialSpec(Rat(2, 3), 2));
    CHECK(verify_pair(ue, 5, 12).pass);
    auto ae = backward(ue, 5, 12);
    for (long n = 0; n <= 5; ++n) CHECK(series_eq(ae[n], ue.alpha(n, 12)).equal);
}

TEST_CASE("forward is linear and maps zero to zero") {
    FactorialSpec fs(Rat(2, 3), 2);
    Monomial a(Rat(4)), k(Rat(5, 2));
    Evaluator zero = [](long, int) { return NomeSeries::zero(); };
    WPPair pz(a, k, fs, zero, zero);
    for (const auto& b : forward(pz, 4, 12)) CHECK(b.is_zero());

    Evaluator a1 = random_alpha(7), a2 = random_alpha(8);
    WPPair p1(a, k, fs, a1, zero), p2(a, k, fs, a2, zero);
    WPPair p12(a, k, fs,
               [a1, a2](long n, int o) { return a1(n, o) + a2(n, o); }, zero);
    auto f1 = forward(p1, 4, 12), f2 = forward(p2, 4, 12), f12 = forward(p12, 4, 12);
    for (long n = 0; n <= 4; ++n) CHECK(series_eq(f12[n], f1[n] + f2[n]).equal);
}

TEST_CASE("backward of forward is the identity") {
    FactorialSpec fs(Rat(2, 3), 2);
    Monomial a(Rat(4)), k(Rat(5, 2));
    Evaluator al = random_alpha(99);
    WPPair p(a, k, fs, al, [](long, int) { return NomeSeries::zero(); });
    auto betas = forward(p, 5, 12);
    WPPair pb(a, k, fs, al, [betas](long n, int) { return betas[n]; });
    auto back = backward(pb, 5, 12);
    for (long n = 0; n <= 5; ++n) CHECK(series_eq(back[n], al(n, 12)).equal);
}

TEST_CASE("proof-level kernel identities NMML / NMML2 / NMMe / NMM2e") {
    Rat q(2, 3);

    SUBCASE("NMML: T2b with m = a^2/k") {
        FactorialSpec fs(q);
        Monomial a(Rat(3)), k(Rat(4));
        for (int sigma : {1, -1}) {
            TransformStep st{TransformTag::T2b, k};
            st.sigma = sigma;
            st.k_root = Rat(2);
            st.m_root = Rat(3, 2);
            TransformData td = make_transform(st, a, fs);
            for (long n = 0; n <= 4; ++n)
                for (long r = 0; r <= n; ++r) {
                    NomeSeries lhs = NomeSeries::zero();
                    for (long s = r; s <= n; ++s)
                        lhs = lhs + td.N(n, s, 16) * kernel_M(s, r, a, td.m, fs, 16);
                    NomeSeries rhs = kernel_M(n, r, td.out_a, k, td.out_fs, 16) * td.L(r, 16);
                    CHECK(series_eq(lhs, rhs).equal);
                }
        }
    }

    SUBCASE("NMML2: T4 with m = k/a") {
        FactorialSpec fs(q);
        Monomial a(Rat(3)), k(Rat(5));
        TransformStep st{TransformTag::T4, k};
        TransformData td = make_transform(st, a, fs);
        for (long n = 0; n <= 4; ++n)
            for (long r = 0; r <= n; ++r) {
                NomeSeries lhs = NomeSeries::zero();
                for (long s = r; s <= n; ++s)
                    lhs = lhs + td.N(n, s, 16) * kernel_M(s, r, a, td.m, fs, 16);
                NomeSeries rhs = kernel_M(n, r, td.out_a, k, td.out_fs, 16) * td.L(r, 16);
                CHECK(series_eq(lhs, rhs).equal);
            }
    }

    SUBCASE("NMMe: T3e with m = k/aq") {
        FactorialSpec fs(q, 2);
        Monomial a(Rat(3)), k(Rat(5));
        TransformStep st{TransformTag::T3e, k};
        TransformData td = make_transform(st, a, fs);
        for (long n = 0; n <= 4; ++n)
            for (long r = 0; r <= n; ++r) {
                NomeSeries lhs = NomeSeries::zero();
                for (long s = r; s <= n; ++s)
                    lhs = lhs + td.N(n, s, 14) * kernel_M(s, r, a, td.m, fs, 14);
                NomeSeries rhs = kernel_M(n, r, td.out_a, k, td.out_fs, 14);
                CHECK(series_eq(lhs, rhs).equal);
            }
    }

    SUBCASE("NMM2e: T5e with m = k^2/a") {
        FactorialSpec in_fs(Rat(4, 9), 2);  // base q^2
        Monomial a(Rat(4)), k(Rat(6));
        TransformStep st{TransformTag::T5e, k};
        st.q_root = q;
        TransformData td = make_transform(st, a, in_fs);
        for (long n = 0; n <= 4; ++n)
            for (long r = 0; 2 * r <= n; ++r) {
                NomeSeries lhs = NomeSeries::zero();
                for (long s = r; 2 * s <= n; ++s)
                    lhs = lhs + td.N(n, s, 14) * kernel_M(s, r, a, td.m, in_fs, 14);
                NomeSeries rhs = kernel_M(n, 2 * r, a, k, td.out_fs, 14);
                CHECK(series_eq(lhs, rhs).equal);
            }
    }
}

TEST_CASE("every transform maps the unit pair to a verified pair") {
    Rat q(2, 3);

    auto run = [](TransformStep st, const Monomial& a, const FactorialSpec& fs, long n_max,
                  int order) {
        TransformData td = make_transform(st, a, fs);
        WPPair in = unit_pair(a, td.m, fs);
        WPPair out = apply_transform(st, in);
        PairCheck pc = verify_pair(out, n_max, order);
        std::string tn = tag_name(st.tag);
        CAPTURE(tn);
        CAPTURE(pc.note);
        CHECK(pc.pass);
        return out;
    };

    FactorialSpec basic(q), ell(q, 2);
    Monomial a(Rat(3)), k(Rat(5));

    TransformStep t1{TransformTag::T1, k};
    t1.b = Monomial(Rat(5, 2));
    t1.c = Monomial(Rat(7));
    run(t1, a, basic, 5, 16);
    TransformStep t1e = t1;
    t1e.tag = TransformTag::T1e;
    run(t1e, a, ell, 4, 14);

    run(TransformStep{TransformTag::T2, k}, a, basic, 5, 16);

    TransformStep t2b{TransformTag::T2b, Monomial(Rat(25, 4))};
    t2b.k_root = Rat(5, 2);
    t2b.m_root = Rat(6, 5);
    run(t2b, a, basic, 5, 16);

    run(TransformStep{TransformTag::T3, k}, a, basic, 5, 16);
    run(TransformStep{TransformTag::T3e, k}, a, ell, 4, 14);
    run(TransformStep{TransformTag::T4, k}, a, basic, 5, 16);

    TransformStep t5{TransformTag::T5, Monomial(Rat(6))};
    t5.q_root = q;
    run(t5, Monomial(Rat(4)), FactorialSpec(Rat(4, 9)), 5, 16);
    TransformStep t5e = t5;
    t5e.tag = TransformTag::T5e;
    WPPair p5e = run(t5e, Monomial(Rat(4)), FactorialSpec(Rat(4, 9), 2), 4, 14);
    // odd-index alpha vanishes exactly
    CHECK(p5e.alpha(1, 14).is_zero());
    CHECK(p5e.alpha(3, 14).is_zero());

    run(TransformStep{TransformTag::Tnew1, k}, a, ell, 4, 14);

    TransformStep tn2{TransformTag::Tnew2, Monomial(Rat(9))};
    tn2.k_root = Rat(3);
    tn2.q_root = q;
    run(tn2, Monomial(Rat(5)), FactorialSpec(Rat(4, 9), 4), 3, 16);
}

TEST_CASE("T2b sigma negation invariance") {
    Rat q(2, 3);
    FactorialSpec fs(q);
    Monomial a(Rat(3)), k(Rat(4));
    TransformStep s1{TransformTag::T2b, k};
    s1.sigma = 1;
    s1.k_root = Rat(2);
    s1.m_root = Rat(3, 2);
    TransformStep s2 = s1;
    s2.sigma = -1;
    s2.k_root = Rat(-2);
    s2.m_root = Rat(-3, 2);
    TransformData d1 = make_transform(s1, a, fs), d2 = make_transform(s2, a, fs);
    for (long n = 0; n <= 4; ++n) {
        CHECK(series_eq(d1.L(n, 12), d2.L(n, 12)).equal);
        for (long r = 0; r <= n; ++r) CHECK(series_eq(d1.N(n, r, 12), d2.N(n, r, 12)).equal);
    }
}

TEST_CASE("p to 0 consistency of the elliptic transforms") {
    Rat q(2, 3);
    Monomial a(Rat(3)), k(Rat(5));

    auto compare = [](const WPPair& ell, const WPPair& bas, long n_max, int order) {
        for (long n = 0; n <= n_max; ++n) {
            CHECK(ell.alpha(n, order).constant_term() == bas.alpha(n, order).constant_term());
            CHECK(ell.beta(n, order).constant_term() == bas.beta(n, order).constant_term());
        }
    };

    {
        TransformStep st{TransformTag::T1e, k};
        st.b = Monomial(Rat(5, 2));
        st.c = Monomial(Rat(7));
        TransformData td = make_transform(st, a, FactorialSpec(q, 2));
        WPPair ell = apply_transform(st, unit_pair(a, td.m, FactorialSpec(q, 2)));
        TransformStep sb = st;
        sb.tag = TransformTag::T1;
        WPPair bas = apply_transform(sb, unit_pair(a, td.m, FactorialSpec(q)));
        compare(ell, bas, 4, 14);
    }
    {
        TransformStep st{TransformTag::T3e, k};
        TransformData td = make_transform(st, a, FactorialSpec(q, 2));
        WPPair ell = apply_transform(st, unit_pair(a, td.m, FactorialSpec(q, 2)));
        WPPair bas = apply_transform(TransformStep{TransformTag::T3, k},
                                     unit_pair(a, td.m, FactorialSpec(q)));
        compare(ell, bas, 4, 14);
    }
    {
        Monomial a5(Rat(4)), k5(Rat(6));
        TransformStep st{TransformTag::T5e, k5};
        st.q_root = q;
        TransformData td = make_transform(st, a5, FactorialSpec(Rat(4, 9), 2));
        WPPair ell = apply_transform(st, unit_pair(a5, td.m, FactorialSpec(Rat(4, 9), 2)));
        TransformStep sb = st;
        sb.tag = TransformTag::T5;
        WPPair bas = apply_transform(sb, unit_pair(a5, td.m, FactorialSpec(Rat(4, 9))));
        compare(ell, bas, 4, 14);
    }
}

TEST_CASE("corrupted beta is caught") {
    Rat q(2, 3);
    Monomial a(Rat(3)), k(Rat(5));
    FactorialSpec fs(q, 2);
    WPPair u = unit_pair(a, k, fs);
    WPPair bad(a, k, fs, [u](long n, int o) { return u.alpha(n, o); },
               [u, q](long n, int o) {
                   NomeSeries b = u.beta(n, o);
                   return n == 2 ? b + NomeSeries::one().truncated(o) : b;
               });
    PairCheck pc = verify_pair(bad, 4, 12);
    CHECK_FALSE(pc.pass);
    CHECK(pc.first_fail == 2);
}

TEST_CASE("Spiridonov pair closed form from T3e") {
    Rat q(2, 3);
    FactorialSpec fs(q, 2);
    Monomial a(Rat(3)), k(Rat(5));
    TransformStep st{TransformTag::T3e, k};
    TransformData td = make_transform(st, a, fs);
    WPPair out = apply_transform(st, unit_pair(a, td.m, fs));
    FactorialSpec sq = fs.squared();
    Monomial aq = a.qshift(q, 1), m = td.m;
    for (long n = 0; n <= 4; ++n) {
        NomeSeries ac = theta_shift_quotient(a, n, fs, 14) *
                        div(qfact_multi({a, a.pow(2).qshift(q, 1) / k}, n, fs, 14),
                            qfact_multi({Monomial(q), k / a}, n, fs, 14)) *
                        mono_pow(k / a.pow(2).qshift(q, 1), n);
        CHECK(series_eq(out.alpha(n, 14), ac).equal);
        NomeSeries bc =
            div(qfact(-(k / a), 2 * n, fs, 14), qfact(-aq, 2 * n, fs, 14)) *
            div(qfact_multi({k, a.pow(2).qshift(sq.q, 1) / k}, n, sq, 14),
                qfact_multi({Monomial(sq.q), k.pow(2) / a.pow(2)}, n, sq, 14)) *
            mono_pow(m / a, n);
        CHECK(series_eq(out.beta(n, 14), bc).equal);
    }
}

TEST_CASE("T5e intermediate pair matches the proof display") {
    Rat q(2, 3);
    FactorialSpec fs(q, 2);             // output base (q, p)
    FactorialSpec in_fs(q * q, 2);      // input base (q^2, p)
    Monomial a(Rat(4)), k(Rat(6));
    TransformStep st{TransformTag::T5e, k};
    st.q_root = q;
    TransformData td = make_transform(st, a, in_fs);
    WPPair out = apply_transform(st, unit_pair(a, td.m, in_fs));
    FactorialSpec q2p(q * q, 2);
    for (long n = 0; n <= 4; ++n) {
        NomeSeries ac;
        if (n % 2 == 0) {
            long h = n / 2;
            ac = theta_shift_quotient(a, n, fs, 14) *
                 div(qfact_multi({a, a.pow(2) / k.pow(2)}, h, q2p, 14),
                     qfact_multi({Monomial(q * q), (k.pow(2) / a).qshift(q, 2)}, h, q2p, 14)) *
                 mono_pow(k / a, n);
        } else {
            ac = NomeSeries::zero();
        }
        CHECK(series_eq(out.alpha(n, 14), ac).equal);
        NomeSeries bc =
            div(qfact((k.pow(2) / a).qshift(q, 1), n, q2p, 14),
                qfact(a.qshift(q, 1), n, q2p, 14)) *
            div(qfact_multi({k, a / k}, n, fs, 14),
                qfact_multi({Monomial(q), (k.pow(2) / a).qshift(q, 1)}, n, fs, 14)) *
            mono_pow(-(k / a), n);
        CHECK(series_eq(out.beta(n, 14), bc).equal);
    }
}

TEST_CASE("transform rejects a mismatched input pair") {
    Rat q(2, 3);
    FactorialSpec fs(q);
    Monomial a(Rat(3)), k(Rat(5));
    WPPair u = unit_pair(a, k, fs);  // k is not a^2 q / k
    CHECK_THROWS_AS(apply_transform(TransformStep{TransformTag::T2, k}, u),
                    ConstraintViolation);
    CHECK_THROWS_AS(apply_transform(TransformStep{TransformTag::T1e, k}, u),
                    ConstraintViolation);
}

TEST_CASE("bibasic closed form satisfies the defining relation") {
    Rat q(2, 3);
    FactorialSpec fs(q, 2);
    Monomial a(Rat(3)), k(Rat(5)), b(Rat(5, 2));
    for (long i : {1L, 2L, 3L}) {
        BibasicPair pr = bibasic_closed_form(i, a, k, b, fs);
        CHECK(pr.A(0, 12) == NomeSeries::one());
        CHECK(pr.B(0, 12) == NomeSeries::one());
        PairCheck pc = verify_bibasic(pr, i == 1 ? 5 : 4, 12);
        CAPTURE(i);
        CAPTURE(pc.note);
        CHECK(pc.pass);
    }
    // i = 1 agrees with the ordinary kernel
    for (long n = 0; n <= 3; ++n)
        for (long r = 0; r <= n; ++r)
            CHECK(series_eq(bibasic_kernel(1, n, r, a, k, fs, 12),
                            kernel_M(n, r, a, k, fs, 12))
                      .equal);
}

TEST_CASE("lift of the i = 2 closed form verifies") {
    Rat q(2, 3);
    FactorialSpec fs(q, 2);
    Monomial a(Rat(3)), m(Rat(5)), b(Rat(5, 2)), K(Rat(7));
    WPPair lifted = lift_bibasic2(bibasic_closed_form(2, a, m, b, fs), K);
    CHECK(lifted.alpha(0, 12) == NomeSeries::one());
    CHECK(lifted.beta(0, 12) == NomeSeries::one());
    PairCheck pc = verify_pair(lifted, 3, 12);
    CAPTURE(pc.note);
    CHECK(pc.pass);
}
