#include <random>

#include "doctest.h"
#include "wpb/nome_series.hpp"

using namespace wpb;

namespace {

NomeSeries term(long num, long den, int e, int order = NomeSeries::kExact) {
    return NomeSeries::from_monomial(Monomial(Rat(num, den), e), order);
}

// Uniform random series with the given valuation span; never the zero series.
NomeSeries random_series(std::mt19937_64& rng, int val, int len, int order) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::vector<Rat> c(len);
    for (auto& x : c) x = Rat(num(rng), den(rng));
    if (c[0] == 0) c[0] = Rat(1);
    return NomeSeries(val, std::move(c), order);
}

}  // namespace

TEST_CASE("addition: cancellation, identity, hand expansion") {
    NomeSeries a = NomeSeries::one() - term(1, 1, 2, 12);  // 1 - w^2 (mod w^12)
    NomeSeries b = term(1, 1, 2, 12);
    CHECK((a + b) == NomeSeries::one().truncated(12));

    std::mt19937_64 rng1(1);
    NomeSeries x = random_series(rng1, 0, 5, 12);
    CHECK((x + NomeSeries::zero()) == x);

    // (-1 + (5/2)w^2) + 1 = (5/2)w^2
    NomeSeries lhs = term(-1, 1, 0, 8) + term(5, 2, 2, 8) + NomeSeries::one();
    CHECK(lhs == term(5, 2, 2, 8));
    CHECK(lhs.valuation() == 2);
}

TEST_CASE("multiplication basics") {
    NomeSeries w = term(1, 1, 1);
    CHECK((NomeSeries::one() - w) * (NomeSeries::one() + w) ==
          NomeSeries::one() - term(1, 1, 2));

    std::mt19937_64 rng(7);
    NomeSeries x = random_series(rng, -1, 6, 10);
    CHECK(x * NomeSeries::one() == x);

    CHECK(term(1, 1, -2) * term(1, 1, 2) == NomeSeries::one());
}

TEST_CASE("division") {
    std::mt19937_64 rng(3);
    NomeSeries x = random_series(rng, 0, 6, 12);
    CHECK(div(x, x) == NomeSeries::one().truncated(12));

    // 1 / (1 - w) geometric
    NomeSeries g = div(NomeSeries::one().truncated(8), NomeSeries::one() - term(1, 1, 1));
    for (int e = 0; e < 8; ++e) CHECK(g.coeff(e) == 1);

    // (1 - w^2)/(1 - w) = 1 + w
    NomeSeries q = div(NomeSeries::one().truncated(10) - term(1, 1, 2, 10),
                       NomeSeries::one() - term(1, 1, 1));
    CHECK(q == NomeSeries::one().truncated(10) + term(1, 1, 1, 10));
    // verify by multiplying back
    CHECK(q * (NomeSeries::one() - term(1, 1, 1)) ==
          NomeSeries::one().truncated(10) - term(1, 1, 2, 10));

    CHECK_THROWS_AS(div(x, NomeSeries::zero(12)), DivisionByZeroSeries);
}

TEST_CASE("nome power substitution") {
    NomeSeries s = NomeSeries::one().truncated(8) + term(1, 1, 2, 8);
    NomeSeries t = s.substitute_nome_power(2);
    CHECK(t.coeff(4) == 1);
    CHECK(t.coeff(2) == 0);
    CHECK(t.order() == 16);

    CHECK(s.substitute_nome_power(1) == s);
    CHECK(term(1, 1, -1).substitute_nome_power(2) == term(1, 1, -2));

    // composition law
    std::mt19937_64 rng(11);
    NomeSeries x = random_series(rng, -2, 7, 9);
    CHECK(x.substitute_nome_power(2).substitute_nome_power(3) ==
          x.substitute_nome_power(6));
}

TEST_CASE("constant term") {
    NomeSeries s = term(-1, 1, 0, 8) + term(5, 2, 2, 8);
    CHECK(s.constant_term() == -1);
    CHECK(NomeSeries::zero(8).constant_term() == 0);
    CHECK_THROWS_AS(term(1, 1, -2, 8).constant_term(), PoleAtZeroNome);
}

TEST_CASE("series equality respects truncation") {
    std::mt19937_64 rng(5);
    NomeSeries x = random_series(rng, 0, 6, 10);
    CHECK(series_eq(x, x).equal);
    CHECK(series_eq(x, x).order == 10);

    NomeSeries one8 = NomeSeries::one().truncated(8);
    CHECK(one8 == one8 + term(1, 1, 8));       // difference beyond truncation
    CHECK_FALSE(one8 == one8 + term(1, 1, 1, 8));
}

TEST_CASE("ring laws modulo truncation") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 50; ++it) {
        NomeSeries x = random_series(rng, 0, 6, 12);
        NomeSeries y = random_series(rng, 0, 6, 12);
        NomeSeries z = random_series(rng, 0, 6, 12);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
    }
}

TEST_CASE("div then mul round-trips") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 100; ++it) {
        NomeSeries x = random_series(rng, 0, 5, 14);
        NomeSeries y = random_series(rng, 0, 5, 14);
        NomeSeries q = div(x, y);
        CHECK(q * y == x.truncated(q.order()));
    }
}

TEST_CASE("insufficient truncation is detected") {
    // shifting a short series far negative then multiplying leaves < 4 orders
    std::mt19937_64 rng4(4);
    NomeSeries lowprec = random_series(rng4, 0, 3, 3);
    CHECK_THROWS_AS(lowprec * lowprec, InsufficientTruncation);
}

TEST_CASE("rational arithmetic agrees with an unreduced oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> d(-40, 40);
    std::uniform_int_distribution<int> op(0, 3);
    for (int it = 0; it < 1000; ++it) {
        long an = d(rng), ad = d(rng), bn = d(rng), bd = d(rng);
        if (ad == 0) ad = 1;
        if (bd == 0) bd = 1;
        if (ad < 0) { an = -an; ad = -ad; }
        if (bd < 0) { bn = -bn; bd = -bd; }
        Rat a(an, ad), b(bn, bd);
        // unreduced oracle on (num, den) pairs, compared cross-multiplied
        long long on = 0, od = 1;
        Rat got;
        switch (op(rng)) {
            case 0: on = an * bd + bn * ad; od = (long long)ad * bd; got = a + b; break;
            case 1: on = an * bd - bn * ad; od = (long long)ad * bd; got = a - b; break;
            case 2: on = (long long)an * bn; od = (long long)ad * bd; got = a * b; break;
            default:
                if (bn == 0) { on = 0; od = 1; got = Rat(0); break; }
                on = (long long)an * bd; od = (long long)ad * bn; got = a / b; break;
        }
        CHECK(Int(boost::multiprecision::numerator(got)) * od ==
              Int(boost::multiprecision::denominator(got)) * on);
    }
}

TEST_CASE("canonical text rendering") {
    NomeSeries s = term(-1, 1, 0, 8) + term(5, 2, 2, 8);
    CHECK(s.str() == "-1 + 5/2*w^2 (mod w^8)");
    CHECK(NomeSeries::one().str() == "1");
    CHECK(NomeSeries::zero(6).str() == "0 (mod w^6)");
}
