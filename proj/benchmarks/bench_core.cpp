#include <benchmark/benchmark.h>

#include "wpb/bibasic.hpp"
#include "wpb/harness.hpp"
#include "wpb/series.hpp"
#include "wpb/wp_bailey.hpp"

using namespace wpb;

namespace {

const FactorialSpec kBasic{Rat(2, 3), 0};
const FactorialSpec kElliptic{Rat(2, 3), 2};

void BM_NomeSeriesMul(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    NomeSeries x = theta(Monomial{Rat(3, 5), 0}, kElliptic, order);
    NomeSeries y = theta(Monomial{Rat(5, 7), 1}, kElliptic, order);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_NomeSeriesMul)->Arg(16)->Arg(32)->Arg(64);

void BM_Theta(benchmark::State& state) {
    int order = static_cast<int>(state.range(0));
    Monomial z{Rat(3, 5), 0};
    for (auto _ : state) benchmark::DoNotOptimize(theta(z, kElliptic, order));
}
BENCHMARK(BM_Theta)->Arg(16)->Arg(32);

void BM_QFact(benchmark::State& state) {
    long n = state.range(0);
    Monomial z{Rat(3, 5), 0};
    for (auto _ : state) benchmark::DoNotOptimize(qfact(z, n, kElliptic, 16));
}
BENCHMARK(BM_QFact)->Arg(4)->Arg(8);

// One row of the inverse relation: sum_s Mtilde(n, s) M(s, r) = delta_{n,r}.
void BM_KernelInversionRow(benchmark::State& state) {
    long n = state.range(0);
    Monomial a{Rat(4, 9), 0}, k{Rat(5, 2), 0};
    for (auto _ : state) {
        NomeSeries acc = NomeSeries::zero(16);
        for (long s = 0; s <= n; ++s)
            acc = acc + kernel_Mtilde(n, s, a, k, kBasic, 16) * kernel_M(s, 0, a, k, kBasic, 16);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_KernelInversionRow)->Arg(4)->Arg(6)->Arg(8);

// Terminating 10V9 (Frenkel-Turaev left side) by direct summation.
void BM_EvalV(benchmark::State& state) {
    long n = state.range(0);
    Monomial a{Rat(4, 9), 0}, b{Rat(2, 5), 0}, c{Rat(3, 7), 0}, d{Rat(5, 3), 0};
    // Balancing condition bcde = a^2 q^{n+1}.
    int ne = 2 * static_cast<int>(n + 1);
    Monomial e = (a * a * Monomial{rat_pow(kElliptic.q, n + 1), ne}) / (b * c * d);
    Monomial qn{rat_pow(kElliptic.q, -n), -2 * static_cast<int>(n)};
    SeriesSpec spec = SeriesSpec::v(a, {b, c, d, e, qn}, kElliptic, n);
    for (auto _ : state) benchmark::DoNotOptimize(eval_v(spec, 16));
}
BENCHMARK(BM_EvalV)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

// Pair relation beta_n = sum_r M(n, r) alpha_r for one transformed pair.
void BM_VerifyTransformedPair(benchmark::State& state) {
    long n_max = state.range(0);
    Monomial a{Rat(4, 9), 0};
    TransformStep step{TransformTag::T1, Monomial{Rat(7, 4), 0}, Monomial{Rat(2, 7), 0},
                       Monomial{Rat(3, 5), 0}};
    Monomial m = make_transform(step, a, kBasic).m;
    for (auto _ : state) {
        WPPair out = apply_transform(step, unit_pair(a, m, kBasic));
        benchmark::DoNotOptimize(verify_pair(out, n_max, 12));
    }
}
BENCHMARK(BM_VerifyTransformedPair)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

// Full harness run of one registry identity at one point.
void BM_RunIdentity(benchmark::State& state) {
    const IdentityCase* c = find_case("elliptic-jackson");
    for (auto _ : state)
        benchmark::DoNotOptimize(run_identity(*c, 42, c->default_order, state.range(0)));
}
BENCHMARK(BM_RunIdentity)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
