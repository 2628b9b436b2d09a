#pragma once

#include "wpb/wp_bailey.hpp"

namespace wpb {

// (A, B) linked by the mixed-base kernel
// B_n = sum_r (k/a;q,p)_{n-ir}/(q^i;q^i,p)_{n-r} (k;q,p)_{n+ir}/(aq^i;q^i,p)_{n+r} A_r;
// i = 1 recovers the ordinary pair.
struct BibasicPair {
    long i;
    Monomial a, k;
    FactorialSpec fs;
    Evaluator A, B;
};

// Negative n - ir indices use the standard convention
// (a;q,p)_{-n} = 1/(aq^{-n};q,p)_n.
NomeSeries bibasic_kernel(long i, long n, long r, const Monomial& a, const Monomial& k,
                          const FactorialSpec& spec, int order);

// The closed-form bibasic pair for the base-q^i kernel.
BibasicPair bibasic_closed_form(long i, const Monomial& a, const Monomial& k, const Monomial& b,
                                const FactorialSpec& spec);

PairCheck verify_bibasic(const BibasicPair& pair, long n_max, int order);

// i = 2 lift: (A,B) at (a, m; q, p) to a WP pair at (a, k; q^2, p); m is free.
WPPair lift_bibasic2(const BibasicPair& input, const Monomial& out_k);

// i = 3 lift to (a, k; q^3, p) under m^3 = ak.  The alpha multiplier printed in
// the source has an unbound exponent, so the law is a caller-supplied candidate
// (resolved empirically by the harness probe).
using ExponentLaw = std::function<Monomial(long n)>;
WPPair lift_bibasic3(const BibasicPair& input, const Monomial& out_k, const ExponentLaw& law);

}  // namespace wpb
