#pragma once

#include <optional>
#include <vector>

#include "wpb/qobjects.hpp"

namespace wpb {

enum class SeriesKind { Phi, W, V };

// A terminating hypergeometric series.
//
// Phi: upper parameters `num`, lower parameters `den` (the implicit (q;q)_k
// denominator is supplied by the evaluator), argument `z`.
// W / V: very-well-poised form a1 plus the trailing parameters a4.. / a6..;
// the a2, a3 pair is never supplied, the evaluator folds it into the
// (1 - a1 q^{2k})/(1 - a1) resp. theta(a1 q^{2k};p)/theta(a1;p) weight.
// V always has argument q.
struct SeriesSpec {
    SeriesKind kind;
    FactorialSpec fs;
    Monomial a1;                  // W/V only
    std::vector<Monomial> num;    // Phi upper; W/V trailing parameters
    std::vector<Monomial> den;    // Phi lower
    Monomial z;                   // Phi/W argument
    long terminating_index = 0;   // the q^{-n} witness

    static SeriesSpec phi(std::vector<Monomial> upper, std::vector<Monomial> lower, Monomial z,
                          FactorialSpec fs, long n);
    static SeriesSpec w(Monomial a1, std::vector<Monomial> trailing, Monomial z,
                        FactorialSpec fs, long n);
    static SeriesSpec v(Monomial a1, std::vector<Monomial> trailing, FactorialSpec fs, long n);
};

NomeSeries eval_phi(const SeriesSpec& spec, int order);
NomeSeries eval_w(const SeriesSpec& spec, int order);
NomeSeries eval_v(const SeriesSpec& spec, int order);
NomeSeries eval_series(const SeriesSpec& spec, int order);

struct Classification {
    bool well_poised = false;
    bool very_well_poised = false;
    bool balanced = false;
};
Classification classify(const SeriesSpec& spec);

// Lemma 1: the 4phi3[aq, a^2, b, q^{-n}; a, c, a^2 b q^{2-n}/c] sum,
// valid for c = -abq or c = a^2 q/b.
Rat sum_lemma1(const Rat& a, const Rat& b, const Rat& c, long n, const Rat& q);

// Lemma 2: the 8W7(a; b, aq^n/b^{1/2}, -aq^n/b^{1/2}, q^{-n}, -q^{-n}; q, q^2)
// sum; b is passed through its declared root, b = b_root^2.
Rat sum_lemma2(const Rat& a, const Rat& b_root, long n, const Rat& q);

// Frenkel-Turaev: 10V9(a;b,c,d,e,q^{-n};q,p) with bcde = a^2 q^{n+1}.
NomeSeries sum_elliptic_jackson(const Monomial& a, const Monomial& b, const Monomial& c,
                                const Monomial& d, const Monomial& e, long n,
                                const FactorialSpec& spec, int order);

// Closed form of the new elliptic bibasic summation (mixed nomes p and p^2).
NomeSeries sum_new_bibasic(const Monomial& a, const Monomial& b, long n,
                           const FactorialSpec& spec, int order);

// Left side of the same summation, by direct term summation.
NomeSeries new_bibasic_lhs(const Monomial& a, const Monomial& b, long n,
                           const FactorialSpec& spec, int order);

}  // namespace wpb
