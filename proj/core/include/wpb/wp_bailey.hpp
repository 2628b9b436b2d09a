#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wpb/qobjects.hpp"

namespace wpb {

// Sequence member at index n, truncated below w^order.
using Evaluator = std::function<NomeSeries(long n, int order)>;

enum class TransformTag { T1, T2, T2b, T3, T4, T5, T1e, T3e, T5e, Tnew1, Tnew2 };

const char* tag_name(TransformTag tag);
std::optional<TransformTag> tag_from_name(const std::string& name);

// A transform is keyed by the OUTPUT k; the required input k (called m in every
// theorem) is derived from the tag's formula.  Roots that the theorems take of
// k, m or the base must be declared, not computed:
//   T2b        k_root, m_root (m = a^2/k)
//   T5 / T5e   q_root (the output base; input base is its square).  out_k
//              itself is the root k with k^2 = a * (input k).
//   Tnew2      k_root (out_k = k_root^2) and q_root (base = q_root^2)
struct TransformStep {
    TransformTag tag;
    Monomial out_k;
    Monomial b, c;  // T1 / T1e only
    int sigma = 1;  // T2b only
    Rat k_root = 0, m_root = 0, q_root = 0;
    Monomial derived_m;  // recorded by apply_transform
};

class WPPair {
public:
    WPPair(Monomial a, Monomial k, FactorialSpec fs, Evaluator alpha, Evaluator beta);

    const Monomial& a() const { return a_; }
    const Monomial& k() const { return k_; }
    const FactorialSpec& fs() const { return fs_; }

    NomeSeries alpha(long n, int order) const;  // memoized
    NomeSeries beta(long n, int order) const;

    std::vector<TransformStep> provenance;

private:
    Monomial a_, k_;
    FactorialSpec fs_;
    Evaluator alpha_, beta_;
    using Memo = std::map<std::pair<long, int>, NomeSeries>;
    std::shared_ptr<Memo> amemo_, bmemo_;
};

// (k/a;q,p)_{n-r}/(q;q,p)_{n-r} * (k;q,p)_{n+r}/(aq;q,p)_{n+r}
NomeSeries kernel_M(long n, long r, const Monomial& a, const Monomial& k,
                    const FactorialSpec& spec, int order);

// Inverse kernel with both theta weights and the (k/a)^{n-r} factor.
NomeSeries kernel_Mtilde(long n, long r, const Monomial& a, const Monomial& k,
                         const FactorialSpec& spec, int order);

std::vector<NomeSeries> forward(const WPPair& pair, long n_max, int order);
std::vector<NomeSeries> backward(const WPPair& pair, long n_max, int order);

// beta_n = delta_{n,0} and the inverted alpha.
WPPair unit_pair(const Monomial& a, const Monomial& k, const FactorialSpec& spec);

// The alpha-multiplier / beta-kernel factorization of a transform:
// alpha'_n = L_n * alpha_{alpha_index(n)},  beta'_n = sum_r N_{n,r} beta_r
// over r in beta_indices(n).  This is exactly the (L, N) notation of the
// proofs, so the NMML-style kernel identities can be checked against it.
struct TransformData {
    explicit TransformData(FactorialSpec fs) : out_fs(std::move(fs)) {}

    Monomial m;  // required input k
    Monomial out_a, out_k;
    FactorialSpec out_fs;
    std::function<std::optional<long>(long)> alpha_index;
    std::function<NomeSeries(long, int)> L;
    std::function<std::vector<long>(long)> beta_indices;
    std::function<NomeSeries(long, long, int)> N;
};

TransformData make_transform(const TransformStep& step, const Monomial& in_a,
                             const FactorialSpec& in_fs);

WPPair apply_transform(const TransformStep& step, const WPPair& input);

struct PairCheck {
    bool pass = false;
    long first_fail = -1;  // index of the first failing beta, -1 when passing
    int order = 0;         // order at which the comparison was decided
    bool degenerate = false;
    std::string note;
};

// Recompute beta from alpha through the kernel and compare.
PairCheck verify_pair(const WPPair& pair, long n_max, int order);

}  // namespace wpb
