#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpb/bibasic.hpp"
#include "wpb/registry.hpp"
#include "wpb/wp_bailey.hpp"

namespace wpb {

struct FailureData {
    long n = -1;
    std::string check;
    int order = 0;
};

struct IdentityReport {
    std::string identity;
    std::string point;  // ParamPoint digest
    int order = 0;
    long max_n = 0;
    std::string status;  // "pass" | "fail" | "degenerate"
    std::optional<FailureData> first_failure;
    int resamples = 0;
    double ms = 0.0;
    std::string note;

    std::string json_line() const;
    std::string text_line() const;
};

bool all_pass(const std::vector<IdentityReport>& reports);

// Runs one identity at a point sampled from `seed`, sizes 0..n_max, the given
// truncation order.  Degenerate points (vanishing denominators, insufficient
// significant orders) are resampled up to 20 times; exhaustion yields status
// "degenerate".  `negative_control` perturbs the point (or, lacking a bespoke
// perturbation, the first right side) so a sound identity must report "fail".
IdentityReport run_identity(const IdentityCase& c, std::uint64_t seed, int order, long n_max,
                            bool negative_control = false);

// Runs the named identities at `points` independent points each; empty key
// list means the whole registry.  "lift3-probe" maps to the exponent probe.
// Reports are sorted by identity key, then point digest.
std::vector<IdentityReport> run_verify(const std::vector<std::string>& keys, int points,
                                       std::uint64_t seed, std::optional<int> order = {},
                                       std::optional<long> n_max = {});

// ---- tree exploration ------------------------------------------------------

// Composes the transform path from the unit pair and runs the pair relation
// at every node.  Parameters are planned backward from the leaf so that each
// step's required input k matches exactly, with every sampled atom a perfect
// square and the initial base an even power, so all declared roots exist by
// construction.  One report per node.
std::vector<IdentityReport> run_tree_path(const std::vector<TransformTag>& path,
                                          std::uint64_t seed, long n_max, int order);

// All tag sequences of the given depth over the nine tree transforms.
std::vector<std::vector<TransformTag>> tree_paths(int depth);

// ---- kernel suite ----------------------------------------------------------

// Inverse relations and the generic kernel factorization identity
// sum_s N(n,s) M(s,r; a,m,in) = sum_t [alpha_index(t)=r] M'(n,t; out) L(t)
// for the proof-level transforms (squared-base, doubled-index and negated
// variants), all 0 <= r <= n <= n_max.
std::vector<IdentityReport> run_kernels(long n_max, std::uint64_t seed);

// ---- exponent probe --------------------------------------------------------

struct ProbeCandidate {
    std::string name;
    bool well_formed = true;  // the literal unbound-exponent reading is not
    std::function<ExponentLaw(const Monomial& a, const Monomial& m)> make;
};

struct ProbeOutcome {
    std::string name;
    bool well_formed = true;
    bool pass = false;
    long first_fail = -1;
};

struct ProbeReport {
    std::vector<ProbeOutcome> outcomes;
    std::vector<std::string> survivors;
    bool unique_survivor = false;
    int order = 0;
    long n_max = 0;
    std::string json_line() const;
    std::string text() const;
};

std::vector<ProbeCandidate> default_probe_candidates();
ProbeReport probe_lift3(const std::vector<ProbeCandidate>& candidates = default_probe_candidates(),
                        std::uint64_t seed = 42, int order = 12, long n_max = 3);

}  // namespace wpb
