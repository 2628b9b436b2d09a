#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wpb/sampling.hpp"
#include "wpb/series.hpp"

namespace wpb {

// One exact comparison produced by an identity evaluation at a given size.
struct IdentityCheck {
    std::string label;
    NomeSeries lhs, rhs;
};

// A registered identity: how to sample a valid point for it and how to
// evaluate both sides at a size n.  Constraints among the symbols are solved
// inside `sample` by eliminating one symbol exactly, so every returned point
// satisfies them; a point that violates them is a configuration error
// (ConstraintViolation), not a verification failure.
struct IdentityCase {
    std::string name;
    std::string display;  // one-line description for `list`
    int default_order = 16;
    long default_n_max = 4;
    std::vector<std::string> required_roots;
    std::function<ParamPoint(Sampler&)> sample;
    std::function<std::vector<IdentityCheck>(const ParamPoint&, long n, int order)> eval;
    // Optional bespoke perturbation for the negative control; when absent the
    // control corrupts the first right side by +1.
    std::function<void(ParamPoint&)> perturb;
};

const std::vector<IdentityCase>& registry();
const IdentityCase* find_case(const std::string& name);

}  // namespace wpb
