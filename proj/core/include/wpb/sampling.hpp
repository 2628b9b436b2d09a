#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "wpb/monomial.hpp"

namespace wpb {

// A rational evaluation point for one identity run: the free symbols of the
// identity, the base q, and any declared square roots (validated on entry).
struct ParamPoint {
    std::map<std::string, Monomial> assignments;
    Rat q_value{0};
    std::map<std::string, Rat> declared_roots;
    std::uint64_t seed = 0;

    const Monomial& at(const std::string& sym) const;
    Rat root(const std::string& sym) const;
    void set(const std::string& sym, Monomial value);
    // Validates root * root == target exactly.
    void declare_root(const std::string& sym, const Rat& root, const Rat& target);

    // Deterministic short digest of the whole point (FNV-1a over a canonical
    // serialization), used to key reports.
    std::string digest() const;
};

// Seeded source of small-height rationals.  Heights stay <= 50 so that exact
// arithmetic stays cheap; values avoid {0, 1, -1}.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : seed_(seed), rng_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::mt19937_64& rng() { return rng_; }

    Rat rational();           // nonzero, not +-1, possibly negative
    Rat positive_rational();  // > 0, not 1
    // A perfect square together with its positive root (root height <= 7).
    Rat square(Rat* root_out = nullptr);
    Rat base();  // a valid q in (0,1) U (1, inf), never 0 or +-1

private:
    std::uint64_t seed_;
    std::mt19937_64 rng_;
};

}  // namespace wpb
