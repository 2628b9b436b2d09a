#include "wpb/sampling.hpp"

#include <sstream>

#include "wpb/errors.hpp"

namespace wpb {

const Monomial& ParamPoint::at(const std::string& sym) const {
    auto it = assignments.find(sym);
    if (it == assignments.end()) throw ConstraintViolation("unassigned symbol " + sym);
    return it->second;
}

Rat ParamPoint::root(const std::string& sym) const {
    auto it = declared_roots.find(sym);
    if (it == declared_roots.end()) throw MissingRoot("undeclared root " + sym);
    return it->second;
}

void ParamPoint::set(const std::string& sym, Monomial value) {
    if (value.is_zero()) throw ConstraintViolation("zero assignment for " + sym);
    assignments[sym] = std::move(value);
}

void ParamPoint::declare_root(const std::string& sym, const Rat& root, const Rat& target) {
    if (root * root != target) throw MissingRoot("declared root of " + sym + " fails r^2 = target");
    declared_roots[sym] = root;
}

std::string ParamPoint::digest() const {
    std::ostringstream os;
    os << "q=" << rat_str(q_value) << ";seed=" << seed << ";";
    for (const auto& [sym, val] : assignments) os << sym << "=" << val.str() << ";";
    for (const auto& [sym, val] : declared_roots) os << "sqrt:" << sym << "=" << rat_str(val) << ";";
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char ch : os.str()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 15];
        h >>= 4;
    }
    return out;
}

Rat Sampler::rational() {
    std::uniform_int_distribution<long> num(2, 7), den(2, 7);
    std::uniform_int_distribution<int> sign(0, 1);
    Rat r(num(rng_), den(rng_));
    if (r == 1) r = Rat(num(rng_) + 7, den(rng_));
    return sign(rng_) ? r : -r;
}

Rat Sampler::positive_rational() {
    std::uniform_int_distribution<long> num(2, 7), den(2, 7);
    Rat r(num(rng_), den(rng_));
    if (r == 1) r = Rat(num(rng_) + 7, den(rng_));
    return r;
}

Rat Sampler::square(Rat* root_out) {
    Rat r = positive_rational();
    if (root_out) *root_out = r;
    return r * r;
}

Rat Sampler::base() { return positive_rational(); }

}  // namespace wpb
