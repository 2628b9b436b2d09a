#include "wpb/harness.hpp"

#include <algorithm>
#include <chrono>

#include "json.hpp"

namespace wpb {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::uint64_t fnv(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

nlohmann::json report_json(const IdentityReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    j["point"] = r.point;
    j["order"] = r.order;
    j["max_n"] = r.max_n;
    j["status"] = r.status;
    if (r.first_failure)
        j["first_failure"] = {{"n", r.first_failure->n},
                              {"check", r.first_failure->check},
                              {"order", r.first_failure->order}};
    j["resamples"] = r.resamples;
    j["ms"] = r.ms;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace

std::string IdentityReport::json_line() const { return report_json(*this).dump(); }

std::string IdentityReport::text_line() const {
    std::string s = identity + " @" + point + " order=" + std::to_string(order) +
                    " max_n=" + std::to_string(max_n) + " " + status;
    if (first_failure)
        s += " (first failure: n=" + std::to_string(first_failure->n) + " check=" +
             first_failure->check + ")";
    if (resamples > 0) s += " resamples=" + std::to_string(resamples);
    if (!note.empty()) s += " [" + note + "]";
    return s;
}

bool all_pass(const std::vector<IdentityReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const IdentityReport& r) { return r.status == "pass"; });
}

IdentityReport run_identity(const IdentityCase& c, std::uint64_t seed, int order, long n_max,
                            bool negative_control) {
    IdentityReport rep;
    rep.identity = c.name;
    rep.order = order;
    rep.max_n = n_max;
    rep.status = "degenerate";
    auto t0 = Clock::now();
    Sampler s(seed);
    for (int attempt = 0; attempt < 20; ++attempt) {
        rep.resamples = attempt;
        try {
            ParamPoint pt = c.sample(s);
            pt.seed = seed;
            if (negative_control && c.perturb) c.perturb(pt);
            rep.point = pt.digest();
            bool failed = false;
            for (long n = 0; n <= n_max && !failed; ++n) {
                std::vector<IdentityCheck> checks;
                try {
                    checks = c.eval(pt, n, order);
                } catch (const PoleAtZeroNome& e) {
                    rep.first_failure = FailureData{n, "pole-at-zero-nome", order};
                    rep.note = e.what();
                    failed = true;
                    break;
                }
                if (negative_control && !c.perturb && !checks.empty())
                    checks[0].rhs = checks[0].rhs + NomeSeries::one();
                for (const IdentityCheck& ch : checks) {
                    SeriesEq eq = series_eq(ch.lhs, ch.rhs);
                    if (!eq.equal) {
                        rep.first_failure = FailureData{n, ch.label, eq.order};
                        failed = true;
                        break;
                    }
                }
            }
            rep.status = failed ? "fail" : "pass";
            break;
        } catch (const DivisionByZeroSeries& e) {
            rep.note = e.what();
        } catch (const InsufficientTruncation& e) {
            rep.note = e.what();
        }
    }
    rep.ms = ms_since(t0);
    return rep;
}

std::vector<IdentityReport> run_verify(const std::vector<std::string>& keys, int points,
                                       std::uint64_t seed, std::optional<int> order,
                                       std::optional<long> n_max) {
    std::vector<std::string> names = keys;
    if (names.empty())
        for (const auto& c : registry()) names.push_back(c.name);
    std::vector<IdentityReport> out;
    for (const std::string& name : names) {
        const IdentityCase* c = find_case(name);
        if (!c) throw ConstraintViolation("unknown identity key: " + name);
        if (name == "lift3-probe") {
            auto t0 = Clock::now();
            ProbeReport pr = probe_lift3(default_probe_candidates(), seed);
            IdentityReport rep;
            rep.identity = name;
            rep.point = "probe";
            rep.order = pr.order;
            rep.max_n = pr.n_max;
            rep.status = pr.unique_survivor ? "pass" : "fail";
            rep.note = pr.survivors.empty()
                           ? "no surviving exponent law"
                           : "unique exponent law: " + pr.survivors.front();
            rep.ms = ms_since(t0);
            out.push_back(rep);
            continue;
        }
        int o = order.value_or(c->default_order);
        long nm = n_max.value_or(c->default_n_max);
        std::uint64_t salt = fnv(name);
        for (int i = 0; i < points; ++i)
            out.push_back(run_identity(*c, (seed ^ salt) + i * 0x9e3779b97f4a7c15ull, o, nm));
    }
    std::sort(out.begin(), out.end(), [](const IdentityReport& x, const IdentityReport& y) {
        return std::tie(x.identity, x.point) < std::tie(y.identity, y.point);
    });
    return out;
}

// ---- tree exploration ------------------------------------------------------

namespace {

bool basic_tag(TransformTag t) {
    return t == TransformTag::T1 || t == TransformTag::T2 || t == TransformTag::T2b ||
           t == TransformTag::T3 || t == TransformTag::T4 || t == TransformTag::T5;
}

struct TreePlan {
    Monomial a0, k0;
    Rat q0;
    int nome0 = 0;
    std::vector<TransformStep> steps;
};

// Backward parameter planning: every sampled atom is a perfect square and the
// initial base is a high even power, so each derived k stays a perfect square
// and every declared root (k, m or base) is rational by construction.
TreePlan plan_tree(const std::vector<TransformTag>& path, Sampler& s) {
    TreePlan plan;
    bool any_basic = std::any_of(path.begin(), path.end(), basic_tag);
    plan.nome0 = any_basic ? 0 : 2;
    long halvings = std::count_if(path.begin(), path.end(), [](TransformTag t) {
        return t == TransformTag::T5 || t == TransformTag::T5e;
    });
    Rat g = s.positive_rational();
    plan.q0 = rat_pow(g, 1L << (halvings + 1));
    Rat ar = s.positive_rational();
    plan.a0 = Monomial(ar * ar);

    std::vector<Monomial> as{plan.a0};
    std::vector<FactorialSpec> fss{FactorialSpec(plan.q0, plan.nome0)};
    for (TransformTag t : path) {
        Monomial a = as.back();
        FactorialSpec fs = fss.back();
        switch (t) {
            case TransformTag::T3:
            case TransformTag::T4:
                as.push_back(a.pow(2));
                fss.push_back(fs.base_squared());
                break;
            case TransformTag::T3e:
                as.push_back(a.pow(2));
                fss.push_back(fs.squared());
                break;
            case TransformTag::T5:
            case TransformTag::T5e:
                as.push_back(a);
                fss.push_back(FactorialSpec(rat_sqrt(fs.q), fs.nome_exp));
                break;
            default:
                as.push_back(a);
                fss.push_back(fs);
                break;
        }
    }

    plan.steps.resize(path.size());
    for (size_t i = 0; i < path.size(); ++i) {
        plan.steps[i].tag = path[i];
        if (path[i] == TransformTag::T1 || path[i] == TransformTag::T1e) {
            plan.steps[i].b = Monomial(s.square());
            plan.steps[i].c = Monomial(s.square());
        }
    }
    Monomial K(s.square());
    for (long i = static_cast<long>(path.size()) - 1; i >= 0; --i) {
        TransformStep& st = plan.steps[i];
        st.out_k = K;
        const Monomial& a_in = as[i];
        const FactorialSpec& fs_in = fss[i];
        switch (st.tag) {
            case TransformTag::T2b:
                st.k_root = rat_sqrt(K.c);
                st.m_root = rat_sqrt((a_in.pow(2) / K).c);
                break;
            case TransformTag::T5:
            case TransformTag::T5e:
                st.q_root = rat_sqrt(fs_in.q);
                break;
            case TransformTag::Tnew2:
                st.k_root = rat_sqrt(K.c);
                st.q_root = rat_sqrt(fs_in.q);
                break;
            default:
                break;
        }
        K = make_transform(st, a_in, fs_in).m;
    }
    plan.k0 = K;
    return plan;
}

std::string path_key(const std::vector<TransformTag>& path) {
    if (path.empty()) return "tree:unit";
    std::string key = "tree:";
    for (size_t i = 0; i < path.size(); ++i) {
        if (i) key += ",";
        key += tag_name(path[i]);
    }
    return key;
}

}  // namespace

std::vector<IdentityReport> run_tree_path(const std::vector<TransformTag>& path,
                                          std::uint64_t seed, long n_max, int order) {
    std::string key = path_key(path);
    Sampler s(seed);
    for (int attempt = 0; attempt < 20; ++attempt) {
        try {
            TreePlan plan = plan_tree(path, s);
            ParamPoint pt;
            pt.seed = seed;
            pt.q_value = plan.q0;
            pt.set("a", plan.a0);
            pt.set("k", plan.k0);
            std::string digest = pt.digest();
            std::vector<IdentityReport> reps;
            bool degenerate = false;
            auto check_node = [&](const WPPair& p, const std::string& note) {
                auto t0 = Clock::now();
                PairCheck pc = verify_pair(p, n_max, order);
                IdentityReport rep;
                rep.identity = key;
                rep.point = digest;
                rep.order = order;
                rep.max_n = n_max;
                rep.note = note;
                rep.resamples = attempt;
                if (pc.degenerate) degenerate = true;
                rep.status = pc.degenerate ? "degenerate" : (pc.pass ? "pass" : "fail");
                if (!pc.pass && !pc.degenerate)
                    rep.first_failure = FailureData{pc.first_fail, "pair-relation", pc.order};
                rep.ms = ms_since(t0);
                reps.push_back(rep);
            };
            WPPair pair = unit_pair(plan.a0, plan.k0, FactorialSpec(plan.q0, plan.nome0));
            check_node(pair, "node 0: unit pair");
            for (size_t i = 0; i < plan.steps.size() && !degenerate; ++i) {
                pair = apply_transform(plan.steps[i], pair);
                check_node(pair, "node " + std::to_string(i + 1) + ": " +
                                     tag_name(plan.steps[i].tag));
            }
            if (!degenerate) return reps;
        } catch (const DivisionByZeroSeries&) {
        } catch (const InsufficientTruncation&) {
        }
    }
    IdentityReport rep;
    rep.identity = key;
    rep.point = "-";
    rep.order = order;
    rep.max_n = n_max;
    rep.status = "degenerate";
    rep.resamples = 20;
    rep.note = "sampling exhausted";
    return {rep};
}

std::vector<std::vector<TransformTag>> tree_paths(int depth) {
    static const TransformTag kTags[] = {
        TransformTag::T1,  TransformTag::T2,  TransformTag::T2b,
        TransformTag::T3,  TransformTag::T4,  TransformTag::T5,
        TransformTag::T1e, TransformTag::T3e, TransformTag::T5e};
    std::vector<std::vector<TransformTag>> out{{}};
    for (int d = 0; d < depth; ++d) {
        std::vector<std::vector<TransformTag>> next;
        for (const auto& p : out)
            for (TransformTag t : kTags) {
                auto q = p;
                q.push_back(t);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

// ---- kernel suite ----------------------------------------------------------

std::vector<IdentityReport> run_kernels(long n_max, std::uint64_t seed) {
    std::vector<IdentityReport> out;
    out.push_back(run_identity(*find_case("wp-inverse"), seed, 16, n_max));
    out.push_back(
        run_identity(*find_case("wp-inverse-elliptic"), seed + 1, 12, std::min<long>(n_max, 5)));

    struct KernelCheck {
        TransformTag tag;
        bool elliptic;
        const char* name;
    };
    const KernelCheck suite[] = {{TransformTag::T2b, false, "kernels:nm-ml-sigma"},
                                 {TransformTag::T4, false, "kernels:nm-ml-squared"},
                                 {TransformTag::T3e, true, "kernels:nm-m-elliptic"},
                                 {TransformTag::T5e, true, "kernels:nm-m-doubled"}};
    for (const KernelCheck& kc : suite) {
        IdentityReport rep;
        rep.identity = kc.name;
        int o = kc.elliptic ? 12 : 16;
        long nm = kc.elliptic ? std::min<long>(n_max, 4) : n_max;
        rep.order = o;
        rep.max_n = nm;
        rep.status = "degenerate";
        auto t0 = Clock::now();
        Sampler s(seed ^ fnv(kc.name));
        for (int attempt = 0; attempt < 20 && rep.status == "degenerate"; ++attempt) {
            rep.resamples = attempt;
            try {
                Rat g = s.positive_rational();
                Rat q = g * g;
                Rat h = s.positive_rational();
                Monomial a(h * h);
                Rat rk = s.positive_rational();
                if (rk == h) rk += 1;
                Monomial K(rk * rk);
                FactorialSpec fs(q, kc.elliptic ? 2 : 0);
                TransformStep step;
                step.tag = kc.tag;
                step.out_k = K;
                if (kc.tag == TransformTag::T2b) {
                    step.k_root = rk;
                    step.m_root = rat_sqrt((a.pow(2) / K).c);
                }
                if (kc.tag == TransformTag::T5e) step.q_root = g;
                TransformData td = make_transform(step, a, fs);
                ParamPoint pt;
                pt.seed = seed;
                pt.q_value = q;
                pt.set("a", a);
                pt.set("k", K);
                rep.point = pt.digest();
                bool failed = false;
                for (long n = 0; n <= nm && !failed; ++n)
                    for (long r = 0; r <= n && !failed; ++r) {
                        NomeSeries lhs = NomeSeries::zero();
                        for (long t : td.beta_indices(n))
                            if (t >= r)
                                lhs = lhs + td.N(n, t, o) * kernel_M(t, r, a, td.m, fs, o);
                        NomeSeries rhs = NomeSeries::zero();
                        for (long t = 0; t <= n; ++t) {
                            auto idx = td.alpha_index(t);
                            if (idx && *idx == r)
                                rhs = rhs + kernel_M(n, t, td.out_a, td.out_k, td.out_fs, o) *
                                                td.L(t, o);
                        }
                        SeriesEq eq = series_eq(lhs, rhs);
                        if (!eq.equal) {
                            rep.first_failure =
                                FailureData{n, "r=" + std::to_string(r), eq.order};
                            failed = true;
                        }
                    }
                rep.status = failed ? "fail" : "pass";
            } catch (const DivisionByZeroSeries& e) {
                rep.note = e.what();
            } catch (const InsufficientTruncation& e) {
                rep.note = e.what();
            }
        }
        rep.ms = ms_since(t0);
        out.push_back(rep);
    }
    return out;
}

// ---- exponent probe --------------------------------------------------------

std::vector<ProbeCandidate> default_probe_candidates() {
    std::vector<ProbeCandidate> cands;
    cands.push_back({"a^r (literal; exponent r unbound)", false, nullptr});
    auto add = [&](const char* name,
                   std::function<Monomial(const Monomial&, const Monomial&, long)> f) {
        cands.push_back({name, true, [f](const Monomial& a, const Monomial& m) {
                             return [f, a, m](long n) { return f(a, m, n); };
                         }});
    };
    add("1", [](const Monomial&, const Monomial&, long) { return Monomial(Rat(1)); });
    add("a^n", [](const Monomial& a, const Monomial&, long n) { return a.pow(n); });
    add("a^2n", [](const Monomial& a, const Monomial&, long n) { return a.pow(2 * n); });
    add("a^3n", [](const Monomial& a, const Monomial&, long n) { return a.pow(3 * n); });
    add("m^n", [](const Monomial&, const Monomial& m, long n) { return m.pow(n); });
    add("m^2n", [](const Monomial&, const Monomial& m, long n) { return m.pow(2 * n); });
    add("m^3n", [](const Monomial&, const Monomial& m, long n) { return m.pow(3 * n); });
    add("(a/m)^n", [](const Monomial& a, const Monomial& m, long n) { return (a / m).pow(n); });
    add("(am)^n", [](const Monomial& a, const Monomial& m, long n) { return (a * m).pow(n); });
    add("(m^2/a)^n",
        [](const Monomial& a, const Monomial& m, long n) { return (m.pow(2) / a).pow(n); });
    add("(-a)^n", [](const Monomial& a, const Monomial&, long n) { return (-a).pow(n); });
    add("(-m)^n", [](const Monomial&, const Monomial& m, long n) { return (-m).pow(n); });
    add("a^(n^2)", [](const Monomial& a, const Monomial&, long n) { return a.pow(n * n); });
    add("m^(n^2)", [](const Monomial&, const Monomial& m, long n) { return m.pow(n * n); });
    add("a^(3n^2)", [](const Monomial& a, const Monomial&, long n) { return a.pow(3 * n * n); });
    return cands;
}

ProbeReport probe_lift3(const std::vector<ProbeCandidate>& candidates, std::uint64_t seed,
                        int order, long n_max) {
    ProbeReport rep;
    rep.order = order;
    rep.n_max = n_max;
    Sampler s(seed);
    struct Point {
        Monomial a, m, K, b;
        Rat q;
    };
    std::vector<Point> pts;
    while (pts.size() < 2) {
        Point p;
        p.q = s.base();
        p.a = Monomial(s.rational());
        p.m = Monomial(s.rational());
        p.b = Monomial(s.rational());
        p.K = p.m.pow(3) / p.a;  // the m^3 = ak constraint, solved for k
        try {
            // reject degenerate points up front with the simplest candidate
            BibasicPair input = bibasic_closed_form(3, p.a, p.m, p.b, FactorialSpec(p.q, 2));
            WPPair probe = lift_bibasic3(input, p.K, [](long) { return Monomial(Rat(1)); });
            (void)verify_pair(probe, 1, order);
            pts.push_back(p);
        } catch (const DivisionByZeroSeries&) {
        } catch (const InsufficientTruncation&) {
        }
    }
    for (const ProbeCandidate& cand : candidates) {
        ProbeOutcome oc;
        oc.name = cand.name;
        oc.well_formed = cand.well_formed;
        if (cand.well_formed) {
            oc.pass = true;
            for (const Point& p : pts) {
                FactorialSpec fs(p.q, 2);
                BibasicPair input = bibasic_closed_form(3, p.a, p.m, p.b, fs);
                WPPair wp = lift_bibasic3(input, p.K, cand.make(p.a, p.m));
                // prune early: a failure at n = 1 skips the larger sizes
                PairCheck quick = verify_pair(wp, 1, order);
                PairCheck pc = quick.pass ? verify_pair(wp, n_max, order) : quick;
                if (!pc.pass) {
                    oc.pass = false;
                    oc.first_fail = pc.first_fail;
                    break;
                }
            }
            if (oc.pass) rep.survivors.push_back(cand.name);
        }
        rep.outcomes.push_back(oc);
    }
    rep.unique_survivor = rep.survivors.size() == 1;
    return rep;
}

std::string ProbeReport::json_line() const {
    nlohmann::json j;
    j["probe"] = "lift3-exponent-law";
    j["order"] = order;
    j["n_max"] = n_max;
    j["survivors"] = survivors;
    j["unique_survivor"] = unique_survivor;
    nlohmann::json arr = nlohmann::json::array();
    for (const ProbeOutcome& oc : outcomes) {
        nlohmann::json o;
        o["candidate"] = oc.name;
        o["well_formed"] = oc.well_formed;
        o["status"] = !oc.well_formed ? "ill-formed" : (oc.pass ? "pass" : "fail");
        if (oc.well_formed && !oc.pass) o["first_fail_n"] = oc.first_fail;
        arr.push_back(o);
    }
    j["candidates"] = arr;
    return j.dump();
}

std::string ProbeReport::text() const {
    std::string s = "lift3 exponent-law probe (order " + std::to_string(order) + ", n <= " +
                    std::to_string(n_max) + ")\n";
    for (const ProbeOutcome& oc : outcomes) {
        s += "  " + oc.name + ": ";
        if (!oc.well_formed)
            s += "ill-formed (rejected)\n";
        else if (oc.pass)
            s += "pass\n";
        else
            s += "fail (first failure at n = " + std::to_string(oc.first_fail) + ")\n";
    }
    if (unique_survivor)
        s += "unique surviving law: " + survivors.front() + "\n";
    else if (survivors.empty())
        s += "no surviving law\n";
    else
        s += "multiple survivors (" + std::to_string(survivors.size()) + ")\n";
    return s;
}

}  // namespace wpb
