// Command-line harness: verify identities at seeded rational points, explore
// the transform tree, run the kernel suite, and probe the lift-3 exponent law.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wpb/harness.hpp"

namespace {

int emit(const std::vector<wpb::IdentityReport>& reports, bool json) {
    bool ok = true;
    for (const auto& r : reports) {
        std::cout << (json ? r.json_line() : r.text_line()) << "\n";
        ok = ok && r.status == "pass";
    }
    return ok ? 0 : 1;
}

std::vector<wpb::TransformTag> parse_path(const std::string& csv) {
    std::vector<wpb::TransformTag> path;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto tag = wpb::tag_from_name(item);
        if (!tag) throw CLI::ValidationError("--path", "unknown transform tag: " + item);
        path.push_back(*tag);
    }
    return path;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification harness for well-poised Bailey pair identities"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "verify identities at seeded rational points");
    std::vector<std::string> keys;
    int order = 0;
    long max_n = -1;
    int points = 3;
    std::uint64_t seed = 42;
    bool json = false;
    verify->add_option("keys", keys, "identity keys (omit for the whole registry)");
    verify->add_option("--order", order, "truncation order override");
    verify->add_option("--max-n", max_n, "largest size n override");
    verify->add_option("--points", points, "independent points per identity")->default_val(3);
    verify->add_option("--seed", seed, "base seed")->default_val(42);
    verify->add_flag("--json", json, "one JSON object per line");

    // tree
    auto* tree = app.add_subcommand("tree", "compose transform paths from the unit pair");
    std::string path_csv;
    int depth_all = 0;
    int tree_order = 12;
    long tree_max_n = 4;
    std::uint64_t tree_seed = 42;
    bool tree_json = false;
    tree->add_option("--path", path_csv, "comma-separated transform tags, e.g. T1e,T3e");
    tree->add_option("--depth-all", depth_all, "run every path of this depth");
    tree->add_option("--order", tree_order, "truncation order")->default_val(12);
    tree->add_option("--max-n", tree_max_n, "largest size n")->default_val(4);
    tree->add_option("--seed", tree_seed, "base seed")->default_val(42);
    tree->add_flag("--json", tree_json, "one JSON object per line");

    // kernels
    auto* kernels = app.add_subcommand(
        "kernels", "inverse-relation and kernel factorization suite");
    long kernels_max_n = 4;
    std::uint64_t kernels_seed = 42;
    bool kernels_json = false;
    kernels->add_option("--max-n", kernels_max_n, "largest size n")->default_val(4);
    kernels->add_option("--seed", kernels_seed, "base seed")->default_val(42);
    kernels->add_flag("--json", kernels_json, "one JSON object per line");

    // probe-lift3
    auto* probe = app.add_subcommand("probe-lift3",
                                     "probe candidate exponent laws for the i = 3 lift");
    std::string candidates = "default";
    std::uint64_t probe_seed = 42;
    bool probe_json = false;
    probe->add_option("--candidates", candidates, "candidate set (only 'default' is defined)")
        ->default_val("default");
    probe->add_option("--seed", probe_seed, "base seed")->default_val(42);
    probe->add_flag("--json", probe_json, "JSON report");

    // list
    auto* list = app.add_subcommand("list", "print the identity registry");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            std::optional<int> o;
            if (order > 0) o = order;
            std::optional<long> nm;
            if (max_n >= 0) nm = max_n;
            return emit(wpb::run_verify(keys, points, seed, o, nm), json);
        }
        if (tree->parsed()) {
            std::vector<std::vector<wpb::TransformTag>> paths;
            if (depth_all > 0)
                paths = wpb::tree_paths(depth_all);
            else
                paths.push_back(parse_path(path_csv));
            std::vector<wpb::IdentityReport> reports;
            std::uint64_t s = tree_seed;
            for (const auto& p : paths) {
                auto reps = wpb::run_tree_path(p, s++, tree_max_n, tree_order);
                reports.insert(reports.end(), reps.begin(), reps.end());
            }
            return emit(reports, tree_json);
        }
        if (kernels->parsed())
            return emit(wpb::run_kernels(kernels_max_n, kernels_seed), kernels_json);
        if (probe->parsed()) {
            if (candidates != "default") {
                std::cerr << "unknown candidate set: " << candidates << "\n";
                return 2;
            }
            wpb::ProbeReport rep = wpb::probe_lift3(wpb::default_probe_candidates(), probe_seed);
            std::cout << (probe_json ? rep.json_line() : rep.text());
            if (!probe_json) std::cout << std::flush;
            else std::cout << "\n";
            return rep.unique_survivor ? 0 : 1;
        }
        if (list->parsed()) {
            for (const auto& c : wpb::registry()) {
                std::cout << c.name << "  (order " << c.default_order << ", n <= "
                          << c.default_n_max;
                if (!c.required_roots.empty()) {
                    std::cout << ", roots:";
                    for (const auto& r : c.required_roots) std::cout << " " << r;
                }
                std::cout << ")\n    " << c.display << "\n";
            }
            return 0;
        }
    } catch (const wpb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
