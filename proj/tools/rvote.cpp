#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "rv/axioms.hpp"
#include "rv/io.hpp"
#include "rv/margin_graph.hpp"
#include "rv/methods.hpp"
#include "rv/profile.hpp"
#include "rv/tiebreak.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw rv::config_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Input {
    std::optional<rv::Profile> profile;
    rv::MarginGraph graph;
};

Input load_input(const std::string& profile_path, const std::string& margins_path) {
    if (profile_path.empty() == margins_path.empty())
        throw rv::config_error("exactly one of --profile and --margins is required");
    if (!profile_path.empty()) {
        rv::Profile p = rv::parse_profile(slurp(profile_path));
        rv::MarginGraph g = rv::margin_graph(p);
        return {std::move(p), std::move(g)};
    }
    return {std::nullopt, rv::parse_margin_graph(slurp(margins_path))};
}

void require_ballots(const Input& in, const std::string& what) {
    if (!in.profile)
        throw rv::config_error(what + " requires ballots; give --profile (or use `realize`)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"River, Split Cycle, Ranked Pairs, Beat Path, and Stable Voting over margin graphs"};
    app.require_subcommand(1);

    std::string profile_path, margins_path, method_name, tiebreaker_spec = "lex",
                axiom_name_str;
    bool emit_json = false;
    std::uint64_t seed = 0;
    int alternatives = 4, voters = 11, trials = 100;
    bool uniquely_weighted_only = false, clone = false;

    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--profile", profile_path, "profile file");
        cmd->add_option("--margins", margins_path, "margin-graph file");
        cmd->add_option("--tiebreaker", tiebreaker_spec,
                        "lex[:ORDER] | first-voter | quasi-pareto[:BASE] | random:SEED | file:PATH");
    };

    auto* winners_cmd = app.add_subcommand("winners", "compute the winner set");
    add_io(winners_cmd);
    winners_cmd->add_option("--method", method_name, "voting method")->required();
    winners_cmd->add_flag("--json", emit_json, "print the structured result document");

    auto* diagram_cmd = app.add_subcommand("diagram", "emit a DOT diagram");
    add_io(diagram_cmd);
    diagram_cmd->add_option("--method", method_name,
                            "split-cycle | ranked-pairs | river (omit for the margin graph)");

    auto* check_cmd = app.add_subcommand("check", "check one axiom on one input");
    add_io(check_cmd);
    check_cmd->add_option("--method", method_name, "voting method")->required();
    check_cmd->add_option("--axiom", axiom_name_str, "axiom to check")->required();
    check_cmd->add_option("--seed", seed, "sampling seed for anonymity/neutrality");

    auto* fuzz_cmd = app.add_subcommand("fuzz", "randomized axiom campaign");
    fuzz_cmd->add_option("--method", method_name, "voting method")->required();
    fuzz_cmd->add_option("--axiom", axiom_name_str, "axiom to check")->required();
    fuzz_cmd->add_option("--tiebreaker", tiebreaker_spec, "tiebreaker kind");
    fuzz_cmd->add_option("--alternatives", alternatives, "alternatives per trial");
    fuzz_cmd->add_option("--voters", voters, "voters per trial");
    fuzz_cmd->add_option("--trials", trials, "number of trials");
    fuzz_cmd->add_option("--seed", seed, "base seed");
    fuzz_cmd->add_flag("--uniquely-weighted", uniquely_weighted_only,
                       "discard non-uniquely-weighted trials");
    fuzz_cmd->add_flag("--clone", clone, "inject a Pareto-dominated clone per trial");

    auto* gen_cmd = app.add_subcommand("gen", "print a random profile");
    gen_cmd->add_option("--alternatives", alternatives, "alternative count");
    gen_cmd->add_option("--voters", voters, "voter count");
    gen_cmd->add_option("--seed", seed, "seed");

    auto* realize_cmd = app.add_subcommand("realize", "print a profile realizing a margin graph");
    realize_cmd->add_option("--margins", margins_path, "margin-graph file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (winners_cmd->parsed() || diagram_cmd->parsed()) {
            Input in = load_input(profile_path, margins_path);
            rv::TiebreakerKind k = rv::TiebreakerKind::parse(tiebreaker_spec);
            if (k.needs_profile()) require_ballots(in, k.describe() + " tiebreaker");
            const rv::Profile* p = in.profile ? &*in.profile : nullptr;

            if (diagram_cmd->parsed() && method_name.empty()) {
                std::cout << rv::render_dot(in.graph);
                return 0;
            }
            rv::Method m = rv::parse_method(method_name);
            if (m == rv::Method::StableVoting) require_ballots(in, "stable-voting");
            rv::WinnerResult r = rv::run_method(m, in.graph, p, k);
            if (diagram_cmd->parsed()) {
                if (!r.diagram)
                    throw rv::config_error(rv::method_name(m) + " produces no diagram");
                std::cout << rv::render_dot(*r.diagram, in.graph);
                return 0;
            }
            if (emit_json) {
                std::cout << rv::result_to_json(r, m, in.graph, k.describe()) << "\n";
            } else {
                for (const auto& w : r.winners) std::cout << w << "\n";
            }
            return 0;
        }

        if (check_cmd->parsed()) {
            Input in = load_input(profile_path, margins_path);
            require_ballots(in, "axiom checking");
            rv::TiebreakerKind k = rv::TiebreakerKind::parse(tiebreaker_spec);
            rv::Method m = rv::parse_method(method_name);
            rv::Axiom a = rv::parse_axiom(axiom_name_str);
            auto r = rv::check_axiom(a, m, *in.profile, k, 16, seed);
            if (r.holds) {
                std::cout << "holds\n";
                return 0;
            }
            std::cout << rv::report_to_json(r, *in.profile, k.describe()) << "\n";
            return 1;
        }

        if (fuzz_cmd->parsed()) {
            rv::Method m = rv::parse_method(method_name);
            rv::Axiom a = rv::parse_axiom(axiom_name_str);
            rv::FuzzConfig cfg;
            cfg.alternatives = alternatives;
            cfg.voters = voters;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.uniquely_weighted_only = uniquely_weighted_only;
            cfg.inject_clone = clone;
            cfg.tiebreaker = rv::TiebreakerKind::parse(tiebreaker_spec);
            auto violations = rv::fuzz(m, a, cfg);
            for (const auto& r : violations) {
                rv::Profile p = rv::random_profile(cfg.alternatives, cfg.voters, r.seed);
                if (cfg.inject_clone) {
                    std::mt19937_64 rng(r.seed ^ 0x9e3779b97f4a7c15ull);
                    int orig = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.alternatives));
                    p = rv::inject_clone(p, orig, "clone");
                }
                std::cout << rv::report_to_json(r, p, cfg.tiebreaker.describe()) << "\n";
            }
            std::cout << "violations: " << violations.size() << " / " << trials << " trials\n";
            return violations.empty() ? 0 : 1;
        }

        if (gen_cmd->parsed()) {
            std::cout << rv::format_profile(rv::random_profile(alternatives, voters, seed));
            return 0;
        }

        if (realize_cmd->parsed()) {
            rv::MarginGraph g = rv::parse_margin_graph(slurp(margins_path));
            std::cout << rv::format_profile(rv::mcgarvey_profile(g));
            return 0;
        }
    } catch (const rv::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rv::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
