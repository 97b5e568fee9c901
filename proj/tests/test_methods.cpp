#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "rv/methods.hpp"

using namespace rv;

namespace {

const TiebreakerKind kLex = TiebreakerKind::lexicographic();

std::vector<std::string> win(Method m, const Profile& p) { return winners(m, p, kLex); }

}  // namespace

TEST_CASE("Theorem 3 regression: Split Cycle and IPDA") {
    // headline winner on the transcribed table
    Profile table = helpers::load_profile("p1.prof");
    auto w = win(Method::SplitCycle, table);
    CHECK(std::find(w.begin(), w.end(), "c") != w.end());
    // before/after behavior on the figure's margin graph
    Profile p = mcgarvey_profile(helpers::load_graph("fig_p1.mg"));
    auto before = win(Method::SplitCycle, p);
    CHECK(std::find(before.begin(), before.end(), "c") != before.end());
    auto after = win(Method::SplitCycle, restrict(p, "a"));
    CHECK(std::find(after.begin(), after.end(), "c") == after.end());
}

TEST_CASE("Theorem 3 regression: Ranked Pairs") {
    Profile table = helpers::load_profile("p2.prof");
    CHECK(win(Method::RankedPairs, table) == std::vector<std::string>{"d"});
    Profile p = mcgarvey_profile(helpers::load_graph("fig_p2.mg"));
    CHECK(win(Method::RankedPairs, p) == std::vector<std::string>{"d"});
    CHECK(win(Method::RankedPairs, restrict(p, "a")) == std::vector<std::string>{"b"});
}

TEST_CASE("Theorem 3 regression: Beat Path") {
    Profile p = helpers::load_profile("p3.prof");
    CHECK(win(Method::BeatPath, p) == std::vector<std::string>{"d"});
    CHECK(win(Method::BeatPath, restrict(p, "a")) == std::vector<std::string>{"c"});
}

TEST_CASE("Theorem 3 regression: Stable Voting") {
    Profile table = helpers::load_profile("p4.prof");
    CHECK(win(Method::StableVoting, table) == std::vector<std::string>{"d"});
    Profile p = mcgarvey_profile(helpers::load_graph("fig_p4.mg"));
    CHECK(win(Method::StableVoting, p) == std::vector<std::string>{"d"});
    CHECK(win(Method::StableVoting, restrict(p, "a")) == std::vector<std::string>{"c"});
}

TEST_CASE("Figure 1/2 reproduction") {
    MarginGraph g = helpers::load_graph("fig1.mg");
    CHECK(split_cycle(g).winners == std::vector<std::string>{"a", "b", "c"});
    EdgeOrder o = make_edge_order(g, nullptr, kLex);
    CHECK(ranked_pairs(g, o).winners == std::vector<std::string>{"c"});

    WinnerResult rv = river(g, o);
    CHECK(rv.winners == std::vector<std::string>{"a"});
    REQUIRE(rv.diagram.has_value());
    CHECK(rv.diagram->kept.size() == 5);
    std::set<std::pair<std::string, std::string>> kept;
    for (const auto& e : rv.diagram->kept) kept.insert({g.label(e.source), g.label(e.target)});
    std::set<std::pair<std::string, std::string>> fig2 = {
        {"a", "f"}, {"f", "d"}, {"f", "c"}, {"c", "b"}, {"c", "e"}};
    CHECK(kept == fig2);

    Profile p = mcgarvey_profile(g);
    WinnerResult sv = stable_voting(p, kLex);
    CHECK(sv.winners == std::vector<std::string>{"a"});
    // the deciding sub-election excludes e
    REQUIRE(!sv.trace.empty());
    const TraceStep& last = sv.trace.back();
    CHECK(last.success);
    CHECK(p.alternatives()[last.tried.target] == "e");
    CHECK(p.alternatives()[last.tried.source] == "a");
}

TEST_CASE("Figure 3: river tree stays small, ranked pairs keeps more") {
    MarginGraph g = helpers::load_graph("fig3.mg");
    EdgeOrder o = make_edge_order(g, nullptr, kLex);
    WinnerResult rv = river(g, o);
    CHECK(rv.winners == std::vector<std::string>{"d"});
    REQUIRE(rv.diagram.has_value());
    CHECK(rv.diagram->kept.size() == 13);
    for (const auto& e : rv.diagram->kept) CHECK(e.margin > 0);
    WinnerResult rp = ranked_pairs(g, o);
    CHECK(rp.diagram->kept.size() > rv.diagram->kept.size());
}

TEST_CASE("Condorcet winner wins under every method") {
    Profile p = parse_profile("3: a b c\n2: b a c\n");
    for (Method m : {Method::SplitCycle, Method::RankedPairs, Method::BeatPath,
                     Method::StableVoting, Method::River})
        CHECK(win(m, p) == std::vector<std::string>{"a"});
}

TEST_CASE("single alternative base case") {
    Profile p = parse_profile("1: a\n");
    for (Method m : {Method::SplitCycle, Method::RankedPairs, Method::BeatPath,
                     Method::StableVoting, Method::River})
        CHECK(win(m, p) == std::vector<std::string>{"a"});
}

TEST_CASE("river handles zero-margin two-alternative standoff") {
    Profile p = parse_profile("1: a b\n1: b a\n");
    CHECK(win(Method::River, p) == std::vector<std::string>{"a"});
    CHECK(win(Method::RankedPairs, p) == std::vector<std::string>{"a"});
    CHECK(win(Method::SplitCycle, p) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("refinement, resoluteness, Smith membership, tree shape") {
    // n large enough that unique weights are reachable even at m = 5
    int uniquely_weighted_seen = 0;
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Profile p = random_profile(3 + seed % 3, 21 + 2 * (seed % 4), seed);
        MarginGraph g = margin_graph(p);
        auto smith = smith_set(g);
        auto sc = win(Method::SplitCycle, p);
        std::set<std::string> sc_set(sc.begin(), sc.end());
        for (Method m : {Method::RankedPairs, Method::BeatPath, Method::StableVoting,
                         Method::River}) {
            auto w = win(m, p);
            CHECK(!w.empty());
            for (const auto& x : w) {
                CHECK(sc_set.count(x));
                CHECK(smith.count(x));
            }
        }
        for (const auto& x : sc) CHECK(smith.count(x));

        EdgeOrder o = make_edge_order(g, &p, kLex);
        WinnerResult rv = river(g, o);
        CHECK(rv.winners.size() == 1);
        CHECK(ranked_pairs(g, o).winners.size() == 1);
        // spanning in-tree shape
        REQUIRE(rv.diagram.has_value());
        const int n = g.num_alternatives();
        CHECK(static_cast<int>(rv.diagram->kept.size()) == n - 1);
        std::vector<int> indeg(n, 0), parent(n, -1);
        for (const auto& e : rv.diagram->kept) {
            indeg[e.target]++;
            parent[e.target] = e.source;
        }
        int roots = 0;
        for (int i = 0; i < n; ++i) {
            CHECK(indeg[i] <= 1);
            if (indeg[i] == 0) roots++;
            // connected and acyclic: every walk reaches the root
            int steps = 0, cur = i;
            while (parent[cur] != -1 && steps <= n) {
                cur = parent[cur];
                steps++;
            }
            CHECK(steps <= n);
            CHECK(cur == *rv.diagram->root);
        }
        CHECK(roots == 1);

        if (p.uniquely_weighted()) {
            uniquely_weighted_seen++;
            CHECK(win(Method::BeatPath, p).size() == 1);
            CHECK(win(Method::StableVoting, p).size() == 1);
            // tiebreaker independence
            for (const auto& k : {TiebreakerKind::first_voter(), TiebreakerKind::quasi_pareto(),
                                  TiebreakerKind::seeded_random(seed)}) {
                CHECK(winners(Method::River, p, k) == rv.winners);
                CHECK(winners(Method::RankedPairs, p, k) == ranked_pairs(g, o).winners);
            }
        }
    }
    CHECK(uniquely_weighted_seen > 10);
}

TEST_CASE("ranked pairs keeps at least as many edges as river") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Profile p = random_profile(5, 9, seed);
        MarginGraph g = margin_graph(p);
        EdgeOrder o = make_edge_order(g, &p, kLex);
        CHECK(ranked_pairs(g, o).diagram->kept.size() >= river(g, o).diagram->kept.size());
    }
}

TEST_CASE("rebutting_path strength matches immunity") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Profile p = random_profile(5, 9, seed);
        MarginGraph g = margin_graph(p);
        WinnerResult rv = river(g, make_edge_order(g, &p, kLex));
        const std::string root = rv.winners[0];
        for (const auto& y : p.alternatives()) {
            if (y == root || g.margin(y, root) <= 0) continue;
            auto path = rebutting_path(rv, g, y);
            CHECK(path.front() == root);
            CHECK(path.back() == y);
            CHECK(path_strength(g, path) >= g.margin(y, root));
        }
    }
    MarginGraph g = helpers::load_graph("fig1.mg");
    WinnerResult rv = river(g, make_edge_order(g, nullptr, kLex));
    CHECK_THROWS_AS(rebutting_path(rv, g, "a"), config_error);
}

TEST_CASE("split cycle certificate excludes exactly the splitting edges") {
    MarginGraph g = helpers::load_graph("fig1.mg");
    WinnerResult r = split_cycle(g);
    REQUIRE(r.diagram.has_value());
    StrengthMatrix s = strongest_paths(g);
    std::set<std::pair<int, int>> kept;
    for (const auto& e : r.diagram->kept) kept.insert({e.source, e.target});
    for (int x = 0; x < g.num_alternatives(); ++x)
        for (int y = 0; y < g.num_alternatives(); ++y) {
            if (x == y || g.margin(x, y) <= 0) continue;
            bool splitting = s.strength(y, x) >= g.margin(x, y);
            CHECK(kept.count({x, y}) == !splitting);
        }
}

TEST_CASE("stable voting trace is replayable") {
    Profile p = mcgarvey_profile(helpers::load_graph("fig_p4.mg"));
    WinnerResult r = stable_voting(p, kLex);
    REQUIRE(!r.trace.empty());
    for (const auto& step : r.trace) {
        auto sub = winners(Method::StableVoting, restrict(p, p.alternatives()[step.tried.target]), kLex);
        CHECK(sub == step.sub_winners);
        bool contains = std::find(sub.begin(), sub.end(), p.alternatives()[step.tried.source]) != sub.end();
        CHECK(contains == step.success);
    }
    CHECK(r.trace.back().success);
}

TEST_CASE("run_method rejects stable voting without ballots") {
    MarginGraph g = helpers::load_graph("fig1.mg");
    CHECK_THROWS_AS(run_method(Method::StableVoting, g, nullptr, kLex), config_error);
}

TEST_CASE("method names round-trip") {
    for (Method m : {Method::SplitCycle, Method::RankedPairs, Method::BeatPath,
                     Method::StableVoting, Method::River})
        CHECK(parse_method(method_name(m)) == m);
    CHECK_THROWS_AS(parse_method("copeland"), config_error);
}
