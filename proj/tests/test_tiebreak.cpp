#include <doctest.h>

#include "helpers.hpp"
#include "rv/tiebreak.hpp"

using namespace rv;

TEST_CASE("TiebreakerKind::parse covers the flag grammar") {
    CHECK(TiebreakerKind::parse("lex").family == TiebreakerKind::Family::Lexicographic);
    auto lex = TiebreakerKind::parse("lex:c,a,b");
    CHECK(lex.alt_order == std::vector<std::string>{"c", "a", "b"});
    CHECK(TiebreakerKind::parse("first-voter").family == TiebreakerKind::Family::FirstVoter);
    auto qp = TiebreakerKind::parse("quasi-pareto");
    CHECK(qp.family == TiebreakerKind::Family::QuasiPareto);
    CHECK(qp.base == TiebreakerKind::Family::Lexicographic);
    auto qpf = TiebreakerKind::parse("quasi-pareto:first-voter");
    CHECK(qpf.base == TiebreakerKind::Family::FirstVoter);
    CHECK(qpf.needs_profile());
    auto rnd = TiebreakerKind::parse("random:99");
    CHECK(rnd.family == TiebreakerKind::Family::SeededRandom);
    CHECK(rnd.seed == 99);
    CHECK(rnd.describe().find("mt19937_64") != std::string::npos);

    CHECK_THROWS_AS(TiebreakerKind::parse("bogus"), config_error);
    CHECK_THROWS_AS(TiebreakerKind::parse("random:"), config_error);
    CHECK_THROWS_AS(TiebreakerKind::parse("random:abc"), config_error);
    CHECK_THROWS_AS(TiebreakerKind::parse("quasi-pareto:quasi-pareto"), config_error);
    CHECK_THROWS_AS(TiebreakerKind::parse("first-voter:x"), config_error);
    CHECK_THROWS_AS(TiebreakerKind::parse("file:/nonexistent/path"), config_error);
}

TEST_CASE("consistency classification of kinds") {
    CHECK(TiebreakerKind::parse("lex").consistent());
    CHECK(TiebreakerKind::parse("first-voter").consistent());
    CHECK(TiebreakerKind::parse("quasi-pareto").consistent());
    CHECK_FALSE(TiebreakerKind::parse("random:1").consistent());
}

TEST_CASE("every kind produces a valid EdgeOrder") {
    std::vector<TiebreakerKind> kinds = {
        TiebreakerKind::lexicographic(), TiebreakerKind::first_voter(),
        TiebreakerKind::quasi_pareto(), TiebreakerKind::seeded_random(7)};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Profile p = random_profile(4, 6, seed);  // even n: plenty of zero ties
        MarginGraph g = margin_graph(p);
        for (const auto& k : kinds) {
            EdgeOrder o = make_edge_order(g, &p, k);
            CHECK(valid_edge_order(o, g));
        }
    }
}

TEST_CASE("uniquely weighted graphs admit exactly one EdgeOrder") {
    MarginGraph g = helpers::load_graph("fig1.mg");
    Profile p = mcgarvey_profile(g);
    EdgeOrder lex = make_edge_order(g, &p, TiebreakerKind::lexicographic());
    for (const auto& k :
         {TiebreakerKind::first_voter(), TiebreakerKind::quasi_pareto(),
          TiebreakerKind::seeded_random(3), TiebreakerKind::seeded_random(4)}) {
        EdgeOrder o = make_edge_order(g, &p, k);
        CHECK(o.edges == lex.edges);
    }
}

TEST_CASE("P1's strongest edge leads the lexicographic order") {
    MarginGraph g = margin_graph(helpers::load_profile("p1.prof"));
    EdgeOrder o = make_edge_order(g, nullptr, TiebreakerKind::lexicographic({"a", "b", "c", "d"}));
    REQUIRE(!o.edges.empty());
    CHECK(g.label(o.edges[0].source) == "b");
    CHECK(g.label(o.edges[0].target) == "a");
    CHECK(o.edges[0].margin == 22);
}

TEST_CASE("first-voter requires a profile") {
    MarginGraph g = helpers::load_graph("fig1.mg");
    CHECK_THROWS_AS(make_edge_order(g, nullptr, TiebreakerKind::first_voter()), config_error);
}

TEST_CASE("lexicographic and first-voter kinds are consistent") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Profile p = random_profile(4, 6, seed);
        for (const auto& x : p.alternatives()) {
            CHECK(check_consistent(TiebreakerKind::lexicographic(), p, x));
            CHECK(check_consistent(TiebreakerKind::first_voter(), p, x));
        }
    }
}

TEST_CASE("seeded-random violates consistency on some tied instance") {
    bool found = false;
    std::pair<Edge, Edge> witness;
    for (std::uint64_t seed = 0; seed < 40 && !found; ++seed) {
        Profile p = random_profile(4, 4, seed);
        for (const auto& x : p.alternatives())
            if (!check_consistent(TiebreakerKind::seeded_random(seed), p, x, &witness)) {
                found = true;
                break;
            }
    }
    CHECK(found);
}

TEST_CASE("first-voter orders are Pareto-consistent") {
    for (const char* name : {"p1.prof", "p2.prof", "fig4.prof"}) {
        Profile p = helpers::load_profile(name);
        MarginGraph g = margin_graph(p);
        EdgeOrder o = make_edge_order(g, &p, TiebreakerKind::first_voter());
        CHECK(check_pareto_consistent(o, p));
    }
}

TEST_CASE("an adversarial order fails the Pareto-consistency check") {
    // y Pareto-dominates x; all three edges tie at margin 2
    Profile p = parse_profile("2: y x z\n");
    MarginGraph g = margin_graph(p);
    auto bad = TiebreakerKind::explicit_order({{"x", "z"}, {"y", "x"}, {"y", "z"}});
    EdgeOrder o = make_edge_order(g, &p, bad);
    CHECK(valid_edge_order(o, g));
    CHECK_FALSE(check_pareto_consistent(o, p));
    CHECK_FALSE(check_quasi_pareto_consistent(o, g));
    auto good = TiebreakerKind::explicit_order({{"y", "x"}, {"y", "z"}, {"x", "z"}});
    EdgeOrder o2 = make_edge_order(g, &p, good);
    CHECK(check_pareto_consistent(o2, p));
    CHECK(check_quasi_pareto_consistent(o2, g));
}

TEST_CASE("quasi-pareto kind passes its own consistency check") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Profile p = random_profile(4, 6, seed);
        MarginGraph g = margin_graph(p);
        EdgeOrder o = make_edge_order(g, &p, TiebreakerKind::quasi_pareto());
        CHECK(valid_edge_order(o, g));
        CHECK(check_quasi_pareto_consistent(o, g));
    }
    // and on the cloned instances where domination is guaranteed
    Profile p = parse_profile("2: y x z\n1: z y x\n1: y x z\n");
    MarginGraph g = margin_graph(p);
    EdgeOrder o = make_edge_order(g, &p, TiebreakerKind::quasi_pareto());
    CHECK(check_quasi_pareto_consistent(o, g));
}

TEST_CASE("seeded-random is deterministic per seed") {
    Profile p = random_profile(4, 6, 11);
    MarginGraph g = margin_graph(p);
    EdgeOrder a = make_edge_order(g, &p, TiebreakerKind::seeded_random(5));
    EdgeOrder b = make_edge_order(g, &p, TiebreakerKind::seeded_random(5));
    CHECK(a.edges == b.edges);
    bool some_seed_differs = false;
    for (std::uint64_t s = 6; s < 30 && !some_seed_differs; ++s)
        some_seed_differs = make_edge_order(g, &p, TiebreakerKind::seeded_random(s)).edges != a.edges;
    CHECK(some_seed_differs);
}

TEST_CASE("explicit orders are validated against the graph") {
    Profile p = parse_profile("2: y x z\n");
    MarginGraph g = margin_graph(p);
    CHECK_THROWS_AS(
        make_edge_order(g, &p, TiebreakerKind::explicit_order({{"y", "x"}, {"y", "z"}})),
        config_error);
    CHECK_THROWS_AS(make_edge_order(g, &p, TiebreakerKind::explicit_order(
                                               {{"z", "y"}, {"y", "x"}, {"y", "z"}})),
                    config_error);
    // descending-margin violation: margins here are 3, 3, 1
    Profile q = parse_profile("2: a b c\n1: b a c\n");
    MarginGraph h = margin_graph(q);
    auto ascending = TiebreakerKind::explicit_order({{"a", "b"}, {"a", "c"}, {"b", "c"}});
    CHECK_THROWS_AS(make_edge_order(h, &q, ascending), config_error);
}

TEST_CASE("make_pair_order covers all ordered pairs, margins descending") {
    Profile p = random_profile(4, 7, 2);
    MarginGraph g = margin_graph(p);
    auto pairs = make_pair_order(g, &p, TiebreakerKind::lexicographic());
    CHECK(pairs.size() == 12);
    bool has_negative = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i].margin < 0) has_negative = true;
        if (i) CHECK(pairs[i].margin <= pairs[i - 1].margin);
    }
    CHECK(has_negative);
}
