#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rv/margin_graph.hpp"
#include "rv/profile.hpp"

namespace rv {

/// Raised when a requested configuration is unusable (CLI exit code 2).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Which rule resolves ties inside an equal-margin class.
struct TiebreakerKind {
    enum class Family { Lexicographic, FirstVoter, QuasiPareto, SeededRandom, Explicit };

    Family family = Family::Lexicographic;
    /// For QuasiPareto: the rule applied inside the Q and Q-bar sub-blocks.
    Family base = Family::Lexicographic;
    /// Lexicographic alternative order; empty means the graph's own order.
    std::vector<std::string> alt_order;
    std::uint64_t seed = 0;
    /// Explicit: the full edge sequence, validated against the graph.
    std::vector<std::pair<std::string, std::string>> explicit_edges;

    static TiebreakerKind lexicographic(std::vector<std::string> order = {});
    static TiebreakerKind first_voter();
    static TiebreakerKind quasi_pareto(Family base = Family::Lexicographic);
    static TiebreakerKind seeded_random(std::uint64_t seed);
    static TiebreakerKind explicit_order(std::vector<std::pair<std::string, std::string>> edges);

    /// CLI grammar: lex[:a,b,c] | first-voter | quasi-pareto[:BASE] |
    /// random:SEED | file:PATH
    static TiebreakerKind parse(const std::string& spec);

    bool needs_profile() const;
    /// Relative order of surviving edges is preserved under restriction.
    bool consistent() const;
    std::string describe() const;
};

/// A total processing order over the weak-defeat edges of one margin graph,
/// non-increasing in margin.
struct EdgeOrder {
    std::vector<Edge> edges;
};

/// Sorts weak-defeat edges by strictly decreasing margin, resolving ties
/// within each equal-margin class by the kind. first-voter requires a
/// profile; the others accept a bare graph (profile may be null).
EdgeOrder make_edge_order(const MarginGraph& g, const Profile* p, const TiebreakerKind& k);

/// Same tie-class machinery over all ordered pairs, margins included even
/// when negative. Stable Voting consumes this.
std::vector<Edge> make_pair_order(const MarginGraph& g, const Profile* p, const TiebreakerKind& k);

/// True iff the relative order of every edge pair not involving x is the
/// same in k's order for p and for p minus x. A violating pair, if any,
/// is written to *witness.
bool check_consistent(const TiebreakerKind& k, const Profile& p, const std::string& x,
                      std::pair<Edge, Edge>* witness = nullptr);

/// Whenever y Pareto-dominates x, (y,z) precedes (x,z) for every third z.
bool check_pareto_consistent(const EdgeOrder& o, const Profile& p);

/// Quasi-Pareto analogue: equal-margin quasi-domination edges into the same
/// target come first, and every (x,z) trails (y,z) and (y,x) whenever y
/// quasi-Pareto-dominates x.
bool check_quasi_pareto_consistent(const EdgeOrder& o, const MarginGraph& g);

/// Checks the EdgeOrder invariants: a permutation of weak_defeat_edges with
/// non-increasing margins.
bool valid_edge_order(const EdgeOrder& o, const MarginGraph& g);

}  // namespace rv
