#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rv/margin_graph.hpp"
#include "rv/tiebreak.hpp"

namespace rv {

enum class Method { SplitCycle, RankedPairs, BeatPath, StableVoting, River };

Method parse_method(const std::string& name);
std::string method_name(Method m);

/// An acyclic edge subset of the margin graph. For river: a spanning
/// in-tree whose root is the winner.
struct Diagram {
    Method method;
    std::vector<Edge> kept;
    std::optional<int> root;
};

/// One step of the Stable Voting recursion: the pair tried, the winners of
/// the election without the pair's target, and whether that decided it.
struct TraceStep {
    Edge tried;
    std::vector<std::string> sub_winners;
    bool success = false;
};

struct WinnerResult {
    std::vector<std::string> winners;  // sorted by label, nonempty
    std::optional<Diagram> diagram;
    std::optional<StrengthMatrix> strengths;
    std::vector<TraceStep> trace;
};

/// Winners are the immune alternatives; certificate is the margin graph
/// minus all splitting edges. Both routes are computed and must agree.
WinnerResult split_cycle(const MarginGraph& g);

/// Greedy acyclic insertion over o.
WinnerResult ranked_pairs(const MarginGraph& g, const EdgeOrder& o);

/// Winners beat every rival on strongest-path strength.
WinnerResult beat_path(const MarginGraph& g);

/// Recursive winner per decreasing-margin pairs from immune alternatives.
WinnerResult stable_voting(const Profile& p, const TiebreakerKind& k);

/// Greedy insertion rejecting cycles and second in-edges; winner is the
/// root of the resulting spanning in-tree.
WinnerResult river(const MarginGraph& g, const EdgeOrder& o);

/// The unique tree path from the river root to y; its strength over g's
/// margins rebuts the defeat m(y, root).
std::vector<std::string> rebutting_path(const WinnerResult& r, const MarginGraph& g,
                                        const std::string& y);

/// Convenience dispatch used by the axiom checkers and the CLI.
WinnerResult run_method(Method m, const MarginGraph& g, const Profile* p, const TiebreakerKind& k);
std::vector<std::string> winners(Method m, const Profile& p, const TiebreakerKind& k);

}  // namespace rv
