#include "rv/methods.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rv {

Method parse_method(const std::string& name) {
    if (name == "split-cycle") return Method::SplitCycle;
    if (name == "ranked-pairs") return Method::RankedPairs;
    if (name == "beat-path") return Method::BeatPath;
    if (name == "stable-voting") return Method::StableVoting;
    if (name == "river") return Method::River;
    throw config_error("unknown method: " + name);
}

std::string method_name(Method m) {
    switch (m) {
        case Method::SplitCycle: return "split-cycle";
        case Method::RankedPairs: return "ranked-pairs";
        case Method::BeatPath: return "beat-path";
        case Method::StableVoting: return "stable-voting";
        case Method::River: return "river";
    }
    return "?";
}

namespace {

std::vector<std::string> sorted_labels(const MarginGraph& g, const std::vector<int>& idx) {
    std::vector<std::string> out;
    for (int i : idx) out.push_back(g.label(i));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

WinnerResult split_cycle(const MarginGraph& g) {
    const int n = g.num_alternatives();
    StrengthMatrix s = strongest_paths(g);
    Diagram d;
    d.method = Method::SplitCycle;
    std::vector<bool> beaten(n, false);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y || g.margin(x, y) <= 0) continue;
            // splitting edge iff some cycle through (x,y) has minimum m(x,y)
            if (s.strength(y, x) >= g.margin(x, y)) continue;
            d.kept.push_back({x, y, g.margin(x, y)});
            beaten[y] = true;
        }
    std::vector<int> winners_idx;
    for (int x = 0; x < n; ++x)
        if (!beaten[x]) winners_idx.push_back(x);
    // definitional cross-check against the immune set
    for (int x = 0; x < n; ++x)
        if (is_immune(g, s, x) != !beaten[x])
            throw std::logic_error("split cycle routes disagree at " + g.label(x));
    WinnerResult r;
    r.winners = sorted_labels(g, winners_idx);
    r.diagram = std::move(d);
    r.strengths = std::move(s);
    return r;
}

namespace {

bool reaches(const std::vector<std::vector<bool>>& adj, int from, int to) {
    const int n = static_cast<int>(adj.size());
    std::vector<bool> seen(n, false);
    std::vector<int> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == to) return true;
        for (int v = 0; v < n; ++v)
            if (adj[u][v] && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    return false;
}

}  // namespace

WinnerResult ranked_pairs(const MarginGraph& g, const EdgeOrder& o) {
    const int n = g.num_alternatives();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    Diagram d;
    d.method = Method::RankedPairs;
    std::vector<bool> beaten(n, false);
    for (const auto& e : o.edges) {
        if (reaches(adj, e.target, e.source)) continue;
        adj[e.source][e.target] = true;
        d.kept.push_back(e);
        beaten[e.target] = true;
    }
    std::vector<int> winners_idx;
    for (int x = 0; x < n; ++x)
        if (!beaten[x]) winners_idx.push_back(x);
    WinnerResult r;
    r.winners = sorted_labels(g, winners_idx);
    r.diagram = std::move(d);
    return r;
}

WinnerResult beat_path(const MarginGraph& g) {
    const int n = g.num_alternatives();
    StrengthMatrix s = strongest_paths(g);
    std::vector<int> winners_idx;
    for (int x = 0; x < n; ++x) {
        bool unbeaten = true;
        for (int y = 0; y < n && unbeaten; ++y)
            if (y != x && s.strength(x, y) < s.strength(y, x)) unbeaten = false;
        if (unbeaten) winners_idx.push_back(x);
    }
    WinnerResult r;
    r.winners = sorted_labels(g, winners_idx);
    r.strengths = std::move(s);
    return r;
}

WinnerResult river(const MarginGraph& g, const EdgeOrder& o) {
    const int n = g.num_alternatives();
    std::vector<int> parent(n, -1);
    Diagram d;
    d.method = Method::River;
    for (const auto& e : o.edges) {
        if (parent[e.target] != -1) continue;  // (Br)
        // (Cy): target must not be an ancestor of source in the forest
        int walk = e.source;
        bool cycle = false;
        while (walk != -1) {
            if (walk == e.target) {
                cycle = true;
                break;
            }
            walk = parent[walk];
        }
        if (cycle) continue;
        parent[e.target] = e.source;
        d.kept.push_back(e);
    }
    int root = -1;
    for (int x = 0; x < n; ++x)
        if (parent[x] == -1) {
            if (root != -1) throw std::logic_error("river forest has two roots");
            root = x;
        }
    if (static_cast<int>(d.kept.size()) != n - 1)
        throw std::logic_error("river diagram is not spanning");
    d.root = root;
    WinnerResult r;
    r.winners = {g.label(root)};
    r.diagram = std::move(d);
    return r;
}

std::vector<std::string> rebutting_path(const WinnerResult& r, const MarginGraph& g,
                                        const std::string& y) {
    if (!r.diagram || r.diagram->method != Method::River || !r.diagram->root)
        throw config_error("rebutting_path requires a river result");
    const int n = g.num_alternatives();
    std::vector<int> parent(n, -1);
    for (const auto& e : r.diagram->kept) parent[e.target] = e.source;
    int cur = g.index_of(y);
    if (cur == *r.diagram->root) throw config_error("alternative is the river root");
    std::vector<std::string> path;
    while (cur != -1) {
        path.push_back(g.label(cur));
        cur = parent[cur];
    }
    std::reverse(path.begin(), path.end());
    if (path.front() != g.label(*r.diagram->root))
        throw std::logic_error("alternative unreachable from river root");
    return path;
}

namespace {

// Recursion on subsets of the original alternative set, memoized by the
// bitmask of remaining alternatives. Winners returned as original indices.
struct StableVotingRun {
    const Profile& original;
    const TiebreakerKind& kind;
    std::map<std::uint64_t, std::vector<int>> memo;
    std::vector<TraceStep>* top_trace = nullptr;

    std::vector<int> solve(const Profile& p, std::uint64_t mask, bool top) {
        auto it = memo.find(mask);
        if (it != memo.end() && !top) return it->second;
        std::vector<int> result;
        if (p.num_alternatives() == 1) {
            result = {original.index_of(p.alternatives()[0])};
        } else {
            MarginGraph g = margin_graph(p);
            StrengthMatrix s = strongest_paths(g);
            auto pairs = make_pair_order(g, &p, kind);
            bool decided = false;
            for (const auto& e : pairs) {
                if (!is_immune(g, s, e.source)) continue;
                const std::string& x = g.label(e.source);
                const std::string& y = g.label(e.target);
                Profile sub = restrict(p, y);
                std::uint64_t sub_mask = mask & ~(1ull << original.index_of(y));
                auto sub_winners = solve(sub, sub_mask, false);
                int xi = original.index_of(x);
                bool success =
                    std::find(sub_winners.begin(), sub_winners.end(), xi) != sub_winners.end();
                if (top && top_trace) {
                    TraceStep step;
                    step.tried = {original.index_of(x), original.index_of(y), e.margin};
                    for (int w : sub_winners)
                        step.sub_winners.push_back(original.alternatives()[w]);
                    std::sort(step.sub_winners.begin(), step.sub_winners.end());
                    step.success = success;
                    top_trace->push_back(step);
                }
                if (success) {
                    result = {xi};
                    decided = true;
                    break;
                }
            }
            if (!decided) throw std::logic_error("stable voting found no winner");
        }
        memo[mask] = result;
        return result;
    }
};

}  // namespace

WinnerResult stable_voting(const Profile& p, const TiebreakerKind& k) {
    if (p.num_alternatives() > 62)
        throw config_error("stable voting supports at most 62 alternatives");
    StableVotingRun run{p, k, {}, nullptr};
    WinnerResult r;
    run.top_trace = &r.trace;
    std::uint64_t full = (p.num_alternatives() == 62)
                             ? ~0ull
                             : ((1ull << p.num_alternatives()) - 1);
    auto winners_idx = run.solve(p, full, true);
    for (int w : winners_idx) r.winners.push_back(p.alternatives()[w]);
    std::sort(r.winners.begin(), r.winners.end());
    return r;
}

WinnerResult run_method(Method m, const MarginGraph& g, const Profile* p,
                        const TiebreakerKind& k) {
    switch (m) {
        case Method::SplitCycle: return split_cycle(g);
        case Method::BeatPath: return beat_path(g);
        case Method::RankedPairs: return ranked_pairs(g, make_edge_order(g, p, k));
        case Method::River: return river(g, make_edge_order(g, p, k));
        case Method::StableVoting:
            if (!p) throw config_error("stable voting requires ballots");
            return stable_voting(*p, k);
    }
    throw config_error("unknown method");
}

std::vector<std::string> winners(Method m, const Profile& p, const TiebreakerKind& k) {
    return run_method(m, margin_graph(p), &p, k).winners;
}

}  // namespace rv
