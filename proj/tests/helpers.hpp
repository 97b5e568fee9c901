#pragma once

#include <algorithm>
#include <climits>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rv/margin_graph.hpp"
#include "rv/profile.hpp"

namespace helpers {

inline std::string fixture_path(const std::string& name) {
    return std::string(RV_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline rv::Profile load_profile(const std::string& name) {
    return rv::parse_profile(slurp(fixture_path(name)));
}

inline rv::MarginGraph load_graph(const std::string& name) {
    return rv::parse_margin_graph(slurp(fixture_path(name)));
}

// Independent brute-force oracles. Deliberately naive; they recompute
// everything from first principles for cross-checking.
namespace oracle {

// Margin by scanning every expanded ballot individually.
inline int margin(const rv::Profile& p, const std::string& x, const std::string& y) {
    int m = 0;
    for (int v = 0; v < p.num_voters(); ++v) {
        const auto& b = p.ballot(v);
        auto xi = std::find(b.begin(), b.end(), x);
        auto yi = std::find(b.begin(), b.end(), y);
        m += xi < yi ? 1 : -1;
    }
    return m;
}

// Strongest path strength by enumerating every simple path (exponential).
inline int strongest_rec(const rv::MarginGraph& g, int cur, int to, std::vector<bool>& used) {
    if (cur == to) return INT_MAX;
    int best = -1;
    for (int next = 0; next < g.num_alternatives(); ++next) {
        if (used[next] || g.margin(cur, next) <= 0) continue;
        used[next] = true;
        int rest = strongest_rec(g, next, to, used);
        used[next] = false;
        if (rest >= 0) best = std::max(best, std::min(g.margin(cur, next), rest));
    }
    return best;
}

inline int strongest(const rv::MarginGraph& g, int from, int to) {
    std::vector<bool> used(g.num_alternatives(), false);
    used[from] = true;
    return strongest_rec(g, from, to, used);
}

// Smith set by checking every subset for dominance and taking the smallest.
inline std::set<std::string> smith(const rv::MarginGraph& g) {
    const int n = g.num_alternatives();
    std::set<std::string> best;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        bool dominant = true;
        for (int i = 0; i < n && dominant; ++i)
            for (int j = 0; j < n && dominant; ++j)
                if ((mask >> i & 1) && !(mask >> j & 1) && g.margin(i, j) <= 0) dominant = false;
        if (!dominant) continue;
        if (best.empty() || static_cast<int>(best.size()) > __builtin_popcount(mask)) {
            best.clear();
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) best.insert(g.label(i));
        }
    }
    return best;
}

// Immunity straight from Def. 1, using the exhaustive path search above.
inline bool immune(const rv::MarginGraph& g, int x) {
    for (int y = 0; y < g.num_alternatives(); ++y) {
        if (y == x || g.margin(y, x) <= 0) continue;
        if (strongest(g, x, y) < g.margin(y, x)) return false;
    }
    return true;
}

}  // namespace oracle

}  // namespace helpers
