#include "rv/margin_graph.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <sstream>
#include <tuple>

namespace rv {

MarginGraph::MarginGraph(std::vector<std::string> alternatives,
                         std::vector<std::vector<int>> margin)
    : alternatives_(std::move(alternatives)), m_(std::move(margin)) {
    const auto n = alternatives_.size();
    if (n == 0) throw parse_error("margin graph has no alternatives");
    if (m_.size() != n) throw parse_error("margin matrix has wrong shape");
    for (std::size_t i = 0; i < n; ++i) {
        if (m_[i].size() != n) throw parse_error("margin matrix has wrong shape");
        if (m_[i][i] != 0) throw parse_error("nonzero diagonal margin");
        for (std::size_t j = 0; j < n; ++j)
            if (m_[i][j] != -m_[j][i]) throw parse_error("margin matrix not antisymmetric");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (alternatives_[i] == alternatives_[j])
                throw parse_error("duplicate alternative label: " + alternatives_[i]);
}

int MarginGraph::index_of(const std::string& label) const {
    auto it = std::find(alternatives_.begin(), alternatives_.end(), label);
    if (it == alternatives_.end()) throw parse_error("unknown alternative: " + label);
    return static_cast<int>(it - alternatives_.begin());
}

int MarginGraph::margin(const std::string& x, const std::string& y) const {
    return m_[index_of(x)][index_of(y)];
}

bool MarginGraph::uniquely_weighted() const {
    std::vector<int> vals;
    const int n = num_alternatives();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (m_[i][j] == 0) return false;
            vals.push_back(std::abs(m_[i][j]));
        }
    std::sort(vals.begin(), vals.end());
    return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

MarginGraph MarginGraph::without(const std::string& x) const {
    const int xi = index_of(x);
    const int n = num_alternatives();
    if (n < 2) throw parse_error("cannot remove the only alternative");
    std::vector<std::string> alts;
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (i != xi) {
            alts.push_back(alternatives_[i]);
            keep.push_back(i);
        }
    std::vector<std::vector<int>> m(alts.size(), std::vector<int>(alts.size(), 0));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) m[i][j] = m_[keep[i]][keep[j]];
    return MarginGraph(std::move(alts), std::move(m));
}

MarginGraph margin_graph(const Profile& p) {
    const int n = p.num_alternatives();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const auto& g : p.groups()) {
        std::vector<int> pos(n);
        for (std::size_t r = 0; r < g.ranking.size(); ++r)
            pos[p.index_of(g.ranking[r])] = static_cast<int>(r);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (pos[i] < pos[j]) m[i][j] += g.count;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int d = m[i][j] - m[j][i];
            m[i][j] = d;
            m[j][i] = -d;
        }
    return MarginGraph(p.alternatives(), std::move(m));
}

std::vector<Edge> weak_defeat_edges(const MarginGraph& g) {
    std::vector<Edge> out;
    const int n = g.num_alternatives();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.margin(i, j) >= 0) out.push_back({i, j, g.margin(i, j)});
    return out;
}

int path_strength(const MarginGraph& g, const std::vector<std::string>& path) {
    if (path.size() < 2) throw parse_error("path needs at least two vertices");
    std::vector<int> idx;
    for (const auto& a : path) idx.push_back(g.index_of(a));
    auto sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw parse_error("path repeats a vertex");
    int strength = INT_MAX;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
        int m = g.margin(idx[i], idx[i + 1]);
        if (m <= 0)
            throw parse_error("non-positive step " + path[i] + " -> " + path[i + 1]);
        strength = std::min(strength, m);
    }
    return strength;
}

StrengthMatrix strongest_paths(const MarginGraph& g) {
    const int n = g.num_alternatives();
    std::vector<std::vector<int>> s(n, std::vector<int>(n, StrengthMatrix::kNoPath));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.margin(i, j) > 0) s[i][j] = g.margin(i, j);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (i == k || s[i][k] == StrengthMatrix::kNoPath) continue;
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k || s[k][j] == StrengthMatrix::kNoPath) continue;
                s[i][j] = std::max(s[i][j], std::min(s[i][k], s[k][j]));
            }
        }
    return StrengthMatrix(std::move(s));
}

bool is_dominant(const MarginGraph& g, const std::set<std::string>& members) {
    if (members.empty()) return false;
    std::vector<bool> in(g.num_alternatives(), false);
    for (const auto& a : members) in[g.index_of(a)] = true;
    for (int i = 0; i < g.num_alternatives(); ++i)
        for (int j = 0; j < g.num_alternatives(); ++j)
            if (in[i] && !in[j] && g.margin(i, j) <= 0) return false;
    return true;
}

std::set<std::string> smith_set(const MarginGraph& g) {
    const int n = g.num_alternatives();
    // seed with Copeland maxima, close under "not strictly defeated by"
    std::vector<int> copeland(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (g.margin(i, j) > 0) copeland[i]++;
    int best = *std::max_element(copeland.begin(), copeland.end());
    std::vector<bool> in(n, false);
    for (int i = 0; i < n; ++i)
        if (copeland[i] == best) in[i] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (!in[i]) continue;
            for (int j = 0; j < n; ++j)
                if (!in[j] && g.margin(i, j) <= 0) {
                    in[j] = true;
                    changed = true;
                }
        }
    }
    std::set<std::string> out;
    for (int i = 0; i < n; ++i)
        if (in[i]) out.insert(g.label(i));
    return out;
}

bool is_immune(const MarginGraph& g, const StrengthMatrix& s, int x) {
    for (int y = 0; y < g.num_alternatives(); ++y) {
        if (y == x || g.margin(y, x) <= 0) continue;
        if (s.strength(x, y) < g.margin(y, x)) return false;
    }
    return true;
}

bool is_immune(const MarginGraph& g, const std::string& x) {
    return is_immune(g, strongest_paths(g), g.index_of(x));
}

bool covers(const MarginGraph& g, int y, int x) {
    if (g.margin(y, x) <= 0) return false;
    for (int z = 0; z < g.num_alternatives(); ++z) {
        if (z == x || z == y) continue;
        if (g.margin(y, z) < g.margin(x, z)) return false;
    }
    return true;
}

bool covers(const MarginGraph& g, const std::string& y, const std::string& x) {
    return covers(g, g.index_of(y), g.index_of(x));
}

bool pareto_dominates(const Profile& p, const std::string& y, const std::string& x) {
    const int yi = p.index_of(y), xi = p.index_of(x);
    if (yi == xi) return false;
    for (const auto& g : p.groups()) {
        for (const auto& a : g.ranking) {
            if (a == x) return false;
            if (a == y) break;
        }
    }
    return true;
}

bool quasi_pareto_dominates(const MarginGraph& g, int y, int x) {
    if (!covers(g, y, x)) return false;
    const int m = g.margin(y, x);
    for (int z = 0; z < g.num_alternatives(); ++z) {
        if (z == x) continue;
        if (std::abs(g.margin(x, z)) > m) return false;
    }
    return true;
}

bool quasi_pareto_dominates(const MarginGraph& g, const std::string& y, const std::string& x) {
    return quasi_pareto_dominates(g, g.index_of(y), g.index_of(x));
}

MarginGraph parse_margin_graph(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    std::vector<std::string> declared;
    std::vector<std::tuple<std::string, std::string, int>> entries;
    std::vector<std::string> first_appearance;
    bool have_header = false;

    auto note = [&](const std::string& a) {
        if (std::find(first_appearance.begin(), first_appearance.end(), a) ==
            first_appearance.end())
            first_appearance.push_back(a);
    };

    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "candidates:") {
            if (have_header || !entries.empty())
                throw parse_error("candidates: header must come first");
            std::string a;
            while (ls >> a) declared.push_back(a);
            have_header = true;
            continue;
        }
        if (head != "margin") throw parse_error("expected 'margin' line: " + line);
        std::string src, dst;
        int value = 0;
        if (!(ls >> src >> dst >> value)) throw parse_error("malformed margin line: " + line);
        std::string extra;
        if (ls >> extra) throw parse_error("trailing tokens on margin line: " + line);
        if (value == 0) throw parse_error("zero-valued margin line: " + line);
        if (src == dst) throw parse_error("self margin: " + line);
        note(src);
        note(dst);
        entries.emplace_back(src, dst, value);
    }
    const auto& alts = have_header ? declared : first_appearance;
    if (alts.empty()) throw parse_error("empty margin graph file");
    std::vector<std::vector<int>> m(alts.size(), std::vector<int>(alts.size(), 0));
    auto index = [&](const std::string& a) {
        auto it = std::find(alts.begin(), alts.end(), a);
        if (it == alts.end()) throw parse_error("undeclared alternative: " + a);
        return static_cast<int>(it - alts.begin());
    };
    std::vector<std::vector<bool>> set(alts.size(), std::vector<bool>(alts.size(), false));
    for (const auto& [src, dst, value] : entries) {
        int i = index(src), j = index(dst);
        if (set[i][j] && m[i][j] != value)
            throw parse_error("conflicting margins for " + src + " " + dst);
        set[i][j] = set[j][i] = true;
        m[i][j] = value;
        m[j][i] = -value;
    }
    return MarginGraph(alts, std::move(m));
}

}  // namespace rv
