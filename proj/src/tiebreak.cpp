#include "rv/tiebreak.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

namespace rv {

TiebreakerKind TiebreakerKind::lexicographic(std::vector<std::string> order) {
    TiebreakerKind k;
    k.family = Family::Lexicographic;
    k.alt_order = std::move(order);
    return k;
}

TiebreakerKind TiebreakerKind::first_voter() {
    TiebreakerKind k;
    k.family = Family::FirstVoter;
    return k;
}

TiebreakerKind TiebreakerKind::quasi_pareto(Family base) {
    if (base == Family::QuasiPareto || base == Family::Explicit)
        throw config_error("invalid quasi-pareto base");
    TiebreakerKind k;
    k.family = Family::QuasiPareto;
    k.base = base;
    return k;
}

TiebreakerKind TiebreakerKind::seeded_random(std::uint64_t seed) {
    TiebreakerKind k;
    k.family = Family::SeededRandom;
    k.seed = seed;
    return k;
}

TiebreakerKind TiebreakerKind::explicit_order(
    std::vector<std::pair<std::string, std::string>> edges) {
    TiebreakerKind k;
    k.family = Family::Explicit;
    k.explicit_edges = std::move(edges);
    return k;
}

TiebreakerKind TiebreakerKind::parse(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "lex") {
        std::vector<std::string> order;
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ','))
            if (!tok.empty()) order.push_back(tok);
        return lexicographic(std::move(order));
    }
    if (head == "first-voter") {
        if (!rest.empty()) throw config_error("first-voter takes no parameter");
        return first_voter();
    }
    if (head == "quasi-pareto") {
        if (rest.empty()) return quasi_pareto();
        TiebreakerKind base = parse(rest);
        if (base.family == Family::QuasiPareto || base.family == Family::Explicit)
            throw config_error("invalid quasi-pareto base: " + rest);
        TiebreakerKind k = quasi_pareto(base.family);
        k.alt_order = std::move(base.alt_order);
        k.seed = base.seed;
        return k;
    }
    if (head == "random") {
        if (rest.empty()) throw config_error("random requires a seed: random:SEED");
        try {
            std::size_t pos = 0;
            std::uint64_t seed = std::stoull(rest, &pos);
            if (pos != rest.size()) throw config_error("bad seed");
            return seeded_random(seed);
        } catch (const std::exception&) {
            throw config_error("bad seed: " + rest);
        }
    }
    if (head == "file") {
        if (rest.empty()) throw config_error("file requires a path: file:PATH");
        std::ifstream in(rest);
        if (!in) throw config_error("cannot open tiebreaker file: " + rest);
        std::vector<std::pair<std::string, std::string>> edges;
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            std::string src, dst, extra;
            if (!(ls >> src)) continue;
            if (!(ls >> dst) || (ls >> extra))
                throw config_error("expected 'SRC DST' in tiebreaker file: " + line);
            edges.emplace_back(src, dst);
        }
        if (edges.empty()) throw config_error("empty tiebreaker file: " + rest);
        return explicit_order(std::move(edges));
    }
    throw config_error("unknown tiebreaker: " + spec);
}

bool TiebreakerKind::needs_profile() const {
    return family == Family::FirstVoter ||
           (family == Family::QuasiPareto && base == Family::FirstVoter);
}

bool TiebreakerKind::consistent() const {
    switch (family) {
        case Family::Lexicographic:
        case Family::FirstVoter: return true;
        case Family::QuasiPareto: return base != Family::SeededRandom;
        default: return false;
    }
}

namespace {

std::string family_name(TiebreakerKind::Family f, const TiebreakerKind& k) {
    switch (f) {
        case TiebreakerKind::Family::Lexicographic: {
            if (k.alt_order.empty()) return "lex";
            std::string s = "lex:";
            for (std::size_t i = 0; i < k.alt_order.size(); ++i) {
                if (i) s += ",";
                s += k.alt_order[i];
            }
            return s;
        }
        case TiebreakerKind::Family::FirstVoter: return "first-voter";
        case TiebreakerKind::Family::SeededRandom:
            return "random:" + std::to_string(k.seed) + " (mt19937_64)";
        case TiebreakerKind::Family::Explicit: return "explicit";
        default: return "quasi-pareto";
    }
}

}  // namespace

std::string TiebreakerKind::describe() const {
    if (family == Family::QuasiPareto)
        return "quasi-pareto[" + family_name(base, *this) + "]";
    return family_name(family, *this);
}

namespace {

// Position of each alternative under the resolving linear order.
std::vector<int> alt_positions(const MarginGraph& g, const Profile* p, const TiebreakerKind& k,
                               TiebreakerKind::Family family) {
    const int n = g.num_alternatives();
    std::vector<int> pos(n, -1);
    if (family == TiebreakerKind::Family::FirstVoter) {
        if (!p) throw config_error("first-voter tiebreaker requires ballots");
        const auto& ranking = p->ballot(0);
        for (std::size_t r = 0; r < ranking.size(); ++r) pos[g.index_of(ranking[r])] = static_cast<int>(r);
    } else if (!k.alt_order.empty()) {
        if (static_cast<int>(k.alt_order.size()) != n)
            throw config_error("alternative order does not cover the alternative set");
        for (std::size_t r = 0; r < k.alt_order.size(); ++r) {
            int i = g.index_of(k.alt_order[r]);
            if (pos[i] != -1) throw config_error("duplicate alternative in order: " + k.alt_order[r]);
            pos[i] = static_cast<int>(r);
        }
    } else {
        for (int i = 0; i < n; ++i) pos[i] = i;
    }
    return pos;
}

void sort_class_base(std::vector<Edge>& cls, const std::vector<int>& pos) {
    std::sort(cls.begin(), cls.end(), [&](const Edge& a, const Edge& b) {
        if (pos[a.source] != pos[b.source]) return pos[a.source] < pos[b.source];
        return pos[a.target] < pos[b.target];
    });
}

void shuffle_class(std::vector<Edge>& cls, std::mt19937_64& rng) {
    for (int i = static_cast<int>(cls.size()) - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(cls[i], cls[j]);
    }
}

// Stable Kahn topological sort: among ready edges, keep current order.
std::vector<Edge> stable_topo(const std::vector<Edge>& cls,
                              const std::vector<std::vector<bool>>& qp) {
    const int n = static_cast<int>(cls.size());
    // before[i][j]: cls[i] must precede cls[j]
    std::vector<std::vector<bool>> before(n, std::vector<bool>(n, false));
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Edge& a = cls[i];
            const Edge& b = cls[j];
            bool must = false;
            if (qp[a.source][b.source] && a.target == b.target) must = true;  // (y,z) < (x,z)
            if (qp[a.source][b.source] && a.target == b.source) must = true;  // (y,x) < (x,z)
            if (must) {
                before[i][j] = true;
                indeg[j]++;
            }
        }
    std::vector<Edge> out;
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i] && indeg[i] == 0) {
                pick = i;
                break;
            }
        if (pick < 0) throw config_error("cyclic quasi-Pareto precedence constraints");
        used[pick] = true;
        out.push_back(cls[pick]);
        for (int j = 0; j < n; ++j)
            if (before[pick][j]) indeg[j]--;
    }
    return out;
}

std::vector<Edge> order_edges(const MarginGraph& g, const Profile* p, const TiebreakerKind& k,
                              std::vector<Edge> edges) {
    if (k.family == TiebreakerKind::Family::Explicit) {
        if (k.explicit_edges.size() != edges.size())
            throw config_error("explicit order does not cover the edge set");
        std::vector<Edge> out;
        std::vector<bool> taken(edges.size(), false);
        for (const auto& [src, dst] : k.explicit_edges) {
            int s = g.index_of(src), t = g.index_of(dst);
            bool found = false;
            for (std::size_t i = 0; i < edges.size(); ++i)
                if (!taken[i] && edges[i].source == s && edges[i].target == t) {
                    taken[i] = true;
                    out.push_back(edges[i]);
                    found = true;
                    break;
                }
            if (!found) throw config_error("explicit order lists a non-edge: " + src + " " + dst);
        }
        for (std::size_t i = 1; i < out.size(); ++i)
            if (out[i].margin > out[i - 1].margin)
                throw config_error("explicit order violates descending margins");
        return out;
    }

    std::stable_sort(edges.begin(), edges.end(),
                     [](const Edge& a, const Edge& b) { return a.margin > b.margin; });

    auto base_family = k.family == TiebreakerKind::Family::QuasiPareto ? k.base : k.family;
    std::vector<int> pos;
    if (base_family != TiebreakerKind::Family::SeededRandom)
        pos = alt_positions(g, p, k, base_family);
    std::mt19937_64 rng(k.seed);

    std::vector<std::vector<bool>> qp;
    if (k.family == TiebreakerKind::Family::QuasiPareto) {
        const int n = g.num_alternatives();
        qp.assign(n, std::vector<bool>(n, false));
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x)
                if (y != x) qp[y][x] = quasi_pareto_dominates(g, y, x);
    }

    std::vector<Edge> out;
    std::size_t i = 0;
    while (i < edges.size()) {
        std::size_t j = i;
        while (j < edges.size() && edges[j].margin == edges[i].margin) ++j;
        std::vector<Edge> cls(edges.begin() + i, edges.begin() + j);
        if (k.family == TiebreakerKind::Family::QuasiPareto) {
            std::vector<Edge> q, qbar;
            for (const auto& e : cls)
                (qp[e.source][e.target] ? q : qbar).push_back(e);
            if (k.base == TiebreakerKind::Family::SeededRandom) {
                shuffle_class(q, rng);
                shuffle_class(qbar, rng);
            } else {
                sort_class_base(q, pos);
                sort_class_base(qbar, pos);
            }
            cls = std::move(q);
            cls.insert(cls.end(), qbar.begin(), qbar.end());
            cls = stable_topo(cls, qp);
        } else if (k.family == TiebreakerKind::Family::SeededRandom) {
            shuffle_class(cls, rng);
        } else {
            sort_class_base(cls, pos);
        }
        out.insert(out.end(), cls.begin(), cls.end());
        i = j;
    }
    return out;
}

}  // namespace

EdgeOrder make_edge_order(const MarginGraph& g, const Profile* p, const TiebreakerKind& k) {
    return EdgeOrder{order_edges(g, p, k, weak_defeat_edges(g))};
}

std::vector<Edge> make_pair_order(const MarginGraph& g, const Profile* p,
                                  const TiebreakerKind& k) {
    std::vector<Edge> pairs;
    const int n = g.num_alternatives();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) pairs.push_back({i, j, g.margin(i, j)});
    if (k.family == TiebreakerKind::Family::Explicit)
        throw config_error("explicit tiebreaker does not extend to all ordered pairs");
    return order_edges(g, p, k, std::move(pairs));
}

bool check_consistent(const TiebreakerKind& k, const Profile& p, const std::string& x,
                      std::pair<Edge, Edge>* witness) {
    MarginGraph g = margin_graph(p);
    Profile q = restrict(p, x);
    MarginGraph h = margin_graph(q);
    EdgeOrder before = make_edge_order(g, &p, k);
    EdgeOrder after = make_edge_order(h, &q, k);
    const int xi = g.index_of(x);

    auto key = [&](const MarginGraph& gg, const Edge& e) {
        return std::pair<std::string, std::string>(gg.label(e.source), gg.label(e.target));
    };
    std::map<std::pair<std::string, std::string>, int> after_pos;
    for (std::size_t i = 0; i < after.edges.size(); ++i)
        after_pos[key(h, after.edges[i])] = static_cast<int>(i);

    std::vector<Edge> surviving;
    for (const auto& e : before.edges)
        if (e.source != xi && e.target != xi) surviving.push_back(e);
    for (std::size_t i = 0; i < surviving.size(); ++i)
        for (std::size_t j = i + 1; j < surviving.size(); ++j) {
            auto pi = after_pos.find(key(g, surviving[i]));
            auto pj = after_pos.find(key(g, surviving[j]));
            if (pi == after_pos.end() || pj == after_pos.end()) continue;
            if (pi->second > pj->second) {
                if (witness) *witness = {surviving[i], surviving[j]};
                return false;
            }
        }
    return true;
}

bool check_pareto_consistent(const EdgeOrder& o, const Profile& p) {
    MarginGraph g = margin_graph(p);
    const int n = g.num_alternatives();
    std::map<std::pair<int, int>, int> position;
    for (std::size_t i = 0; i < o.edges.size(); ++i)
        position[{o.edges[i].source, o.edges[i].target}] = static_cast<int>(i);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            if (y == x || !pareto_dominates(p, g.label(y), g.label(x))) continue;
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y) continue;
                auto yz = position.find({y, z});
                auto xz = position.find({x, z});
                if (yz == position.end() || xz == position.end()) continue;
                if (yz->second > xz->second) return false;
            }
        }
    return true;
}

bool check_quasi_pareto_consistent(const EdgeOrder& o, const MarginGraph& g) {
    const int n = g.num_alternatives();
    std::map<std::pair<int, int>, int> position;
    for (std::size_t i = 0; i < o.edges.size(); ++i)
        position[{o.edges[i].source, o.edges[i].target}] = static_cast<int>(i);
    auto pos = [&](int a, int b) {
        auto it = position.find({a, b});
        return it == position.end() ? -1 : it->second;
    };
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            if (y == x || !quasi_pareto_dominates(g, y, x)) continue;
            // (i) among equal-margin edges into x, the quasi-dominating
            // source comes first
            for (int y2 = 0; y2 < n; ++y2) {
                if (y2 == y || y2 == x || quasi_pareto_dominates(g, y2, x)) continue;
                if (g.margin(y2, x) != g.margin(y, x)) continue;
                int a = pos(y, x), b = pos(y2, x);
                if (a >= 0 && b >= 0 && a > b) return false;
            }
            // (ii) every (x,z) trails (y,z) and (y,x)
            int yx = pos(y, x);
            for (int z = 0; z < n; ++z) {
                if (z == x) continue;
                int xz = pos(x, z);
                if (xz < 0) continue;
                if (yx >= 0 && xz < yx) return false;
                if (z == y) continue;
                int yz = pos(y, z);
                if (yz >= 0 && xz < yz) return false;
            }
        }
    return true;
}

bool valid_edge_order(const EdgeOrder& o, const MarginGraph& g) {
    auto want = weak_defeat_edges(g);
    auto got = o.edges;
    for (std::size_t i = 1; i < got.size(); ++i)
        if (got[i].margin > got[i - 1].margin) return false;
    auto lt = [](const Edge& a, const Edge& b) {
        return std::tie(a.source, a.target, a.margin) < std::tie(b.source, b.target, b.margin);
    };
    std::sort(want.begin(), want.end(), lt);
    std::sort(got.begin(), got.end(), lt);
    return want == got;
}

}  // namespace rv
