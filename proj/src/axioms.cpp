#include "rv/axioms.hpp"

#include <algorithm>
#include <random>

namespace rv {

Axiom parse_axiom(const std::string& name) {
    if (name == "condorcet") return Axiom::Condorcet;
    if (name == "smith") return Axiom::Smith;
    if (name == "pareto") return Axiom::Pareto;
    if (name == "monotonicity") return Axiom::Monotonicity;
    if (name == "anonymity") return Axiom::Anonymity;
    if (name == "neutrality") return Axiom::Neutrality;
    if (name == "isda") return Axiom::Isda;
    if (name == "ipda") return Axiom::Ipda;
    if (name == "iqda") return Axiom::Iqda;
    throw config_error("unknown axiom: " + name);
}

std::string axiom_name(Axiom a) {
    switch (a) {
        case Axiom::Condorcet: return "condorcet";
        case Axiom::Smith: return "smith";
        case Axiom::Pareto: return "pareto";
        case Axiom::Monotonicity: return "monotonicity";
        case Axiom::Anonymity: return "anonymity";
        case Axiom::Neutrality: return "neutrality";
        case Axiom::Isda: return "isda";
        case Axiom::Ipda: return "ipda";
        case Axiom::Iqda: return "iqda";
    }
    return "?";
}

namespace {

AxiomReport base_report(Axiom a, Method m) {
    AxiomReport r;
    r.axiom = a;
    r.method = m;
    return r;
}

void require_consistent(const TiebreakerKind& k, const char* axiom) {
    if (!k.consistent())
        throw config_error(std::string(axiom) + " requires a consistent tiebreaker kind");
}

// A consistent tiebreaker processes the surviving edges in the same relative
// order before and after a removal. Kinds whose tie resolution depends on the
// graph itself (quasi-pareto: the covering relation can change when an
// alternative leaves) realize this by inheriting the original order, so the
// restricted election is evaluated under the induced suborder.
std::vector<std::string> induced_winners(Method m, const Profile& q, const MarginGraph& g,
                                         const EdgeOrder& full, const std::string& removed) {
    MarginGraph h = margin_graph(q);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& e : full.edges) {
        std::string s = g.label(e.source), t = g.label(e.target);
        if (s != removed && t != removed) pairs.emplace_back(std::move(s), std::move(t));
    }
    EdgeOrder o = make_edge_order(h, nullptr, TiebreakerKind::explicit_order(pairs));
    return (m == Method::River ? river(h, o) : ranked_pairs(h, o)).winners;
}

// Removal-invariance core shared by ISDA, IPDA, and IQDA.
AxiomReport check_removals(Axiom a, Method m, const Profile& p, const TiebreakerKind& k,
                           const std::vector<std::string>& removable) {
    AxiomReport r = base_report(a, m);
    if (removable.empty()) return r;
    auto before = winners(m, p, k);
    const bool order_driven = m == Method::River || m == Method::RankedPairs;
    std::optional<MarginGraph> g;
    std::optional<EdgeOrder> full;
    if (order_driven) {
        g = margin_graph(p);
        full = make_edge_order(*g, &p, k);
    }
    for (const auto& x : removable) {
        auto after = order_driven ? induced_winners(m, restrict(p, x), *g, *full, x)
                                  : winners(m, restrict(p, x), k);
        auto expected = before;
        expected.erase(std::remove(expected.begin(), expected.end(), x), expected.end());
        if (after != expected) {
            r.holds = false;
            r.witness = ProfileTransform::restrict_to(x);
            r.winners_before = before;
            r.winners_after = after;
            return r;
        }
    }
    return r;
}

}  // namespace

AxiomReport check_condorcet(Method m, const Profile& p, const TiebreakerKind& k) {
    AxiomReport r = base_report(Axiom::Condorcet, m);
    MarginGraph g = margin_graph(p);
    const int n = g.num_alternatives();
    int cw = -1, cl = -1;
    for (int x = 0; x < n; ++x) {
        bool wins_all = true, loses_all = true;
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            if (g.margin(x, y) <= 0) wins_all = false;
            if (g.margin(x, y) >= 0) loses_all = false;
        }
        if (wins_all) cw = x;
        if (loses_all && n > 1) cl = x;
    }
    if (cw < 0 && cl < 0) return r;
    auto w = winners(m, p, k);
    if (cw >= 0 && w != std::vector<std::string>{g.label(cw)}) {
        r.holds = false;
        r.winners_before = w;
        return r;
    }
    if (cl >= 0 && std::find(w.begin(), w.end(), g.label(cl)) != w.end()) {
        r.holds = false;
        r.winners_before = w;
        return r;
    }
    return r;
}

AxiomReport check_smith_and_pareto(Method m, const Profile& p, const TiebreakerKind& k) {
    AxiomReport r = base_report(Axiom::Smith, m);
    MarginGraph g = margin_graph(p);
    auto smith = smith_set(g);
    auto w = winners(m, p, k);
    for (const auto& x : w) {
        if (!smith.count(x)) {
            r.holds = false;
            r.winners_before = w;
            return r;
        }
        for (const auto& y : p.alternatives())
            if (y != x && pareto_dominates(p, y, x)) {
                r.axiom = Axiom::Pareto;
                r.holds = false;
                r.winners_before = w;
                return r;
            }
    }
    return r;
}

AxiomReport check_monotonicity(Method m, const Profile& p, const TiebreakerKind& k) {
    AxiomReport r = base_report(Axiom::Monotonicity, m);
    auto before = winners(m, p, k);
    for (const auto& w : before) {
        for (int v = 0; v < p.num_voters(); ++v) {
            if (p.ballot(v).front() == w) continue;
            Profile lifted = lift_one_position(p, v, w);
            auto after = winners(m, lifted, k);
            if (std::find(after.begin(), after.end(), w) == after.end()) {
                r.holds = false;
                r.witness = ProfileTransform::lift(v, w);
                r.winners_before = before;
                r.winners_after = after;
                return r;
            }
        }
    }
    return r;
}

AxiomReport check_isda(Method m, const Profile& p, const TiebreakerKind& k) {
    require_consistent(k, "isda");
    MarginGraph g = margin_graph(p);
    auto smith = smith_set(g);
    std::vector<std::string> removable;
    for (const auto& x : p.alternatives())
        if (!smith.count(x)) removable.push_back(x);
    return check_removals(Axiom::Isda, m, p, k, removable);
}

AxiomReport check_ipda(Method m, const Profile& p, const TiebreakerKind& k) {
    require_consistent(k, "ipda");
    std::vector<std::string> removable;
    for (const auto& x : p.alternatives())
        for (const auto& y : p.alternatives())
            if (y != x && pareto_dominates(p, y, x)) {
                removable.push_back(x);
                break;
            }
    return check_removals(Axiom::Ipda, m, p, k, removable);
}

AxiomReport check_iqda(Method m, const Profile& p, const TiebreakerKind& k) {
    require_consistent(k, "iqda");
    MarginGraph g = margin_graph(p);
    std::vector<std::string> removable;
    for (const auto& x : p.alternatives())
        for (const auto& y : p.alternatives())
            if (y != x && quasi_pareto_dominates(g, y, x)) {
                removable.push_back(x);
                break;
            }
    return check_removals(Axiom::Iqda, m, p, k, removable);
}

namespace {

AxiomReport check_anon_neut(Axiom which, Method m, const Profile& p, const TiebreakerKind& k,
                            int samples, std::uint64_t seed) {
    AxiomReport r = base_report(which, m);
    r.seed = seed;
    std::mt19937_64 rng(seed);
    auto before = winners(m, p, k);
    auto shuffle_ints = [&](std::vector<int>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(v[i], v[j]);
        }
    };
    for (int s = 0; s < samples; ++s) {
        if (which == Axiom::Anonymity || which == Axiom::Smith) {
            std::vector<int> perm(p.num_voters());
            for (int i = 0; i < p.num_voters(); ++i) perm[i] = i;
            shuffle_ints(perm);
            auto t = ProfileTransform::permute_voters(perm);
            auto after = winners(m, apply_permutation(p, t), k);
            if (after != before) {
                r.axiom = Axiom::Anonymity;
                r.holds = false;
                r.witness = t;
                r.winners_before = before;
                r.winners_after = after;
                return r;
            }
        }
        if (which == Axiom::Neutrality || which == Axiom::Smith) {
            std::vector<int> perm(p.num_alternatives());
            for (int i = 0; i < p.num_alternatives(); ++i) perm[i] = i;
            shuffle_ints(perm);
            std::vector<std::pair<std::string, std::string>> mapping;
            for (int i = 0; i < p.num_alternatives(); ++i)
                mapping.emplace_back(p.alternatives()[i], p.alternatives()[perm[i]]);
            auto t = ProfileTransform::permute_alternatives(mapping);
            auto after = winners(m, apply_permutation(p, t), k);
            std::vector<std::string> expected;
            for (const auto& w : before) expected.push_back(p.alternatives()[perm[p.index_of(w)]]);
            std::sort(expected.begin(), expected.end());
            if (after != expected) {
                r.axiom = Axiom::Neutrality;
                r.holds = false;
                r.witness = t;
                r.winners_before = before;
                r.winners_after = after;
                return r;
            }
        }
    }
    return r;
}

}  // namespace

AxiomReport check_anonymity_neutrality(Method m, const Profile& p, const TiebreakerKind& k,
                                       int samples, std::uint64_t seed) {
    // Smith stands in for "both halves" internally; reported tag is the
    // violated half, or anonymity when everything holds.
    auto r = check_anon_neut(Axiom::Smith, m, p, k, samples, seed);
    if (r.holds) r.axiom = Axiom::Anonymity;
    return r;
}

AxiomReport check_axiom(Axiom a, Method m, const Profile& p, const TiebreakerKind& k,
                        int samples, std::uint64_t seed) {
    switch (a) {
        case Axiom::Condorcet: return check_condorcet(m, p, k);
        case Axiom::Smith:
        case Axiom::Pareto: {
            auto r = check_smith_and_pareto(m, p, k);
            if (r.holds) r.axiom = a;
            return r;
        }
        case Axiom::Monotonicity: return check_monotonicity(m, p, k);
        case Axiom::Anonymity: return check_anon_neut(Axiom::Anonymity, m, p, k, samples, seed);
        case Axiom::Neutrality: return check_anon_neut(Axiom::Neutrality, m, p, k, samples, seed);
        case Axiom::Isda: return check_isda(m, p, k);
        case Axiom::Ipda: return check_ipda(m, p, k);
        case Axiom::Iqda: return check_iqda(m, p, k);
    }
    throw config_error("unknown axiom");
}

Profile inject_clone(const Profile& p, int original_index, const std::string& clone_label) {
    if (original_index < 0 || original_index >= p.num_alternatives())
        throw parse_error("clone original out of range");
    if (p.has_alternative(clone_label))
        throw parse_error("clone label already in use: " + clone_label);
    const std::string& original = p.alternatives()[original_index];
    auto alts = p.alternatives();
    alts.push_back(clone_label);
    std::vector<BallotGroup> groups;
    for (const auto& g : p.groups()) {
        BallotGroup h;
        h.count = g.count;
        for (const auto& a : g.ranking) {
            h.ranking.push_back(a);
            if (a == original) h.ranking.push_back(clone_label);
        }
        groups.push_back(std::move(h));
    }
    return Profile(std::move(alts), std::move(groups));
}

std::vector<AxiomReport> fuzz(Method m, Axiom a, const FuzzConfig& cfg) {
    if (cfg.trials < 1 || cfg.alternatives < 1 || cfg.voters < 1)
        throw config_error("fuzz requires trials >= 1 and positive sizes");
    std::vector<AxiomReport> violations;
    for (int t = 0; t < cfg.trials; ++t) {
        std::uint64_t trial_seed = cfg.seed + static_cast<std::uint64_t>(t);
        Profile p = random_profile(cfg.alternatives, cfg.voters, trial_seed);
        if (cfg.uniquely_weighted_only && !p.uniquely_weighted()) continue;
        if (cfg.inject_clone) {
            std::mt19937_64 rng(trial_seed ^ 0x9e3779b97f4a7c15ull);
            int orig = static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.alternatives));
            p = inject_clone(p, orig, "clone");
        }
        auto r = check_axiom(a, m, p, cfg.tiebreaker, 8, trial_seed);
        if (!r.holds) {
            r.trial = t;
            r.seed = trial_seed;
            violations.push_back(std::move(r));
        }
    }
    return violations;
}

}  // namespace rv
