#include "rv/profile.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "rv/margin_graph.hpp"

namespace rv {

Profile::Profile(std::vector<std::string> alternatives, std::vector<BallotGroup> groups)
    : alternatives_(std::move(alternatives)), groups_(std::move(groups)) {
    if (alternatives_.empty()) throw parse_error("profile has no alternatives");
    for (int i = 0; i < static_cast<int>(alternatives_.size()); ++i) {
        const auto& a = alternatives_[i];
        if (a.empty()) throw parse_error("empty alternative label");
        if (!index_.emplace(a, i).second) throw parse_error("duplicate alternative label: " + a);
    }
    if (groups_.empty()) throw parse_error("profile has no ballots");
    for (const auto& g : groups_) {
        if (g.count < 1) throw parse_error("non-positive ballot count");
        if (g.ranking.size() != alternatives_.size())
            throw parse_error("ranking does not cover the alternative set");
        std::vector<bool> seen(alternatives_.size(), false);
        for (const auto& a : g.ranking) {
            auto it = index_.find(a);
            if (it == index_.end()) throw parse_error("unknown alternative in ranking: " + a);
            if (seen[it->second]) throw parse_error("duplicate alternative in ranking: " + a);
            seen[it->second] = true;
        }
        num_voters_ += g.count;
    }
}

int Profile::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw parse_error("unknown alternative: " + label);
    return it->second;
}

bool Profile::has_alternative(const std::string& label) const {
    return index_.count(label) != 0;
}

const std::vector<std::string>& Profile::ballot(int voter) const {
    if (voter < 0 || voter >= num_voters_) throw parse_error("voter index out of range");
    for (const auto& g : groups_) {
        if (voter < g.count) return g.ranking;
        voter -= g.count;
    }
    throw parse_error("voter index out of range");
}

bool Profile::uniquely_weighted() const {
    return margin_graph(*this).uniquely_weighted();
}

ProfileTransform ProfileTransform::restrict_to(std::string x) {
    ProfileTransform t;
    t.kind = Kind::Restrict;
    t.alternative = std::move(x);
    return t;
}

ProfileTransform ProfileTransform::lift(int voter, std::string x) {
    ProfileTransform t;
    t.kind = Kind::Lift;
    t.voter = voter;
    t.alternative = std::move(x);
    return t;
}

ProfileTransform ProfileTransform::permute_voters(std::vector<int> perm) {
    ProfileTransform t;
    t.kind = Kind::PermuteVoters;
    t.voter_perm = std::move(perm);
    return t;
}

ProfileTransform ProfileTransform::permute_alternatives(
    std::vector<std::pair<std::string, std::string>> mapping) {
    ProfileTransform t;
    t.kind = Kind::PermuteAlternatives;
    t.alt_mapping = std::move(mapping);
    return t;
}

std::string ProfileTransform::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Restrict: os << "restrict(" << alternative << ")"; break;
        case Kind::Lift: os << "lift(voter=" << voter << ", " << alternative << ")"; break;
        case Kind::PermuteVoters: os << "permute-voters"; break;
        case Kind::PermuteAlternatives:
            os << "permute-alternatives(";
            for (std::size_t i = 0; i < alt_mapping.size(); ++i) {
                if (i) os << " ";
                os << alt_mapping[i].first << "->" << alt_mapping[i].second;
            }
            os << ")";
            break;
    }
    return os.str();
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream is{std::string(line)};
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Profile parse_profile(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string line;
    std::vector<std::string> declared;
    std::vector<BallotGroup> groups;
    std::vector<std::string> first_appearance;
    bool have_header = false;

    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "candidates:") {
            if (have_header || !groups.empty())
                throw parse_error("candidates: header must come first");
            declared.assign(toks.begin() + 1, toks.end());
            have_header = true;
            continue;
        }
        // COUNT: alt alt ...
        std::string head = toks[0];
        if (head.empty() || head.back() != ':')
            throw parse_error("expected 'COUNT:' at start of ballot line: " + line);
        head.pop_back();
        int count = 0;
        try {
            std::size_t pos = 0;
            count = std::stoi(head, &pos);
            if (pos != head.size()) throw parse_error("bad count");
        } catch (const std::exception&) {
            throw parse_error("bad ballot count: " + head);
        }
        if (count < 1) throw parse_error("non-positive ballot count: " + head);
        BallotGroup g;
        g.count = count;
        g.ranking.assign(toks.begin() + 1, toks.end());
        if (g.ranking.empty()) throw parse_error("empty ranking");
        for (const auto& a : g.ranking)
            if (std::find(first_appearance.begin(), first_appearance.end(), a) ==
                first_appearance.end())
                first_appearance.push_back(a);
        groups.push_back(std::move(g));
    }
    if (groups.empty()) throw parse_error("empty profile file");
    return Profile(have_header ? declared : first_appearance, std::move(groups));
}

std::string format_profile(const Profile& p) {
    std::ostringstream os;
    os << "candidates:";
    for (const auto& a : p.alternatives()) os << " " << a;
    os << "\n";
    for (const auto& g : p.groups()) {
        os << g.count << ":";
        for (const auto& a : g.ranking) os << " " << a;
        os << "\n";
    }
    return os.str();
}

Profile restrict(const Profile& p, const std::string& x) {
    p.index_of(x);
    if (p.num_alternatives() < 2)
        throw parse_error("cannot restrict a single-alternative profile");
    std::vector<std::string> alts;
    for (const auto& a : p.alternatives())
        if (a != x) alts.push_back(a);
    std::vector<BallotGroup> groups;
    for (const auto& g : p.groups()) {
        BallotGroup h;
        h.count = g.count;
        for (const auto& a : g.ranking)
            if (a != x) h.ranking.push_back(a);
        groups.push_back(std::move(h));
    }
    return Profile(std::move(alts), std::move(groups));
}

Profile lift_one_position(const Profile& p, int voter, const std::string& x) {
    p.index_of(x);
    if (voter < 0 || voter >= p.num_voters()) throw parse_error("voter index out of range");
    std::vector<BallotGroup> groups;
    int remaining = voter;
    bool done = false;
    for (const auto& g : p.groups()) {
        if (done || remaining >= g.count) {
            groups.push_back(g);
            if (!done) remaining -= g.count;
            continue;
        }
        // split the group around the lifted ballot
        auto ranking = g.ranking;
        auto it = std::find(ranking.begin(), ranking.end(), x);
        if (it == ranking.begin()) throw parse_error("alternative already top-ranked: " + x);
        std::iter_swap(it, it - 1);
        if (remaining > 0) groups.push_back({remaining, g.ranking});
        groups.push_back({1, std::move(ranking)});
        if (g.count - remaining - 1 > 0) groups.push_back({g.count - remaining - 1, g.ranking});
        done = true;
    }
    return Profile(p.alternatives(), std::move(groups));
}

namespace {

void check_bijection(const std::vector<int>& perm, int n) {
    if (static_cast<int>(perm.size()) != n) throw parse_error("permutation has wrong size");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) throw parse_error("not a bijection");
        seen[v] = true;
    }
}

}  // namespace

Profile apply_permutation(const Profile& p, const ProfileTransform& t) {
    if (t.kind == ProfileTransform::Kind::PermuteVoters) {
        check_bijection(t.voter_perm, p.num_voters());
        std::vector<BallotGroup> groups;
        for (int i = 0; i < p.num_voters(); ++i) {
            const auto& b = p.ballot(t.voter_perm[i]);
            if (!groups.empty() && groups.back().ranking == b)
                groups.back().count++;
            else
                groups.push_back({1, b});
        }
        return Profile(p.alternatives(), std::move(groups));
    }
    if (t.kind == ProfileTransform::Kind::PermuteAlternatives) {
        std::unordered_map<std::string, std::string> map;
        std::unordered_map<std::string, int> targets;
        for (const auto& [from, to] : t.alt_mapping) {
            p.index_of(from);
            if (!map.emplace(from, to).second) throw parse_error("not a bijection");
            if (++targets[to] > 1) throw parse_error("not a bijection");
        }
        if (map.size() != static_cast<std::size_t>(p.num_alternatives()))
            throw parse_error("mapping does not cover the alternative set");
        auto rename = [&](const std::string& a) { return map.at(a); };
        std::vector<std::string> alts;
        for (const auto& a : p.alternatives()) alts.push_back(rename(a));
        std::vector<BallotGroup> groups;
        for (const auto& g : p.groups()) {
            BallotGroup h;
            h.count = g.count;
            for (const auto& a : g.ranking) h.ranking.push_back(rename(a));
            groups.push_back(std::move(h));
        }
        return Profile(std::move(alts), std::move(groups));
    }
    throw parse_error("apply_permutation expects a permutation transform");
}

Profile apply_transform(const Profile& p, const ProfileTransform& t) {
    switch (t.kind) {
        case ProfileTransform::Kind::Restrict: return restrict(p, t.alternative);
        case ProfileTransform::Kind::Lift: return lift_one_position(p, t.voter, t.alternative);
        default: return apply_permutation(p, t);
    }
}

Profile mcgarvey_profile(const MarginGraph& g) {
    const int m = g.num_alternatives();
    const auto& alts = g.alternatives();
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (g.margin(i, j) % 2 != 0)
                throw parse_error("mcgarvey_profile requires even margins");
    if (m == 1) return Profile(alts, {{1, alts}});

    std::vector<BallotGroup> groups;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            int k = g.margin(i, j) / 2;
            if (k <= 0) continue;
            // x > y > L  and  reverse(L) > x > y, L in declared order
            std::vector<std::string> rest;
            for (int r = 0; r < m; ++r)
                if (r != i && r != j) rest.push_back(alts[r]);
            std::vector<std::string> fwd = {alts[i], alts[j]};
            fwd.insert(fwd.end(), rest.begin(), rest.end());
            std::vector<std::string> bwd(rest.rbegin(), rest.rend());
            bwd.push_back(alts[i]);
            bwd.push_back(alts[j]);
            groups.push_back({k, std::move(fwd)});
            groups.push_back({k, std::move(bwd)});
        }
    }
    if (groups.empty()) {
        groups.push_back({1, alts});
        groups.push_back({1, {alts.rbegin(), alts.rend()}});
    }
    return Profile(alts, std::move(groups));
}

std::vector<std::string> default_labels(int m) {
    std::vector<std::string> out;
    for (int i = 0; i < m; ++i) {
        if (m <= 26)
            out.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            out.push_back("c" + std::to_string(i + 1));
    }
    return out;
}

Profile random_profile(int m, int n, std::uint64_t seed) {
    if (m < 1 || n < 1) throw parse_error("random_profile requires m >= 1 and n >= 1");
    auto alts = default_labels(m);
    std::mt19937_64 rng(seed);
    std::vector<BallotGroup> groups;
    for (int v = 0; v < n; ++v) {
        auto ranking = alts;
        // Fisher-Yates, explicit so output is stable across stdlibs
        for (int i = m - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(ranking[i], ranking[j]);
        }
        if (!groups.empty() && groups.back().ranking == ranking)
            groups.back().count++;
        else
            groups.push_back({1, std::move(ranking)});
    }
    return Profile(std::move(alts), std::move(groups));
}

}  // namespace rv
