#include "rv/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace rv {

namespace {

struct DotEdge {
    std::string source;
    std::string target;
    int margin = 0;
    bool gray = false;
};

std::string render(const std::vector<std::string>& labels, std::vector<DotEdge> edges,
                   const std::string& root) {
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    std::sort(edges.begin(), edges.end(), [](const DotEdge& a, const DotEdge& b) {
        if (a.source != b.source) return a.source < b.source;
        return a.target < b.target;
    });
    std::ostringstream os;
    os << "digraph {\n";
    for (const auto& l : sorted) {
        os << "  \"" << l << "\"";
        if (l == root) os << " [winner=\"true\"]";
        os << ";\n";
    }
    for (const auto& e : edges) {
        os << "  \"" << e.source << "\" -> \"" << e.target << "\" [label=\"" << e.margin << "\"";
        if (e.gray) os << ", color=\"gray\"";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace

std::string render_dot(const MarginGraph& g) {
    std::vector<DotEdge> edges;
    const int n = g.num_alternatives();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int m = g.margin(i, j);
            if (m > 0) edges.push_back({g.label(i), g.label(j), m, false});
            if (m == 0 && i < j) edges.push_back({g.label(i), g.label(j), 0, true});
        }
    return render(g.alternatives(), std::move(edges), "");
}

std::string render_dot(const Diagram& d, const MarginGraph& g) {
    std::vector<DotEdge> edges;
    for (const auto& e : d.kept)
        edges.push_back({g.label(e.source), g.label(e.target), e.margin, e.margin == 0});
    std::string root = d.root ? g.label(*d.root) : "";
    return render(g.alternatives(), std::move(edges), root);
}

namespace {

nlohmann::json diagram_json(const Diagram& d, const MarginGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : d.kept)
        edges.push_back({{"source", g.label(e.source)},
                         {"target", g.label(e.target)},
                         {"margin", e.margin}});
    nlohmann::json j = {{"kept_edges", edges}};
    if (d.root) j["root"] = g.label(*d.root);
    return j;
}

}  // namespace

std::string result_to_json(const WinnerResult& r, Method m, const MarginGraph& g,
                           const std::string& tiebreaker) {
    nlohmann::json j;
    j["method"] = method_name(m);
    j["tiebreaker"] = tiebreaker;
    j["winners"] = r.winners;
    if (r.diagram) j["diagram"] = diagram_json(*r.diagram, g);
    if (r.strengths) {
        nlohmann::json s = nlohmann::json::object();
        for (int i = 0; i < r.strengths->size(); ++i)
            for (int k = 0; k < r.strengths->size(); ++k) {
                if (i == k) continue;
                int v = r.strengths->strength(i, k);
                s[g.label(i) + "->" + g.label(k)] =
                    v == StrengthMatrix::kNoPath ? nlohmann::json() : nlohmann::json(v);
            }
        j["strengths"] = s;
    }
    if (!r.trace.empty()) {
        nlohmann::json t = nlohmann::json::array();
        for (const auto& step : r.trace)
            t.push_back({{"tried", {g.label(step.tried.source), g.label(step.tried.target)}},
                         {"margin", step.tried.margin},
                         {"sub_winners", step.sub_winners},
                         {"success", step.success}});
        j["trace"] = t;
    }
    return j.dump(2);
}

std::string report_to_json(const AxiomReport& r, const Profile& p, const std::string& tiebreaker) {
    nlohmann::json j;
    j["axiom"] = axiom_name(r.axiom);
    j["method"] = method_name(r.method);
    j["tiebreaker"] = tiebreaker;
    j["holds"] = r.holds;
    j["seed"] = r.seed;
    j["trial"] = r.trial;
    j["profile"] = format_profile(p);
    if (r.witness) j["witness"] = r.witness->describe();
    j["winners_before"] = r.winners_before;
    j["winners_after"] = r.winners_after;
    return j.dump(2);
}

}  // namespace rv
