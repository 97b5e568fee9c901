#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rv/profile.hpp"

namespace rv {

/// A directed weak-defeat edge; margin >= 0 always.
struct Edge {
    int source = -1;
    int target = -1;
    int margin = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Max-min path strengths between all ordered pairs. Entries are positive
/// integers or kNoPath, which compares below every strength.
class StrengthMatrix {
  public:
    static constexpr int kNoPath = -1;

    explicit StrengthMatrix(std::vector<std::vector<int>> s) : s_(std::move(s)) {}

    /// kNoPath when no majority path exists (and on the diagonal).
    int strength(int from, int to) const { return s_[from][to]; }
    int size() const { return static_cast<int>(s_.size()); }

  private:
    std::vector<std::vector<int>> s_;
};

/// Antisymmetric integer margin matrix over an ordered alternative set.
/// The object every method consumes. Immutable after construction.
class MarginGraph {
  public:
    MarginGraph(std::vector<std::string> alternatives, std::vector<std::vector<int>> margin);

    const std::vector<std::string>& alternatives() const { return alternatives_; }
    int num_alternatives() const { return static_cast<int>(alternatives_.size()); }
    int margin(int x, int y) const { return m_[x][y]; }
    int margin(const std::string& x, const std::string& y) const;
    int index_of(const std::string& label) const;
    const std::string& label(int i) const { return alternatives_[i]; }

    /// All nonzero margins pairwise distinct and no zero margin.
    bool uniquely_weighted() const;

    /// Graph over alternatives() minus x, margins copied.
    MarginGraph without(const std::string& x) const;

  private:
    std::vector<std::string> alternatives_;
    std::vector<std::vector<int>> m_;
};

/// m(x,y) = #{i : x over y} - #{i : y over x} for all ordered pairs.
MarginGraph margin_graph(const Profile& p);

/// All ordered pairs with margin >= 0, self-loops excluded. A zero-margin
/// pair contributes both directed edges. Sorted by (source, target).
std::vector<Edge> weak_defeat_edges(const MarginGraph& g);

/// Minimum margin along a majority path. Throws on repeated vertices or a
/// non-positive step.
int path_strength(const MarginGraph& g, const std::vector<std::string>& path);

/// Max-min transitive closure over positive-margin edges.
StrengthMatrix strongest_paths(const MarginGraph& g);

/// True iff every member strictly defeats every non-member.
bool is_dominant(const MarginGraph& g, const std::set<std::string>& members);

/// The unique inclusion-minimal dominant set.
std::set<std::string> smith_set(const MarginGraph& g);

/// True iff every incoming defeat of x is matched by a rebutting majority
/// path of at least that strength.
bool is_immune(const MarginGraph& g, const std::string& x);
bool is_immune(const MarginGraph& g, const StrengthMatrix& s, int x);

/// y covers x: m(y,x) > 0 and m(y,z) >= m(x,z) for every third z.
bool covers(const MarginGraph& g, const std::string& y, const std::string& x);
bool covers(const MarginGraph& g, int y, int x);

/// Every voter ranks y over x, equivalently m(y,x) = n.
bool pareto_dominates(const Profile& p, const std::string& y, const std::string& x);

/// Covering plus m(y,x) at least every other margin into or out of x.
bool quasi_pareto_dominates(const MarginGraph& g, const std::string& y, const std::string& x);
bool quasi_pareto_dominates(const MarginGraph& g, int y, int x);

/// Margin graph file format:
///   # comment
///   candidates: a b c          (optional)
///   margin SRC DST VALUE       (VALUE nonzero; reverse entry inferred)
MarginGraph parse_margin_graph(std::string_view text);

}  // namespace rv
