#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rv {

class MarginGraph;

/// Raised when input text or transform parameters are malformed.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A block of identical ballots: `count` voters all cast `ranking`.
struct BallotGroup {
    int count = 0;
    std::vector<std::string> ranking;
};

/// A preference profile: strict linear orders over a fixed alternative set,
/// grouped with multiplicities. Immutable after construction.
class Profile {
  public:
    Profile(std::vector<std::string> alternatives, std::vector<BallotGroup> groups);

    const std::vector<std::string>& alternatives() const { return alternatives_; }
    const std::vector<BallotGroup>& groups() const { return groups_; }
    int num_alternatives() const { return static_cast<int>(alternatives_.size()); }
    int num_voters() const { return num_voters_; }

    /// Index of a label in declaration order; throws if unknown.
    int index_of(const std::string& label) const;
    bool has_alternative(const std::string& label) const;

    /// Ballot of an individual voter, groups expanded in file order,
    /// voters numbered from 0.
    const std::vector<std::string>& ballot(int voter) const;

    /// All nonzero margins pairwise distinct and no zero margin.
    bool uniquely_weighted() const;

  private:
    std::vector<std::string> alternatives_;
    std::vector<BallotGroup> groups_;
    std::unordered_map<std::string, int> index_;
    int num_voters_ = 0;
};

/// One of the profile rewrites used by the axiom checkers.
struct ProfileTransform {
    enum class Kind { Restrict, Lift, PermuteVoters, PermuteAlternatives };
    Kind kind;
    std::string alternative;                                       // Restrict, Lift
    int voter = -1;                                                // Lift
    std::vector<int> voter_perm;                                   // PermuteVoters
    std::vector<std::pair<std::string, std::string>> alt_mapping;  // PermuteAlternatives

    static ProfileTransform restrict_to(std::string x);
    static ProfileTransform lift(int voter, std::string x);
    static ProfileTransform permute_voters(std::vector<int> perm);
    static ProfileTransform permute_alternatives(std::vector<std::pair<std::string, std::string>> mapping);

    std::string describe() const;
};

/// Parses the line-oriented profile file format:
///   # comment
///   candidates: a b c d        (optional)
///   COUNT: alt alt alt ...
Profile parse_profile(std::string_view text);

/// Inverse of parse_profile up to comments.
std::string format_profile(const Profile& p);

/// Removes alternative x from every ballot. Counts and voter total unchanged.
Profile restrict(const Profile& p, const std::string& x);

/// Swaps x with its immediate predecessor on one voter's ballot.
Profile lift_one_position(const Profile& p, int voter, const std::string& x);

/// Applies a voter or alternative permutation (precondition on t.kind).
Profile apply_permutation(const Profile& p, const ProfileTransform& t);

/// Applies any transform kind (axiom checkers replay witnesses through this).
Profile apply_transform(const Profile& p, const ProfileTransform& t);

/// Debord-style realization: a profile whose margin graph equals g exactly.
/// Requires every margin of g to be even.
Profile mcgarvey_profile(const MarginGraph& g);

/// n uniform random linear orders over m alternatives, deterministic per seed.
Profile random_profile(int m, int n, std::uint64_t seed);

/// Labels used by random_profile and clone injection: "a".."z", then "c27"...
std::vector<std::string> default_labels(int m);

}  // namespace rv
