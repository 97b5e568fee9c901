#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rv/methods.hpp"
#include "rv/profile.hpp"
#include "rv/tiebreak.hpp"

namespace rv {

enum class Axiom {
    Condorcet,
    Smith,
    Pareto,
    Monotonicity,
    Anonymity,
    Neutrality,
    Isda,
    Ipda,
    Iqda,
};

Axiom parse_axiom(const std::string& name);
std::string axiom_name(Axiom a);

/// Verdict of one axiom check on one instance. A violated verdict carries
/// a witness transform; replaying it reproduces the differing winner sets.
struct AxiomReport {
    Axiom axiom;
    Method method;
    bool holds = true;
    std::optional<ProfileTransform> witness;
    std::vector<std::string> winners_before;
    std::vector<std::string> winners_after;
    int trial = -1;
    std::uint64_t seed = 0;
};

struct FuzzConfig {
    int alternatives = 4;
    int voters = 11;
    int trials = 100;
    std::uint64_t seed = 0;
    bool uniquely_weighted_only = false;
    bool inject_clone = false;
    TiebreakerKind tiebreaker;
};

/// Condorcet winner must be the sole winner; a Condorcet loser must be
/// excluded. Vacuously holds when neither exists.
AxiomReport check_condorcet(Method m, const Profile& p, const TiebreakerKind& k);

/// winners within the Smith set and no winner Pareto-dominated.
AxiomReport check_smith_and_pareto(Method m, const Profile& p, const TiebreakerKind& k);

/// Every single-position lift of a current winner keeps it winning.
AxiomReport check_monotonicity(Method m, const Profile& p, const TiebreakerKind& k);

/// Winners unchanged by removal of any Smith-dominated alternative.
/// Requires a consistent tiebreaker kind.
AxiomReport check_isda(Method m, const Profile& p, const TiebreakerKind& k);

/// Winners unchanged by removal of any Pareto-dominated alternative.
AxiomReport check_ipda(Method m, const Profile& p, const TiebreakerKind& k);

/// Winners unchanged by removal of any quasi-Pareto-dominated alternative.
AxiomReport check_iqda(Method m, const Profile& p, const TiebreakerKind& k);

/// Samples random voter permutations (winners must not move) and
/// alternative relabelings (winners must map through the bijection).
AxiomReport check_anonymity_neutrality(Method m, const Profile& p, const TiebreakerKind& k,
                                       int samples, std::uint64_t seed);

AxiomReport check_axiom(Axiom a, Method m, const Profile& p, const TiebreakerKind& k,
                        int samples = 16, std::uint64_t seed = 0);

/// Runs cfg.trials random profiles through one checker and returns the
/// violated reports, deterministic per seed.
std::vector<AxiomReport> fuzz(Method m, Axiom a, const FuzzConfig& cfg);

/// Appends a clone of one alternative directly below it on every ballot.
Profile inject_clone(const Profile& p, int original_index, const std::string& clone_label);

}  // namespace rv
