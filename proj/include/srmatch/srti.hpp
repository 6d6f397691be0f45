#pragma once

#include <cstdint>
#include <optional>

#include "srmatch/core.hpp"
#include "srmatch/instance.hpp"

namespace srm {

/// A connected component of a degree-at-most-2 instance.
struct ComponentShape {
    enum class Kind { Path, EvenCycle, OddCycle };

    Kind kind = Kind::Path;
    std::vector<Agent> vertices;  // walk order; cycles omit the closing repeat

    /// Odd cycles only: true iff every vertex strictly prefers its
    /// successor to its predecessor along `vertices` (such a cycle admits
    /// no stable matching). Cycle orientation is normalized so the flag can
    /// be read off directly.
    bool odd_party = false;
};

/// A most-stable matching candidate with its blocking-edge count.
struct MostStableResult {
    Matching matching;
    int bp_count = 0;
};

struct SolvableResult {
    enum class Verdict { Stable, Unsolvable, Timeout };

    Verdict verdict = Verdict::Unsolvable;
    std::optional<Matching> matching;  // present iff verdict == Stable
    std::uint64_t nodes = 0;           // search nodes explored
};

inline constexpr std::uint64_t kDefaultSolvableBudget = 10'000'000;

/// Decides weak-stability solvability of a (possibly tied) instance by
/// backtracking search with unit propagation, within a search-node budget.
SolvableResult solvable(const Instance& inst, std::uint64_t budget = kDefaultSolvableBudget);

/// Partitions a degree-at-most-2 instance into paths and cycles, flagging
/// odd parties. Throws DegreeTooHigh.
std::vector<ComponentShape> classify_components(const Instance& inst);

/// Most-stable matching for degree-at-most-2 instances in time linear in
/// the number of agents. The blocking-edge count equals the number of odd
/// parties: odd parties receive a maximum matching (exactly one blocking
/// edge each); every other component gets a stable matching.
MostStableResult min_bp_2srti(const Instance& inst);

/// Most-stable matching by exhaustive scan over all matchings. Returns
/// nullopt when no matching has at most k_max blocking edges. Guarded to
/// n <= 12 unless force is set (throws SizeGuardExceeded).
std::optional<MostStableResult> min_bp_brute(const Instance& inst, int k_max, bool force = false);

inline constexpr int kBruteSizeGuard = 12;

}  // namespace srm
