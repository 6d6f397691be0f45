#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "srmatch/core.hpp"
#include "srmatch/instance.hpp"

namespace srm {

/// The complete set of (weakly) stable matchings of an instance, in
/// lexicographic order of their sorted pair lists.
struct StableSet {
    std::vector<Matching> matchings;

    bool empty() const { return matchings.empty(); }
    std::size_t size() const { return matchings.size(); }
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// Finds a stable matching of a strict instance, or nullopt if none exists.
/// Runs the proposal round of Irving's algorithm to reduce the preference
/// table, then searches the reduced table. Agrees with enumerate_stable on
/// solvability.
std::optional<Matching> solve(const Instance& inst);

/// Enumerates every weakly stable matching by backtracking over
/// include/exclude decisions per edge (sorted order, include branch first)
/// with stability pruning. Throws CapExceeded when more than cap matchings
/// are found.
StableSet enumerate_stable(const Instance& inst, std::uint64_t cap = kDefaultEnumerationCap);

/// The set of agents matched in every stable matching of a solvable strict
/// instance (the set is the same for all of them). Throws Unsolvable.
std::set<Agent> matched_set(const Instance& inst);

namespace detail {

/// Applies the proposal/rejection round of Irving's algorithm with
/// symmetric deletions. Every deleted pair belongs to no stable matching,
/// and a matching of the reduced table is stable in it iff it is stable in
/// the original instance. Strict instances only.
Instance phase1_reduce(const Instance& inst);

}  // namespace detail

}  // namespace srm
