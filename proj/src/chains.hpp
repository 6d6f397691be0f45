#pragma once

#include <optional>
#include <vector>

#include "srmatch/instance.hpp"
#include "srmatch/types.hpp"

namespace srm::detail {

/// A path or cycle component of a degree-at-most-2 instance.
struct Chain {
    bool is_cycle = false;
    std::vector<Agent> verts;  // walk order
};

/// Deterministic decomposition: paths are walked from their lowest-id
/// endpoint, cycles from their lowest-id vertex towards its lower-id
/// neighbour. Throws DegreeTooHigh if any list is longer than 2.
std::vector<Chain> decompose_chains(const Instance& inst);

/// A stable matching of the component in isolation, or nullopt if it has
/// none (exactly the odd parties). Linear in the component size.
///
/// Edge-inclusion variables along the chain form a chain CSP: adjacent
/// edges exclude each other and an excluded edge must not block, which
/// involves only the two neighbouring variables. Solved by a forward scan
/// over (previous, current) states; cycles fix the wrap-around pair first.
std::optional<std::vector<Pair>> stable_in_chain(const Instance& inst, const Chain& chain);

}  // namespace srm::detail
