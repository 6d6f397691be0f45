#pragma once

#include "srmatch/instance.hpp"
#include "srmatch/types.hpp"

namespace srm {

/// Rank classification of an edge in a strict instance: the edge is ranked
/// i-th by one endpoint and j-th by the other, with i <= j.
struct PairType {
    int i = 0;
    int j = 0;
    bool operator==(const PairType&) const = default;
};

/// The blocking edges of a matching, and the resulting stability verdict.
struct BlockingReport {
    std::vector<Pair> blocking;  // sorted
    bool stable = false;         // true iff blocking is empty
};

/// Rank of j in i's list: 1 plus the number of agents i strictly prefers
/// to j (competition convention for ties). Throws NotAcceptable.
int rank(const Instance& inst, Agent i, Agent j);

/// (i, j) pair type of edge e, i <= j. Strict instances only.
PairType pair_type(const Instance& inst, Pair e);

/// All blocking edges of m: edges uv not in m whose both endpoints are
/// unmatched or strictly prefer each other to their partners. Indifference
/// never blocks. Throws InvalidMatching if m uses a non-edge or an agent
/// twice.
BlockingReport blocking_edges(const Instance& inst, const Matching& m);

/// c(M): sum of both endpoint ranks over matched pairs; unmatched agents
/// contribute nothing. Strict instances only.
long long cost(const Instance& inst, const Matching& m);

/// Throws InvalidMatching unless every pair of m is an edge of inst and no
/// agent appears twice.
void require_valid_matching(const Instance& inst, const Matching& m);

}  // namespace srm
