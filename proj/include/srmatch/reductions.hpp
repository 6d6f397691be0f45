#pragma once

#include <optional>
#include <vector>

#include "srmatch/core.hpp"
#include "srmatch/instance.hpp"
#include "srmatch/reductions_types.hpp"

namespace srm {

/// The 3-VC -> EGAL 3-SRI DEC construction. Agents V' (4 per vertex), E'
/// (2 per edge), W and Z (4 per vertex each); the decision target is
/// K' = 7m + 19n + K. The emitted instance is solvable, strict and has
/// maximum list length 3.
ReductionBundle gen_egal_from_vc(const CubicGraph& g, int K);

/// Stable matching encoding a vertex cover: V_i^c for covered vertices,
/// V_i^u otherwise, E_j^2 iff the edge's first endpoint is covered, plus
/// M_Z. Its cost is 7m + 19n + |cover|. Throws NotACover.
Matching cover_to_matching(const ReductionBundle& bundle, const std::vector<int>& cover);

/// Reads the cover {v_i : V_i^c in m} out of a stable matching; the result
/// covers every edge and has size cost(m) - 7m - 19n. Throws NotStable.
std::vector<int> matching_to_cover(const ReductionBundle& bundle, const Matching& m);

/// The (2,2)-E3-SAT -> SOLVABLE 3-SRTI construction: a 4-cycle gadget per
/// variable, a 20-vertex gadget per clause, and an interconnecting edge per
/// literal occurrence. The instance is solvable iff the formula is
/// satisfiable.
ReductionBundle gen_srti_from_sat(const CnfFormula& f, bool relaxed = false);

/// Stable perfect matching from a satisfying assignment: M_i^T or M_i^F
/// per variable and M_j^r for the first true literal r of each clause.
/// Throws NotSatisfying.
Matching assignment_to_matching(const ReductionBundle& bundle, const std::vector<bool>& assignment);

/// Reads the assignment {x_i = true iff M_i^T in m} out of a stable
/// matching; the result satisfies the formula. Throws NotStable /
/// MalformedMatching.
std::vector<bool> matching_to_assignment(const ReductionBundle& bundle, const Matching& m);

/// `copies` disjoint copies of gen_srti_from_sat(f) plus one strict cyclic
/// triangle: k(4 n0 + 20 m0) + 3 agents, with bp = 1 if f is satisfiable
/// and bp >= copies + 1 otherwise.
ReductionBundle gen_amplified(const CnfFormula& f, int copies, bool relaxed = false);

/// Exact minimum vertex cover by exhaustive search (guarded to n <= 20).
std::pair<int, std::vector<int>> brute_vc(const CubicGraph& g);

/// Exact satisfiability by exhaustive search (guarded to 20 variables).
/// Returns the lexicographically first satisfying assignment, or nullopt.
std::optional<std::vector<bool>> brute_sat(const CnfFormula& f);

}  // namespace srm
