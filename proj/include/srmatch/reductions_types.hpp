#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "srmatch/instance.hpp"
#include "srmatch/types.hpp"

namespace srm {

/// A simple graph in which every vertex has degree exactly 3. Edge order is
/// significant: the generator's e_{i,s} notation ranks a vertex's incident
/// edges by their index here.
struct CubicGraph {
    int n = 0;
    std::vector<Pair> edges;  // endpoints normalized u < v; file order kept
};

/// Throws NotCubic unless g is simple with all degrees exactly 3.
void require_cubic(const CubicGraph& g);

/// CNF formula with exactly 3 distinct variables per clause. Occurrences of
/// each variable are capped at two unnegated and two negated; "strict" mode
/// additionally requires exactly two of each.
struct CnfFormula {
    int nvars = 0;
    std::vector<std::array<int, 3>> clauses;  // literals: +v / -v

    int nclauses() const { return static_cast<int>(clauses.size()); }

    bool satisfied_by(const std::vector<bool>& assignment) const;

    /// For variable v and polarity, the (clause index, literal position)
    /// of its occurrences in clause order.
    std::vector<std::pair<int, int>> occurrences(int var, bool negated) const;
};

/// Full formula validation. Relaxed mode allows variables to occur fewer
/// than twice per polarity. Throws MalformedFormula / OccurrenceBound.
void require_valid_formula(const CnfFormula& f, bool relaxed);

/// A generated hardness instance together with the label map back to its
/// source and the decision target.
struct ReductionBundle {
    enum class Kind { VertexCover, Sat, AmplifiedSat };

    Kind kind = Kind::VertexCover;
    Instance instance;
    std::vector<std::string> labels;  // labels[a] is agent a's gadget role; index 0 unused

    std::optional<long long> k_prime;  // VC bundles: the cost target K'
    int copies = 1;                    // AmplifiedSat: number of formula copies

    // Source, kept so witnesses can be checked against the bundle alone.
    CubicGraph graph;   // VertexCover
    int k = 0;          // VertexCover: the cover size bound K
    CnfFormula formula; // Sat / AmplifiedSat
    bool relaxed = false;

    Agent agent_of(const std::string& label) const;
};

}  // namespace srm
