#include "srmatch/reductions_types.hpp"

#include <algorithm>
#include <set>

namespace srm {

void require_cubic(const CubicGraph& g) {
    std::vector<int> degree(g.n + 1, 0);
    std::set<Pair> seen;
    for (auto [u, v] : g.edges) {
        if (u < 1 || u > g.n || v < 1 || v > g.n || u == v)
            throw NotCubic("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") is not a valid simple edge");
        if (!seen.insert(make_pair_sorted(u, v)).second)
            throw NotCubic("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        ++degree[u];
        ++degree[v];
    }
    for (int v = 1; v <= g.n; ++v)
        if (degree[v] != 3)
            throw NotCubic("vertex " + std::to_string(v) + " has degree " +
                           std::to_string(degree[v]) + ", expected 3");
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    for (const auto& clause : clauses) {
        bool sat = false;
        for (int lit : clause) {
            int v = std::abs(lit);
            if (v < 1 || v >= static_cast<int>(assignment.size() + 1)) continue;
            bool value = assignment[v - 1];
            if ((lit > 0 && value) || (lit < 0 && !value)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> CnfFormula::occurrences(int var, bool negated) const {
    std::vector<std::pair<int, int>> occ;
    for (int j = 0; j < nclauses(); ++j)
        for (int p = 0; p < 3; ++p) {
            int lit = clauses[j][p];
            if (std::abs(lit) == var && (lit < 0) == negated) occ.emplace_back(j, p);
        }
    return occ;
}

void require_valid_formula(const CnfFormula& f, bool relaxed) {
    if (f.nvars < 1) throw MalformedFormula("formula has no variables");
    for (int j = 0; j < f.nclauses(); ++j) {
        const auto& clause = f.clauses[j];
        std::set<int> vars;
        for (int lit : clause) {
            int v = std::abs(lit);
            if (v < 1 || v > f.nvars)
                throw MalformedFormula("clause " + std::to_string(j + 1) +
                                       " uses out-of-range variable " + std::to_string(v));
            if (!vars.insert(v).second)
                throw MalformedFormula("clause " + std::to_string(j + 1) +
                                       " repeats variable " + std::to_string(v));
        }
    }
    for (int v = 1; v <= f.nvars; ++v) {
        for (bool neg : {false, true}) {
            int count = static_cast<int>(f.occurrences(v, neg).size());
            if (count > 2 || (!relaxed && count != 2)) throw OccurrenceBound(v, neg, count);
        }
    }
}

Agent ReductionBundle::agent_of(const std::string& label) const {
    for (Agent a = 1; a < static_cast<Agent>(labels.size()); ++a)
        if (labels[a] == label) return a;
    throw Error("no agent labelled '" + label + "'");
}

}  // namespace srm
