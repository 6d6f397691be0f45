#pragma once

#include <functional>
#include <map>
#include <optional>

#include <boost/rational.hpp>

#include "srmatch/core.hpp"
#include "srmatch/instance.hpp"
#include "srmatch/solver.hpp"

namespace srm {

using Rational = boost::rational<long long>;

/// Non-negative integer edge weights, decomposable as a sum of per-vertex
/// U-shaped functions.
class WeightFn {
  public:
    WeightFn() = default;

    void set(Pair e, long long w) { weights_[make_pair_sorted(e.first, e.second)] = w; }

    long long at(Pair e) const {
        auto it = weights_.find(make_pair_sorted(e.first, e.second));
        return it == weights_.end() ? 0 : it->second;
    }

    long long total(const Matching& m) const {
        long long sum = 0;
        for (auto e : m.pairs) sum += at(e);
        return sum;
    }

    const std::map<Pair, long long>& map() const { return weights_; }

  private:
    std::map<Pair, long long> weights_;
};

/// Result of the fix/delete preprocessing step. Stable matchings of the
/// original instance are exactly {forced pairs} united with the stable
/// matchings of the reduced instance, and the forced pairs contribute
/// base_cost (in original ranks) to every one of them.
struct PreprocessOutcome {
    Instance original;        // rank annotations for the reduced instance
    Instance reduced;         // same agent ids; no edge first-by-both or last-by-both
    Matching forced;          // pairs fixed during preprocessing
    long long base_cost = 0;  // original-rank cost of the forced pairs
    std::vector<Pair> removed;  // edges deleted outright
};

/// Diagnostics of the approximation pipeline.
struct ApproxReport {
    Matching output;
    long long output_cost = 0;               // original ranks
    std::optional<long long> oracle_cost;    // exact egalitarian cost, on request
    Rational guarantee{1};                   // (2d+3)/7
    long long count_12_output = 0;           // (1,2)-pairs of the reduced part of output
    std::optional<long long> count_12_egal;
    std::optional<long long> count_12_opt;
};

struct UShapeVerdict {
    bool ok = true;
    Agent vertex = 0;  // first offending vertex when !ok
    int position = 0;  // list position where the sequence rises and falls again
};

/// Minimum-cost stable matching and its cost, by complete enumeration.
/// Ties broken to the lexicographically smallest pair list. Throws
/// Unsolvable / TiesPresent.
std::pair<Matching, long long> egal_exact(const Instance& inst);

/// Fixes mutual-first pairs to a fixpoint, then repeatedly fixes the
/// last-by-both pairs of one stable matching and deletes the remaining
/// last-by-both edges, until no edge is ranked first or last by both ends.
PreprocessOutcome preprocess(const Instance& inst);

/// 0 if e is a (1,2)-pair of inst, 1 otherwise.
long long weight12(const Instance& inst, Pair e);

/// weight12 over every edge of `edges`, ranked by `rank_source` (the
/// pipeline passes the original instance here, keeping ranks frozen
/// through preprocessing).
WeightFn build_weight12(const Instance& rank_source, const std::vector<Pair>& edges);

/// Verifies that each vertex's weight sequence along its preference order
/// is monotone decreasing then increasing.
UShapeVerdict check_u_shaped(const Instance& inst, const WeightFn& w);

/// Any stable-matching subroutine whose output weight is within twice the
/// minimum stable weight satisfies the pipeline contract.
using MinWeightSubroutine = std::function<Matching(const Instance&, const WeightFn&)>;

/// Stable matching of weight within twice the minimum stable weight.
/// Default mode is exact enumeration (ratio 1); a plug-in subroutine
/// meeting the 2x contract may replace it. The plug's output is checked
/// for stability (ContractViolation otherwise); its weight contract is the
/// caller's responsibility.
Matching min_weight_stable(const Instance& inst, const WeightFn& w,
                           const MinWeightSubroutine& plug = {});

/// The preprocessing + (1,2)-weight pipeline for d in {3, 4, 5}: cost of
/// the output is within (2d+3)/7 of the egalitarian cost. with_oracle also
/// computes the exact egalitarian cost and the (1,2)-pair diagnostics.
ApproxReport egal_approx(const Instance& inst, int d, bool with_oracle = false,
                         const MinWeightSubroutine& plug = {});

/// Egalitarian stable matching for instances with lists of length at most
/// 2, in time linear in the number of agents. Components are paths and
/// cycles and are optimized independently.
std::pair<Matching, long long> egal_2sri(const Instance& inst);

}  // namespace srm
