#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "srmatch/types.hpp"

namespace srm {

/// One indifference class in a preference list. A singleton tier is a
/// strictly ranked entry; members of larger tiers are mutually tied.
using Tier = std::vector<Agent>;

/// Ordered tiers, most preferred first. Encodes a strict weak order.
using PrefList = std::vector<Tier>;

/// Immutable Stable Roommates instance: n agents with tiered preference
/// lists over mutually acceptable agents, and a degree bound d.
///
/// Construction normalizes tie members into ascending order and derives the
/// flattened preference order; it never rejects malformed data. Run
/// validate() to obtain the full list of invariant violations.
class Instance {
  public:
    Instance() = default;

    /// prefs[i] holds the tiers of agent i+1. degree_bound <= 0 means
    /// "derive from the longest list".
    Instance(int n, std::vector<PrefList> prefs, int degree_bound = 0);

    int n_agents() const { return n_; }
    int degree_bound() const { return degree_bound_; }
    bool strict() const { return strict_; }

    const PrefList& tiers(Agent a) const { return tiers_[a]; }

    /// Acceptable agents of a in preference order (ties flattened, members
    /// of a tie in ascending id order).
    const std::vector<Agent>& list(Agent a) const { return flat_[a]; }

    int list_length(Agent a) const { return static_cast<int>(flat_[a].size()); }

    /// Index of b's tier in a's list, or -1 if b is not acceptable to a.
    int tier_index(Agent a, Agent b) const;

    bool acceptable(Agent a, Agent b) const { return tier_index(a, b) >= 0; }

    /// True iff a strictly prefers x to y. Unlisted agents compare as
    /// worse than anything listed.
    bool prefers(Agent a, Agent x, Agent y) const {
        return tier_for_compare(a, x) < tier_for_compare(a, y);
    }

    int max_list_length() const;

    /// All edges (u, v) with u < v, sorted lexicographically.
    std::vector<Pair> edges() const;

    long long edge_count() const;

  private:
    int tier_for_compare(Agent a, Agent b) const {
        int t = tier_index(a, b);
        return t < 0 ? std::numeric_limits<int>::max() : t;
    }

    int n_ = 0;
    int degree_bound_ = 1;
    bool strict_ = true;
    std::vector<PrefList> tiers_;            // index 0 unused
    std::vector<std::vector<Agent>> flat_;   // preference order
    std::vector<std::vector<int>> tier_id_;  // tier index parallel to flat_
};

/// A single invariant violation found by validate().
struct Violation {
    std::string code;           // e.g. "asymmetric", "duplicate"
    std::vector<Agent> agents;  // agents involved
    std::string message;
};

/// Checks every Instance invariant and reports all violations; never throws.
std::vector<Violation> validate(const Instance& inst);

}  // namespace srm
