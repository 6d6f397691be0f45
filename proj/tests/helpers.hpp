#pragma once

// Small construction helpers shared by the test suites.

#include <initializer_list>
#include <vector>

#include "srmatch/instance.hpp"
#include "srmatch/rng.hpp"

namespace testutil {

using srm::Agent;
using srm::Instance;
using srm::PrefList;
using srm::Tier;

// Strict instance from plain lists: strict_inst({{2,3},{3,1},{1,2}}).
inline Instance strict_inst(std::vector<std::vector<Agent>> lists, int degree_bound = 0) {
    std::vector<PrefList> prefs;
    for (auto& l : lists) {
        PrefList p;
        for (Agent a : l) p.push_back({a});
        prefs.push_back(std::move(p));
    }
    return Instance(static_cast<int>(lists.size()), std::move(prefs), degree_bound);
}

// Tiered instance: tiered_inst({{{2,3}},{{3},{1}},{{1},{2}}}).
inline Instance tiered_inst(std::vector<PrefList> prefs, int degree_bound = 0) {
    int n = static_cast<int>(prefs.size());
    return Instance(n, std::move(prefs), degree_bound);
}

inline Instance triangle_strict() { return strict_inst({{2, 3}, {3, 1}, {1, 2}}); }

inline Instance triangle_tied() { return tiered_inst({{{2, 3}}, {{3}, {1}}, {{1}, {2}}}); }

inline Instance four_cycle() { return strict_inst({{2, 4}, {3, 1}, {4, 2}, {1, 3}}); }

inline Instance single_edge() { return strict_inst({{2}, {1}}); }

}  // namespace testutil
