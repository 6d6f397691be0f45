#include "srmatch/core.hpp"

#include <algorithm>

namespace srm {

int rank(const Instance& inst, Agent i, Agent j) {
    int t = inst.tier_index(i, j);
    if (t < 0) throw NotAcceptable(i, j);
    int r = 1;
    for (int k = 0; k < t; ++k) r += static_cast<int>(inst.tiers(i)[k].size());
    return r;
}

PairType pair_type(const Instance& inst, Pair e) {
    if (!inst.strict()) throw TiesPresent();
    int ru = rank(inst, e.first, e.second);
    int rv = rank(inst, e.second, e.first);
    if (ru > rv) std::swap(ru, rv);
    return {ru, rv};
}

void require_valid_matching(const Instance& inst, const Matching& m) {
    std::vector<char> used(inst.n_agents() + 1, 0);
    for (auto [u, v] : m.pairs) {
        if (u < 1 || u > inst.n_agents() || v < 1 || v > inst.n_agents() || u == v)
            throw InvalidMatching("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") is not over the agent set");
        if (!inst.acceptable(u, v) || !inst.acceptable(v, u))
            throw InvalidMatching("pair (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") is not an edge of the instance");
        if (used[u]++ || used[v]++)
            throw InvalidMatching("an agent appears in more than one pair");
    }
}

BlockingReport blocking_edges(const Instance& inst, const Matching& m) {
    require_valid_matching(inst, m);
    auto partner = m.partner_map(inst.n_agents());
    auto improves = [&](Agent a, Agent b) {
        // a is unmatched, or strictly prefers b to its partner.
        return partner[a] == 0 || inst.prefers(a, b, partner[a]);
    };
    BlockingReport report;
    for (Agent u = 1; u <= inst.n_agents(); ++u) {
        for (Agent v : inst.list(u)) {
            if (u >= v) continue;
            if (partner[u] == v) continue;
            if (improves(u, v) && improves(v, u)) report.blocking.emplace_back(u, v);
        }
    }
    std::sort(report.blocking.begin(), report.blocking.end());
    report.stable = report.blocking.empty();
    return report;
}

long long cost(const Instance& inst, const Matching& m) {
    if (!inst.strict()) throw TiesPresent();
    require_valid_matching(inst, m);
    long long total = 0;
    for (auto [u, v] : m.pairs) total += rank(inst, u, v) + rank(inst, v, u);
    return total;
}

}  // namespace srm
