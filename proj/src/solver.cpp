#include "srmatch/solver.hpp"

#include <algorithm>
#include <deque>

#include "stable_search.hpp"

namespace srm {

namespace detail {

namespace {

// Mutable preference table used during the proposal round.
struct Table {
    std::vector<std::vector<Agent>> list;   // preference order
    std::vector<std::vector<char>> alive;

    int position(Agent a, Agent b) const {
        const auto& l = list[a];
        for (int k = 0; k < static_cast<int>(l.size()); ++k)
            if (l[k] == b) return k;
        return -1;
    }

    void erase_pair(Agent a, Agent b) {
        int pa = position(a, b);
        int pb = position(b, a);
        if (pa >= 0) alive[a][pa] = 0;
        if (pb >= 0) alive[b][pb] = 0;
    }

    int first_alive(Agent a) const {
        for (int k = 0; k < static_cast<int>(list[a].size()); ++k)
            if (alive[a][k]) return k;
        return -1;
    }

    bool prefers(Agent a, Agent x, Agent y) const { return position(a, x) < position(a, y); }
};

}  // namespace

Instance phase1_reduce(const Instance& inst) {
    if (!inst.strict()) throw TiesPresent();
    const int n = inst.n_agents();

    Table t;
    t.list.assign(n + 1, {});
    t.alive.assign(n + 1, {});
    for (Agent a = 1; a <= n; ++a) {
        t.list[a] = inst.list(a);
        t.alive[a].assign(t.list[a].size(), 1);
    }

    std::vector<Agent> holder(n + 1, 0);  // holder[y]: proposer whose offer y holds
    std::deque<Agent> queue;
    for (Agent a = 1; a <= n; ++a) queue.push_back(a);

    while (!queue.empty()) {
        Agent x = queue.front();
        queue.pop_front();
        // x proposes down its list until someone holds the offer.
        while (true) {
            int k = t.first_alive(x);
            if (k < 0) break;  // exhausted; x is unmatched in every stable matching
            Agent y = t.list[x][k];
            Agent cur = holder[y];
            if (cur == x) break;  // offer already held; queued entry was stale
            if (cur != 0 && !t.prefers(y, x, cur)) {
                t.erase_pair(x, y);  // y rejects x
                continue;
            }
            holder[y] = x;
            if (cur != 0) {
                t.erase_pair(y, cur);  // y rejects its previous proposer
                queue.push_back(cur);
            }
            // y deletes everyone it likes less than x; anyone whose current
            // proposal target was y must re-propose.
            int px = t.position(y, x);
            for (int j = px + 1; j < static_cast<int>(t.list[y].size()); ++j) {
                if (!t.alive[y][j]) continue;
                Agent z = t.list[y][j];
                bool z_was_proposing_to_y = t.first_alive(z) == t.position(z, y);
                t.erase_pair(y, z);
                if (z_was_proposing_to_y) queue.push_back(z);
            }
            break;
        }
    }

    std::vector<PrefList> prefs(n);
    for (Agent a = 1; a <= n; ++a)
        for (int k = 0; k < static_cast<int>(t.list[a].size()); ++k)
            if (t.alive[a][k]) prefs[a - 1].push_back({t.list[a][k]});
    return Instance(n, std::move(prefs), inst.degree_bound());
}

}  // namespace detail

std::optional<Matching> solve(const Instance& inst) {
    Instance table = detail::phase1_reduce(inst);
    std::optional<Matching> found;
    detail::StableSearch search(table);
    search.run(detail::StableSearch::Branching::EdgeOrder, 0, [&](const Matching& m) {
        found = m;
        return false;
    });
    return found;
}

StableSet enumerate_stable(const Instance& inst, std::uint64_t cap) {
    // The proposal round deletes only pairs that belong to no stable
    // matching, so enumerating the reduced table is complete. That argument
    // needs strict lists; tied instances are searched directly.
    Instance table = inst.strict() ? detail::phase1_reduce(inst) : inst;
    StableSet out;
    detail::StableSearch search(table);
    search.run(detail::StableSearch::Branching::EdgeOrder, 0, [&](const Matching& m) {
        if (out.matchings.size() == cap) throw CapExceeded(cap);
        out.matchings.push_back(m);
        return true;
    });
    std::sort(out.matchings.begin(), out.matchings.end());
    out.matchings.erase(std::unique(out.matchings.begin(), out.matchings.end()),
                        out.matchings.end());
    return out;
}

std::set<Agent> matched_set(const Instance& inst) {
    auto m = solve(inst);
    if (!m) throw Unsolvable();
    std::set<Agent> agents;
    for (auto [u, v] : m->pairs) {
        agents.insert(u);
        agents.insert(v);
    }
    return agents;
}

}  // namespace srm
