#include "stable_search.hpp"

#include <algorithm>

namespace srm::detail {

StableSearch::StableSearch(const Instance& inst) : inst_(inst) {
    edges_ = inst.edges();
    status_.assign(edges_.size(), kUndecided);
    partner_.assign(inst.n_agents() + 1, 0);
    inc_.assign(inst.n_agents() + 1, {});
    // Incident edges in preference order (tie members by id, matching the
    // flattened list), so AgentOrder branching tries better partners first.
    std::vector<std::vector<int>> edge_at(inst.n_agents() + 1);
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        edge_at[edges_[e].first].push_back(e);
        edge_at[edges_[e].second].push_back(e);
    }
    for (Agent a = 1; a <= inst.n_agents(); ++a) {
        for (Agent b : inst.list(a)) {
            Pair key = make_pair_sorted(a, b);
            for (int e : edge_at[a])
                if (edges_[e] == key) {
                    inc_[a].push_back(e);
                    break;
                }
        }
    }
}

bool StableSearch::side_content(Agent x, Agent other) const {
    if (partner_[x] != 0) return !inst_.prefers(x, other, partner_[x]);
    for (int f : inc_[x]) {
        if (status_[f] != kUndecided) continue;
        Agent z = edges_[f].first == x ? edges_[f].second : edges_[f].first;
        if (!inst_.prefers(x, other, z)) return true;  // x could still get z
    }
    return false;
}

bool StableSearch::edge_dead(int e) const {
    auto [u, v] = edges_[e];
    return !side_content(u, v) && !side_content(v, u);
}

bool StableSearch::recheck_agent(Agent a) {
    for (int f : inc_[a])
        if (status_[f] == kOut && edge_dead(f)) return false;
    return true;
}

bool StableSearch::exclude(int e) {
    if (status_[e] == kOut) return true;
    trail_.push_back({e, 0, status_[e]});
    status_[e] = kOut;
    if (edge_dead(e)) return false;
    return recheck_agent(edges_[e].first) && recheck_agent(edges_[e].second);
}

bool StableSearch::include(int e) {
    auto [u, v] = edges_[e];
    if (partner_[u] != 0 || partner_[v] != 0) return false;
    trail_.push_back({e, 0, status_[e]});
    status_[e] = kIn;
    trail_.push_back({-1, u, 0});
    partner_[u] = v;
    trail_.push_back({-1, v, 0});
    partner_[v] = u;
    for (Agent a : {u, v})
        for (int f : inc_[a])
            if (status_[f] == kUndecided && !exclude(f)) return false;
    return recheck_agent(u) && recheck_agent(v);
}

void StableSearch::rollback(std::size_t mark) {
    while (trail_.size() > mark) {
        const TrailEntry& t = trail_.back();
        if (t.edge >= 0)
            status_[t.edge] = t.old_status;
        else
            partner_[t.agent] = 0;
        trail_.pop_back();
    }
}

Matching StableSearch::current_matching() const {
    Matching m;
    for (Agent a = 1; a <= inst_.n_agents(); ++a)
        if (partner_[a] > a) m.pairs.emplace_back(a, partner_[a]);
    return m;
}

bool StableSearch::verify_stable(const Matching& m) const {
    auto partner = m.partner_map(inst_.n_agents());
    for (auto [u, v] : edges_) {
        if (partner[u] == v) continue;
        bool u_improves = partner[u] == 0 || inst_.prefers(u, v, partner[u]);
        bool v_improves = partner[v] == 0 || inst_.prefers(v, u, partner[v]);
        if (u_improves && v_improves) return false;
    }
    return true;
}

bool StableSearch::leaf() {
    Matching m = current_matching();
    if (!verify_stable(m))
        throw Internal("search reached an unstable leaf; pruning invariant broken");
    if (!(*sink_)(m)) {
        stop_ = true;
        return false;
    }
    return true;
}

bool StableSearch::dfs_edges(int cursor) {
    while (cursor < static_cast<int>(edges_.size()) && status_[cursor] != kUndecided) ++cursor;
    if (cursor == static_cast<int>(edges_.size())) return leaf();

    if (budget_ != 0 && ++nodes_ > budget_) {
        budget_hit_ = true;
        return false;
    }
    std::size_t mark = trail_.size();
    if (include(cursor)) {
        if (!dfs_edges(cursor + 1)) {
            rollback(mark);
            return false;
        }
    }
    rollback(mark);

    if (budget_ != 0 && ++nodes_ > budget_) {
        budget_hit_ = true;
        return false;
    }
    if (exclude(cursor)) {
        if (!dfs_edges(cursor + 1)) {
            rollback(mark);
            return false;
        }
    }
    rollback(mark);
    return true;
}

bool StableSearch::dfs_agents() {
    Agent pick = 0;
    for (Agent a = 1; a <= inst_.n_agents() && pick == 0; ++a) {
        if (partner_[a] != 0) continue;
        for (int f : inc_[a])
            if (status_[f] == kUndecided) {
                pick = a;
                break;
            }
    }
    if (pick == 0) return leaf();

    std::vector<int> candidates;
    for (int f : inc_[pick])
        if (status_[f] == kUndecided) candidates.push_back(f);

    for (int f : candidates) {
        if (budget_ != 0 && ++nodes_ > budget_) {
            budget_hit_ = true;
            return false;
        }
        std::size_t mark = trail_.size();
        if (include(f)) {
            if (!dfs_agents()) {
                rollback(mark);
                return false;
            }
        }
        rollback(mark);
    }

    // pick stays unmatched
    if (budget_ != 0 && ++nodes_ > budget_) {
        budget_hit_ = true;
        return false;
    }
    std::size_t mark = trail_.size();
    bool feasible = true;
    for (int f : candidates)
        if (status_[f] == kUndecided && !exclude(f)) {
            feasible = false;
            break;
        }
    if (feasible) {
        if (!dfs_agents()) {
            rollback(mark);
            return false;
        }
    }
    rollback(mark);
    return true;
}

StableSearch::Outcome StableSearch::run(Branching branching, std::uint64_t node_budget,
                                        const std::function<bool(const Matching&)>& sink) {
    nodes_ = 0;
    stop_ = false;
    budget_hit_ = false;
    budget_ = node_budget;
    sink_ = &sink;
    bool finished = branching == Branching::EdgeOrder ? dfs_edges(0) : dfs_agents();
    if (finished) return Outcome::Exhausted;
    return stop_ ? Outcome::SinkStopped : Outcome::BudgetExhausted;
}

}  // namespace srm::detail
