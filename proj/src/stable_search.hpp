#pragma once

#include <cstdint>
#include <functional>

#include "srmatch/instance.hpp"
#include "srmatch/types.hpp"

namespace srm::detail {

// Backtracking search over per-edge include/exclude decisions, shared by
// enumeration, solving and the SRTI solvability search. Works on strict and
// tied instances alike (weak stability semantics).
//
// Soundness of the pruning: an excluded edge xy is declared dead once
// neither endpoint can end up with a partner it likes at least as much as
// the other endpoint. Whenever an agent's situation changes (it gets
// matched, or one of its incident edges is excluded), all excluded edges at
// that agent are re-checked, so by the time every edge is decided no
// definitely-blocking edge survives. Every leaf is verified against the
// full stability definition anyway.
class StableSearch {
  public:
    enum class Branching {
        EdgeOrder,   // edges in sorted order, include branch first
        AgentOrder,  // lowest unmatched agent, candidates in preference order
    };

    enum class Outcome { Exhausted, SinkStopped, BudgetExhausted };

    explicit StableSearch(const Instance& inst);

    /// Runs the search. The sink is invoked once per stable matching found
    /// (in DFS order) and may return false to stop the search. A budget of
    /// 0 means unlimited.
    Outcome run(Branching branching, std::uint64_t node_budget,
                const std::function<bool(const Matching&)>& sink);

    std::uint64_t nodes_explored() const { return nodes_; }

  private:
    enum : std::int8_t { kUndecided = 0, kIn = 1, kOut = 2 };

    struct TrailEntry {
        int edge;                 // -1 for partner entries
        Agent agent;              // used by partner entries
        std::int8_t old_status;   // used by edge entries
    };

    bool side_content(Agent x, Agent other) const;
    bool edge_dead(int e) const;
    bool recheck_agent(Agent a);
    bool exclude(int e);
    bool include(int e);
    void rollback(std::size_t mark);
    bool leaf();
    bool dfs_edges(int cursor);
    bool dfs_agents();
    Matching current_matching() const;
    bool verify_stable(const Matching& m) const;

    const Instance& inst_;
    std::vector<Pair> edges_;
    std::vector<std::vector<int>> inc_;  // agent -> incident edge ids, preference order
    std::vector<std::int8_t> status_;
    std::vector<Agent> partner_;
    std::vector<TrailEntry> trail_;
    std::uint64_t nodes_ = 0;
    std::uint64_t budget_ = 0;
    bool stop_ = false;
    bool budget_hit_ = false;
    const std::function<bool(const Matching&)>* sink_ = nullptr;
};

}  // namespace srm::detail
