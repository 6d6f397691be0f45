#include "srmatch/srti.hpp"

#include <algorithm>

#include "chains.hpp"
#include "stable_search.hpp"

namespace srm {

namespace {

bool consistent_orientation(const Instance& inst, const std::vector<Agent>& v) {
    const int p = static_cast<int>(v.size());
    for (int i = 0; i < p; ++i)
        if (!inst.prefers(v[i], v[(i + 1) % p], v[(i - 1 + p) % p])) return false;
    return true;
}

}  // namespace

namespace {

// Connected components, each as a sorted agent list.
std::vector<std::vector<Agent>> components_of(const Instance& inst) {
    const int n = inst.n_agents();
    std::vector<int> comp(n + 1, -1);
    std::vector<std::vector<Agent>> out;
    for (Agent a = 1; a <= n; ++a) {
        if (comp[a] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Agent> stack{a};
        comp[a] = id;
        while (!stack.empty()) {
            Agent x = stack.back();
            stack.pop_back();
            out[id].push_back(x);
            for (Agent b : inst.list(x))
                if (comp[b] < 0) {
                    comp[b] = id;
                    stack.push_back(b);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

Instance restrict_to(const Instance& inst, const std::vector<Agent>& agents,
                     std::vector<Agent>& back) {
    std::vector<Agent> fwd(inst.n_agents() + 1, 0);
    back.assign(agents.size() + 1, 0);
    for (std::size_t k = 0; k < agents.size(); ++k) {
        fwd[agents[k]] = static_cast<Agent>(k + 1);
        back[k + 1] = agents[k];
    }
    std::vector<PrefList> prefs(agents.size());
    for (std::size_t k = 0; k < agents.size(); ++k) {
        for (const auto& tier : inst.tiers(agents[k])) {
            Tier mapped;
            for (Agent b : tier) mapped.push_back(fwd[b]);
            prefs[k].push_back(std::move(mapped));
        }
    }
    return Instance(static_cast<int>(agents.size()), std::move(prefs), inst.degree_bound());
}

}  // namespace

SolvableResult solvable(const Instance& inst, std::uint64_t budget) {
    // Components are independent, so each is searched on its own: one
    // unsolvable component settles the whole instance without exploring
    // the others' combinations. Within a component, the exclusion
    // propagation inside the search subsumes the unit rule that an agent
    // who is somebody's unique first choice must be matched: leaving it
    // unmatched makes that edge block as soon as both fates are final.
    SolvableResult result;
    std::vector<Pair> pairs;
    for (const auto& agents : components_of(inst)) {
        if (budget != 0 && result.nodes >= budget) {
            result.verdict = SolvableResult::Verdict::Timeout;
            return result;
        }
        std::vector<Agent> back;
        Instance sub = restrict_to(inst, agents, back);
        detail::StableSearch search(sub);
        std::optional<Matching> found;
        auto outcome = search.run(detail::StableSearch::Branching::AgentOrder,
                                  budget == 0 ? 0 : budget - result.nodes,
                                  [&](const Matching& m) {
                                      found = m;
                                      return false;
                                  });
        result.nodes += search.nodes_explored();
        if (found) {
            for (auto [u, v] : found->pairs) pairs.push_back(make_pair_sorted(back[u], back[v]));
            continue;
        }
        if (outcome == detail::StableSearch::Outcome::BudgetExhausted) {
            result.verdict = SolvableResult::Verdict::Timeout;
            return result;
        }
        result.verdict = SolvableResult::Verdict::Unsolvable;
        return result;
    }
    result.verdict = SolvableResult::Verdict::Stable;
    result.matching = Matching(std::move(pairs));
    return result;
}

std::vector<ComponentShape> classify_components(const Instance& inst) {
    std::vector<ComponentShape> shapes;
    for (auto& chain : detail::decompose_chains(inst)) {
        ComponentShape shape;
        shape.vertices = std::move(chain.verts);
        if (!chain.is_cycle) {
            shape.kind = ComponentShape::Kind::Path;
        } else if (shape.vertices.size() % 2 == 0) {
            shape.kind = ComponentShape::Kind::EvenCycle;
        } else {
            shape.kind = ComponentShape::Kind::OddCycle;
            if (consistent_orientation(inst, shape.vertices)) {
                shape.odd_party = true;
            } else {
                // The reverse orientation is the same party; normalize so
                // the flag reads along stored successors.
                std::reverse(shape.vertices.begin() + 1, shape.vertices.end());
                if (consistent_orientation(inst, shape.vertices)) {
                    shape.odd_party = true;
                } else {
                    std::reverse(shape.vertices.begin() + 1, shape.vertices.end());
                    // An odd cycle that is no party has a vertex strictly
                    // preferred by neither neighbour.
                    const auto& v = shape.vertices;
                    const int p = static_cast<int>(v.size());
                    bool found = false;
                    for (int i = 0; i < p && !found; ++i) {
                        Agent prev = v[(i - 1 + p) % p], next = v[(i + 1) % p];
                        bool by_prev = inst.prefers(prev, v[i], v[(i - 2 + p) % p]);
                        bool by_next = inst.prefers(next, v[i], v[(i + 2) % p]);
                        if (!by_prev && !by_next) found = true;
                    }
                    if (!found)
                        throw Internal("odd non-party cycle without an unpreferred vertex");
                }
            }
        }
        shapes.push_back(std::move(shape));
    }
    return shapes;
}

MostStableResult min_bp_2srti(const Instance& inst) {
    MostStableResult result;
    std::vector<Pair> pairs;
    for (const auto& shape : classify_components(inst)) {
        if (shape.odd_party) {
            // No stable matching exists here; any maximum matching leaves
            // exactly one blocking edge.
            const auto& v = shape.vertices;
            for (std::size_t i = 0; i + 1 < v.size(); i += 2)
                pairs.push_back(make_pair_sorted(v[i], v[i + 1]));
            result.bp_count += 1;
            continue;
        }
        detail::Chain chain;
        chain.is_cycle = shape.kind != ComponentShape::Kind::Path;
        chain.verts = shape.vertices;
        auto m = detail::stable_in_chain(inst, chain);
        if (!m) throw Internal("non-party component without a stable matching");
        pairs.insert(pairs.end(), m->begin(), m->end());
    }
    result.matching = Matching(std::move(pairs));
    return result;
}

std::optional<MostStableResult> min_bp_brute(const Instance& inst, int k_max, bool force) {
    if (inst.n_agents() > kBruteSizeGuard && !force)
        throw SizeGuardExceeded("instance has " + std::to_string(inst.n_agents()) +
                                " agents; brute-force scan is guarded to n <= " +
                                std::to_string(kBruteSizeGuard));

    auto edges = inst.edges();
    std::vector<Agent> partner(inst.n_agents() + 1, 0);
    std::vector<Pair> current;
    std::optional<MostStableResult> best;

    auto bp_of_current = [&]() {
        int count = 0;
        for (auto [u, v] : edges) {
            if (partner[u] == v) continue;
            bool bu = partner[u] == 0 || inst.prefers(u, v, partner[u]);
            bool bv = partner[v] == 0 || inst.prefers(v, u, partner[v]);
            if (bu && bv) ++count;
        }
        return count;
    };

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == edges.size()) {
            int bp = bp_of_current();
            Matching m(current);
            if (!best || bp < best->bp_count ||
                (bp == best->bp_count && m.pairs < best->matching.pairs))
                best = MostStableResult{std::move(m), bp};
            return;
        }
        auto [u, v] = edges[i];
        if (partner[u] == 0 && partner[v] == 0) {
            partner[u] = v;
            partner[v] = u;
            current.push_back(edges[i]);
            self(self, i + 1);
            current.pop_back();
            partner[u] = partner[v] = 0;
        }
        self(self, i + 1);
    };
    rec(rec, 0);

    if (!best || best->bp_count > k_max) return std::nullopt;
    return best;
}

}  // namespace srm
