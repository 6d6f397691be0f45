#include "srmatch/egal.hpp"

#include <algorithm>

#include "chains.hpp"

namespace srm {

namespace {

// Reduced instances keep the full agent set; removing an edge or an agent
// only erases list entries.
struct EdgeSet {
    std::vector<std::vector<Agent>> adj;  // current lists, preference order

    explicit EdgeSet(const Instance& inst) : adj(inst.n_agents() + 1) {
        for (Agent a = 1; a < static_cast<Agent>(adj.size()); ++a) adj[a] = inst.list(a);
    }

    void erase_edge(Agent u, Agent v) {
        std::erase(adj[u], v);
        std::erase(adj[v], u);
    }

    void erase_agent(Agent a) {
        for (Agent b : std::vector<Agent>(adj[a])) erase_edge(a, b);
    }

    Instance to_instance(int n, int degree_bound) const {
        std::vector<PrefList> prefs(n);
        for (Agent a = 1; a <= n; ++a)
            for (Agent b : adj[a]) prefs[a - 1].push_back({b});
        return Instance(n, std::move(prefs), degree_bound);
    }
};

long long original_cost(const Instance& original, const Matching& m) {
    long long c = 0;
    for (auto [u, v] : m.pairs) c += rank(original, u, v) + rank(original, v, u);
    return c;
}

long long count_12(const Instance& rank_source, const Matching& m) {
    long long c = 0;
    for (auto e : m.pairs)
        if (pair_type(rank_source, e) == PairType{1, 2}) ++c;
    return c;
}

}  // namespace

std::pair<Matching, long long> egal_exact(const Instance& inst) {
    if (!inst.strict()) throw TiesPresent();
    StableSet all = enumerate_stable(inst);
    if (all.empty()) throw Unsolvable();
    const Matching* best = nullptr;
    long long best_cost = 0;
    for (const auto& m : all.matchings) {
        long long c = cost(inst, m);
        if (!best || c < best_cost) {  // ties: enumeration order is lexicographic
            best = &m;
            best_cost = c;
        }
    }
    return {*best, best_cost};
}

PreprocessOutcome preprocess(const Instance& inst) {
    if (!inst.strict()) throw TiesPresent();
    const int n = inst.n_agents();

    EdgeSet work(inst);
    PreprocessOutcome out;
    out.original = inst;

    auto fix_pair = [&](Agent u, Agent v) {
        out.forced.add(u, v);
        out.base_cost += rank(inst, u, v) + rank(inst, v, u);
        work.erase_agent(u);
        work.erase_agent(v);
    };

    bool changed = true;
    while (changed) {
        changed = false;

        // Fix mutual-first pairs to a fixpoint; they lie in every stable
        // matching, and fixing one can expose another.
        bool fixed_one = true;
        while (fixed_one) {
            fixed_one = false;
            for (Agent u = 1; u <= n; ++u) {
                if (work.adj[u].empty()) continue;
                Agent v = work.adj[u].front();
                if (work.adj[v].front() == u) {
                    fix_pair(u, v);
                    fixed_one = true;
                    changed = true;
                }
            }
        }

        // Last-by-both edges are in every stable matching or in none:
        // fix the ones a stable matching uses, delete the rest.
        std::vector<Pair> last_by_both;
        for (Agent u = 1; u <= n; ++u) {
            if (work.adj[u].empty()) continue;
            Agent v = work.adj[u].back();
            if (u < v && work.adj[v].back() == u) last_by_both.emplace_back(u, v);
        }
        if (!last_by_both.empty()) {
            Instance current = work.to_instance(n, inst.degree_bound());
            auto witness = solve(current);
            if (!witness) throw Unsolvable();
            for (auto [u, v] : last_by_both) {
                if (witness->contains({u, v})) {
                    fix_pair(u, v);
                } else {
                    work.erase_edge(u, v);
                    out.removed.emplace_back(u, v);
                }
            }
            changed = true;
        }
    }

    out.reduced = work.to_instance(n, inst.degree_bound());
    return out;
}

long long weight12(const Instance& inst, Pair e) {
    return pair_type(inst, e) == PairType{1, 2} ? 0 : 1;
}

WeightFn build_weight12(const Instance& rank_source, const std::vector<Pair>& edges) {
    WeightFn w;
    for (auto e : edges) w.set(e, weight12(rank_source, e));
    return w;
}

UShapeVerdict check_u_shaped(const Instance& inst, const WeightFn& w) {
    for (Agent a = 1; a <= inst.n_agents(); ++a) {
        bool rising = false;
        long long prev = -1;
        int pos = 0;
        for (Agent b : inst.list(a)) {
            long long cur = w.at({a, b});
            if (pos > 0) {
                if (cur > prev) rising = true;
                if (cur < prev && rising) return {false, a, pos};
            }
            prev = cur;
            ++pos;
        }
    }
    return {};
}

Matching min_weight_stable(const Instance& inst, const WeightFn& w,
                           const MinWeightSubroutine& plug) {
    if (inst.edge_count() == 0) return {};
    if (plug) {
        Matching m = plug(inst, w);
        if (!blocking_edges(inst, m).stable)
            throw ContractViolation("plugged subroutine returned an unstable matching");
        return m;
    }
    StableSet all = enumerate_stable(inst);
    if (all.empty()) throw Unsolvable();
    const Matching* best = nullptr;
    long long best_weight = 0;
    for (const auto& m : all.matchings) {
        long long wt = w.total(m);
        if (!best || wt < best_weight) {
            best = &m;
            best_weight = wt;
        }
    }
    return *best;
}

ApproxReport egal_approx(const Instance& inst, int d, bool with_oracle,
                         const MinWeightSubroutine& plug) {
    if (!inst.strict()) throw TiesPresent();
    if (d < 3 || d > 5)
        throw DegreeTooHigh("pipeline covers d in {3, 4, 5}; got d = " + std::to_string(d));
    if (inst.max_list_length() > d)
        throw DegreeTooHigh("instance has a list of length " +
                            std::to_string(inst.max_list_length()) + " > d = " + std::to_string(d));

    PreprocessOutcome pre = preprocess(inst);  // throws Unsolvable

    // Ranks stay frozen to the original instance: both the (1,2)-pair
    // classification and all costs read the original lists.
    WeightFn w = build_weight12(pre.original, pre.reduced.edges());
    Matching reduced_part = min_weight_stable(pre.reduced, w, plug);

    ApproxReport report;
    report.guarantee = Rational(2 * d + 3, 7);
    report.output = pre.forced;
    for (auto e : reduced_part.pairs) report.output.add(e.first, e.second);
    report.output_cost = pre.base_cost + original_cost(pre.original, reduced_part);
    report.count_12_output = count_12(pre.original, reduced_part);

    if (with_oracle) {
        // Stable matchings of the original are the forced pairs plus the
        // stable matchings of the reduced instance, so the reduced
        // enumeration also yields the exact egalitarian cost.
        StableSet all = enumerate_stable(pre.reduced);
        if (all.empty()) throw Unsolvable();
        long long best_cost = -1, best_weight = -1;
        const Matching* egal_red = nullptr;
        const Matching* opt = nullptr;
        for (const auto& m : all.matchings) {
            long long c = original_cost(pre.original, m);
            long long wt = w.total(m);
            if (!egal_red || c < best_cost) {
                egal_red = &m;
                best_cost = c;
            }
            if (!opt || wt < best_weight) {
                opt = &m;
                best_weight = wt;
            }
        }
        report.oracle_cost = pre.base_cost + best_cost;
        report.count_12_egal = count_12(pre.original, *egal_red);
        report.count_12_opt = count_12(pre.original, *opt);
    }
    return report;
}

std::pair<Matching, long long> egal_2sri(const Instance& inst) {
    if (!inst.strict()) throw TiesPresent();
    if (inst.max_list_length() > 2)
        throw DegreeTooHigh("egal_2sri requires lists of length at most 2");

    std::vector<Pair> collected;
    auto add_all = [&](const std::vector<Pair>& pairs) {
        collected.insert(collected.end(), pairs.begin(), pairs.end());
    };

    for (const auto& chain : detail::decompose_chains(inst)) {
        if (!chain.is_cycle || chain.verts.size() % 2 == 1) {
            // Paths and odd cycles have exactly one stable matching.
            auto m = detail::stable_in_chain(inst, chain);
            if (!m) throw Unsolvable();
            add_all(*m);
            continue;
        }
        // Even cycles: at most two stable matchings among the two perfect
        // ones; pick the cheaper. When neither is stable the component's
        // unique stable matching leaves agents unmatched; fall back to the
        // generic search.
        const auto& v = chain.verts;
        const int p = static_cast<int>(v.size());
        std::optional<std::pair<std::vector<Pair>, long long>> best;
        for (int start : {0, 1}) {
            std::vector<Pair> pm;
            for (int i = start; i < p + start; i += 2)
                pm.push_back(make_pair_sorted(v[i % p], v[(i + 1) % p]));
            std::sort(pm.begin(), pm.end());
            // Stability check local to the component: all members matched.
            bool stable = true;
            std::vector<Agent> partner(inst.n_agents() + 1, 0);
            for (auto [a, b] : pm) {
                partner[a] = b;
                partner[b] = a;
            }
            for (int i = 0; i < p && stable; ++i) {
                Agent a = v[i], b = v[(i + 1) % p];
                if (partner[a] == b) continue;
                if (inst.prefers(a, b, partner[a]) && inst.prefers(b, a, partner[b]))
                    stable = false;
            }
            if (!stable) continue;
            long long c = 0;
            for (auto [a, b] : pm) c += rank(inst, a, b) + rank(inst, b, a);
            if (!best || c < best->second || (c == best->second && pm < best->first))
                best = {pm, c};
        }
        if (best) {
            add_all(best->first);
        } else {
            auto m = detail::stable_in_chain(inst, chain);
            if (!m) throw Unsolvable();
            add_all(*m);
        }
    }
    Matching result(std::move(collected));
    long long total = original_cost(inst, result);
    return {std::move(result), total};
}

}  // namespace srm
