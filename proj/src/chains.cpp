#include "chains.hpp"

#include <algorithm>
#include <array>

namespace srm::detail {

namespace {

std::vector<Agent> walk(const Instance& inst, Agent start, Agent first, const Agent stop) {
    // Follows the unique continuation from start towards first until a dead
    // end or until stop reappears.
    std::vector<Agent> seq{start};
    Agent prev = start;
    Agent cur = first;
    while (cur != stop) {
        seq.push_back(cur);
        Agent next = 0;
        for (Agent b : inst.list(cur))
            if (b != prev) next = b;
        if (next == 0) break;
        prev = cur;
        cur = next;
    }
    return seq;
}

using Layer = std::array<std::array<signed char, 2>, 2>;

}  // namespace

std::vector<Chain> decompose_chains(const Instance& inst) {
    const int n = inst.n_agents();
    for (Agent a = 1; a <= n; ++a)
        if (inst.list_length(a) > 2)
            throw DegreeTooHigh("agent " + std::to_string(a) + " has list length " +
                                std::to_string(inst.list_length(a)) + " > 2");

    std::vector<char> seen(n + 1, 0);
    std::vector<Chain> chains;
    for (Agent a = 1; a <= n; ++a) {
        if (seen[a]) continue;
        const auto& nb = inst.list(a);
        Chain chain;
        if (nb.empty()) {
            chain.verts = {a};
        } else {
            auto forward = walk(inst, a, nb[0], a);
            Agent last = forward.back();
            bool closed = nb.size() == 2 && forward.size() >= 3 &&
                          inst.acceptable(last, a) && last != nb[0];
            if (closed) {
                chain.is_cycle = true;
                chain.verts = std::move(forward);
                // Deterministic orientation: second vertex is a's smaller
                // neighbour (a is the component's smallest id).
                if (chain.verts[1] != std::min(nb[0], nb[1]))
                    std::reverse(chain.verts.begin() + 1, chain.verts.end());
            } else if (nb.size() == 2) {
                auto backward = walk(inst, a, nb[1], a);
                std::reverse(backward.begin(), backward.end());
                backward.pop_back();  // drop the duplicate a
                backward.insert(backward.end(), forward.begin(), forward.end());
                chain.verts = std::move(backward);
                if (chain.verts.front() > chain.verts.back())
                    std::reverse(chain.verts.begin(), chain.verts.end());
            } else {
                chain.verts = std::move(forward);
                if (chain.verts.front() > chain.verts.back())
                    std::reverse(chain.verts.begin(), chain.verts.end());
            }
        }
        for (Agent v : chain.verts) seen[v] = 1;
        chains.push_back(std::move(chain));
    }
    return chains;
}

std::optional<std::vector<Pair>> stable_in_chain(const Instance& inst, const Chain& chain) {
    const auto& v = chain.verts;
    const int p = static_cast<int>(v.size());
    const int num_edges = chain.is_cycle ? p : p - 1;
    if (num_edges <= 0) return std::vector<Pair>{};

    auto at = [&](int i) { return v[((i % p) + p) % p]; };

    // ok(i, a, b, c): edge i (between at(i) and at(i+1)) may take value b
    // while edges i-1 and i+1 take values a and c without edge i blocking.
    auto ok = [&](int i, int a, int b, int c) {
        if (b == 1) return true;
        bool left = a == 1 ? inst.prefers(at(i), at(i + 1), at(i - 1)) : true;
        bool right = c == 1 ? inst.prefers(at(i + 1), at(i), at(i + 2)) : true;
        return !(left && right);
    };

    auto extract = [&](const std::vector<int>& s) {
        std::vector<Pair> pairs;
        for (int i = 0; i < num_edges; ++i)
            if (s[i]) pairs.push_back(make_pair_sorted(at(i), at(i + 1)));
        return pairs;
    };

    // Forward scan over states (s_{i-1}, s_i) for DP positions 0..D-1.
    // Paths assign every edge (D = num_edges) with virtual zero edges at
    // both ends; cycles fix the wrap edge s_{p-1}=w and s_0=z up front and
    // assign edges 0..p-2 (D = p-1), checking the two wrap constraints at
    // the end.
    auto solve_with = [&](int w, int z, bool cyclic) -> std::optional<std::vector<int>> {
        const int D = cyclic ? num_edges - 1 : num_edges;
        if (D <= 0) return std::nullopt;
        std::vector<Layer> reach(D, Layer{{{-1, -1}, {-1, -1}}});
        std::vector<Layer> parent(D, Layer{{{-1, -1}, {-1, -1}}});
        if (cyclic) {
            if (!(w && z)) reach[0][w][z] = 1;
        } else {
            reach[0][0][0] = 1;
            reach[0][0][1] = 1;
        }
        for (int i = 0; i + 1 < D; ++i)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    if (reach[i][a][b] < 0) continue;
                    for (int c = 0; c < 2; ++c) {
                        if (b && c) continue;
                        if (!ok(i, a, b, c)) continue;
                        if (reach[i + 1][b][c] < 0) {
                            reach[i + 1][b][c] = 1;
                            parent[i + 1][b][c] = static_cast<signed char>(a);
                        }
                    }
                }
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                if (reach[D - 1][a][b] < 0) continue;
                if (cyclic) {
                    if (b && w) continue;               // edges p-2 and p-1 share v[p-1]
                    if (!ok(D - 1, a, b, w)) continue;  // edge p-2
                    if (!ok(D, b, w, z)) continue;      // wrap edge p-1
                } else {
                    if (!ok(D - 1, a, b, 0)) continue;
                }
                std::vector<int> s(num_edges);
                if (cyclic) s[num_edges - 1] = w;
                int ca = a, cb = b;
                for (int i = D - 1; i >= 0; --i) {
                    s[i] = cb;
                    int pa = parent[i][ca][cb];
                    cb = ca;
                    ca = pa;
                }
                return s;
            }
        return std::nullopt;
    };

    if (!chain.is_cycle) {
        auto s = solve_with(0, 0, false);
        if (!s) return std::nullopt;
        return extract(*s);
    }
    for (auto [w, z] : {std::pair{0, 0}, {0, 1}, {1, 0}}) {
        auto s = solve_with(w, z, true);
        if (s) return extract(*s);
    }
    return std::nullopt;
}

}  // namespace srm::detail
