#include "srmatch/reductions.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace srm {

namespace {

constexpr int kOracleSizeGuard = 20;

std::string sub(const std::string& base, int i, int r) {
    return base + "_" + std::to_string(i) + "^" + std::to_string(r);
}

// Incidence structure of a cubic graph in the generator's notation:
// e_{i,s} is the s-th incident edge of vertex i by edge index, and v_{j,r}
// is the r-th endpoint of edge j by vertex index.
struct VcNotation {
    std::vector<std::array<int, 3>> incident;  // vertex -> its 3 edge indices, ascending
    std::vector<std::array<int, 2>> ends;      // edge -> endpoints, ascending

    explicit VcNotation(const CubicGraph& g) {
        incident.assign(g.n + 1, {0, 0, 0});
        std::vector<int> fill(g.n + 1, 0);
        ends.resize(g.edges.size());
        for (int j = 0; j < static_cast<int>(g.edges.size()); ++j) {
            auto [u, v] = g.edges[j];
            ends[j] = {u, v};
            incident[u][fill[u]++] = j;
            incident[v][fill[v]++] = j;
        }
    }

    // s in {1,2,3} with e_{i,s} == edge j.
    int edge_slot(int i, int j) const {
        for (int s = 0; s < 3; ++s)
            if (incident[i][s] == j) return s + 1;
        return 0;
    }

    // r in {1,2} with v_{j,r} == vertex i.
    int end_slot(int j, int i) const { return ends[j][0] == i ? 1 : 2; }
};

}  // namespace

ReductionBundle gen_egal_from_vc(const CubicGraph& g, int K) {
    require_cubic(g);
    if (K < 0 || K > g.n)
        throw Error("cover bound K = " + std::to_string(K) + " outside [0, n]");

    const int n = g.n;
    const int m = static_cast<int>(g.edges.size());
    VcNotation notation(g);

    // Agent numbering: V' block, then the edge gadgets, then W, then Z.
    // Each edge gadget is a 4-cycle e_j^1..e_j^4 (two pairs contributing 7
    // to every stable matching's cost, which the K' = 7m + 19n + K target
    // requires), so the instance has 12n + 4m agents.
    auto V = [&](int i, int r) { return 4 * (i - 1) + r; };
    auto E = [&](int j, int s) { return 4 * n + 4 * (j - 1) + s; };
    auto W = [&](int i, int r) { return 4 * n + 4 * m + 4 * (i - 1) + r; };
    auto Z = [&](int i, int r) { return 8 * n + 4 * m + 4 * (i - 1) + r; };

    // e(v_i^r): the E'-agent of v_i's r-th incident edge at v_i's end slot.
    auto e_of_v = [&](int i, int r) {
        int j = notation.incident[i][r - 1];
        return E(j + 1, notation.end_slot(j, i));
    };
    // v(e_j^s): the V'-agent of e_j's s-th endpoint at that vertex's slot
    // for edge j.
    auto v_of_e = [&](int j, int s) {
        int i = notation.ends[j - 1][s - 1];
        return V(i, notation.edge_slot(i, j - 1));
    };

    const int total = 12 * n + 4 * m;
    std::vector<PrefList> prefs(total);
    std::vector<std::string> labels(total + 1);
    auto set = [&](Agent a, const std::string& label, std::vector<Agent> list) {
        labels[a] = label;
        PrefList tiers;
        for (Agent b : list) tiers.push_back({b});
        prefs[a - 1] = std::move(tiers);
    };

    for (int i = 1; i <= n; ++i) {
        for (int r = 1; r <= 3; ++r)
            set(V(i, r), sub("v", i, r), {W(i, r), e_of_v(i, r), W(i, r + 1)});
        set(V(i, 4), sub("v", i, 4), {W(i, 4), W(i, 1)});

        set(W(i, 1), sub("w", i, 1), {V(i, 4), Z(i, 1), V(i, 1)});
        for (int r = 2; r <= 4; ++r)
            set(W(i, r), sub("w", i, r), {V(i, r - 1), Z(i, r), V(i, r)});

        set(Z(i, 1), sub("z", i, 1), {Z(i, 2), W(i, 1)});
        set(Z(i, 2), sub("z", i, 2), {Z(i, 1), W(i, 2)});
        set(Z(i, 3), sub("z", i, 3), {Z(i, 4), W(i, 3)});
        set(Z(i, 4), sub("z", i, 4), {Z(i, 3), W(i, 4)});
    }
    for (int j = 1; j <= m; ++j) {
        set(E(j, 1), sub("e", j, 1), {E(j, 2), v_of_e(j, 1), E(j, 4)});
        set(E(j, 2), sub("e", j, 2), {E(j, 3), v_of_e(j, 2), E(j, 1)});
        set(E(j, 3), sub("e", j, 3), {E(j, 4), E(j, 2)});
        set(E(j, 4), sub("e", j, 4), {E(j, 1), E(j, 3)});
    }

    ReductionBundle bundle;
    bundle.kind = ReductionBundle::Kind::VertexCover;
    bundle.instance = Instance(total, std::move(prefs), 3);
    bundle.labels = std::move(labels);
    bundle.k_prime = 7LL * m + 19LL * n + K;
    bundle.graph = g;
    bundle.k = K;
    return bundle;
}

namespace {

// Shared agent-id helpers for VC bundles, reconstructed from the stored
// graph (the numbering above is deterministic).
struct VcIds {
    int n, m;
    explicit VcIds(const ReductionBundle& b)
        : n(b.graph.n), m(static_cast<int>(b.graph.edges.size())) {}
    Agent V(int i, int r) const { return 4 * (i - 1) + r; }
    Agent E(int j, int s) const { return 4 * n + 4 * (j - 1) + s; }
    Agent W(int i, int r) const { return 4 * n + 4 * m + 4 * (i - 1) + r; }
    Agent Z(int i, int r) const { return 8 * n + 4 * m + 4 * (i - 1) + r; }
};

bool is_cover(const CubicGraph& g, const std::vector<char>& in_cover) {
    for (auto [u, v] : g.edges)
        if (!in_cover[u] && !in_cover[v]) return false;
    return true;
}

}  // namespace

Matching cover_to_matching(const ReductionBundle& bundle, const std::vector<int>& cover) {
    if (bundle.kind != ReductionBundle::Kind::VertexCover)
        throw Error("bundle does not come from a vertex-cover reduction");
    const CubicGraph& g = bundle.graph;
    std::vector<char> in_cover(g.n + 1, 0);
    for (int v : cover) {
        if (v < 1 || v > g.n) throw NotACover("vertex " + std::to_string(v) + " out of range");
        in_cover[v] = 1;
    }
    if (!is_cover(g, in_cover)) throw NotACover("the given set leaves an edge uncovered");

    VcIds id(bundle);
    Matching m;
    for (int i = 1; i <= g.n; ++i) {
        for (int r = 1; r <= 4; ++r) {
            if (in_cover[i])
                m.add(id.V(i, r), id.W(i, r));            // V_i^c
            else
                m.add(id.V(i, r), id.W(i, r % 4 + 1));    // V_i^u
        }
        m.add(id.Z(i, 1), id.Z(i, 2));
        m.add(id.Z(i, 3), id.Z(i, 4));
    }
    for (int j = 1; j <= id.m; ++j) {
        if (in_cover[g.edges[j - 1].first]) {
            m.add(id.E(j, 1), id.E(j, 4));                // E_j^2
            m.add(id.E(j, 2), id.E(j, 3));
        } else {
            m.add(id.E(j, 1), id.E(j, 2));                // E_j^1
            m.add(id.E(j, 3), id.E(j, 4));
        }
    }
    return m;
}

std::vector<int> matching_to_cover(const ReductionBundle& bundle, const Matching& m) {
    if (bundle.kind != ReductionBundle::Kind::VertexCover)
        throw Error("bundle does not come from a vertex-cover reduction");
    if (!blocking_edges(bundle.instance, m).stable) throw NotStable();

    VcIds id(bundle);
    auto partner = m.partner_map(bundle.instance.n_agents());
    std::vector<int> cover;
    for (int i = 1; i <= bundle.graph.n; ++i)
        if (partner[id.V(i, 1)] == id.W(i, 1)) cover.push_back(i);
    return cover;
}

namespace {

// Clause-gadget agent offsets, in the fixed within-gadget order
// y(4) z(4) p(3) q(3) b(3) a(3).
struct SatIds {
    int n0;
    int base_offset;  // id offset of this formula copy

    Agent V(int i, int r) const { return base_offset + 4 * (i - 1) + r; }
    Agent clause_base(int j) const { return base_offset + 4 * n0 + 20 * (j - 1); }
    Agent Y(int j, int k) const { return clause_base(j) + k; }
    Agent Zc(int j, int k) const { return clause_base(j) + 4 + k; }
    Agent P(int j, int k) const { return clause_base(j) + 8 + k; }
    Agent Q(int j, int k) const { return clause_base(j) + 11 + k; }
    Agent B(int j, int k) const { return clause_base(j) + 14 + k; }
    Agent A(int j, int k) const { return clause_base(j) + 17 + k; }
};

// The v-slot of a literal occurrence: positive occurrences 1 and 2 attach
// to v_i^1 and v_i^3, negated ones to v_i^2 and v_i^4.
int literal_slot(bool negated, int occurrence_index) {
    if (!negated) return occurrence_index == 0 ? 1 : 3;
    return occurrence_index == 0 ? 2 : 4;
}

// Writes one copy of the formula gadgets into prefs/labels.
void emit_sat_copy(const CnfFormula& f, const SatIds& id, const std::string& label_prefix,
                   std::vector<PrefList>& prefs, std::vector<std::string>& labels) {
    auto set = [&](Agent a, const std::string& label, PrefList tiers) {
        labels[a] = label_prefix + label;
        prefs[a - 1] = std::move(tiers);
    };
    auto strict = [](std::vector<Agent> list) {
        PrefList tiers;
        for (Agent b : list) tiers.push_back({b});
        return tiers;
    };

    // Interconnecting edges: the r-th literal of clause j is the k-th
    // occurrence (k in {0,1}) of its variable with that polarity.
    const int n0 = f.nvars;
    std::vector<std::array<Agent, 4>> v_partner(n0 + 1, {0, 0, 0, 0});  // per v-slot
    std::vector<std::array<Agent, 3>> a_partner(f.nclauses() + 1, {0, 0, 0});
    for (int var = 1; var <= n0; ++var) {
        for (bool neg : {false, true}) {
            auto occ = f.occurrences(var, neg);
            for (int k = 0; k < static_cast<int>(occ.size()); ++k) {
                auto [j, pos] = occ[k];
                int slot = literal_slot(neg, k);
                v_partner[var][slot - 1] = id.A(j + 1, pos + 1);
                a_partner[j + 1][pos] = id.V(var, slot);
            }
        }
    }

    for (int i = 1; i <= n0; ++i) {
        for (int r = 1; r <= 4; ++r) {
            Agent next = id.V(i, r % 4 + 1);
            Agent prev = id.V(i, (r + 2) % 4 + 1);
            std::vector<Agent> list{next};
            if (v_partner[i][r - 1] != 0) list.push_back(v_partner[i][r - 1]);
            list.push_back(prev);
            set(id.V(i, r), sub("v", i, r), strict(list));
        }
    }
    for (int j = 1; j <= f.nclauses(); ++j) {
        set(id.Y(j, 1), sub("y", j, 1), strict({id.P(j, 3), id.Y(j, 2)}));
        set(id.Y(j, 2), sub("y", j, 2), strict({id.Y(j, 1), id.Y(j, 3), id.Y(j, 4)}));
        set(id.Y(j, 3), sub("y", j, 3), strict({id.Y(j, 4), id.Y(j, 2)}));
        set(id.Y(j, 4), sub("y", j, 4), strict({id.Y(j, 2), id.Y(j, 3)}));

        set(id.Zc(j, 1), sub("z", j, 1), strict({id.Q(j, 3), id.Zc(j, 2)}));
        set(id.Zc(j, 2), sub("z", j, 2), strict({id.Zc(j, 1), id.Zc(j, 3), id.Zc(j, 4)}));
        set(id.Zc(j, 3), sub("z", j, 3), strict({id.Zc(j, 4), id.Zc(j, 2)}));
        set(id.Zc(j, 4), sub("z", j, 4), strict({id.Zc(j, 2), id.Zc(j, 3)}));

        set(id.P(j, 1), sub("p", j, 1), strict({id.B(j, 1), id.B(j, 2), id.P(j, 2)}));
        set(id.P(j, 2), sub("p", j, 2), strict({id.P(j, 1), id.P(j, 3)}));
        set(id.P(j, 3), sub("p", j, 3), strict({id.P(j, 2), id.B(j, 3), id.Y(j, 1)}));

        set(id.Q(j, 1), sub("q", j, 1), strict({id.A(j, 1), id.A(j, 2), id.Q(j, 2)}));
        set(id.Q(j, 2), sub("q", j, 2), strict({id.Q(j, 1), id.Q(j, 3)}));
        set(id.Q(j, 3), sub("q", j, 3), strict({id.Q(j, 2), id.A(j, 3), id.Zc(j, 1)}));

        // b-vertices hold the single tie of the construction.
        set(id.B(j, 1), sub("b", j, 1), {{id.P(j, 1), id.A(j, 1)}});
        set(id.B(j, 2), sub("b", j, 2), {{id.P(j, 1), id.A(j, 2)}});
        set(id.B(j, 3), sub("b", j, 3), {{id.P(j, 3), id.A(j, 3)}});

        set(id.A(j, 1), sub("a", j, 1), strict({id.B(j, 1), a_partner[j][0], id.Q(j, 1)}));
        set(id.A(j, 2), sub("a", j, 2), strict({id.B(j, 2), a_partner[j][1], id.Q(j, 1)}));
        set(id.A(j, 3), sub("a", j, 3), strict({id.B(j, 3), a_partner[j][2], id.Q(j, 3)}));
    }
}

}  // namespace

ReductionBundle gen_srti_from_sat(const CnfFormula& f, bool relaxed) {
    require_valid_formula(f, relaxed);

    const int total = 4 * f.nvars + 20 * f.nclauses();
    std::vector<PrefList> prefs(total);
    std::vector<std::string> labels(total + 1);
    SatIds id{f.nvars, 0};
    emit_sat_copy(f, id, "", prefs, labels);

    ReductionBundle bundle;
    bundle.kind = ReductionBundle::Kind::Sat;
    bundle.instance = Instance(total, std::move(prefs), 3);
    bundle.labels = std::move(labels);
    bundle.formula = f;
    bundle.relaxed = relaxed;
    return bundle;
}

namespace {

void add_variable_matching(const SatIds& id, int i, bool value, Matching& m) {
    if (value) {  // M_i^T
        m.add(id.V(i, 1), id.V(i, 2));
        m.add(id.V(i, 3), id.V(i, 4));
    } else {  // M_i^F
        m.add(id.V(i, 1), id.V(i, 4));
        m.add(id.V(i, 2), id.V(i, 3));
    }
}

void add_clause_matching(const SatIds& id, int j, int r, Matching& m) {
    // M_j^r for the first true literal r in {1, 2, 3}.
    m.add(id.Y(j, 1), id.Y(j, 2));
    m.add(id.Y(j, 3), id.Y(j, 4));
    m.add(id.Zc(j, 1), id.Zc(j, 2));
    m.add(id.Zc(j, 3), id.Zc(j, 4));
    switch (r) {
        case 1:
            m.add(id.A(j, 1), id.Q(j, 1));
            m.add(id.B(j, 1), id.P(j, 1));
            m.add(id.A(j, 2), id.B(j, 2));
            m.add(id.A(j, 3), id.B(j, 3));
            m.add(id.Q(j, 2), id.Q(j, 3));
            m.add(id.P(j, 2), id.P(j, 3));
            break;
        case 2:
            m.add(id.A(j, 2), id.Q(j, 1));
            m.add(id.B(j, 2), id.P(j, 1));
            m.add(id.A(j, 1), id.B(j, 1));
            m.add(id.A(j, 3), id.B(j, 3));
            m.add(id.Q(j, 2), id.Q(j, 3));
            m.add(id.P(j, 2), id.P(j, 3));
            break;
        default:
            m.add(id.A(j, 3), id.Q(j, 3));
            m.add(id.B(j, 3), id.P(j, 3));
            m.add(id.A(j, 1), id.B(j, 1));
            m.add(id.A(j, 2), id.B(j, 2));
            m.add(id.Q(j, 1), id.Q(j, 2));
            m.add(id.P(j, 1), id.P(j, 2));
            break;
    }
}

void build_sat_witness(const CnfFormula& f, const SatIds& id, const std::vector<bool>& assignment,
                       Matching& m) {
    for (int i = 1; i <= f.nvars; ++i) add_variable_matching(id, i, assignment[i - 1], m);
    for (int j = 1; j <= f.nclauses(); ++j) {
        int r = 0;
        for (int pos = 0; pos < 3 && r == 0; ++pos) {
            int lit = f.clauses[j - 1][pos];
            bool value = assignment[std::abs(lit) - 1];
            if ((lit > 0 && value) || (lit < 0 && !value)) r = pos + 1;
        }
        add_clause_matching(id, j, r, m);
    }
}

}  // namespace

Matching assignment_to_matching(const ReductionBundle& bundle,
                                const std::vector<bool>& assignment) {
    if (bundle.kind == ReductionBundle::Kind::VertexCover)
        throw Error("bundle does not come from a SAT reduction");
    const CnfFormula& f = bundle.formula;
    if (static_cast<int>(assignment.size()) != f.nvars)
        throw NotSatisfying("assignment length does not match the variable count");
    if (!f.satisfied_by(assignment))
        throw NotSatisfying("the assignment does not satisfy the formula");

    Matching m;
    const int copy_size = 4 * f.nvars + 20 * f.nclauses();
    for (int c = 0; c < bundle.copies; ++c)
        build_sat_witness(f, SatIds{f.nvars, c * copy_size}, assignment, m);
    if (bundle.kind == ReductionBundle::Kind::AmplifiedSat) {
        // Triangle component: a maximum matching, one blocking edge.
        Agent t1 = bundle.copies * copy_size + 1;
        m.add(t1, t1 + 1);
    }
    return m;
}

std::vector<bool> matching_to_assignment(const ReductionBundle& bundle, const Matching& m) {
    if (bundle.kind != ReductionBundle::Kind::Sat)
        throw Error("assignment extraction expects a plain SAT bundle");
    if (!blocking_edges(bundle.instance, m).stable) throw NotStable();

    const CnfFormula& f = bundle.formula;
    SatIds id{f.nvars, 0};
    auto partner = m.partner_map(bundle.instance.n_agents());
    std::vector<bool> assignment(f.nvars);
    for (int i = 1; i <= f.nvars; ++i) {
        if (partner[id.V(i, 1)] == id.V(i, 2) && partner[id.V(i, 3)] == id.V(i, 4))
            assignment[i - 1] = true;
        else if (partner[id.V(i, 1)] == id.V(i, 4) && partner[id.V(i, 2)] == id.V(i, 3))
            assignment[i - 1] = false;
        else
            throw MalformedMatching("variable gadget " + std::to_string(i) +
                                    " carries neither M_i^T nor M_i^F");
    }
    if (!f.satisfied_by(assignment))
        throw MalformedMatching("extracted assignment does not satisfy the formula");
    return assignment;
}

ReductionBundle gen_amplified(const CnfFormula& f, int copies, bool relaxed) {
    require_valid_formula(f, relaxed);
    if (copies < 1) throw Error("copies must be at least 1");

    const int copy_size = 4 * f.nvars + 20 * f.nclauses();
    const int total = copies * copy_size + 3;
    std::vector<PrefList> prefs(total);
    std::vector<std::string> labels(total + 1);
    for (int c = 0; c < copies; ++c) {
        SatIds id{f.nvars, c * copy_size};
        emit_sat_copy(f, id, "c" + std::to_string(c + 1) + ".", prefs, labels);
    }
    // One strict cyclic triangle; it admits no stable matching.
    Agent t = copies * copy_size;
    for (int k = 1; k <= 3; ++k) {
        Agent self = t + k, succ = t + k % 3 + 1, pred = t + (k + 1) % 3 + 1;
        labels[self] = "t_" + std::to_string(k);
        prefs[self - 1] = {{succ}, {pred}};
    }

    ReductionBundle bundle;
    bundle.kind = ReductionBundle::Kind::AmplifiedSat;
    bundle.instance = Instance(total, std::move(prefs), 3);
    bundle.labels = std::move(labels);
    bundle.formula = f;
    bundle.relaxed = relaxed;
    bundle.copies = copies;
    return bundle;
}

std::pair<int, std::vector<int>> brute_vc(const CubicGraph& g) {
    // Works on any simple graph; cubicity is a generator-side requirement.
    if (g.n > kOracleSizeGuard)
        throw SizeGuardExceeded("brute_vc is guarded to n <= " + std::to_string(kOracleSizeGuard));

    int best_mask = -1, best_size = g.n + 1;
    for (int mask = 0; mask < (1 << g.n); ++mask) {
        int size = std::popcount(static_cast<unsigned>(mask));
        if (size >= best_size) continue;
        bool covers = true;
        for (auto [u, v] : g.edges)
            if (!((mask >> (u - 1)) & 1) && !((mask >> (v - 1)) & 1)) {
                covers = false;
                break;
            }
        if (covers) {
            best_size = size;
            best_mask = mask;
        }
    }
    std::vector<int> cover;
    for (int v = 1; v <= g.n; ++v)
        if ((best_mask >> (v - 1)) & 1) cover.push_back(v);
    return {best_size, cover};
}

std::optional<std::vector<bool>> brute_sat(const CnfFormula& f) {
    if (f.nvars > kOracleSizeGuard)
        throw SizeGuardExceeded("brute_sat is guarded to " + std::to_string(kOracleSizeGuard) +
                                " variables");
    for (std::uint64_t mask = 0; mask < (1ULL << f.nvars); ++mask) {
        std::vector<bool> assignment(f.nvars);
        for (int v = 0; v < f.nvars; ++v) assignment[v] = (mask >> v) & 1;
        if (f.satisfied_by(assignment)) return assignment;
    }
    return std::nullopt;
}

}  // namespace srm
