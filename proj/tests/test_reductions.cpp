#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "srmatch/egal.hpp"
#include "srmatch/reductions.hpp"
#include "srmatch/solver.hpp"
#include "srmatch/srti.hpp"

using namespace srm;

namespace {

CubicGraph k4() {
    return {4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
}

CubicGraph k33() {
    return {6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 5}, {3, 6}}};
}

// (x1 v x2 v x3) twice and (-x1 v -x2 v -x3) twice: strict (2,2)-E3.
CnfFormula duplicate_clause_formula() {
    return {3, {{1, 2, 3}, {1, 2, 3}, {-1, -2, -3}, {-1, -2, -3}}};
}

}  // namespace

TEST_CASE("gen_egal_from_vc: sizes, targets, validity") {
    auto b1 = gen_egal_from_vc(k4(), 3);
    CHECK(b1.instance.n_agents() == 72);  // 12n + 4m
    CHECK(*b1.k_prime == 121);
    CHECK(validate(b1.instance).empty());
    CHECK(b1.instance.max_list_length() == 3);
    CHECK(b1.instance.strict());
    CHECK(solve(b1.instance).has_value());
    CHECK(b1.labels[1] == "v_1^1");
    CHECK(b1.labels[40] == "e_6^4");
    CHECK(b1.labels[72] == "z_4^4");

    CHECK(*gen_egal_from_vc(k4(), 0).k_prime == 118);

    auto b2 = gen_egal_from_vc(k33(), 3);
    CHECK(b2.instance.n_agents() == 108);
    CHECK(*b2.k_prime == 180);  // 7*9 + 19*6 + 3
    CHECK(validate(b2.instance).empty());

    CubicGraph bad{3, {{1, 2}, {2, 3}, {1, 3}}};
    CHECK_THROWS_AS(gen_egal_from_vc(bad, 1), NotCubic);
}

TEST_CASE("cover_to_matching: stability and cost accounting") {
    auto bundle = gen_egal_from_vc(k4(), 3);

    auto m1 = cover_to_matching(bundle, {1, 2, 3});
    CHECK(blocking_edges(bundle.instance, m1).stable);
    CHECK(cost(bundle.instance, m1) == 121);  // 7m + 19n + 3

    auto m2 = cover_to_matching(bundle, {1, 2, 3, 4});
    CHECK(blocking_edges(bundle.instance, m2).stable);
    CHECK(cost(bundle.instance, m2) == 122);

    CHECK_THROWS_AS(cover_to_matching(bundle, {1, 2}), NotACover);
}

TEST_CASE("matching_to_cover: round-trip and minimum covers") {
    auto bundle = gen_egal_from_vc(k4(), 3);
    for (std::vector<int> cover :
         {std::vector<int>{1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {1, 2, 3, 4}}) {
        auto back = matching_to_cover(bundle, cover_to_matching(bundle, cover));
        CHECK(back == cover);
    }
    Matching lone({{bundle.agent_of("v_1^1"), bundle.agent_of("w_1^1")}});
    CHECK_THROWS_AS(matching_to_cover(bundle, lone), NotStable);
}

TEST_CASE("VC bundle: egalitarian cost equals 7m + 19n + tau") {
    auto bundle = gen_egal_from_vc(k4(), 3);
    auto [tau, min_cover] = brute_vc(k4());
    CHECK(tau == 3);
    auto [m, c] = egal_exact(bundle.instance);
    CHECK(c == 7 * 6 + 19 * 4 + tau);

    auto cover = matching_to_cover(bundle, m);
    CHECK(static_cast<int>(cover.size()) == tau);
    CHECK(static_cast<long long>(cover.size()) == c - 7 * 6 - 19 * 4);

    // Every stable matching is perfect and induces a cover.
    auto all = enumerate_stable(bundle.instance);
    for (const auto& sm : all.matchings) {
        CHECK(2 * sm.size() == static_cast<std::size_t>(bundle.instance.n_agents()));
        auto cov = matching_to_cover(bundle, sm);
        std::set<int> cset(cov.begin(), cov.end());
        for (auto [u, v] : bundle.graph.edges) CHECK((cset.count(u) || cset.count(v)));
    }
}

TEST_CASE("VC bundle: stable matchings decompose over covers") {
    // Gadget structure forces: z-pairs always, V_i^c or V_i^u per vertex
    // (covered iff V_i^c), and a free E_j choice exactly when both ends of
    // e_j are covered. Hence the count is sum over covers C of
    // 2^(edges inside C); for K4 that is 4 * 2^3 + 1 * 2^6 = 96.
    auto bundle = gen_egal_from_vc(k4(), 3);
    auto all = enumerate_stable(bundle.instance);
    CHECK(all.size() == 96);
}

TEST_CASE("SAT clause gadget: stable matchings are the three canonical ones") {
    // Single clause (x1 v x2 v x3), one occurrence per variable. A stable
    // matching picks M_i^T/M_i^F per variable gadget and M_j^r for some
    // true literal r, so the count is the number of (assignment, true
    // literal) pairs: 3*1 + 3*2 + 1*3 = 12.
    CnfFormula f{3, {{1, 2, 3}}};
    auto bundle = gen_srti_from_sat(f, true);
    CHECK(bundle.instance.n_agents() == 32);
    auto all = enumerate_stable(bundle.instance);
    CHECK(all.size() == 12);

    auto partner_of = [&](const Matching& m, const std::string& label) {
        auto partner = m.partner_map(bundle.instance.n_agents());
        return partner[bundle.agent_of(label)];
    };
    for (const auto& m : all.matchings) {
        CHECK(2 * m.size() == static_cast<std::size_t>(bundle.instance.n_agents()));
        auto assignment = matching_to_assignment(bundle, m);
        CHECK(f.satisfied_by(assignment));
        // The a-vertex matched to a q-vertex marks a true literal; the
        // other two sit with their b-partners.
        int q_matched = 0;
        for (int r = 1; r <= 3; ++r) {
            std::string a = "a_1^" + std::to_string(r);
            Agent p = partner_of(m, a);
            bool with_q = p == bundle.agent_of("q_1^1") || p == bundle.agent_of("q_1^3");
            bool with_b = p == bundle.agent_of("b_1^" + std::to_string(r));
            CHECK((with_q || with_b));
            if (with_q) {
                ++q_matched;
                CHECK(assignment[r - 1]);  // that literal is true
            }
        }
        CHECK(q_matched == 1);
    }
}

TEST_CASE("gen_srti_from_sat: sizes, degrees, validity") {
    auto f = duplicate_clause_formula();
    auto bundle = gen_srti_from_sat(f);
    CHECK(bundle.instance.n_agents() == 92);  // 4*3 + 20*4
    CHECK(validate(bundle.instance).empty());
    CHECK(bundle.instance.max_list_length() == 3);
    CHECK_FALSE(bundle.instance.strict());  // b-vertices hold ties

    for (int j = 1; j <= f.nclauses(); ++j)
        for (int r = 1; r <= 3; ++r) {
            Agent a = bundle.agent_of("a_" + std::to_string(j) + "^" + std::to_string(r));
            CHECK(bundle.instance.list_length(a) == 3);
        }
    for (int i = 1; i <= f.nvars; ++i)
        for (int s = 1; s <= 4; ++s) {
            Agent v = bundle.agent_of("v_" + std::to_string(i) + "^" + std::to_string(s));
            CHECK(bundle.instance.list_length(v) == 3);
        }
}

TEST_CASE("assignment_to_matching: stability, perfection, error path") {
    auto f = duplicate_clause_formula();
    auto bundle = gen_srti_from_sat(f);

    CHECK_THROWS_AS(assignment_to_matching(bundle, {true, true, true}), NotSatisfying);

    auto m = assignment_to_matching(bundle, {true, false, false});
    CHECK(blocking_edges(bundle.instance, m).stable);
    CHECK(2 * m.size() == static_cast<std::size_t>(bundle.instance.n_agents()));

    auto back = matching_to_assignment(bundle, m);
    CHECK(back == std::vector<bool>{true, false, false});
}

TEST_CASE("solvable finds witnesses on satisfiable bundles") {
    auto bundle = gen_srti_from_sat(duplicate_clause_formula());
    auto r = solvable(bundle.instance);
    REQUIRE(r.verdict == SolvableResult::Verdict::Stable);
    auto assignment = matching_to_assignment(bundle, *r.matching);
    CHECK(bundle.formula.satisfied_by(assignment));
}

TEST_CASE("gen_amplified: sizes and blocking-edge structure") {
    auto f = duplicate_clause_formula();
    auto b2 = gen_amplified(f, 2);
    CHECK(b2.instance.n_agents() == 187);  // 2 * 92 + 3
    CHECK(validate(b2.instance).empty());
    CHECK(b2.instance.max_list_length() == 3);

    auto b1 = gen_amplified(f, 1);
    CHECK(b1.instance.n_agents() == 95);
    auto witness = assignment_to_matching(b1, {true, false, false});
    CHECK(blocking_edges(b1.instance, witness).blocking.size() == 1);

    // The triangle admits no stable matching, so bp >= 1 for any matching.
    auto tri = testutil::triangle_strict();
    for (const auto& m : oracle::all_matchings(tri))
        CHECK(!oracle::blocking_of(tri, m).empty());
}

TEST_CASE("brute oracles") {
    CHECK(brute_vc(k4()).first == 3);
    CubicGraph c3{3, {{1, 2}, {2, 3}, {1, 3}}};
    CHECK(brute_vc(c3).first == 2);
    CHECK(brute_sat(duplicate_clause_formula()).has_value());

    CnfFormula unsat_free{2, {}};  // no clauses: trivially satisfiable
    CHECK(brute_sat(unsat_free).has_value());
}

TEST_CASE("formula validation: occurrence bounds and malformed clauses") {
    CnfFormula thrice{2, {{1, 2, -1}}};
    CHECK_THROWS_AS(require_valid_formula(thrice, true), MalformedFormula);  // repeated variable

    CnfFormula over{3, {{1, 2, 3}, {1, 2, 3}, {1, -2, -3}}};
    CHECK_THROWS_AS(require_valid_formula(over, true), OccurrenceBound);  // x1 positive thrice

    CnfFormula relaxed_ok{3, {{1, 2, 3}, {-1, -2, -3}}};
    CHECK_NOTHROW(require_valid_formula(relaxed_ok, true));
    CHECK_THROWS_AS(require_valid_formula(relaxed_ok, false), OccurrenceBound);  // not exactly 2
}

TEST_CASE("relaxed bundles: SAT iff solvable on random relaxed formulas") {
    // Random relaxed formulas over up to 4 variables; all are satisfiable
    // (a 3-literal clause over <= 4 variables excludes at most 2 of 16
    // assignments and occurrence bounds cap the clause count), so this
    // exercises the positive direction plus witness round-trips.
    Rng rng(2024);
    int built = 0;
    for (int attempt = 0; attempt < 200 && built < 25; ++attempt) {
        int n0 = 3 + static_cast<int>(rng.below(2));
        CnfFormula f;
        f.nvars = n0;
        std::vector<int> pos_left(n0 + 1, 2), neg_left(n0 + 1, 2);
        int target = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n0)));
        for (int c = 0; c < target; ++c) {
            std::vector<int> vars;
            for (int v = 1; v <= n0; ++v) vars.push_back(v);
            rng.shuffle(vars);
            std::array<int, 3> clause{};
            bool ok = true;
            for (int p = 0; p < 3 && ok; ++p) {
                int v = vars[p];
                bool neg = rng.chance(0.5);
                if (neg && neg_left[v] > 0)
                    --neg_left[v];
                else if (!neg && pos_left[v] > 0)
                    --pos_left[v];
                else if (neg_left[v] > 0)
                    --neg_left[v], neg = true;
                else if (pos_left[v] > 0)
                    --pos_left[v], neg = false;
                else
                    ok = false;
                clause[p] = neg ? -v : v;
            }
            if (ok) f.clauses.push_back(clause);
        }
        if (f.nclauses() < 2) continue;
        require_valid_formula(f, true);
        ++built;

        auto sat = brute_sat(f);
        REQUIRE(sat.has_value());
        auto bundle = gen_srti_from_sat(f, true);
        CHECK(validate(bundle.instance).empty());
        auto r = solvable(bundle.instance);
        REQUIRE(r.verdict == SolvableResult::Verdict::Stable);

        auto m = assignment_to_matching(bundle, *sat);
        CHECK(blocking_edges(bundle.instance, m).stable);
        auto back = matching_to_assignment(bundle, m);
        CHECK(bundle.formula.satisfied_by(back));
    }
    CHECK(built >= 25);
}
