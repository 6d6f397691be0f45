#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "srmatch/io.hpp"
#include "srmatch/solver.hpp"

using namespace srm;
using testutil::strict_inst;

TEST_CASE("solve: canonical cases") {
    CHECK_FALSE(solve(testutil::triangle_strict()).has_value());
    CHECK(solve(testutil::single_edge()) == Matching({{1, 2}}));

    auto m = solve(testutil::four_cycle());
    REQUIRE(m.has_value());
    bool one_of_two = *m == Matching({{1, 2}, {3, 4}}) || *m == Matching({{1, 4}, {2, 3}});
    CHECK(one_of_two);

    CHECK_THROWS_AS(solve(testutil::triangle_tied()), TiesPresent);
}

TEST_CASE("enumerate: canonical cases") {
    CHECK(enumerate_stable(testutil::four_cycle()).size() == 2);
    CHECK(enumerate_stable(testutil::triangle_strict()).empty());
    CHECK(enumerate_stable(testutil::single_edge()).size() == 1);
}

TEST_CASE("enumerate: cap reports partial count") {
    auto inst = testutil::four_cycle();
    CHECK_THROWS_AS(enumerate_stable(inst, 1), CapExceeded);
    try {
        enumerate_stable(inst, 1);
    } catch (const CapExceeded& e) {
        CHECK(e.partial_count == 1);
    }
}

TEST_CASE("matched_set: canonical cases") {
    auto path = strict_inst({{2}, {1, 3}, {2}});
    CHECK(matched_set(path) == std::set<Agent>{1, 2});
    CHECK(matched_set(testutil::single_edge()) == std::set<Agent>{1, 2});
    CHECK_THROWS_AS(matched_set(testutil::triangle_strict()), Unsolvable);
}

TEST_CASE("property: enumeration equals the definitional scan (strict)") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto inst = random_instance(2 + seed % 11, 2 + seed % 4, 0.0, seed);
        auto expect = oracle::stable_matchings(inst);
        auto got = enumerate_stable(inst);
        CHECK(got.matchings == expect);
    }
}

TEST_CASE("property: enumeration equals the definitional scan (ties)") {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        auto inst = random_instance(2 + seed % 10, 3, 0.5, seed);
        auto expect = oracle::stable_matchings(inst);
        auto got = enumerate_stable(inst);
        CHECK(got.matchings == expect);
    }
}

TEST_CASE("property: solve agrees with enumeration; matched set invariant") {
    for (std::uint64_t seed = 1; seed <= 300; ++seed) {
        auto inst = random_instance(2 + seed % 11, 2 + seed % 4, 0.0, seed);
        auto stable = enumerate_stable(inst);
        auto m = solve(inst);
        CHECK(m.has_value() == !stable.empty());
        if (!m) continue;
        CHECK(oracle::is_stable(inst, *m));
        // Same agents matched in every stable matching.
        std::set<Agent> expect;
        for (auto [u, v] : stable.matchings.front().pairs) {
            expect.insert(u);
            expect.insert(v);
        }
        for (const auto& other : stable.matchings) {
            std::set<Agent> agents;
            for (auto [u, v] : other.pairs) {
                agents.insert(u);
                agents.insert(v);
            }
            CHECK(agents == expect);
        }
        CHECK(matched_set(inst) == expect);
    }
}

TEST_CASE("property: mutual-first edges lie in every stable matching") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto inst = random_instance(2 + seed % 11, 3, 0.0, seed);
        auto stable = enumerate_stable(inst);
        if (stable.empty()) continue;
        for (auto [u, v] : inst.edges()) {
            if (!(inst.list(u).front() == v && inst.list(v).front() == u)) continue;
            for (const auto& m : stable.matchings) CHECK(m.contains({u, v}));
        }
    }
}

TEST_CASE("property: last-by-both edges lie in all stable matchings or none") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto inst = random_instance(2 + seed % 11, 3, 0.0, seed);
        auto stable = enumerate_stable(inst);
        if (stable.empty()) continue;
        for (auto [u, v] : inst.edges()) {
            if (!(inst.list(u).back() == v && inst.list(v).back() == u)) continue;
            std::size_t hits = 0;
            for (const auto& m : stable.matchings) hits += m.contains({u, v});
            bool all_or_none = hits == 0 || hits == stable.size();
            CHECK(all_or_none);
        }
    }
}

TEST_CASE("phase 1 reduction preserves the stable set") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
        auto inst = random_instance(2 + seed % 10, 3, 0.0, seed);
        auto table = detail::phase1_reduce(inst);
        CHECK(oracle::stable_matchings(table) == oracle::stable_matchings(inst));
    }
}
