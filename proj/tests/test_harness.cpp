#include <doctest.h>

#include <algorithm>

#include "idealgraph/harness.hpp"

using namespace idealgraph;
using namespace idealgraph::harness;

namespace {

ModulePair pair_of(int64_t m, int64_t n) { return validate_module_pair(m, n); }

int64_t expected_pairs(int64_t max_m) {
    int64_t count = 0;
    for (int64_t m = 2; m <= max_m; ++m) {
        for (int64_t n = 2; n <= m; ++n) {
            if (m % n == 0) ++count;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("cyclic subgroup of the module action") {
    CHECK(cyclic_subgroup(4, pair_of(36, 6)) == std::vector<int64_t>{0, 2, 4});
    CHECK(cyclic_subgroup(6, pair_of(36, 6)) == std::vector<int64_t>{0});
    CHECK(cyclic_subgroup(9, pair_of(36, 6)) == std::vector<int64_t>{0, 3});
    CHECK(cyclic_subgroup(18, pair_of(18, 18)) == std::vector<int64_t>{0});
    // subgroup generated by gcd(d, n)
    for (int64_t d : {2, 3, 4, 6, 9, 12, 18}) {
        ModulePair p = pair_of(36, 12);
        std::vector<int64_t> expected;
        int64_t g = gcd64(d, 12);
        for (int64_t r = 0; r < 12; r += g) expected.push_back(r);
        CHECK(cyclic_subgroup(d, p) == expected);
    }
}

TEST_CASE("module-action adjacency oracle") {
    ModulePair p36 = pair_of(36, 6);
    CHECK(oracle_adjacent(2, 4, p36));
    CHECK(!oracle_adjacent(2, 9, p36));
    CHECK(oracle_adjacent(3, 6, pair_of(18, 18)));
}

TEST_CASE("oracle equivalence with the lcm rule") {
    CHECK(verify_adjacency_criterion(pair_of(36, 6)));
    CHECK(verify_adjacency_criterion(pair_of(4, 2)));  // single vertex, vacuous
    ModulePair p30 = pair_of(30, 30);
    CHECK(verify_adjacency_criterion(p30));
    // exactly 9 adjacent pairs, matching the reference drawing
    std::vector<int64_t> divisors = proper_nontrivial_divisors(p30.m);
    int adjacent = 0;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        for (std::size_t j = i + 1; j < divisors.size(); ++j) {
            if (oracle_adjacent(divisors[i], divisors[j], p30)) ++adjacent;
        }
    }
    CHECK(adjacent == 9);

    for (int64_t m = 2; m <= 120; ++m) {
        for (int64_t n = 2; n <= m; ++n) {
            if (m % n == 0) CHECK(verify_adjacency_criterion(pair_of(m, n)));
        }
    }
}

TEST_CASE("figure fixtures match the built graphs") {
    for (auto primes : std::vector<std::array<int64_t, 3>>{{2, 3, 5}, {3, 5, 7}, {5, 2, 11}}) {
        auto fixtures = figure_fixtures(primes[0], primes[1], primes[2]);
        REQUIRE(fixtures.size() == 5);
        for (const auto& fixture : fixtures) {
            IdealGraph g = build_graph(pair_of(fixture.m, fixture.n));
            CHECK(fixture_matches(fixture, g));
        }
    }
}

TEST_CASE("fixture contents at (2, 3, 5)") {
    auto fixtures = figure_fixtures(2, 3, 5);
    CHECK(fixtures[0].m == 18);
    CHECK(fixtures[0].edges == std::vector<std::pair<int64_t, int64_t>>{
                                   {2, 3}, {2, 6}, {3, 6}, {3, 9}});
    CHECK(fixtures[1].m == 54);
    CHECK(fixtures[1].n == 18);
    CHECK(fixtures[1].edges.size() == 6);
    CHECK(fixtures[1].isolated == std::vector<int64_t>{18});
    CHECK(fixtures[2].edges.size() == 6);
    CHECK(fixtures[2].isolated == std::vector<int64_t>{6});
    CHECK(fixtures[3].m == 30);
    CHECK(fixtures[3].edges.size() == 9);
    CHECK(fixtures[3].isolated.empty());
    CHECK(fixtures[4].m == 54);
    CHECK(fixtures[4].n == 6);
    CHECK(fixtures[4].edges == std::vector<std::pair<int64_t, int64_t>>{
                                   {3, 9}, {3, 27}, {9, 27}});
    CHECK(fixtures[4].isolated == std::vector<int64_t>{2, 6, 18});

    // a deliberately wrong fixture must be rejected
    FigureFixture broken = fixtures[0];
    broken.edges.pop_back();
    CHECK(!fixture_matches(broken, build_graph(pair_of(18, 18))));
}

TEST_CASE("pure-power clique decomposition for n = p1*p2") {
    CHECK(check_pure_power_cliques(pair_of(36, 6)));       // K2 u K2
    CHECK(check_pure_power_cliques(pair_of(8 * 9, 6)));    // K3 u K2
    CHECK(check_pure_power_cliques(pair_of(2 * 9, 6)));    // K1 u K2
    CHECK_THROWS_AS(check_pure_power_cliques(pair_of(36, 4)), std::invalid_argument);
    CHECK_THROWS_AS(check_pure_power_cliques(pair_of(30, 6)), std::invalid_argument);

    for (int64_t m = 2; m <= 1000; ++m) {
        ModulePair base = pair_of(m, m);
        if (base.prime_count() != 2) continue;
        int64_t n = base.primes[0] * base.primes[1];
        CHECK(check_pure_power_cliques(pair_of(m, n)));
    }
}

TEST_CASE("small sweep is clean and counts pairs correctly") {
    SweepReport report = sweep(30);
    CHECK(report.pairs_checked == expected_pairs(30));
    CHECK(report.mismatches.empty());
    CHECK(report.certificate_failures.empty());
    CHECK(report.oracle_failures.empty());
    CHECK(report.invariant_violations.empty());
    CHECK(report.passed());
    CHECK(report.records.size() == static_cast<std::size_t>(report.pairs_checked));
    CHECK(std::is_sorted(report.records.begin(), report.records.end(),
                         [](const PairRecord& a, const PairRecord& b) {
                             return std::pair(a.m, a.n) < std::pair(b.m, b.n);
                         }));
    CHECK_THROWS_AS(sweep(1), ValidationError);
}

TEST_CASE("parallel sweep merges deterministically") {
    SweepOptions serial;
    SweepOptions parallel;
    parallel.jobs = 4;
    SweepReport a = sweep(200, serial);
    SweepReport b = sweep(200, parallel);
    CHECK(a.passed());
    CHECK(b.passed());
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].m == b.records[i].m);
        CHECK(a.records[i].n == b.records[i].n);
        CHECK(a.records[i].structural_planar == b.records[i].structural_planar);
        CHECK(a.records[i].frank == b.records[i].frank);
    }
}

TEST_CASE("a perturbed table bound is caught by the sweep") {
    SweepOptions options;
    options.bounds.planar_case1_beta1 = 6;  // admits (m=128, n=64)
    options.oracle_bound = 0;
    SweepReport report = sweep(150, options);
    REQUIRE(!report.mismatches.empty());
    bool found = false;
    for (const auto& mm : report.mismatches) {
        if (mm.m == 128 && mm.n == 64 && mm.property == "planar") found = true;
    }
    CHECK(found);
}
