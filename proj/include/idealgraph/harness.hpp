#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "idealgraph/closed_form.hpp"
#include "idealgraph/graph.hpp"

namespace idealgraph::harness {

// The subgroup {d*t mod n : t = 0..n-1} of Z_n, i.e. the image of the
// ideal generated by d under the module action. Sorted residues.
std::vector<int64_t> cyclic_subgroup(int64_t d, const ModulePair& pair);

// Brute-force module-theoretic adjacency: the two images intersect in a
// nonzero residue.
bool oracle_adjacent(int64_t d1, int64_t d2, const ModulePair& pair);

// True iff oracle adjacency equals the lcm-divisibility rule on every
// vertex pair of G_n(Z_m).
bool verify_adjacency_criterion(const ModulePair& pair);

// Golden graphs transcribed from the five reference drawings, instantiated
// at concrete primes.
struct FigureFixture {
    int figure_id = 0;
    int64_t m = 0;
    int64_t n = 0;
    std::vector<std::pair<int64_t, int64_t>> edges;  // each (min, max), sorted
    std::vector<int64_t> isolated;                   // sorted
};

std::vector<FigureFixture> figure_fixtures(int64_t p1, int64_t p2, int64_t p3);

// True iff the built graph reproduces the fixture's edge and isolated sets.
bool fixture_matches(const FigureFixture& fixture, const IdealGraph& graph);

// For pairs shaped m = p1^a1 * p2^a2, n = p1 * p2: the subgraph induced on
// the vertices not divisible by n must consist of exactly two connected
// components, the pure p1-powers and the pure p2-powers, each a clique.
// Throws std::invalid_argument on any other shape.
bool check_pure_power_cliques(const ModulePair& pair);

struct Mismatch {
    int64_t m = 0;
    int64_t n = 0;
    std::string property;  // "planar" / "outerplanar" / "ring"
    bool structural = false;
    bool closed_form = false;
};

struct Failure {
    int64_t m = 0;
    int64_t n = 0;
    std::string what;
};

struct PairRecord {
    int64_t m = 0;
    int64_t n = 0;
    int vertices = 0;
    int edges = 0;
    bool structural_planar = false;
    bool structural_outerplanar = false;
    bool structural_ring = false;
    bool closed_planar = false;
    bool closed_outerplanar = false;
    bool closed_ring = false;
    std::vector<int> planar_cases;
    std::vector<int> ring_cases;
    std::vector<int> outerplanar_cases;
    int rank = 0;
    std::optional<long long> frank;
    std::optional<bool> pcp;
    bool k4_subdivision_free = false;
    bool agree = true;
};

struct SweepOptions {
    int64_t oracle_bound = 500;    // adjacency oracle runs for m <= bound
    int jobs = 1;                  // distinct m values processed in parallel
    std::size_t cycle_cap = 1000000;
    bool keep_records = true;
    closed_form::Bounds bounds{};  // tests may pass perturbed tables
};

struct SweepReport {
    int64_t max_m = 0;
    int64_t pairs_checked = 0;
    std::vector<Mismatch> mismatches;
    std::vector<Failure> certificate_failures;
    std::vector<Failure> oracle_failures;
    std::vector<Failure> invariant_violations;
    std::vector<PairRecord> records;  // sorted by (m, n) when kept
    std::chrono::milliseconds elapsed{0};

    bool passed() const {
        return mismatches.empty() && certificate_failures.empty() && oracle_failures.empty() &&
               invariant_violations.empty();
    }
};

// Exhaustive cross-validation over every (m, n) with 2 <= m <= max_m,
// n | m, n >= 2: structural deciders with certificate audit against the
// closed-form tables, plus the adjacency oracle and the pure-power clique
// check where applicable.
SweepReport sweep(int64_t max_m, const SweepOptions& options = {});

}  // namespace idealgraph::harness
