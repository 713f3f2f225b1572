#include "idealgraph/harness.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "idealgraph/cycles.hpp"
#include "idealgraph/planarity.hpp"

namespace idealgraph::harness {

std::vector<int64_t> cyclic_subgroup(int64_t d, const ModulePair& pair) {
    const int64_t n = pair.n.value;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    const int64_t step = d % n;
    for (int64_t t = 0, r = 0; t < n; ++t, r = (r + step) % n) hit[static_cast<std::size_t>(r)] = 1;
    std::vector<int64_t> out;
    for (int64_t r = 0; r < n; ++r) {
        if (hit[static_cast<std::size_t>(r)]) out.push_back(r);
    }
    return out;
}

bool oracle_adjacent(int64_t d1, int64_t d2, const ModulePair& pair) {
    std::vector<int64_t> s1 = cyclic_subgroup(d1, pair);
    std::vector<int64_t> s2 = cyclic_subgroup(d2, pair);
    std::vector<int64_t> both;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(both));
    return std::any_of(both.begin(), both.end(), [](int64_t r) { return r != 0; });
}

bool verify_adjacency_criterion(const ModulePair& pair) {
    const std::vector<int64_t> divisors = proper_nontrivial_divisors(pair.m);
    const int64_t n = pair.n.value;
    std::vector<std::vector<char>> images;
    images.reserve(divisors.size());
    for (int64_t d : divisors) {
        std::vector<char> hit(static_cast<std::size_t>(n), 0);
        const int64_t step = d % n;
        for (int64_t t = 0, r = 0; t < n; ++t, r = (r + step) % n)
            hit[static_cast<std::size_t>(r)] = 1;
        images.push_back(std::move(hit));
    }
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        for (std::size_t j = i + 1; j < divisors.size(); ++j) {
            bool oracle = false;
            for (int64_t r = 1; r < n; ++r) {
                if (images[i][static_cast<std::size_t>(r)] &&
                    images[j][static_cast<std::size_t>(r)]) {
                    oracle = true;
                    break;
                }
            }
            bool rule = lcm64(divisors[i], divisors[j]) % n != 0;
            if (oracle != rule) return false;
        }
    }
    return true;
}

namespace {

FigureFixture make_fixture(int id, int64_t m, int64_t n,
                           std::vector<std::pair<int64_t, int64_t>> edges,
                           std::vector<int64_t> isolated) {
    FigureFixture f;
    f.figure_id = id;
    f.m = m;
    f.n = n;
    for (auto& [a, b] : edges) {
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    std::sort(isolated.begin(), isolated.end());
    f.edges = std::move(edges);
    f.isolated = std::move(isolated);
    return f;
}

}  // namespace

std::vector<FigureFixture> figure_fixtures(int64_t p1, int64_t p2, int64_t p3) {
    // Edge and isolated-vertex sets transcribed from the reference drawings,
    // not re-derived from the adjacency rule.
    std::vector<FigureFixture> out;
    out.push_back(make_fixture(1, p1 * p2 * p2, p1 * p2 * p2,
                               {{p2, p1 * p2}, {p1, p1 * p2}, {p1, p2}, {p2, p2 * p2}}, {}));
    out.push_back(make_fixture(2, p1 * p2 * p2 * p2, p1 * p2 * p2,
                               {{p2 * p2, p2 * p2 * p2},
                                {p2, p2 * p2 * p2},
                                {p2, p2 * p2},
                                {p1, p2},
                                {p1, p1 * p2},
                                {p2, p1 * p2}},
                               {p1 * p2 * p2}));
    out.push_back(make_fixture(3, p1 * p2 * p3, p1 * p2,
                               {{p2, p2 * p3},
                                {p3, p2 * p3},
                                {p2, p3},
                                {p3, p1 * p3},
                                {p1, p1 * p3},
                                {p1, p3}},
                               {p1 * p2}));
    out.push_back(make_fixture(4, p1 * p2 * p3, p1 * p2 * p3,
                               {{p3, p2 * p3},
                                {p3, p1 * p3},
                                {p1, p2},
                                {p1, p3},
                                {p2, p2 * p3},
                                {p2, p1 * p2},
                                {p1, p1 * p3},
                                {p1, p1 * p2},
                                {p2, p3}},
                               {}));
    out.push_back(make_fixture(5, p1 * p2 * p2 * p2, p1 * p2,
                               {{p2, p2 * p2}, {p2 * p2, p2 * p2 * p2}, {p2, p2 * p2 * p2}},
                               {p1, p1 * p2, p1 * p2 * p2}));
    return out;
}

bool fixture_matches(const FigureFixture& fixture, const IdealGraph& graph) {
    if (graph.pair.m.value != fixture.m || graph.pair.n.value != fixture.n) return false;
    std::vector<std::pair<int64_t, int64_t>> edges;
    for (auto [u, v] : graph.graph.edges()) {
        int64_t a = graph.labels[u], b = graph.labels[v];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    return edges == fixture.edges && isolated_vertices(graph) == fixture.isolated;
}

bool check_pure_power_cliques(const ModulePair& pair) {
    if (pair.prime_count() != 2 || pair.beta != std::vector<int>{1, 1}) {
        throw std::invalid_argument(
            "check_pure_power_cliques: requires m = p1^a1 * p2^a2 with n = p1 * p2");
    }
    IdealGraph g = build_graph(pair);
    const int64_t n = pair.n.value;
    std::vector<int64_t> keep;
    for (int64_t d : g.labels) {
        if (d % n != 0) keep.push_back(d);
    }
    LabeledSubgraph sub = induced_subgraph(g, keep);
    std::vector<std::vector<int64_t>> expected;
    for (int side = 0; side < 2; ++side) {
        std::vector<int64_t> powers;
        int64_t p = pair.primes[side];
        for (int64_t q = p; q < pair.m.value; q *= p) {
            if (pair.m.value % q == 0) powers.push_back(q);
        }
        expected.push_back(std::move(powers));
    }
    std::vector<std::vector<int64_t>> comps;
    for (const auto& comp : sub.graph.connected_components()) {
        std::vector<int64_t> labels;
        for (int v : comp) labels.push_back(sub.labels[v]);
        std::sort(labels.begin(), labels.end());
        comps.push_back(std::move(labels));
    }
    std::sort(comps.begin(), comps.end());
    std::sort(expected.begin(), expected.end());
    if (comps != expected) return false;
    // each component must be complete
    for (const auto& comp : comps) {
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t j = i + 1; j < comp.size(); ++j) {
                int u = g.index_of(comp[i]), v = g.index_of(comp[j]);
                if (!g.graph.adjacent(u, v)) return false;
            }
        }
    }
    return true;
}

namespace {

struct PairOutcome {
    PairRecord record;
    std::vector<Mismatch> mismatches;
    std::vector<Failure> certificate_failures;
    std::vector<Failure> oracle_failures;
    std::vector<Failure> invariant_violations;
};

PairOutcome examine_pair(int64_t m, int64_t n, const SweepOptions& opt) {
    PairOutcome out;
    ModulePair pair = validate_module_pair(m, n);
    IdealGraph ig = build_graph(pair);
    const Graph& g = ig.graph;

    PairRecord& rec = out.record;
    rec.m = m;
    rec.n = n;
    rec.vertices = g.order();
    rec.edges = g.size();

    long long expected_vertices = 1;
    for (int a : pair.alpha) expected_vertices *= a + 1;
    expected_vertices -= 2;
    if (expected_vertices != g.order()) {
        out.invariant_violations.push_back({m, n, "vertex count differs from prod(alpha+1)-2"});
    }
    for (int v = 0; v < g.order(); ++v) {
        if (ig.labels[v] % n == 0 && g.degree(v) != 0) {
            out.invariant_violations.push_back(
                {m, n, "vertex " + std::to_string(ig.labels[v]) + " divisible by n but not isolated"});
        }
    }

    PlanarityResult planar = is_planar(g);
    rec.structural_planar = planar.planar;
    if (!verify_certificate(g, planar.certificate)) {
        out.certificate_failures.push_back({m, n, "planarity certificate rejected"});
    }
    if (planar.planar != std::holds_alternative<Embedding>(planar.certificate)) {
        out.certificate_failures.push_back({m, n, "certificate kind contradicts decision"});
    }

    Graph apex = apex_extension(g);
    PlanarityResult apex_planar = is_planar(apex);
    rec.structural_outerplanar = apex_planar.planar;
    if (!verify_certificate(apex, apex_planar.certificate)) {
        out.certificate_failures.push_back({m, n, "apex planarity certificate rejected"});
    }

    RingReport ring = is_ring_graph(g, opt.cycle_cap);
    rec.structural_ring = ring.decision;
    rec.rank = ring.cycle_rank;
    rec.frank = ring.free_rank;
    rec.pcp = ring.pcp_holds;
    rec.k4_subdivision_free = ring.k4_subdivision_free;

    closed_form::Prediction pred = closed_form::predict(pair, opt.bounds);
    rec.closed_planar = pred.planar;
    rec.closed_outerplanar = pred.outerplanar;
    rec.closed_ring = pred.ring;
    rec.planar_cases = pred.planar_cases;
    rec.ring_cases = pred.ring_cases;
    rec.outerplanar_cases = pred.outerplanar_cases;

    if (rec.structural_planar != rec.closed_planar) {
        out.mismatches.push_back({m, n, "planar", rec.structural_planar, rec.closed_planar});
    }
    if (rec.structural_outerplanar != rec.closed_outerplanar) {
        out.mismatches.push_back(
            {m, n, "outerplanar", rec.structural_outerplanar, rec.closed_outerplanar});
    }
    if (rec.structural_ring != rec.closed_ring) {
        out.mismatches.push_back({m, n, "ring", rec.structural_ring, rec.closed_ring});
    }
    rec.agree = out.mismatches.empty();

    // implication chains and the rank/frank laws
    if (rec.structural_outerplanar && !rec.structural_ring) {
        out.invariant_violations.push_back({m, n, "structural outerplanar but not ring"});
    }
    if (rec.structural_ring && !rec.structural_planar) {
        out.invariant_violations.push_back({m, n, "structural ring but not planar"});
    }
    if (pred.outerplanar != pred.ring) {
        out.invariant_violations.push_back({m, n, "closed-form outerplanar differs from ring"});
    }
    if (pred.ring && !pred.planar) {
        out.invariant_violations.push_back({m, n, "closed-form ring but not planar"});
    }
    if (ring.free_rank) {
        if (ring.cycle_rank > *ring.free_rank) {
            out.invariant_violations.push_back({m, n, "rank exceeds frank"});
        }
        bool rank_eq = ring.cycle_rank == *ring.free_rank;
        bool cond_ii = ring.pcp_holds.value_or(false) && ring.k4_subdivision_free;
        if (rank_eq != cond_ii) {
            out.invariant_violations.push_back({m, n, "rank=frank disagrees with PCP+K4-free"});
        }
    }
    if (rec.structural_planar && g.order() >= 3 && g.size() > 3 * g.order() - 6) {
        out.invariant_violations.push_back({m, n, "planar graph violates edge bound 3V-6"});
    }
    if (rec.structural_outerplanar && g.order() >= 2 && g.size() > 2 * g.order() - 3) {
        out.invariant_violations.push_back({m, n, "outerplanar graph violates edge bound 2V-3"});
    }

    if (m <= opt.oracle_bound && !verify_adjacency_criterion(pair)) {
        out.oracle_failures.push_back({m, n, "module-action oracle disagrees with lcm rule"});
    }
    if (pair.prime_count() == 2 && pair.beta == std::vector<int>{1, 1} &&
        !check_pure_power_cliques(pair)) {
        out.oracle_failures.push_back({m, n, "pure-power clique decomposition failed"});
    }
    return out;
}

std::vector<int64_t> divisors_ge2(int64_t m) {
    std::vector<int64_t> divs = all_divisors(factorize(m));
    std::vector<int64_t> out;
    for (int64_t d : divs) {
        if (d >= 2) out.push_back(d);
    }
    return out;
}

}  // namespace

SweepReport sweep(int64_t max_m, const SweepOptions& options) {
    if (max_m < 2) {
        throw ValidationError(ValidationErrorKind::OutOfRange, "sweep: max_m must be >= 2");
    }
    const auto start = std::chrono::steady_clock::now();
    SweepReport report;
    report.max_m = max_m;

    const int jobs = std::max(1, options.jobs);
    std::vector<std::vector<PairOutcome>> buckets(static_cast<std::size_t>(jobs));
    auto work = [&](int worker) {
        for (int64_t m = 2 + worker; m <= max_m; m += jobs) {
            for (int64_t n : divisors_ge2(m)) {
                buckets[static_cast<std::size_t>(worker)].push_back(examine_pair(m, n, options));
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    std::vector<PairOutcome> all;
    for (auto& bucket : buckets) {
        for (auto& outcome : bucket) all.push_back(std::move(outcome));
    }
    std::sort(all.begin(), all.end(), [](const PairOutcome& a, const PairOutcome& b) {
        return std::pair(a.record.m, a.record.n) < std::pair(b.record.m, b.record.n);
    });

    for (auto& outcome : all) {
        ++report.pairs_checked;
        auto move_into = [](auto& dst, auto& src) {
            for (auto& item : src) dst.push_back(std::move(item));
        };
        move_into(report.mismatches, outcome.mismatches);
        move_into(report.certificate_failures, outcome.certificate_failures);
        move_into(report.oracle_failures, outcome.oracle_failures);
        move_into(report.invariant_violations, outcome.invariant_violations);
        if (options.keep_records) report.records.push_back(std::move(outcome.record));
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace idealgraph::harness
