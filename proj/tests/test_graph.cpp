#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "idealgraph/graph.hpp"

using namespace idealgraph;

namespace {

std::vector<std::pair<int64_t, int64_t>> label_edges(const IdealGraph& g) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (auto [u, v] : g.graph.edges()) {
        out.emplace_back(std::min(g.labels[u], g.labels[v]), std::max(g.labels[u], g.labels[v]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

IdealGraph build(int64_t m, int64_t n) { return build_graph(validate_module_pair(m, n)); }

}  // namespace

TEST_CASE("G_18(Z_18) matches the first reference drawing") {
    IdealGraph g = build(18, 18);
    CHECK(g.labels == std::vector<int64_t>{2, 3, 6, 9});
    CHECK(label_edges(g) ==
          std::vector<std::pair<int64_t, int64_t>>{{2, 3}, {2, 6}, {3, 6}, {3, 9}});
    CHECK(isolated_vertices(g).empty());
}

TEST_CASE("prime modulus gives the empty graph") {
    IdealGraph g = build(7, 7);
    CHECK(g.labels.empty());
    CHECK(g.graph.order() == 0);
    CHECK(connected_components(g).empty());
}

TEST_CASE("G_6(Z_36) structure") {
    IdealGraph g = build(36, 6);
    CHECK(g.labels == std::vector<int64_t>{2, 3, 4, 6, 9, 12, 18});
    CHECK(label_edges(g) == std::vector<std::pair<int64_t, int64_t>>{{2, 4}, {3, 9}});
    CHECK(isolated_vertices(g) == std::vector<int64_t>{6, 12, 18});
    std::vector<std::vector<int64_t>> comps = connected_components(g);
    std::sort(comps.begin(), comps.end());
    CHECK(comps == std::vector<std::vector<int64_t>>{{2, 4}, {3, 9}, {6}, {12}, {18}});
}

TEST_CASE("vertices divisible by n are isolated") {
    IdealGraph g = build(24, 8);
    std::vector<int64_t> isolated = isolated_vertices(g);
    CHECK(std::find(isolated.begin(), isolated.end(), 8) != isolated.end());

    for (int64_t m = 2; m <= 300; ++m) {
        for (int64_t n = 2; n <= m; ++n) {
            if (m % n != 0) continue;
            IdealGraph h = build(m, n);
            for (int v = 0; v < h.graph.order(); ++v) {
                if (h.labels[v] % n == 0) CHECK(h.graph.degree(v) == 0);
            }
        }
    }
}

TEST_CASE("isolation is a computed property, not synonymous with n | d") {
    // m = p^2, n = p: the single vertex p is isolated although n does not divide it
    IdealGraph g = build(9, 3);
    CHECK(g.labels == std::vector<int64_t>{3});
    CHECK(isolated_vertices(g) == std::vector<int64_t>{3});
}

TEST_CASE("induced subgraph and component edge cases") {
    IdealGraph g = build(36, 6);
    LabeledSubgraph empty = induced_subgraph(g, {});
    CHECK(empty.labels.empty());
    CHECK(empty.graph.order() == 0);

    LabeledSubgraph sub = induced_subgraph(g, {2, 3, 4});
    CHECK(sub.labels == std::vector<int64_t>{2, 3, 4});
    CHECK(sub.graph.size() == 1);  // only 2 - 4 survives

    CHECK_THROWS_AS(induced_subgraph(g, {5}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and irreflexive; vertex count matches the formula") {
    for (int64_t m = 2; m <= 1000; ++m) {
        ModulePair pair = validate_module_pair(m, m);
        IdealGraph g = build_graph(pair);
        long long expected = 1;
        for (int a : pair.alpha) expected *= a + 1;
        CHECK(g.graph.order() == expected - 2);
        for (int u = 0; u < g.graph.order(); ++u) {
            CHECK(!g.graph.adjacent(u, u));
            for (int v : g.graph.neighbors(u)) CHECK(g.graph.adjacent(v, u));
        }
    }
    // every valid n for a divisor-rich sample
    for (int64_t m : {360, 720, 840, 1260, 1680}) {
        ModulePair base = validate_module_pair(m, m);
        long long expected = 1;
        for (int a : base.alpha) expected *= a + 1;
        for (int64_t n = 2; n <= m; ++n) {
            if (m % n != 0) continue;
            IdealGraph g = build(m, n);
            CHECK(g.graph.order() == expected - 2);
        }
    }
}

TEST_CASE("graph depends only on the exponent patterns, not the prime values") {
    struct Pattern {
        std::vector<int64_t> primes_a;
        std::vector<int64_t> primes_b;
        std::vector<int> alpha;
        std::vector<int> beta;
    };
    std::vector<Pattern> patterns = {
        {{2, 3}, {11, 13}, {2, 2}, {1, 1}},
        {{2, 3}, {5, 7}, {1, 2}, {1, 2}},
        {{2, 3, 5}, {11, 13, 17}, {1, 1, 1}, {1, 1, 0}},
        {{2, 3}, {17, 19}, {3, 4}, {2, 1}},
        {{2, 3, 5}, {7, 11, 13}, {2, 1, 1}, {1, 0, 1}},
    };
    auto instantiate = [](const std::vector<int64_t>& primes, const std::vector<int>& exp) {
        int64_t value = 1;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            for (int k = 0; k < exp[i]; ++k) value *= primes[i];
        }
        return value;
    };
    // order vertices by exponent vector (lexicographic); the relabeled
    // adjacency matrices must coincide
    auto canonical_matrix = [](const IdealGraph& g) {
        std::vector<int> order(g.graph.order());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return g.exponents[a] < g.exponents[b]; });
        std::vector<std::vector<bool>> mat(order.size(), std::vector<bool>(order.size()));
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (std::size_t j = 0; j < order.size(); ++j) {
                mat[i][j] = g.graph.adjacent(order[i], order[j]);
            }
        }
        return mat;
    };
    for (const Pattern& pat : patterns) {
        IdealGraph a = build(instantiate(pat.primes_a, pat.alpha),
                             instantiate(pat.primes_a, pat.beta));
        IdealGraph b = build(instantiate(pat.primes_b, pat.alpha),
                             instantiate(pat.primes_b, pat.beta));
        REQUIRE(a.graph.order() == b.graph.order());
        CHECK(canonical_matrix(a) == canonical_matrix(b));
    }
}

TEST_CASE("biconnected components") {
    // two triangles sharing a cut vertex
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 2);
    auto blocks = biconnected_components(g);
    CHECK(blocks.size() == 2);
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.size();
    CHECK(total == 6);

    // path graph: every edge is its own block
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK(biconnected_components(path).size() == 3);

    CHECK(biconnected_components(Graph(3)).empty());
}
