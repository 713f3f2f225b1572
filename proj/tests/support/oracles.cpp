#include "support/oracles.hpp"

#include <algorithm>
#include <random>

namespace oracles {

using idealgraph::Graph;

namespace {

// Realize required branch-vertex pairs by internally-disjoint paths, trying
// every simple path over the still-free vertices.
struct PathSearch {
    const Graph& g;
    std::vector<char> used;  // branch vertices and committed interiors
    const std::vector<std::pair<int, int>>& pairs;

    PathSearch(const Graph& graph, const std::vector<std::pair<int, int>>& want)
        : g(graph), used(graph.order(), 0), pairs(want) {}

    bool dfs_path(int cur, int target, std::size_t idx) {
        for (int w : g.neighbors(cur)) {
            if (w == target) {
                if (solve(idx + 1)) return true;
                continue;
            }
            if (used[w]) continue;
            used[w] = 1;
            if (dfs_path(w, target, idx)) return true;
            used[w] = 0;
        }
        return false;
    }

    bool solve(std::size_t idx) {
        if (idx == pairs.size()) return true;
        return dfs_path(pairs[idx].first, pairs[idx].second, idx);
    }
};

bool realizable(const Graph& g, const std::vector<int>& branch,
                const std::vector<std::pair<int, int>>& pairs) {
    PathSearch search(g, pairs);
    for (int b : branch) search.used[b] = 1;
    return search.solve(0);
}

template <typename Fn>
void combinations(int n, int k, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool has_k5_subdivision(const Graph& g) {
    if (g.order() < 5) return false;
    bool found = false;
    combinations(g.order(), 5, [&](const std::vector<int>& branch) {
        if (found) return;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 5; ++i) {
            for (int j = i + 1; j < 5; ++j) pairs.emplace_back(branch[i], branch[j]);
        }
        if (realizable(g, branch, pairs)) found = true;
    });
    return found;
}

bool has_k33_subdivision(const Graph& g) {
    if (g.order() < 6) return false;
    bool found = false;
    combinations(g.order(), 6, [&](const std::vector<int>& six) {
        if (found) return;
        // every 3+3 split with the smallest member pinned to side A
        combinations(5, 2, [&](const std::vector<int>& rest) {
            if (found) return;
            std::vector<int> side_a{six[0], six[rest[0] + 1], six[rest[1] + 1]};
            std::vector<int> side_b;
            for (int i = 1; i < 6; ++i) {
                if (i != rest[0] + 1 && i != rest[1] + 1) side_b.push_back(six[i]);
            }
            std::vector<std::pair<int, int>> pairs;
            for (int a : side_a) {
                for (int b : side_b) pairs.emplace_back(a, b);
            }
            if (realizable(g, six, pairs)) found = true;
        });
    });
    return found;
}

bool planar(const Graph& g) { return !has_k5_subdivision(g) && !has_k33_subdivision(g); }

namespace {

void all_cycles_from(const Graph& g, std::vector<int>& path, std::vector<char>& in_path,
                     std::vector<std::vector<int>>& out) {
    const int v0 = path[0];
    const int last = path.back();
    for (int w : g.neighbors(last)) {
        if (w == v0 && path.size() >= 3 && path[1] < path.back()) {
            out.push_back(path);
            continue;
        }
        if (w <= v0 || in_path[w]) continue;
        path.push_back(w);
        in_path[w] = 1;
        all_cycles_from(g, path, in_path, out);
        in_path[w] = 0;
        path.pop_back();
    }
}

bool chordless(const Graph& g, const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;  // consecutive around the wrap
            if (g.adjacent(cycle[i], cycle[j])) return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::vector<int>> chordless_cycles(const Graph& g) {
    std::vector<std::vector<int>> all;
    std::vector<int> path;
    std::vector<char> in_path(g.order(), 0);
    for (int v0 = 0; v0 < g.order(); ++v0) {
        path = {v0};
        in_path[v0] = 1;
        all_cycles_from(g, path, in_path, all);
        in_path[v0] = 0;
    }
    std::vector<std::vector<int>> out;
    for (const auto& cycle : all) {
        if (chordless(g, cycle)) out.push_back(cycle);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace oracles
