#include "idealgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace idealgraph {

void Graph::add_edge(int u, int v) {
    if (u == v || mat_[u][v]) return;
    mat_[u][v] = mat_[v][u] = 1;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edges_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges_);
    for (int u = 0; u < order(); ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Graph::component_ids() const {
    const int n = order();
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v]) {
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

std::vector<std::vector<int>> Graph::connected_components() const {
    std::vector<int> comp = component_ids();
    int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<int>> out(count);
    for (int v = 0; v < order(); ++v) out[comp[v]].push_back(v);
    return out;
}

int Graph::component_count() const {
    std::vector<int> comp = component_ids();
    return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            if (adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return h;
}

std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<std::pair<int, int>>> blocks;
    std::vector<int> num(n, 0), low(n, 0), parent(n, -1), iter(n, 0);
    std::vector<std::pair<int, int>> estack;
    int counter = 0;

    for (int root = 0; root < n; ++root) {
        if (num[root] != 0) continue;
        std::vector<int> dfs{root};
        num[root] = low[root] = ++counter;
        while (!dfs.empty()) {
            int v = dfs.back();
            if (iter[v] < g.degree(v)) {
                int w = g.neighbors(v)[iter[v]++];
                if (num[w] == 0) {
                    estack.emplace_back(v, w);
                    parent[w] = v;
                    num[w] = low[w] = ++counter;
                    dfs.push_back(w);
                } else if (w != parent[v] && num[w] < num[v]) {
                    estack.emplace_back(v, w);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                dfs.pop_back();
                if (dfs.empty()) continue;
                int u = dfs.back();
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    // u closes a block; pop its edges
                    std::vector<std::pair<int, int>> block;
                    while (!estack.empty()) {
                        auto e = estack.back();
                        estack.pop_back();
                        block.push_back(e);
                        if (e.first == u && e.second == v) break;
                    }
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
    return blocks;
}

int IdealGraph::index_of(int64_t label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) return -1;
    return static_cast<int>(it - labels.begin());
}

IdealGraph build_graph(const ModulePair& pair) {
    IdealGraph g;
    g.pair = pair;
    g.labels = proper_nontrivial_divisors(pair.m);
    g.exponents.reserve(g.labels.size());
    for (int64_t d : g.labels) {
        std::vector<int> e(pair.primes.size(), 0);
        int64_t rest = d;
        for (std::size_t i = 0; i < pair.primes.size(); ++i) {
            while (rest % pair.primes[i] == 0) {
                rest /= pair.primes[i];
                ++e[i];
            }
        }
        g.exponents.push_back(std::move(e));
    }
    const int nv = static_cast<int>(g.labels.size());
    g.graph = Graph(nv);
    const int64_t n = pair.n.value;
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            if (lcm64(g.labels[i], g.labels[j]) % n != 0) g.graph.add_edge(i, j);
        }
    }
    return g;
}

std::vector<int64_t> isolated_vertices(const IdealGraph& g) {
    std::vector<int64_t> out;
    for (int v = 0; v < g.graph.order(); ++v) {
        if (g.graph.degree(v) == 0) out.push_back(g.labels[v]);
    }
    return out;
}

LabeledSubgraph induced_subgraph(const IdealGraph& g, const std::vector<int64_t>& keep) {
    std::vector<int> idx;
    idx.reserve(keep.size());
    for (int64_t label : keep) {
        int i = g.index_of(label);
        if (i < 0) {
            throw std::invalid_argument("induced_subgraph: unknown divisor label " +
                                        std::to_string(label));
        }
        idx.push_back(i);
    }
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    LabeledSubgraph sub;
    sub.labels.reserve(idx.size());
    for (int i : idx) sub.labels.push_back(g.labels[i]);
    sub.graph = g.graph.induced(idx);
    return sub;
}

std::vector<std::vector<int64_t>> connected_components(const IdealGraph& g) {
    std::vector<std::vector<int64_t>> out;
    for (const auto& comp : g.graph.connected_components()) {
        std::vector<int64_t> labels;
        labels.reserve(comp.size());
        for (int v : comp) labels.push_back(g.labels[v]);
        out.push_back(std::move(labels));
    }
    return out;
}

}  // namespace idealgraph
