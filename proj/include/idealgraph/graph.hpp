#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "idealgraph/arith.hpp"

namespace idealgraph {

// Simple undirected graph on vertices 0..n-1. Adjacency is kept both as a
// matrix (O(1) edge queries for clique witnesses) and as neighbor lists
// (traversals). Immutable in practice once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n), mat_(n, std::vector<unsigned char>(n, 0)) {}

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return mat_[u][v] != 0; }
    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edges_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    // Sorted edge list, each edge once as (min, max).
    std::vector<std::pair<int, int>> edges() const;

    std::vector<int> component_ids() const;
    std::vector<std::vector<int>> connected_components() const;
    int component_count() const;

    // Induced subgraph; keep must be sorted and duplicate-free. New vertex i
    // corresponds to keep[i].
    Graph induced(const std::vector<int>& keep) const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<unsigned char>> mat_;
    int edges_ = 0;
};

// Edge lists of the biconnected components (blocks). Every edge belongs to
// exactly one block; bridge edges form single-edge blocks.
std::vector<std::vector<std::pair<int, int>>> biconnected_components(const Graph& g);

// G_n(Z_m): vertices are the proper nontrivial divisors of m, and two
// distinct divisors are adjacent iff n does not divide their lcm.
struct IdealGraph {
    ModulePair pair;
    std::vector<int64_t> labels;              // divisor values, ascending
    std::vector<std::vector<int>> exponents;  // per-vertex exponents, aligned to pair.primes
    Graph graph;

    // Index of a divisor label, or -1 when absent.
    int index_of(int64_t label) const;
};

IdealGraph build_graph(const ModulePair& pair);

// All degree-0 vertices. Includes every d with n | d, but may contain more.
std::vector<int64_t> isolated_vertices(const IdealGraph& g);

struct LabeledSubgraph {
    std::vector<int64_t> labels;
    Graph graph;
};

// Throws std::invalid_argument on a label that is not a vertex.
LabeledSubgraph induced_subgraph(const IdealGraph& g, const std::vector<int64_t>& keep);

std::vector<std::vector<int64_t>> connected_components(const IdealGraph& g);

}  // namespace idealgraph
