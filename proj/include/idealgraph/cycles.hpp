#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "idealgraph/graph.hpp"

namespace idealgraph {

// Chordless (primitive) cycles in canonical form: smallest vertex first,
// followed by the smaller of its two cycle neighbors. complete is false
// when the cap was exceeded, in which case cycles holds a partial list.
struct ChordlessCycleList {
    std::vector<std::vector<int>> cycles;
    bool complete = true;
};

ChordlessCycleList chordless_cycles(const Graph& g, std::size_t cap);

// True iff every pair of distinct cycles shares at most one edge.
bool primitive_cycle_property(const std::vector<std::vector<int>>& cycles);

// |E| - |V| + r, with r the number of connected components.
int cycle_rank(const Graph& g);

// True iff some biconnected component fails series-parallel reduction
// (suppress degree-2 vertices, merge parallel edges, reduce to one edge).
bool has_k4_subdivision(const Graph& g);

struct RingReport {
    int cycle_rank = 0;
    std::optional<long long> free_rank;  // absent when enumeration was capped or skipped
    std::optional<bool> pcp_holds;
    bool k4_subdivision_free = false;
    bool decision = false;
    std::optional<std::vector<std::vector<int>>> primitive_cycles;
};

// Ring-graph decision via PCP + K4-subdivision-freeness. Nonplanar graphs
// short-circuit to false without cycle enumeration; when the enumeration
// completes the report also carries the free rank.
RingReport is_ring_graph(const Graph& g, std::size_t cap = 1000000);

}  // namespace idealgraph
