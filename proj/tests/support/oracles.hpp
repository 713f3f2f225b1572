#pragma once

#include <vector>

#include "idealgraph/graph.hpp"

// Test-side oracles, deliberately independent of the library's deciders.
namespace oracles {

// Exhaustive K5 / K33 subdivision search. Exponential; intended for small
// graphs (<= ~9 vertices).
bool has_k5_subdivision(const idealgraph::Graph& g);
bool has_k33_subdivision(const idealgraph::Graph& g);
bool planar(const idealgraph::Graph& g);

// All chordless cycles by enumerating every simple cycle and filtering,
// in the canonical orientation (smallest vertex first, smaller neighbor
// second). Sorted.
std::vector<std::vector<int>> chordless_cycles(const idealgraph::Graph& g);

// Deterministic Erdos-Renyi-style graph for property tests.
idealgraph::Graph random_graph(int n, double p, unsigned seed);

}  // namespace oracles
