#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "idealgraph/graph.hpp"

namespace idealgraph {

// Combinatorial embedding: rotation[v] lists the neighbors of v in cyclic
// order. Faces are recovered by tracing; a rotation system is planar iff
// every connected component satisfies V - E + F = 2.
struct Embedding {
    std::vector<std::vector<int>> rotation;
};

enum class SubdivisionKind { K5, K33, K4, K23 };

// Forbidden-subdivision witness. Conventions for branch_vertices:
//   K5  -> 5 vertices, paths for all 10 pairs
//   K33 -> 6 vertices, first 3 form one side, paths for the 9 cross pairs
//   K4  -> 4 vertices, paths for all 6 pairs
//   K23 -> 5 vertices, first 2 form the degree-3 side, paths for the 6 cross pairs
// Paths are internally vertex-disjoint and meet branch vertices only at
// their endpoints.
struct ForbiddenSubdivision {
    SubdivisionKind kind;
    std::vector<int> branch_vertices;
    std::vector<std::vector<int>> paths;
};

using PlanarityCertificate = std::variant<Embedding, ForbiddenSubdivision>;

struct PlanarityResult {
    bool planar = false;
    PlanarityCertificate certificate;
};

// Decision only, no certificate extraction.
bool is_planar_quick(const Graph& g);

// Certified decision: a verifiable Embedding when planar, otherwise a
// K5 or K33 subdivision witness.
PlanarityResult is_planar(const Graph& g);

// Independent audit. Embeddings are validated by face tracing plus the
// per-component Euler formula; witnesses by path-disjointness, edge
// existence and pattern coverage. Returns false on any defect.
bool verify_certificate(const Graph& g, const PlanarityCertificate& cert);

// Face count of a planar graph under the drawing convention where all
// components share one unbounded face: F = 1 + C - V + E.
int face_count(const Graph& g);

// g plus one new vertex (index g.order()) adjacent to every vertex of g.
Graph apex_extension(const Graph& g);

// A graph is outerplanar iff its apex extension is planar.
bool is_outerplanar(const Graph& g);

// Diagnostic witness for non-outerplanar graphs: a K4 or K23 subdivision.
// Empty when the graph is outerplanar.
std::optional<ForbiddenSubdivision> outerplanar_obstruction(const Graph& g);

const char* subdivision_kind_name(SubdivisionKind kind);

}  // namespace idealgraph
