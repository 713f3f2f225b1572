#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "idealgraph/graph.hpp"
#include "idealgraph/harness.hpp"

namespace idealgraph::io {

// Deterministic renderings: vertices ascending, edges lexicographic.
std::string to_edgelist(const IdealGraph& g);
std::string to_dot(const IdealGraph& g);
std::string to_json(const IdealGraph& g);

// Structure parsed back from the JSON export, for round-trip checks.
struct ParsedGraph {
    int64_t m = 0;
    int64_t n = 0;
    std::vector<int64_t> vertices;
    std::vector<std::pair<int64_t, int64_t>> edges;
    std::vector<int64_t> isolated;

    bool operator==(const ParsedGraph&) const = default;
};

ParsedGraph parse_graph_json(const std::string& text);
ParsedGraph snapshot(const IdealGraph& g);

// One line of the sweep report (line-oriented JSON, one record per pair).
std::string record_to_json(const harness::PairRecord& record);

// Full report rendering: one record line per pair plus a summary line.
// Timing stays out of the rendering; identical runs are byte-identical.
std::string report_to_json_lines(const harness::SweepReport& report);

// Deterministic figure file: header, edge list, isolated list, decisions.
std::string figure_file_text(const harness::FigureFixture& fixture, const IdealGraph& g);

}  // namespace idealgraph::io
