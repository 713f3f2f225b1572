#include "idealgraph/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "idealgraph/cycles.hpp"
#include "idealgraph/planarity.hpp"

namespace idealgraph::io {

namespace {

std::vector<std::pair<int64_t, int64_t>> label_edges(const IdealGraph& g) {
    std::vector<std::pair<int64_t, int64_t>> out;
    for (auto [u, v] : g.graph.edges()) {
        int64_t a = g.labels[u], b = g.labels[v];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string to_edgelist(const IdealGraph& g) {
    std::ostringstream os;
    for (auto [a, b] : label_edges(g)) os << a << ' ' << b << '\n';
    return os.str();
}

std::string to_dot(const IdealGraph& g) {
    std::ostringstream os;
    os << "graph \"G_" << g.pair.n.value << "(Z_" << g.pair.m.value << ")\" {\n";
    for (int64_t d : g.labels) {
        os << "  \"" << d << "\" [label=\"" << d << "Z_" << g.pair.m.value << "\"];\n";
    }
    for (auto [a, b] : label_edges(g)) os << "  \"" << a << "\" -- \"" << b << "\";\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const IdealGraph& g) {
    nlohmann::ordered_json j;
    j["m"] = g.pair.m.value;
    j["n"] = g.pair.n.value;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int64_t d : g.labels) {
        j["vertices"].push_back({{"d", d}, {"ideal", std::to_string(d) + "Z_" +
                                                         std::to_string(g.pair.m.value)}});
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : label_edges(g)) j["edges"].push_back({a, b});
    j["isolated"] = isolated_vertices(g);
    return j.dump(2) + "\n";
}

ParsedGraph parse_graph_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ParsedGraph p;
    p.m = j.at("m").get<int64_t>();
    p.n = j.at("n").get<int64_t>();
    for (const auto& v : j.at("vertices")) p.vertices.push_back(v.at("d").get<int64_t>());
    for (const auto& e : j.at("edges")) {
        p.edges.emplace_back(e.at(0).get<int64_t>(), e.at(1).get<int64_t>());
    }
    for (const auto& d : j.at("isolated")) p.isolated.push_back(d.get<int64_t>());
    return p;
}

ParsedGraph snapshot(const IdealGraph& g) {
    ParsedGraph p;
    p.m = g.pair.m.value;
    p.n = g.pair.n.value;
    p.vertices = g.labels;
    p.edges = label_edges(g);
    p.isolated = isolated_vertices(g);
    return p;
}

std::string record_to_json(const harness::PairRecord& r) {
    nlohmann::ordered_json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["structural"] = {{"planar", r.structural_planar},
                       {"outerplanar", r.structural_outerplanar},
                       {"ring", r.structural_ring}};
    j["closed_form"] = {{"planar", r.closed_planar},
                        {"outerplanar", r.closed_outerplanar},
                        {"ring", r.closed_ring}};
    j["cases"] = {{"planar", r.planar_cases},
                  {"outerplanar", r.outerplanar_cases},
                  {"ring", r.ring_cases}};
    j["rank"] = r.rank;
    if (r.frank) {
        j["frank"] = *r.frank;
    } else {
        j["frank"] = nullptr;
    }
    j["agree"] = r.agree;
    return j.dump();
}

std::string report_to_json_lines(const harness::SweepReport& report) {
    std::ostringstream os;
    for (const auto& r : report.records) os << record_to_json(r) << '\n';
    nlohmann::ordered_json summary;
    summary["summary"] = {{"max_m", report.max_m},
                          {"pairs_checked", report.pairs_checked},
                          {"mismatches", report.mismatches.size()},
                          {"certificate_failures", report.certificate_failures.size()},
                          {"oracle_failures", report.oracle_failures.size()},
                          {"invariant_violations", report.invariant_violations.size()}};
    os << summary.dump() << '\n';
    return os.str();
}

std::string figure_file_text(const harness::FigureFixture& fixture, const IdealGraph& g) {
    std::ostringstream os;
    os << "# figure " << fixture.figure_id << ": G_" << fixture.n << "(Z_" << fixture.m << ")\n";
    os << "m " << fixture.m << "\n";
    os << "n " << fixture.n << "\n";
    os << "vertices";
    for (int64_t d : g.labels) os << ' ' << d;
    os << "\nedges " << fixture.edges.size() << "\n";
    for (auto [a, b] : fixture.edges) os << a << ' ' << b << '\n';
    os << "isolated";
    for (int64_t d : fixture.isolated) os << ' ' << d;
    os << '\n';
    PlanarityResult planar = is_planar(g.graph);
    RingReport ring = is_ring_graph(g.graph);
    os << "planar " << (planar.planar ? "true" : "false") << '\n';
    os << "outerplanar " << (is_outerplanar(g.graph) ? "true" : "false") << '\n';
    os << "ring " << (ring.decision ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace idealgraph::io
