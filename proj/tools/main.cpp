#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "idealgraph/closed_form.hpp"
#include "idealgraph/cycles.hpp"
#include "idealgraph/harness.hpp"
#include "idealgraph/io.hpp"
#include "idealgraph/planarity.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;

using namespace idealgraph;

std::string case_list(const std::vector<int>& cases) {
    if (cases.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(cases[i]);
    }
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    file << text;
}

std::string witness_labels(const IdealGraph& g, const ForbiddenSubdivision& fs) {
    std::string out = "{";
    for (std::size_t i = 0; i < fs.branch_vertices.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(g.labels[fs.branch_vertices[i]]);
    }
    return out + "}";
}

int cmd_classify(int64_t m, int64_t n, const std::string& mode, bool as_json) {
    ModulePair pair = validate_module_pair(m, n);
    IdealGraph g = build_graph(pair);

    bool run_structural = mode != "closed-form";
    bool run_closed = mode != "structural";

    bool s_planar = false, s_outer = false, s_ring = false;
    std::string witness_kind, witness;
    std::vector<int64_t> witness_branch;
    RingReport ring_report;
    if (run_structural) {
        PlanarityResult planar = is_planar(g.graph);
        s_planar = planar.planar;
        if (!planar.planar) {
            const auto& fs = std::get<ForbiddenSubdivision>(planar.certificate);
            witness_kind = subdivision_kind_name(fs.kind);
            witness = witness_labels(g, fs);
            for (int v : fs.branch_vertices) witness_branch.push_back(g.labels[v]);
        }
        s_outer = is_outerplanar(g.graph);
        ring_report = is_ring_graph(g.graph);
        s_ring = ring_report.decision;
    }
    closed_form::Prediction pred;
    if (run_closed) pred = closed_form::predict(pair);

    bool disagreement = run_structural && run_closed &&
                        (s_planar != pred.planar || s_outer != pred.outerplanar ||
                         s_ring != pred.ring);

    if (as_json) {
        nlohmann::ordered_json j;
        j["m"] = m;
        j["n"] = n;
        j["vertices"] = g.graph.order();
        j["edges"] = g.graph.size();
        if (run_structural) {
            j["structural"] = {{"planar", s_planar}, {"outerplanar", s_outer}, {"ring", s_ring}};
            if (!witness_branch.empty()) {
                j["witness"] = {{"kind", witness_kind}, {"branch", witness_branch}};
            }
        }
        if (run_closed) {
            j["closed_form"] = {{"planar", pred.planar},
                                {"outerplanar", pred.outerplanar},
                                {"ring", pred.ring},
                                {"cases",
                                 {{"planar", pred.planar_cases},
                                  {"outerplanar", pred.outerplanar_cases},
                                  {"ring", pred.ring_cases}}}};
        }
        if (run_structural && run_closed) j["agreement"] = !disagreement;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "G_" << n << "(Z_" << m << "): vertices=" << g.graph.order()
                  << " edges=" << g.graph.size() << "\n";
        if (run_structural) {
            std::cout << "structural:  planar=" << (s_planar ? "true" : "false")
                      << " outerplanar=" << (s_outer ? "true" : "false")
                      << " ring=" << (s_ring ? "true" : "false") << "\n";
            if (!witness.empty()) {
                std::cout << "  witness: " << witness_kind << " subdivision on " << witness
                          << "\n";
            }
            if (ring_report.free_rank) {
                std::cout << "  rank=" << ring_report.cycle_rank
                          << " frank=" << *ring_report.free_rank << "\n";
            }
        }
        if (run_closed) {
            std::cout << "closed-form: planar=" << (pred.planar ? "true" : "false") << " (case "
                      << case_list(pred.planar_cases) << ")"
                      << " outerplanar=" << (pred.outerplanar ? "true" : "false") << " (case "
                      << case_list(pred.outerplanar_cases) << ")"
                      << " ring=" << (pred.ring ? "true" : "false") << " (case "
                      << case_list(pred.ring_cases) << ")\n";
        }
        if (run_structural && run_closed) {
            std::cout << "agreement: " << (disagreement ? "MISMATCH" : "ok") << "\n";
        }
    }
    return disagreement ? kExitDisagreement : kExitOk;
}

int cmd_graph(int64_t m, int64_t n, const std::string& format, const std::string& out) {
    ModulePair pair = validate_module_pair(m, n);
    IdealGraph g = build_graph(pair);
    std::string text;
    if (format == "edgelist") {
        text = io::to_edgelist(g);
    } else if (format == "dot") {
        text = io::to_dot(g);
    } else if (format == "json") {
        text = io::to_json(g);
    } else {
        std::cerr << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }
    write_output(text, out);
    return kExitOk;
}

int cmd_sweep(int64_t max_m, int64_t oracle_bound, int jobs, const std::string& out) {
    harness::SweepOptions options;
    options.oracle_bound = oracle_bound;
    options.jobs = jobs;
    harness::SweepReport report = harness::sweep(max_m, options);
    write_output(io::report_to_json_lines(report), out);
    std::cerr << "sweep: " << report.pairs_checked << " pairs in " << report.elapsed.count()
              << " ms; mismatches=" << report.mismatches.size()
              << " certificate_failures=" << report.certificate_failures.size()
              << " oracle_failures=" << report.oracle_failures.size()
              << " invariant_violations=" << report.invariant_violations.size() << "\n";
    return report.passed() ? kExitOk : kExitDisagreement;
}

int cmd_figures(int64_t p1, int64_t p2, int64_t p3, const std::string& out_dir) {
    auto is_prime = [](int64_t p) {
        if (p < 2) return false;
        for (int64_t q = 2; q * q <= p; ++q) {
            if (p % q == 0) return false;
        }
        return true;
    };
    if (!is_prime(p1) || !is_prime(p2) || !is_prime(p3) || p1 == p2 || p2 == p3 || p1 == p3) {
        std::cerr << "error: --p1/--p2/--p3 must be distinct primes\n";
        return kExitUsage;
    }
    std::filesystem::create_directories(out_dir);
    for (const auto& fixture : harness::figure_fixtures(p1, p2, p3)) {
        IdealGraph g = build_graph(validate_module_pair(fixture.m, fixture.n));
        if (!harness::fixture_matches(fixture, g)) {
            std::cerr << "error: built graph for figure " << fixture.figure_id
                      << " does not match its fixture\n";
            return kExitDisagreement;
        }
        std::string path = out_dir + "/figure" + std::to_string(fixture.figure_id) + ".txt";
        write_output(io::figure_file_text(fixture, g), path);
        std::cout << path << "\n";
    }
    return kExitOk;
}

int cmd_oracle(int64_t m, int64_t n) {
    if (m > 1000000) {
        std::cerr << "error: oracle materializes subgroups of Z_n; refusing m > 10^6\n";
        return kExitUsage;
    }
    ModulePair pair = validate_module_pair(m, n);
    std::vector<int64_t> divisors = proper_nontrivial_divisors(pair.m);
    bool all_agree = true;
    std::cout << "d1 d2 oracle lcm_rule agree\n";
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        for (std::size_t j = i + 1; j < divisors.size(); ++j) {
            bool oracle = harness::oracle_adjacent(divisors[i], divisors[j], pair);
            bool rule = lcm64(divisors[i], divisors[j]) % n != 0;
            bool agree = oracle == rule;
            all_agree = all_agree && agree;
            std::cout << divisors[i] << ' ' << divisors[j] << ' ' << (oracle ? 1 : 0) << ' '
                      << (rule ? 1 : 0) << ' ' << (agree ? "yes" : "NO") << "\n";
        }
    }
    std::cout << (all_agree ? "equivalent" : "NOT equivalent") << "\n";
    return all_agree ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"intersection graphs G_n(Z_m) of ideals of Z_m: structural deciders,"
                 " closed-form classification, and cross-validation"};
    app.require_subcommand(1);

    int64_t m = 0, n = 0, max_m = 0, oracle_bound = 500;
    int64_t p1 = 2, p2 = 3, p3 = 5;
    int jobs = 1;
    std::string mode = "both", format = "edgelist", out, out_dir = ".";
    bool as_json = false;

    auto* classify = app.add_subcommand("classify", "classify one pair (m, n)");
    classify->add_option("--m", m, "modulus m")->required();
    classify->add_option("--n", n, "module parameter n")->required();
    classify->add_option("--mode", mode, "structural | closed-form | both")
        ->check(CLI::IsMember({"structural", "closed-form", "both"}));
    classify->add_flag("--json", as_json, "emit one JSON object");

    auto* graph = app.add_subcommand("graph", "export the graph of one pair");
    graph->add_option("--m", m, "modulus m")->required();
    graph->add_option("--n", n, "module parameter n")->required();
    graph->add_option("--format", format, "dot | json | edgelist");
    graph->add_option("--out", out, "output file (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "cross-validate all pairs with m <= max-m");
    sweep->add_option("--max-m", max_m, "largest modulus")->required();
    sweep->add_option("--oracle-bound", oracle_bound, "run the module-action oracle for m <= bound");
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_option("--out", out, "report file (default stdout)");

    auto* figures = app.add_subcommand("figures", "emit the five reference graphs");
    figures->add_option("--p1", p1, "first prime")->required();
    figures->add_option("--p2", p2, "second prime")->required();
    figures->add_option("--p3", p3, "third prime")->required();
    figures->add_option("--out-dir", out_dir, "output directory");

    auto* oracle = app.add_subcommand("oracle", "module-action oracle vs lcm rule for one pair");
    oracle->add_option("--m", m, "modulus m")->required();
    oracle->add_option("--n", n, "module parameter n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify->parsed()) return cmd_classify(m, n, mode, as_json);
        if (graph->parsed()) return cmd_graph(m, n, format, out);
        if (sweep->parsed()) {
            if (max_m < 2) {
                std::cerr << "error: --max-m must be >= 2\n";
                return kExitUsage;
            }
            return cmd_sweep(max_m, oracle_bound, jobs, out);
        }
        if (figures->parsed()) return cmd_figures(p1, p2, p3, out_dir);
        if (oracle->parsed()) return cmd_oracle(m, n);
    } catch (const idealgraph::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagreement;
    }
    return kExitUsage;
}
