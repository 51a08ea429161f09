// matchtop CLI: analyze and classify matching complexes, reproduce the
// 7-cycle chord scan, and run the verification sweeps. Talks to the library
// through its C API only.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchtop/matchtop.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitDiscrepancy = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapability = 3;

struct StringDeleter {
    void operator()(char* p) const { mt_string_free(p); }
};
using CStr = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
    void operator()(mt_graph* g) const { mt_graph_free(g); }
};
using GraphHandle = std::unique_ptr<mt_graph, GraphDeleter>;

struct ReportDeleter {
    void operator()(mt_report* r) const { mt_report_free(r); }
};
using ReportHandle = std::unique_ptr<mt_report, ReportDeleter>;

int status_to_exit(mt_status s) {
    switch (s) {
        case MT_OK: return 0;
        case MT_DISCREPANCY: return kExitDiscrepancy;
        case MT_ERR_INPUT: return kExitInputError;
        case MT_ERR_CAPABILITY: return kExitCapability;
        case MT_ERR_PRECONDITION:
        case MT_ERR_INTERNAL: return kExitInputError;
    }
    return kExitInputError;
}

[[noreturn]] void die(mt_status s) {
    std::cerr << "error: " << mt_last_error() << "\n";
    std::exit(status_to_exit(s));
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open input file: " << path << "\n";
        std::exit(kExitInputError);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write file: " << path << "\n";
        std::exit(kExitInputError);
    }
    out << content;
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("MATCHTOP_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0;  // library picks hardware concurrency
}

GraphHandle parse_graph_arg(const std::string& input, const std::string& format) {
    const std::string text = read_input(input);
    mt_graph* g = nullptr;
    const mt_status s = mt_graph_parse(text.c_str(), format.c_str(), &g);
    if (s != MT_OK) die(s);
    GraphHandle handle(g);
    if (mt_graph_removed_isolated(g))
        std::cerr << "warning: isolated vertices removed from the input graph\n";
    return handle;
}

CStr get_string(mt_status (*fn)(const mt_graph*, char**), const mt_graph* g) {
    char* out = nullptr;
    const mt_status s = fn(g, &out);
    if (s != MT_OK) die(s);
    return CStr(out);
}

void print_human_analyze(const json& report) {
    const auto& in = report["input"];
    const auto& a = report["analysis"];
    std::cout << "graph: n=" << in["n"] << " edges=" << in["edge_count"]
              << " graph6=" << in["graph6"].get<std::string>() << "\n";
    std::cout << "components: " << a["component_count"] << "  connected: "
              << (a["is_connected"].get<bool>() ? "yes" : "no") << "  bipartite: "
              << (a["is_bipartite"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "max matching size (cap 4): " << a["max_matching_size_cap4"] << "\n";
    const auto& mc = a["matching_complex"];
    std::cout << "dim M(G): " << mc["dimension"]
              << "  M components: " << a["matching_complex_components"] << "\n";
    std::cout << "f-vector: " << mc["f_vector"].dump() << "\n";
    std::cout << "betti: " << a["homology"]["betti"].dump()
              << "  euler: " << a["homology"]["euler"] << "\n";
}

void print_human_classify(const json& report) {
    const auto& c = report["classification"];
    std::cout << "dim M(G): " << c["dim"] << "\n";
    std::cout << "buchsbaum: " << (c["buchsbaum"].get<bool>() ? "yes" : "no")
              << "  cm: " << (c["cm"].get<bool>() ? "yes" : "no")
              << "  matroid: " << (c["matroid"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "families: " << c["families"].dump() << "\n";
    std::cout << "certificate: " << c["certificate"].dump(2) << "\n";
}

int handle_report(mt_report* report, bool as_json, const std::string& csv_out) {
    if (!csv_out.empty()) {
        char* csv = nullptr;
        const mt_status s = mt_report_csv(report, &csv);
        if (s != MT_OK) die(s);
        CStr owned(csv);
        write_file(csv_out, owned.get());
    }
    char* out = nullptr;
    const mt_status s = mt_report_json(report, &out);
    if (s != MT_OK) die(s);
    CStr owned(out);
    if (as_json) {
        std::cout << owned.get() << "\n";
    } else {
        const json j = json::parse(owned.get());
        std::cout << "kind: " << j["kind"].get<std::string>() << "\n";
        if (j.contains("rows"))
            for (const auto& row : j["rows"])
                std::cout << "  k=" << row["added_edges"] << " iso=" << row["iso_classes"]
                          << " buchsbaum=" << row["buchsbaum_classes"] << "\n";
        if (j.contains("totals")) std::cout << "totals: " << j["totals"].dump() << "\n";
        if (j.contains("violations")) std::cout << "violations: " << j["violations"].dump() << "\n";
        std::cout << "passed: " << (j["passed"].get<bool>() ? "yes" : "no") << "\n";
    }
    if (!mt_report_passed(report)) {
        char* ce = nullptr;
        if (mt_report_first_counterexample(report, &ce) == MT_OK) {
            CStr owned_ce(ce);
            const std::string path = "counterexample.edges";
            write_file(path, owned_ce.get());
            std::cerr << "counterexample written to " << path << "\n";
        }
        return kExitDiscrepancy;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching complex analysis and classification"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "auto";
    bool as_json = false;
    int threads_flag = 0;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        if (with_input) {
            cmd->add_option("input", input, "input file, or - for stdin");
            cmd->add_option("--format", format, "input format: auto|edgelist|graph6")
                ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
        }
        cmd->add_flag("--json", as_json, "emit the JSON report");
        cmd->add_option("--threads", threads_flag, "worker threads (default: all cores)");
    };

    // analyze
    auto* analyze = app.add_subcommand("analyze", "structural and topological summary");
    std::string facets_path, dot_path, dot_matching_path;
    add_common(analyze, true);
    analyze->add_option("--facets", facets_path, "write the facets of M(G) to a file");
    analyze->add_option("--dot", dot_path, "write G in DOT format");
    analyze->add_option("--dot-matching", dot_matching_path,
                        "write the 1-skeleton of M(G) in DOT format");

    // classify
    auto* classify = app.add_subcommand("classify", "Buchsbaum/Cohen-Macaulay classification");
    add_common(classify, true);

    // scan-c7
    auto* scan = app.add_subcommand("scan-c7", "enumerate all chord supergraphs of the 7-cycle");
    std::string csv_out;
    add_common(scan, false);
    scan->add_option("--out", csv_out, "write the per-chord-count table as CSV");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification sweep");
    verify->require_subcommand(1);
    auto* exhaustive = verify->add_subcommand("exhaustive", "all graphs up to max-n vertices");
    int max_n = 6;
    exhaustive->add_option("--max-n", max_n, "largest vertex count (<= 7)")->required();
    add_common(exhaustive, false);
    auto* random = verify->add_subcommand("random", "seeded random graphs");
    int rand_n = 8;
    long long rand_count = 1000;
    std::uint64_t rand_seed = 1;
    random->add_option("--n", rand_n, "vertex count (7..12)")->required();
    random->add_option("--count", rand_count, "draws per density")->required();
    random->add_option("--seed", rand_seed, "PRNG seed")->required();
    add_common(random, false);

    CLI11_PARSE(app, argc, argv);
    const int threads = resolve_threads(threads_flag);

    if (analyze->parsed()) {
        GraphHandle g = parse_graph_arg(input, format);
        if (!facets_path.empty())
            write_file(facets_path, get_string(mt_matching_facets, g.get()).get());
        if (!dot_path.empty()) write_file(dot_path, get_string(mt_graph_dot, g.get()).get());
        if (!dot_matching_path.empty())
            write_file(dot_matching_path, get_string(mt_matching_skeleton_dot, g.get()).get());
        CStr report = get_string(mt_analyze_json, g.get());
        if (as_json)
            std::cout << report.get() << "\n";
        else
            print_human_analyze(json::parse(report.get()));
        return 0;
    }
    if (classify->parsed()) {
        GraphHandle g = parse_graph_arg(input, format);
        CStr report = get_string(mt_classify_json, g.get());
        if (as_json)
            std::cout << report.get() << "\n";
        else
            print_human_classify(json::parse(report.get()));
        return 0;
    }
    if (scan->parsed()) {
        mt_report* report = nullptr;
        const mt_status s = mt_scan_c7(threads, &report);
        if (s != MT_OK) die(s);
        ReportHandle handle(report);
        return handle_report(report, as_json, csv_out);
    }
    if (exhaustive->parsed()) {
        mt_report* report = nullptr;
        const mt_status s = mt_verify_exhaustive(max_n, threads, &report);
        if (s != MT_OK) die(s);
        ReportHandle handle(report);
        return handle_report(report, as_json, "");
    }
    if (random->parsed()) {
        mt_report* report = nullptr;
        const mt_status s = mt_verify_random(rand_n, rand_count, rand_seed, threads, &report);
        if (s != MT_OK) die(s);
        ReportHandle handle(report);
        return handle_report(report, as_json, "");
    }
    return 0;
}
