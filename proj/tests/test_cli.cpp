#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using json = nlohmann::ordered_json;

const std::string kCli = MATCHTOP_CLI_PATH;
const std::string kData = MATCHTOP_DATA_DIR;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = kCli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// timings are the only run-to-run variable parts of a report
json scrub(json j) {
    j.erase("timings");
    j.erase("runtime_ms");
    if (j.contains("input")) j["input"].erase("timings");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json golden(const std::string& name) { return json::parse(read_file(kData + "/golden/" + name)); }

}  // namespace

TEST_CASE("analyze C7 matches the golden report") {
    const RunResult r = run_cli("analyze " + kData + "/c7.edges --json");
    REQUIRE(r.exit_code == 0);
    CHECK(scrub(json::parse(r.out)) == scrub(golden("analyze_c7.json")));
}

TEST_CASE("analyze human output carries the headline facts") {
    const RunResult r = run_cli("analyze " + kData + "/c7.edges");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("dim M(G): 2") != std::string::npos);
    CHECK(r.out.find("f-vector: [7,14,7]") != std::string::npos);
    CHECK(r.out.find("betti: [0,1,0]") != std::string::npos);
}

TEST_CASE("classify bowtie and E2 match the golden reports") {
    const RunResult bow = run_cli("classify " + kData + "/bowtie.edges --json");
    REQUIRE(bow.exit_code == 0);
    CHECK(scrub(json::parse(bow.out)) == scrub(golden("classify_bowtie.json")));
    const json b = json::parse(bow.out);
    CHECK(b["classification"]["dim"] == 1);
    CHECK(b["classification"]["cm"] == true);
    CHECK(b["classification"]["families"][0] == "BOWTIE");

    const RunResult e2 = run_cli("classify " + kData + "/e2.edges --json");
    REQUIRE(e2.exit_code == 0);
    const json e = json::parse(e2.out);
    CHECK(e["classification"]["dim"] == 2);
    CHECK(e["classification"]["buchsbaum"] == true);
    CHECK(e["classification"]["families"] == std::vector<std::string>{"E2"});
}

TEST_CASE("classify the bad one-chord supergraph of C7") {
    const RunResult r = run_cli("classify " + kData + "/c7_bad_chord.edges --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["classification"]["buchsbaum"] == false);
    CHECK(j["classification"]["families"].empty());
    CHECK(j["classification"]["certificate"]["type"] == "failing_edge");
    CHECK(j["classification"]["certificate"]["edge"] == std::vector<int>{0, 2});
}

TEST_CASE("scan-c7 writes the golden CSV and exits zero") {
    const std::string csv_path = "/tmp/matchtop_scan_test.csv";
    const RunResult r = run_cli("scan-c7 --out " + csv_path + " --json");
    REQUIRE(r.exit_code == 0);
    CHECK(read_file(csv_path) == read_file(kData + "/golden/scan_c7.csv"));
    const json j = json::parse(r.out);
    CHECK(j["totals"]["iso_classes"] == 383);
    CHECK(j["totals"]["buchsbaum_classes"] == 125);
    std::remove(csv_path.c_str());
}

TEST_CASE("verify exhaustive exits zero on a clean sweep") {
    const RunResult r = run_cli("verify exhaustive --max-n 5 --json");
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out)["passed"] == true);
}

TEST_CASE("verify random is deterministic across runs and thread counts") {
    const RunResult a = run_cli("verify random --n 9 --count 1000 --seed 7 --json --threads 1");
    const RunResult b = run_cli("verify random --n 9 --count 1000 --seed 7 --json --threads 2");
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(scrub(json::parse(a.out)) == scrub(json::parse(b.out)));
}

TEST_CASE("MATCHTOP_THREADS is honored as a fallback") {
    const RunResult r = run_cli("verify exhaustive --max-n 4 --json");
    REQUIRE(r.exit_code == 0);
    const std::string cmd = "MATCHTOP_THREADS=1 " + kCli +
                            " verify exhaustive --max-n 4 --json 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    REQUIRE(WEXITSTATUS(pclose(pipe)) == 0);
    CHECK(scrub(json::parse(out)) == scrub(json::parse(r.out)));
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli("analyze /nonexistent/file.edges").exit_code == 2);
    const std::string bad = "/tmp/matchtop_bad_input.edges";
    std::ofstream(bad) << "0 1 2\n";
    CHECK(run_cli("analyze " + bad).exit_code == 2);
    CHECK(run_cli("classify " + bad + " --format graph6").exit_code == 2);
    std::remove(bad.c_str());
}

TEST_CASE("capability limits exit with code 3") {
    CHECK(run_cli("verify exhaustive --max-n 9").exit_code == 3);
    CHECK(run_cli("verify random --n 20 --count 1 --seed 1").exit_code == 3);
}

TEST_CASE("format override and autodetection") {
    const std::string g6 = "/tmp/matchtop_k4.g6";
    std::ofstream(g6) << "C~\n";
    const RunResult r = run_cli("analyze " + g6 + " --json");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["input"]["format"] == "graph6");
    CHECK(j["input"]["n"] == 4);
    // forcing the wrong format is an input error
    CHECK(run_cli("analyze " + g6 + " --format edgelist").exit_code == 2);
    std::remove(g6.c_str());
}

TEST_CASE("facet and DOT export flags write files") {
    const std::string facets = "/tmp/matchtop_facets.txt";
    const std::string dot = "/tmp/matchtop_g.dot";
    const std::string mdot = "/tmp/matchtop_m.dot";
    const RunResult r = run_cli("analyze " + kData + "/c7.edges --facets " + facets +
                                " --dot " + dot + " --dot-matching " + mdot);
    REQUIRE(r.exit_code == 0);
    CHECK(read_file(facets).find("0-1") != std::string::npos);
    CHECK(read_file(dot).find("graph G {") == 0);
    CHECK(read_file(mdot).find("graph M {") == 0);
    std::remove(facets.c_str());
    std::remove(dot.c_str());
    std::remove(mdot.c_str());
}
