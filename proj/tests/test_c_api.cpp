#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "matchtop/matchtop.h"

namespace {

using json = nlohmann::ordered_json;

struct Str {
    char* p = nullptr;
    ~Str() { mt_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct GraphGuard {
    mt_graph* g = nullptr;
    ~GraphGuard() { mt_graph_free(g); }
};

struct ReportGuard {
    mt_report* r = nullptr;
    ~ReportGuard() { mt_report_free(r); }
};

}  // namespace

TEST_CASE("parse, inspect and re-encode a graph") {
    GraphGuard g;
    REQUIRE(mt_graph_parse("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n", "auto", &g.g) == MT_OK);
    CHECK(mt_graph_vertex_count(g.g) == 7);
    CHECK(mt_graph_edge_count(g.g) == 7);
    CHECK(mt_graph_removed_isolated(g.g) == 0);
    CHECK(std::strcmp(mt_graph_format(g.g), "edgelist") == 0);

    Str g6;
    REQUIRE(mt_graph_to_graph6(g.g, &g6.p) == MT_OK);
    GraphGuard round;
    REQUIRE(mt_graph_parse(g6.p, "graph6", &round.g) == MT_OK);
    CHECK(mt_graph_edge_count(round.g) == 7);

    Str canon;
    REQUIRE(mt_graph_canonical_form(g.g, &canon.p) == MT_OK);
    Str canon2;
    REQUIRE(mt_graph_canonical_form(round.g, &canon2.p) == MT_OK);
    CHECK(canon.str() == canon2.str());
}

TEST_CASE("error codes and messages") {
    mt_graph* g = nullptr;
    CHECK(mt_graph_parse("0 1 2\n", "edgelist", &g) == MT_ERR_INPUT);
    CHECK(std::string(mt_last_error()).find("line 1") != std::string::npos);
    CHECK(mt_graph_parse("0 1\n", "nonsense", &g) == MT_ERR_INPUT);
    CHECK(mt_graph_parse(nullptr, nullptr, &g) == MT_ERR_INPUT);

    mt_report* r = nullptr;
    CHECK(mt_verify_exhaustive(9, 1, &r) == MT_ERR_CAPABILITY);
    CHECK(mt_verify_random(5, 1, 1, 1, &r) == MT_ERR_CAPABILITY);
}

TEST_CASE("analyze and classify reports through the C surface") {
    GraphGuard g;
    REQUIRE(mt_graph_parse("0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n", nullptr, &g.g) == MT_OK);

    Str analyze;
    REQUIRE(mt_analyze_json(g.g, &analyze.p) == MT_OK);
    const json a = json::parse(analyze.str());
    CHECK(a["analysis"]["matching_complex"]["dimension"] == 2);
    CHECK(a["analysis"]["matching_complex"]["f_vector"] == std::vector<int>{7, 14, 7});
    CHECK(a["analysis"]["homology"]["betti"] == std::vector<int>{0, 1, 0});

    Str classify;
    REQUIRE(mt_classify_json(g.g, &classify.p) == MT_OK);
    const json c = json::parse(classify.str());
    CHECK(c["classification"]["dim"] == 2);
    CHECK(c["classification"]["buchsbaum"] == true);
    CHECK(c["classification"]["families"][0] == "B_C7");

    // M(C4) splits into two components
    GraphGuard c4;
    REQUIRE(mt_graph_parse("0 1\n1 2\n2 3\n0 3\n", nullptr, &c4.g) == MT_OK);
    Str a4;
    REQUIRE(mt_analyze_json(c4.g, &a4.p) == MT_OK);
    const json j4 = json::parse(a4.str());
    CHECK(j4["analysis"]["matching_complex"]["dimension"] == 1);
    CHECK(j4["analysis"]["matching_complex_components"] == 2);
}

TEST_CASE("facet and DOT exports") {
    GraphGuard g;
    REQUIRE(mt_graph_parse("0 1\n1 2\n2 3\n0 3\n", nullptr, &g.g) == MT_OK);
    Str facets;
    REQUIRE(mt_matching_facets(g.g, &facets.p) == MT_OK);
    CHECK(facets.str() == "0-1,2-3\n0-3,1-2\n");
    Str dot;
    REQUIRE(mt_graph_dot(g.g, &dot.p) == MT_OK);
    CHECK(dot.str().find("graph G {") == 0);
    Str mdot;
    REQUIRE(mt_matching_skeleton_dot(g.g, &mdot.p) == MT_OK);
    CHECK(mdot.str().find("graph M {") == 0);
}

TEST_CASE("reports through the C surface") {
    ReportGuard scan;
    REQUIRE(mt_scan_c7(2, &scan.r) == MT_OK);
    CHECK(mt_report_passed(scan.r) == 1);
    Str csv;
    REQUIRE(mt_report_csv(scan.r, &csv.p) == MT_OK);
    CHECK(csv.str().find("iso_classes,1,2,10,30,58,77,73,56,37,20,10,5,2,1,1,383") !=
          std::string::npos);
    Str ce;
    CHECK(mt_report_first_counterexample(scan.r, &ce.p) == MT_ERR_PRECONDITION);

    ReportGuard verify;
    REQUIRE(mt_verify_exhaustive(4, 1, &verify.r) == MT_OK);
    CHECK(mt_report_passed(verify.r) == 1);
    Str vj;
    REQUIRE(mt_report_json(verify.r, &vj.p) == MT_OK);
    CHECK(json::parse(vj.str())["passed"] == true);
}

TEST_CASE("isolated vertices are stripped at the boundary") {
    GraphGuard g;
    // graph6 for a 4-vertex graph with one edge and two isolated vertices
    REQUIRE(mt_graph_parse("0 1\n# isolated: none expressible in edge lists", nullptr, &g.g) ==
            MT_OK);
    CHECK(mt_graph_removed_isolated(g.g) == 0);

    GraphGuard h;
    REQUIRE(mt_graph_parse("C?", "graph6", &h.g) == MT_OK);  // 4 isolated vertices
    CHECK(mt_graph_vertex_count(h.g) == 0);
    CHECK(mt_graph_removed_isolated(h.g) == 1);
}
