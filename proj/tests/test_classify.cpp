#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "matchtop/classify.hpp"
#include "matchtop/complex.hpp"
#include "matchtop/errors.hpp"
#include "matchtop/iso.hpp"

using namespace matchtop;

namespace {

// Independent witness validation: the mapped core must carry exactly the
// required edges plus a subset of the optional ones, and every unmapped
// vertex must attach to a nonempty subset of hub images and nothing else.
void validate_pattern_witness(const Graph& g, const FamilyPattern& p,
                              const std::vector<int>& map) {
    REQUIRE(map.size() == static_cast<std::size_t>(p.num_vertices));
    std::set<int> used(map.begin(), map.end());
    REQUIRE(used.size() == map.size());

    std::set<std::pair<int, int>> required, optional;
    for (auto [u, v] : p.required_edges) required.insert(std::minmax(u, v));
    for (auto [u, v] : p.optional_edges) optional.insert(std::minmax(u, v));
    for (int u = 0; u < p.num_vertices; ++u)
        for (int v = u + 1; v < p.num_vertices; ++v) {
            const bool has = g.has_edge(map[u], map[v]);
            if (required.count({u, v}))
                REQUIRE(has);
            else if (!optional.count({u, v}))
                REQUIRE_FALSE(has);
        }
    std::uint64_t hub_images = 0;
    for (int h : p.hubs) hub_images |= std::uint64_t{1} << map[h];
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (used.count(v)) continue;
        REQUIRE(g.neighbor_mask(v) != 0);
        REQUIRE((g.neighbor_mask(v) & ~hub_images) == 0);
    }
}

Graph b1_worked_example() {
    // six-cycle-with-chords graph from the B1 discussion: hubs 1, 3, 5 with
    // vertices 0 and 2 joined to all three, plus pendants 6 and 7
    return Graph::from_edges(
        8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 5}, {2, 5}, {4, 5}, {1, 6}, {3, 7}});
}

}  // namespace

TEST_CASE("recognize_family: G1 on the path P5") {
    const auto map = recognize_family(path_graph(5), family_pattern(FamilyId::G1));
    REQUIRE(map.has_value());
    // hubs land on the 2nd and 4th path vertices
    std::set<int> hubs{(*map)[1], (*map)[3]};
    CHECK(hubs == std::set<int>{1, 3});
    validate_pattern_witness(path_graph(5), family_pattern(FamilyId::G1), *map);
}

TEST_CASE("recognize_family: K_{2,3} is G1 with both optional edges") {
    const Graph k23 = complete_bipartite(2, 3);
    const auto map = recognize_family(k23, family_pattern(FamilyId::G1));
    REQUIRE(map.has_value());
    // hubs are the size-2 side {0, 1}
    std::set<int> hubs{(*map)[1], (*map)[3]};
    CHECK(hubs == std::set<int>{0, 1});
    validate_pattern_witness(k23, family_pattern(FamilyId::G1), *map);
}

TEST_CASE("recognize_family: B1 with satellites joined to all hubs") {
    // three disjoint edges plus two new vertices adjacent to all three hubs
    const Graph g = Graph::from_edges(
        8, {{0, 3}, {1, 4}, {2, 5}, {6, 0}, {6, 1}, {6, 2}, {7, 0}, {7, 1}, {7, 2}});
    const auto map = recognize_family(g, family_pattern(FamilyId::B1));
    REQUIRE(map.has_value());
    validate_pattern_witness(g, family_pattern(FamilyId::B1), *map);

    const auto worked = b1_worked_example();
    const auto map2 = recognize_family(worked, family_pattern(FamilyId::B1));
    REQUIRE(map2.has_value());
    std::set<int> hubs{(*map2)[0], (*map2)[1], (*map2)[2]};
    CHECK(hubs == std::set<int>{1, 3, 5});
}

TEST_CASE("recognize_family rejects near misses") {
    // C6 has every vertex on a nonzero hub subset under the obvious labeling
    // but lacks the dedicated pendant structure of B1
    CHECK_FALSE(recognize_family(cycle_graph(6), family_pattern(FamilyId::B1)));
    // a graph with an extra satellite fails families without hubs
    const Graph g3_plus = Graph::from_edges(
        6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
    CHECK_FALSE(recognize_family(g3_plus, family_pattern(FamilyId::G3)));
}

TEST_CASE("every pattern matches its own cores") {
    for (const FamilyPattern& p : family_patterns())
        for (std::uint32_t mask = 0; mask < (1u << p.optional_edges.size()); ++mask) {
            const Graph core = pattern_core(p, mask);
            const auto map = recognize_family(core, p);
            REQUIRE_MESSAGE(map.has_value(), family_name(p.id));
            validate_pattern_witness(core, p, *map);
        }
}

TEST_CASE("recognize_petal") {
    const Graph three_s2 = test::petal_example(2, 2, false);
    const auto w = recognize_petal(three_s2);
    REQUIRE(w.has_value());
    CHECK(w->center == 0);
    CHECK(w->petals.size() == 3);
    CHECK(w->petal_kinds == std::vector<std::string>{"star", "star", "star"});

    // a big star, a smaller star, and a K3 glued at one vertex
    const Graph mixed = test::petal_example(7, 5, true);
    const auto w2 = recognize_petal(mixed);
    REQUIRE(w2.has_value());
    CHECK(w2->petal_kinds == std::vector<std::string>{"star", "star", "K3"});

    CHECK_FALSE(recognize_petal(bowtie_graph()));        // only two petals
    CHECK_FALSE(recognize_petal(star_graph(3)));         // petals need 2+ vertices
}

TEST_CASE("petal graphs are 2-dimensional Buchsbaum") {
    const Graph g = test::petal_example(3, 2, true);
    CHECK(is_2d_buchsbaum_direct(g));
    CHECK(is_2d_buchsbaum_via_ne(g));
    const auto r = classify_2d(g);
    CHECK(r.is_buchsbaum);
    CHECK(r.has_family(FamilyId::BP));
}

TEST_CASE("classify_1d verdicts") {
    const auto disc = classify_1d(disjoint_union(complete_graph(3), star_graph(2)));
    CHECK(disc.is_cm);
    CHECK(disc.is_buchsbaum);
    CHECK(disc.has_family(FamilyId::Disc1D));

    const auto bow = classify_1d(bowtie_graph());
    CHECK(bow.is_cm);
    CHECK(bow.has_family(FamilyId::Bowtie));

    const auto k4 = classify_1d(complete_graph(4));
    CHECK(k4.is_buchsbaum);
    CHECK_FALSE(k4.is_cm);
    CHECK(k4.has_family(FamilyId::K4));

    const auto c4 = classify_1d(cycle_graph(4));
    CHECK(c4.is_buchsbaum);
    CHECK_FALSE(c4.is_cm);
    CHECK(c4.has_family(FamilyId::C4));

    CHECK_THROWS_AS(classify_1d(cycle_graph(7)), PreconditionError);
    CHECK_THROWS_AS(classify_1d(star_graph(3)), PreconditionError);
}

TEST_CASE("classify_1d failing edge for non-Buchsbaum input") {
    // P4: the middle edge is disjoint from nothing
    const auto r = classify_1d(path_graph(4));
    CHECK_FALSE(r.is_buchsbaum);
    REQUIRE(r.failing_edge.has_value());
    CHECK(r.failing_edge->edge == Edge(1, 2));
}

TEST_CASE("classify_2d verdicts") {
    const auto three = classify_2d(disjoint_union(
        disjoint_union(complete_graph(3), complete_graph(3)), star_graph(4)));
    CHECK(three.is_buchsbaum);
    CHECK(three.has_family(FamilyId::Disc2D3Comp));

    const auto two = classify_2d(disjoint_union(complete_graph(3), bowtie_graph()));
    CHECK(two.is_buchsbaum);
    CHECK(two.has_family(FamilyId::Disc2D2Comp));

    const auto e1 = classify_2d(exceptional_graph_e1());
    CHECK(e1.is_buchsbaum);
    CHECK(e1.has_family(FamilyId::E1));

    const auto e2 = classify_2d(exceptional_graph_e2());
    CHECK(e2.is_buchsbaum);
    CHECK(e2.has_family(FamilyId::E2));

    CHECK_THROWS_AS(classify_2d(cycle_graph(5)), PreconditionError);
}

TEST_CASE("classify_2d on the 7-cycle and its one-chord supergraphs") {
    const auto c7 = classify_2d(cycle_graph(7));
    CHECK(c7.is_buchsbaum);
    CHECK_FALSE(c7.is_cm);  // the Moebius band has nonvanishing homology
    CHECK(c7.has_family(FamilyId::BC7));
    for (const auto& m : c7.families)
        if (m.id == FamilyId::BC7) CHECK(m.cycle.size() == 7);

    // a pendant vertex forces a 4-matching, so the family is empty
    std::vector<Edge> pendant(cycle_graph(7).edges());
    pendant.emplace_back(0, 7);
    const auto hung = classify(Graph::from_edges(8, pendant));
    CHECK(hung.dim >= 3);
    CHECK(hung.families.empty());
    CHECK_FALSE(hung.is_buchsbaum);

    // distance-3 chord: still Buchsbaum; distance-2 chord: not
    std::vector<Edge> good(cycle_graph(7).edges());
    good.emplace_back(0, 3);
    const auto good_r = classify_2d(Graph::from_edges(7, good));
    CHECK(good_r.is_buchsbaum);
    CHECK(good_r.has_family(FamilyId::BC7));

    std::vector<Edge> bad(cycle_graph(7).edges());
    bad.emplace_back(0, 2);
    const auto bad_r = classify_2d(Graph::from_edges(7, bad));
    CHECK_FALSE(bad_r.is_buchsbaum);
    CHECK(bad_r.families.empty());
    REQUIRE(bad_r.failing_edge.has_value());
    CHECK(bad_r.failing_edge->edge == Edge(0, 2));
    CHECK(bad_r.failing_edge->reason.find("disconnected") != std::string::npos);
}

TEST_CASE("K7 is Buchsbaum and in the C7 family") {
    const auto r = classify_2d(complete_graph(7));
    CHECK(r.is_buchsbaum);
    CHECK(r.has_family(FamilyId::BC7));
    CHECK(is_2d_buchsbaum_direct(complete_graph(7)));
    CHECK(is_link_connected(complete_graph(7)));
}

TEST_CASE("direct and N_e Buchsbaum routes") {
    CHECK(is_2d_buchsbaum_direct(cycle_graph(7)));
    CHECK(is_2d_buchsbaum_via_ne(cycle_graph(7)));
    CHECK_FALSE(is_2d_buchsbaum_direct(cycle_graph(8)));  // has a 4-matching
    CHECK_FALSE(is_2d_buchsbaum_via_ne(cycle_graph(8)));
    CHECK_FALSE(is_2d_buchsbaum_direct(cycle_graph(4)));
    CHECK_FALSE(is_2d_buchsbaum_via_ne(cycle_graph(4)));
    // every N_e of C7 is a 5-vertex path, a G1 member
    const Graph c7 = cycle_graph(7);
    for (const Edge& e : c7.edges())
        CHECK(are_isomorphic(non_adjacent_subgraph(c7, e).graph, path_graph(5)));
}

TEST_CASE("the two Buchsbaum routes agree exhaustively on 5 vertices") {
    for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
        std::vector<Edge> edges;
        int k = 0;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v, ++k)
                if (mask & (1u << k)) edges.emplace_back(u, v);
        const Graph g = normalize(Graph::from_edges(5, edges)).graph;
        if (g.edge_count() == 0) continue;
        CHECK(is_2d_buchsbaum_direct(g) == is_2d_buchsbaum_via_ne(g));
    }
}

TEST_CASE("is_link_connected") {
    CHECK(is_link_connected(cycle_graph(7)));
    CHECK_FALSE(is_link_connected(test::petal_example(2, 2, false)));
    CHECK_THROWS_AS(is_link_connected(disjoint_union(complete_graph(3), complete_graph(3))),
                    PreconditionError);
}

TEST_CASE("is_matroid") {
    CHECK(is_matroid(disjoint_union(complete_graph(3), star_graph(5))));
    CHECK_FALSE(is_matroid(path_graph(4)));
    CHECK_FALSE(is_matroid(cycle_graph(4)));
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = test::random_test_graph(2 + trial % 8, 2 + 2 * (trial % 3), trial);
        CHECK(is_matroid_by_path(g) == is_matroid_by_decomposition(g));
    }
}

TEST_CASE("kmn_thresholds") {
    const auto t23 = kmn_thresholds(2, 3);
    CHECK(t23.cm_predicted);
    CHECK(t23.cm_computed);
    CHECK(t23.buchsbaum_computed);

    const auto t34 = kmn_thresholds(3, 4);
    CHECK(t34.buchsbaum_predicted);
    CHECK(t34.buchsbaum_computed);
    CHECK_FALSE(t34.cm_predicted);
    CHECK_FALSE(t34.cm_computed);

    const auto t33 = kmn_thresholds(3, 3);
    CHECK_FALSE(t33.buchsbaum_predicted);
    CHECK_FALSE(t33.buchsbaum_computed);

    CHECK_THROWS_AS(kmn_thresholds(4, 4), CapabilityError);
    CHECK_THROWS_AS(kmn_thresholds(2, 1), CapabilityError);
}

TEST_CASE("classify dispatch handles degenerate dimensions") {
    const auto star = classify(star_graph(4));
    CHECK(star.dim == 0);
    CHECK(star.is_buchsbaum);
    CHECK(star.is_cm);
    CHECK(star.families.empty());

    const auto empty = classify(Graph(0));
    CHECK(empty.dim == -1);
    CHECK(empty.families.empty());

    // dim >= 3: verdicts only
    const auto c8 = classify(cycle_graph(8));
    CHECK(c8.dim == 3);
    CHECK_FALSE(c8.is_buchsbaum);
    CHECK(c8.families.empty());
}

TEST_CASE("witness maps re-verify over a random corpus") {
    int validated = 0;
    for (int trial = 0; trial < 4000 && validated < 120; ++trial) {
        const Graph g = normalize(test::random_test_graph(7 + trial % 2, 4, 5000 + trial)).graph;
        if (g.edge_count() == 0 || max_matching_size(g, 4) != 3) continue;
        const auto r = classify_2d(g);
        for (const auto& m : r.families) {
            for (const FamilyPattern& p : family_patterns())
                if (p.id == m.id) {
                    validate_pattern_witness(g, p, m.vertex_map);
                    ++validated;
                }
        }
    }
    CHECK(validated >= 30);
}

TEST_CASE("ClassificationResult JSON shape") {
    const auto j = classify_2d(exceptional_graph_e2()).to_json();
    CHECK(j["dim"] == 2);
    CHECK(j["buchsbaum"] == true);
    CHECK(j["families"][0] == "E2");
    CHECK(j["certificate"]["type"] == "family_witness");
    CHECK(j.contains("matroid"));

    const auto bad = classify_1d(path_graph(4)).to_json();
    CHECK(bad["certificate"]["type"] == "failing_edge");
}
