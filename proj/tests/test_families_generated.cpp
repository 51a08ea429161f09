#include <doctest.h>

#include "helpers.hpp"
#include "matchtop/classify.hpp"
#include "matchtop/enumerate.hpp"

using namespace matchtop;

namespace {

// A random member of a hub/satellite family: one optional subset plus
// `nsat` extra vertices, each wired to a random nonempty subset of hubs.
Graph random_member(const FamilyPattern& p, std::uint64_t seed, int nsat) {
    std::uint64_t state = splitmix64_mix(seed);
    const std::uint32_t optional_mask =
        static_cast<std::uint32_t>(splitmix64_next(state) &
                                   ((1u << p.optional_edges.size()) - 1));
    const Graph core = pattern_core(p, optional_mask);
    std::vector<Edge> edges(core.edges());
    int n = p.num_vertices;
    for (int s = 0; s < nsat; ++s, ++n) {
        const std::uint64_t pick =
            1 + splitmix64_next(state) % ((1u << p.hubs.size()) - 1);
        for (std::size_t h = 0; h < p.hubs.size(); ++h)
            if (pick & (std::uint64_t{1} << h)) edges.emplace_back(n, p.hubs[h]);
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("generated members of the 2D families are Buchsbaum and recognized") {
    // Exercises satellite handling well past the sizes the sweeps reach.
    for (FamilyId id : {FamilyId::B1, FamilyId::B2, FamilyId::B3, FamilyId::B4, FamilyId::B5,
                        FamilyId::B6, FamilyId::B7, FamilyId::B8, FamilyId::B9}) {
        const FamilyPattern& p = family_pattern(id);
        for (int trial = 0; trial < 60; ++trial) {
            const Graph g = random_member(p, 31 * trial + static_cast<int>(id), trial % 6);
            REQUIRE_MESSAGE(is_2d_buchsbaum_via_ne(g), family_name(id));
            REQUIRE_MESSAGE(is_2d_buchsbaum_direct(g), family_name(id));
            const auto r = classify_2d(g);
            REQUIRE_MESSAGE(!r.families.empty(), family_name(id));
        }
    }
}

TEST_CASE("generated members of the 1D families have connected matching complexes") {
    for (FamilyId id : {FamilyId::G1, FamilyId::G2}) {
        const FamilyPattern& p = family_pattern(id);
        for (int trial = 0; trial < 60; ++trial) {
            const Graph g = random_member(p, 97 * trial + static_cast<int>(id), trial % 7);
            REQUIRE(max_matching_size(g, 3) == 2);
            const auto r = classify_1d(g);
            REQUIRE_MESSAGE(r.is_cm, family_name(id));
            REQUIRE(r.has_family(id));
        }
    }
}

TEST_CASE("generated petal graphs are Buchsbaum and recognized") {
    for (int a = 2; a <= 6; ++a)
        for (int b = 2; b <= 6; ++b)
            for (bool k3 : {false, true}) {
                const Graph g = test::petal_example(a, b, k3);
                REQUIRE(is_2d_buchsbaum_via_ne(g));
                const auto r = classify_2d(g);
                REQUIRE(r.has_family(FamilyId::BP));
            }
}

TEST_CASE("generated disconnected combinations are Buchsbaum and recognized") {
    // one K3-or-star component plus a 1D family member
    for (FamilyId id : {FamilyId::G1, FamilyId::G2, FamilyId::G3, FamilyId::Bowtie}) {
        const FamilyPattern& p = family_pattern(id);
        for (int trial = 0; trial < 15; ++trial) {
            const int nsat = p.hubs.empty() ? 0 : trial % 4;
            const Graph member = random_member(p, 7 * trial + 1, nsat);
            for (const Graph& other : {complete_graph(3), star_graph(1 + trial % 5)}) {
                const Graph g = disjoint_union(other, member);
                REQUIRE(is_2d_buchsbaum_via_ne(g));
                const auto r = classify_2d(g);
                REQUIRE(r.has_family(FamilyId::Disc2D2Comp));
            }
        }
    }
    // three K3-or-star components
    const Graph g = disjoint_union(disjoint_union(star_graph(4), complete_graph(3)),
                                   star_graph(2));
    REQUIRE(is_2d_buchsbaum_via_ne(g));
    REQUIRE(classify_2d(g).has_family(FamilyId::Disc2D3Comp));
}
