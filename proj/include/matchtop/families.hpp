#ifndef MATCHTOP_FAMILIES_HPP
#define MATCHTOP_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchtop/graph.hpp"

namespace matchtop {

enum class FamilyId {
    G1,
    G2,
    G3,
    Bowtie,
    B1,
    B2,
    B3,
    B4,
    B5,
    B6,
    B7,
    B8,
    B9,
    E1,
    E2,
    BP,
    BC7,
    K4,
    C4,
    Disc1D,
    Disc2D3Comp,
    Disc2D2Comp,
};

std::string family_name(FamilyId id);

// A hub/satellite template: a fixed core with designated hub vertices. A
// graph matches when the core embeds with exactly the required edges, any
// subset of the optional edges, no other edges among core images, and every
// remaining vertex adjacent to a nonempty subset of hub images and to
// nothing else. Patterns without hubs admit no extra vertices.
struct FamilyPattern {
    FamilyId id;
    int num_vertices = 0;
    std::vector<int> hubs;
    std::vector<std::pair<int, int>> required_edges;
    std::vector<std::pair<int, int>> optional_edges;

    bool is_hub(int v) const;
};

// The pattern table: G1, G2, G3, the bowtie, and B1..B9.
const std::vector<FamilyPattern>& family_patterns();
const FamilyPattern& family_pattern(FamilyId id);

// Fixed graphs recognized by certificate equality.
const Graph& exceptional_graph_e1();
const Graph& exceptional_graph_e2();

// The pattern core with the optional edges selected by `optional_mask`
// (bit i = optional_edges[i]); no satellites.
Graph pattern_core(const FamilyPattern& pattern, std::uint32_t optional_mask);

// Injective map of pattern vertices into g realizing the pattern, or nullopt.
std::optional<std::vector<int>> recognize_family(const Graph& g, const FamilyPattern& pattern);

struct PetalWitness {
    int center = 0;
    std::vector<std::vector<int>> petals;        // vertex sets excluding the center
    std::vector<std::string> petal_kinds;        // "K3" or "star"
};

// Petal graphs: three blocks glued at one central vertex, each block a K3
// through the center or a star with at least two edges meeting the center at
// a non-central vertex.
std::optional<PetalWitness> recognize_petal(const Graph& g);

// Fixed-graph recognition up to isomorphism; the witness maps the reference
// graph's vertices onto g.
std::optional<std::vector<int>> recognize_fixed(const Graph& g, const Graph& reference);

// True iff every edge of the component subgraph shares a vertex with every
// other, i.e. the component is a K3 or a star.
bool component_is_k3_or_star(const Graph& g, const std::vector<int>& component);

}  // namespace matchtop

#endif  // MATCHTOP_FAMILIES_HPP
