#ifndef MATCHTOP_CLASSIFY_HPP
#define MATCHTOP_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchtop/families.hpp"
#include "matchtop/graph.hpp"

namespace matchtop {

// One recognized family, with whichever witness form fits it.
struct FamilyMatch {
    FamilyId id;
    std::vector<int> vertex_map;                 // pattern/reference vertex -> g vertex
    std::vector<int> hub_images;                 // images of the pattern's hubs
    std::vector<int> cycle;                      // B_C7: a Hamiltonian 7-cycle
    int center = -1;                             // B_P
    std::vector<std::vector<int>> components;    // petals / component split
    std::vector<std::string> component_kinds;

    nlohmann::ordered_json to_json() const;
};

struct FailingEdge {
    Edge edge;
    std::string reason;
};

// Full verdict with certificates. `families` holds every match; verdicts for
// dimension one and two come from the theorem routes stated per operation.
struct ClassificationResult {
    int dim = -1;
    bool is_buchsbaum = false;
    bool is_cm = false;
    bool is_matroid = false;
    std::vector<FamilyMatch> families;
    std::optional<FailingEdge> failing_edge;

    bool has_family(FamilyId id) const;
    std::vector<std::string> family_names() const;
    nlohmann::ordered_json to_json() const;
};

// Definition route: dim M(G) = 2 and every vertex link of M(G) is a
// connected graph with at least one edge.
bool is_2d_buchsbaum_direct(const Graph& g);

// Non-adjacent-subgraph route: M(N_e) is a connected graph with at least one
// edge for every edge e. Agrees with the direct route on every input.
bool is_2d_buchsbaum_via_ne(const Graph& g);

// First edge (in edge order) whose M(N_e) is not a connected graph with an
// edge, with the reason; nullopt when g is 2-dimensional Buchsbaum.
std::optional<FailingEdge> find_buchsbaum_failing_edge(const Graph& g);

// Classification of graphs with one-dimensional matching complexes
// (throws PreconditionError otherwise, reporting the actual dimension).
ClassificationResult classify_1d(const Graph& g);

// Classification of graphs with two-dimensional matching complexes.
ClassificationResult classify_2d(const Graph& g);

// Dispatches on dim M(G); other dimensions report verdicts only.
ClassificationResult classify(const Graph& g);

// Membership in the seven-vertex Hamiltonian family: present iff g has
// exactly 7 vertices, contains a 7-cycle, and passes the direct Buchsbaum
// check. The witness is a Hamiltonian cycle.
std::optional<std::vector<int>> recognize_bc7(const Graph& g);

// True iff N_e is connected for every edge e (empty N_e counts as
// connected). Throws PreconditionError when g is disconnected.
bool is_link_connected(const Graph& g);

// Matroid test by the no-path-of-length-three criterion; asserts agreement
// with the stars-and-triangles decomposition route.
bool is_matroid(const Graph& g);
bool is_matroid_by_path(const Graph& g);
bool is_matroid_by_decomposition(const Graph& g);

struct KmnThresholds {
    int m = 0;
    int n = 0;
    bool cm_predicted = false;
    bool cm_computed = false;
    bool buchsbaum_predicted = false;
    bool buchsbaum_computed = false;

    nlohmann::ordered_json to_json() const;
};

// Builds K_{m,n} and compares the homological verdicts against the
// closed-form thresholds (CM iff n >= 2m-1, Buchsbaum iff n >= 2m-2).
// Requires 1 <= m <= n <= 8 and m <= 3.
KmnThresholds kmn_thresholds(int m, int n);

// A Hamiltonian-style search for one k-cycle; the returned vertices are in
// cycle order.
std::optional<std::vector<int>> find_cycle(const Graph& g, int k);

}  // namespace matchtop

#endif  // MATCHTOP_CLASSIFY_HPP
