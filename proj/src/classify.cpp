#include "matchtop/classify.hpp"

#include <algorithm>
#include <bit>

#include "matchtop/complex.hpp"
#include "matchtop/errors.hpp"
#include "matchtop/homology.hpp"

namespace matchtop {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Upper bound on the face count for homological verdicts above dimension two.
constexpr long long kHomologyFaceCap = 5000;

}  // namespace

nlohmann::ordered_json FamilyMatch::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family_name(id);
    if (!vertex_map.empty()) j["vertex_map"] = vertex_map;
    if (!hub_images.empty()) j["hubs"] = hub_images;
    if (!cycle.empty()) j["cycle"] = cycle;
    if (center >= 0) j["center"] = center;
    if (!components.empty()) j["components"] = components;
    if (!component_kinds.empty()) j["component_kinds"] = component_kinds;
    return j;
}

bool ClassificationResult::has_family(FamilyId id) const {
    for (const FamilyMatch& m : families)
        if (m.id == id) return true;
    return false;
}

std::vector<std::string> ClassificationResult::family_names() const {
    std::vector<std::string> out;
    out.reserve(families.size());
    for (const FamilyMatch& m : families) out.push_back(family_name(m.id));
    return out;
}

nlohmann::ordered_json ClassificationResult::to_json() const {
    nlohmann::ordered_json j;
    j["dim"] = dim;
    j["buchsbaum"] = is_buchsbaum;
    j["cm"] = is_cm;
    j["families"] = family_names();
    nlohmann::ordered_json cert;
    if (!families.empty()) {
        cert["type"] = "family_witness";
        cert["witness"] = families.front().to_json();
    } else if (failing_edge) {
        cert["type"] = "failing_edge";
        cert["edge"] = {failing_edge->edge.u, failing_edge->edge.v};
        cert["reason"] = failing_edge->reason;
    } else {
        cert["type"] = "none";
    }
    j["certificate"] = cert;
    j["matroid"] = is_matroid;
    return j;
}

bool is_2d_buchsbaum_direct(const Graph& g) {
    if (g.edge_count() == 0) return false;
    if (max_matching_size(g, 4) != 3) return false;
    const SimplicialComplex m = matching_complex(g);
    for (int v = 0; v < m.vertex_universe(); ++v) {
        const int face[1] = {v};
        if (!one_skeleton_is_connected_graph_with_edge(link(m, face))) return false;
    }
    return true;
}

namespace {

// Checks "M(N_e) is a connected graph with at least one edge" directly on
// the subgraph: the disjointness relation on N_e's edges must be connected,
// have at least one pair, and admit no triple of pairwise disjoint edges.
bool ne_link_ok(const Graph& ne, std::string* reason) {
    const auto& edges = ne.edges();
    const int k = static_cast<int>(edges.size());
    if (k == 0) {
        if (reason) *reason = "N_e has no edges, so the link is empty";
        return false;
    }
    if (max_matching_size(ne, 3) >= 3) {
        if (reason) *reason = "N_e contains a 3-matching, so the link is not a graph";
        return false;
    }
    // union-find over the disjointness relation
    std::vector<int> parent(k);
    for (int i = 0; i < k; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    bool any_pair = false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const Edge &a = edges[i], &b = edges[j];
            if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) {
                any_pair = true;
                parent[find(i)] = find(j);
            }
        }
    if (!any_pair) {
        if (reason) *reason = "no two edges of N_e are disjoint, so the link has no edge";
        return false;
    }
    for (int i = 1; i < k; ++i)
        if (find(i) != find(0)) {
            if (reason) *reason = "the link M(N_e) is disconnected";
            return false;
        }
    return true;
}

}  // namespace

std::optional<FailingEdge> find_buchsbaum_failing_edge(const Graph& g) {
    for (const Edge& e : g.edges()) {
        std::string reason;
        if (!ne_link_ok(non_adjacent_subgraph(g, e).graph, &reason))
            return FailingEdge{e, reason};
    }
    return std::nullopt;
}

bool is_2d_buchsbaum_via_ne(const Graph& g) {
    if (g.edge_count() == 0) return false;
    for (const Edge& e : g.edges())
        if (!ne_link_ok(non_adjacent_subgraph(g, e).graph, nullptr)) return false;
    return true;
}

namespace {

int matching_dim(const Graph& g) {
    if (g.edge_count() == 0) return -1;
    return max_matching_size(g, 4) - 1;  // 3 means "at least 3"
}

std::string dim_text(int bounded_dim) {
    if (bounded_dim >= 3) return ">= 3";
    return std::to_string(bounded_dim);
}

// Induced subgraph on a component plus the map back to g's ids.
RelabeledSubgraph induced(const Graph& g, const std::vector<int>& verts) {
    RelabeledSubgraph out;
    out.to_parent = verts;
    std::vector<int> new_id(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) new_id[verts[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (new_id[e.u] >= 0 && new_id[e.v] >= 0)
            edges.emplace_back(new_id[e.u], new_id[e.v]);
    out.graph = Graph::from_edges(static_cast<int>(verts.size()), edges);
    return out;
}

std::vector<int> map_to_parent(const std::vector<int>& map, const std::vector<int>& to_parent) {
    std::vector<int> out;
    out.reserve(map.size());
    for (int v : map) out.push_back(to_parent[v]);
    return out;
}

void add_pattern_match(std::vector<FamilyMatch>& out, const Graph& g,
                       const FamilyPattern& pattern) {
    if (auto map = recognize_family(g, pattern)) {
        FamilyMatch m;
        m.id = pattern.id;
        m.vertex_map = *map;
        for (int h : pattern.hubs) m.hub_images.push_back((*map)[h]);
        out.push_back(std::move(m));
    }
}

// The kind of a K3-or-star component, for certificates.
std::string k3_or_star_kind(const Graph& g, const std::vector<int>& comp) {
    if (comp.size() == 3) {
        if (g.has_edge(comp[0], comp[1]) && g.has_edge(comp[0], comp[2]) &&
            g.has_edge(comp[1], comp[2]))
            return "K3";
    }
    return "star";
}

// Matches of the connected 1-dimensional families on a component subgraph.
std::optional<std::pair<FamilyId, std::vector<int>>> match_connected_1d_family(
    const Graph& component) {
    for (FamilyId id : {FamilyId::G1, FamilyId::G2, FamilyId::G3, FamilyId::Bowtie})
        if (auto map = recognize_family(component, family_pattern(id)))
            return std::make_pair(id, *map);
    return std::nullopt;
}

std::optional<FailingEdge> find_isolated_matching_vertex(const Graph& g) {
    for (const Edge& e : g.edges()) {
        if (non_adjacent_subgraph(g, e).graph.edge_count() == 0)
            return FailingEdge{e, "the edge is an isolated vertex of M(G)"};
    }
    return std::nullopt;
}

}  // namespace

ClassificationResult classify_1d(const Graph& g) {
    const int dim = matching_dim(g);
    if (dim != 1)
        throw PreconditionError("classify_1d requires dim M(G) = 1, got " + dim_text(dim));

    ClassificationResult r;
    r.dim = 1;
    r.is_matroid = is_matroid(g);

    const auto comps = connected_components(g);
    if (comps.size() == 2 && component_is_k3_or_star(g, comps[0]) &&
        component_is_k3_or_star(g, comps[1])) {
        FamilyMatch m;
        m.id = FamilyId::Disc1D;
        m.components = comps;
        for (const auto& c : comps) m.component_kinds.push_back(k3_or_star_kind(g, c));
        r.families.push_back(std::move(m));
    }
    for (FamilyId id : {FamilyId::G1, FamilyId::G2, FamilyId::G3, FamilyId::Bowtie})
        add_pattern_match(r.families, g, family_pattern(id));

    r.is_cm = !r.families.empty();

    for (FamilyId id : {FamilyId::K4, FamilyId::C4}) {
        const Graph ref = id == FamilyId::K4 ? complete_graph(4) : cycle_graph(4);
        if (auto map = recognize_fixed(g, ref)) {
            FamilyMatch m;
            m.id = id;
            m.vertex_map = *map;
            r.families.push_back(std::move(m));
        }
    }
    r.is_buchsbaum = r.is_cm || r.has_family(FamilyId::K4) || r.has_family(FamilyId::C4);
    if (!r.is_buchsbaum) r.failing_edge = find_isolated_matching_vertex(g);
    return r;
}

ClassificationResult classify_2d(const Graph& g) {
    const int dim = matching_dim(g);
    if (dim != 2)
        throw PreconditionError("classify_2d requires dim M(G) = 2, got " + dim_text(dim));

    ClassificationResult r;
    r.dim = 2;
    r.is_matroid = is_matroid(g);

    const auto comps = connected_components(g);
    if (comps.size() == 3) {
        bool all = true;
        for (const auto& c : comps) all = all && component_is_k3_or_star(g, c);
        if (all) {
            FamilyMatch m;
            m.id = FamilyId::Disc2D3Comp;
            m.components = comps;
            for (const auto& c : comps) m.component_kinds.push_back(k3_or_star_kind(g, c));
            r.families.push_back(std::move(m));
        }
    }
    if (comps.size() == 2) {
        for (int small = 0; small < 2; ++small) {
            const auto& star_side = comps[small];
            const auto& other_side = comps[1 - small];
            if (!component_is_k3_or_star(g, star_side)) continue;
            const auto sub = induced(g, other_side);
            const auto match = match_connected_1d_family(sub.graph);
            if (match) {
                FamilyMatch m;
                m.id = FamilyId::Disc2D2Comp;
                m.components = {star_side, other_side};
                m.component_kinds = {k3_or_star_kind(g, star_side), family_name(match->first)};
                m.vertex_map = map_to_parent(match->second, sub.to_parent);
                r.families.push_back(std::move(m));
                break;
            }
        }
    }
    for (FamilyId id : {FamilyId::B1, FamilyId::B2, FamilyId::B3, FamilyId::B4, FamilyId::B5,
                        FamilyId::B6, FamilyId::B7, FamilyId::B8, FamilyId::B9})
        add_pattern_match(r.families, g, family_pattern(id));

    if (auto map = recognize_fixed(g, exceptional_graph_e1())) {
        FamilyMatch m;
        m.id = FamilyId::E1;
        m.vertex_map = *map;
        r.families.push_back(std::move(m));
    }
    if (auto map = recognize_fixed(g, exceptional_graph_e2())) {
        FamilyMatch m;
        m.id = FamilyId::E2;
        m.vertex_map = *map;
        r.families.push_back(std::move(m));
    }
    if (auto petal = recognize_petal(g)) {
        FamilyMatch m;
        m.id = FamilyId::BP;
        m.center = petal->center;
        m.components = petal->petals;
        m.component_kinds = petal->petal_kinds;
        r.families.push_back(std::move(m));
    }
    if (auto cycle = recognize_bc7(g)) {
        FamilyMatch m;
        m.id = FamilyId::BC7;
        m.cycle = std::move(*cycle);
        r.families.push_back(std::move(m));
    }

    r.is_buchsbaum = is_2d_buchsbaum_direct(g);
    r.is_cm = is_cm_homological(matching_complex(g));
    if (!r.is_buchsbaum) r.failing_edge = find_buchsbaum_failing_edge(g);
    return r;
}

ClassificationResult classify(const Graph& g) {
    const int dim = matching_dim(g);
    if (dim == 1) return classify_1d(g);
    if (dim == 2) return classify_2d(g);

    ClassificationResult r;
    r.is_matroid = is_matroid(g);
    if (dim == -1) {
        r.dim = -1;
        r.is_buchsbaum = true;  // M(G) = {∅}; the vanishing conditions are vacuous
        r.is_cm = true;
        return r;
    }
    if (dim == 0) {
        r.dim = 0;
        r.is_buchsbaum = true;  // points are Cohen-Macaulay
        r.is_cm = true;
        return r;
    }
    const SimplicialComplex m = matching_complex(g);
    if (m.face_count() > kHomologyFaceCap)
        throw CapabilityError("matching complex too large for homological verdicts");
    r.dim = m.dimension();
    r.is_buchsbaum = is_buchsbaum_homological(m);
    r.is_cm = is_cm_homological(m);
    return r;
}

std::optional<std::vector<int>> recognize_bc7(const Graph& g) {
    if (g.vertex_count() != 7 || !contains_cycle(g, 7)) return std::nullopt;
    if (!is_2d_buchsbaum_direct(g)) return std::nullopt;
    return find_cycle(g, 7);
}

bool is_link_connected(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("is_link_connected requires a connected graph");
    for (const Edge& e : g.edges()) {
        const auto ne = non_adjacent_subgraph(g, e);
        if (connected_components(ne.graph).size() > 1) return false;
    }
    return true;
}

bool is_matroid_by_path(const Graph& g) {
    if (g.vertex_count() == 0 || g.edge_count() == 0) return true;
    return !longest_path_at_least(g, 3);
}

bool is_matroid_by_decomposition(const Graph& g) {
    for (const auto& comp : connected_components(g))
        if (comp.size() > 1 && !component_is_k3_or_star(g, comp)) return false;
    return true;
}

bool is_matroid(const Graph& g) {
    const bool by_path = is_matroid_by_path(g);
    if (by_path != is_matroid_by_decomposition(g))
        throw std::logic_error("matroid criteria disagree");
    return by_path;
}

nlohmann::ordered_json KmnThresholds::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["n"] = n;
    j["cm_predicted"] = cm_predicted;
    j["cm_computed"] = cm_computed;
    j["buchsbaum_predicted"] = buchsbaum_predicted;
    j["buchsbaum_computed"] = buchsbaum_computed;
    return j;
}

KmnThresholds kmn_thresholds(int m, int n) {
    if (m < 1 || m > n || n > 8 || m > 3)
        throw CapabilityError("kmn_thresholds requires 1 <= m <= n <= 8 and m <= 3");
    KmnThresholds t;
    t.m = m;
    t.n = n;
    t.cm_predicted = n >= 2 * m - 1;
    t.buchsbaum_predicted = n >= 2 * m - 2;
    const SimplicialComplex c = matching_complex(complete_bipartite(m, n));
    t.cm_computed = is_cm_homological(c);
    t.buchsbaum_computed = is_buchsbaum_homological(c);
    return t;
}

namespace {

bool cycle_path_dfs(const Graph& g, int start, int v, std::uint64_t visited, int remaining,
                    std::vector<int>& path) {
    if (remaining == 0) {
        if (g.has_edge(v, start)) return true;
        return false;
    }
    std::uint64_t cand = g.neighbor_mask(v) & ~visited;
    cand &= ~(bit(start) | (bit(start) - 1));
    for (; cand != 0; cand &= cand - 1) {
        const int w = std::countr_zero(cand);
        path.push_back(w);
        if (cycle_path_dfs(g, start, w, visited | bit(w), remaining - 1, path)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_cycle(const Graph& g, int k) {
    if (k < 3 || k > g.vertex_count())
        throw PreconditionError("find_cycle requires 3 <= k <= n");
    for (int start = 0; start + k <= g.vertex_count(); ++start) {
        std::vector<int> path{start};
        if (cycle_path_dfs(g, start, start, bit(start), k - 1, path)) return path;
    }
    return std::nullopt;
}

}  // namespace matchtop
