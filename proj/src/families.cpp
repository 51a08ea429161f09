#include "matchtop/families.hpp"

#include <algorithm>
#include <bit>

#include "matchtop/errors.hpp"

namespace matchtop {

std::string family_name(FamilyId id) {
    switch (id) {
        case FamilyId::G1: return "G1";
        case FamilyId::G2: return "G2";
        case FamilyId::G3: return "G3";
        case FamilyId::Bowtie: return "BOWTIE";
        case FamilyId::B1: return "B1";
        case FamilyId::B2: return "B2";
        case FamilyId::B3: return "B3";
        case FamilyId::B4: return "B4";
        case FamilyId::B5: return "B5";
        case FamilyId::B6: return "B6";
        case FamilyId::B7: return "B7";
        case FamilyId::B8: return "B8";
        case FamilyId::B9: return "B9";
        case FamilyId::E1: return "E1";
        case FamilyId::E2: return "E2";
        case FamilyId::BP: return "B_P";
        case FamilyId::BC7: return "B_C7";
        case FamilyId::K4: return "K4";
        case FamilyId::C4: return "C4";
        case FamilyId::Disc1D: return "DISC_1D";
        case FamilyId::Disc2D3Comp: return "DISC_2D_3COMP";
        case FamilyId::Disc2D2Comp: return "DISC_2D_2COMP";
    }
    return "?";
}

bool FamilyPattern::is_hub(int v) const {
    return std::find(hubs.begin(), hubs.end(), v) != hubs.end();
}

const std::vector<FamilyPattern>& family_patterns() {
    // Transcribed from the family figures; hubs are the star-marked vertices.
    static const std::vector<FamilyPattern> kPatterns = {
        // G1: path 0-1-2-3-4, hubs 1 and 3, optional chords 0-3 and 1-4.
        {FamilyId::G1, 5, {1, 3}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}, {{0, 3}, {1, 4}}},
        // G2: triangle 0-1-2 with tail 2-3-4, hub 3, optional 0-3 and 1-3.
        {FamilyId::G2,
         5,
         {3},
         {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}},
         {{0, 3}, {1, 3}}},
        // G3: a 5-cycle with every chord optional; no hubs.
        {FamilyId::G3,
         5,
         {},
         {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}},
         {{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}}},
        // Bowtie: two triangles sharing vertex 2.
        {FamilyId::Bowtie, 5, {}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}, {}},
        // B1: a perfect 3-matching, hubs on one side.
        {FamilyId::B1, 6, {0, 1, 2}, {{0, 3}, {1, 4}, {2, 5}}, {}},
        // B2: hubs 0,1,2; vertices 3,5 join hubs 0,1 and vertices 4,6 join 1,2.
        {FamilyId::B2,
         7,
         {0, 1, 2},
         {{0, 3}, {1, 3}, {1, 4}, {2, 4}, {1, 5}, {0, 5}, {2, 6}, {1, 6}},
         {}},
        // B3: 6-cycle 0-4-1-5-2-6 with center 3 joined to all hubs;
        // each rim vertex optionally joins the opposite hub.
        {FamilyId::B3,
         7,
         {0, 1, 2},
         {{0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {0, 6}, {0, 3}, {1, 3}, {2, 3}},
         {{0, 5}, {1, 6}, {2, 4}}},
        // B4: same 6-cycle, center 3 joined to hubs 1,2 only, pendant 7 on hub 0.
        {FamilyId::B4,
         8,
         {0, 1, 2},
         {{0, 4}, {1, 4}, {1, 5}, {2, 5}, {2, 6}, {0, 6}, {1, 3}, {2, 3}, {0, 7}},
         {{0, 5}, {1, 6}, {2, 4}}},
        // B5
        {FamilyId::B5,
         8,
         {0, 1, 2},
         {{0, 4}, {0, 3}, {1, 3}, {1, 5}, {0, 5}, {2, 5}, {2, 6}, {2, 7}, {1, 7}},
         {{1, 6}, {1, 4}, {0, 7}, {2, 3}}},
        // B6
        {FamilyId::B6,
         8,
         {0, 1, 2},
         {{0, 3}, {0, 4}, {1, 4}, {1, 7}, {2, 7}, {2, 6}, {1, 5}},
         {{2, 4}, {2, 5}, {1, 6}}},
        // B7: two triangles hung off the single hub 0, plus a pendant 7.
        {FamilyId::B7,
         8,
         {0},
         {{1, 2}, {2, 3}, {1, 3}, {0, 1}, {0, 4}, {4, 5}, {5, 6}, {4, 6}, {0, 7}},
         {{0, 2}, {0, 3}, {0, 5}, {0, 6}}},
        // B8: triangle 2-3-4 on hub 0; path 0-5-1; pendants 6 on 0 and 7 on 1.
        {FamilyId::B8,
         8,
         {0, 1},
         {{2, 3}, {3, 4}, {2, 4}, {0, 2}, {0, 5}, {1, 5}, {1, 7}, {0, 6}},
         {{0, 3}, {0, 4}, {1, 6}, {0, 7}}},
        // B9: triangle 2-5-6 hung by its apex 2 on both hubs, vertex 7 joined
        // to both hubs, pendant 3 on hub 0 and pendant 4 on hub 1.
        {FamilyId::B9,
         8,
         {0, 1},
         {{2, 5}, {2, 6}, {5, 6}, {0, 2}, {1, 2}, {0, 7}, {1, 7}, {0, 3}, {1, 4}},
         {{1, 3}, {0, 4}}},
    };
    return kPatterns;
}

const FamilyPattern& family_pattern(FamilyId id) {
    for (const FamilyPattern& p : family_patterns())
        if (p.id == id) return p;
    throw PreconditionError("no pattern for family " + family_name(id));
}

const Graph& exceptional_graph_e1() {
    // Two K4s sharing vertex 0.
    static const Graph kE1 = Graph::from_edges(
        7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
            {0, 4}, {0, 5}, {0, 6}, {4, 5}, {4, 6}, {5, 6}});
    return kE1;
}

const Graph& exceptional_graph_e2() {
    // A K4 through vertex 0 plus the 4-cycle 0-4-5-6.
    static const Graph kE2 = Graph::from_edges(
        7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}});
    return kE2;
}

Graph pattern_core(const FamilyPattern& pattern, std::uint32_t optional_mask) {
    std::vector<Edge> edges;
    for (const auto& [u, v] : pattern.required_edges) edges.emplace_back(u, v);
    for (std::size_t i = 0; i < pattern.optional_edges.size(); ++i)
        if (optional_mask & (std::uint32_t{1} << i))
            edges.emplace_back(pattern.optional_edges[i].first, pattern.optional_edges[i].second);
    return Graph::from_edges(pattern.num_vertices, edges);
}

namespace {

struct PatternIndex {
    int n = 0;
    std::vector<std::uint64_t> required;   // adjacency over pattern vertices
    std::vector<std::uint64_t> optional;
    std::vector<int> order;                // assignment order
    std::vector<bool> hub;
};

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

PatternIndex build_index(const FamilyPattern& p) {
    PatternIndex idx;
    idx.n = p.num_vertices;
    idx.required.assign(p.num_vertices, 0);
    idx.optional.assign(p.num_vertices, 0);
    idx.hub.assign(p.num_vertices, false);
    for (int h : p.hubs) idx.hub[h] = true;
    for (const auto& [u, v] : p.required_edges) {
        idx.required[u] |= bit(v);
        idx.required[v] |= bit(u);
    }
    for (const auto& [u, v] : p.optional_edges) {
        idx.optional[u] |= bit(v);
        idx.optional[v] |= bit(u);
    }
    // Assignment order: start at the vertex with the most required edges,
    // then repeatedly take the vertex with the most required edges into the
    // placed set. Keeps candidate lists small during the search.
    std::vector<bool> placed(p.num_vertices, false);
    for (int step = 0; step < p.num_vertices; ++step) {
        int best = -1, best_links = -1, best_deg = -1;
        for (int v = 0; v < p.num_vertices; ++v) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : idx.order)
                if (idx.required[v] & bit(u)) ++links;
            const int deg = std::popcount(idx.required[v]);
            if (links > best_links || (links == best_links && deg > best_deg)) {
                best = v;
                best_links = links;
                best_deg = deg;
            }
        }
        placed[best] = true;
        idx.order.push_back(best);
    }
    return idx;
}

struct Matcher {
    const Graph& g;
    const PatternIndex& idx;
    std::vector<int> map;        // pattern vertex -> g vertex, -1 unassigned
    std::uint64_t used = 0;      // g vertices taken
    std::uint64_t hub_images = 0;

    Matcher(const Graph& graph, const PatternIndex& index)
        : g(graph), idx(index), map(index.n, -1) {}

    bool satellites_ok() const {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (used & bit(v)) continue;
            const std::uint64_t nb = g.neighbor_mask(v);
            if (nb == 0 || (nb & ~hub_images)) return false;
        }
        return true;
    }

    bool assign(std::size_t step) {
        if (step == idx.order.size()) return satellites_ok();
        const int p = idx.order[step];
        const int req_deg = std::popcount(idx.required[p]);
        const int max_deg = req_deg + std::popcount(idx.optional[p]);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (used & bit(v)) continue;
            const int deg = g.degree(v);
            if (deg < req_deg) continue;
            if (!idx.hub[p] && deg > max_deg) continue;
            bool ok = true;
            for (std::size_t s = 0; s < step && ok; ++s) {
                const int q = idx.order[s];
                const bool has = g.has_edge(v, map[q]);
                if (idx.required[p] & bit(q)) {
                    ok = has;
                } else if (idx.optional[p] & bit(q)) {
                    // either way
                } else {
                    ok = !has;
                }
            }
            if (!ok) continue;
            map[p] = v;
            used |= bit(v);
            if (idx.hub[p]) hub_images |= bit(v);
            if (assign(step + 1)) return true;
            map[p] = -1;
            used &= ~bit(v);
            if (idx.hub[p]) hub_images &= ~bit(v);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> recognize_family(const Graph& g, const FamilyPattern& pattern) {
    if (g.vertex_count() < pattern.num_vertices) return std::nullopt;
    if (pattern.hubs.empty() && g.vertex_count() != pattern.num_vertices) return std::nullopt;
    const PatternIndex idx = build_index(pattern);
    Matcher m(g, idx);
    if (!m.assign(0)) return std::nullopt;
    return m.map;
}

namespace {

// Component vertex sets of g with the vertices in `removed` deleted.
std::vector<std::uint64_t> component_masks_without(const Graph& g, std::uint64_t removed) {
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = removed;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen & bit(v)) continue;
        std::uint64_t comp = bit(v);
        for (;;) {
            std::uint64_t grown = comp;
            for (std::uint64_t m = comp; m != 0; m &= m - 1)
                grown |= g.neighbor_mask(std::countr_zero(m)) & ~removed;
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

}  // namespace

std::optional<PetalWitness> recognize_petal(const Graph& g) {
    for (int c = 0; c < g.vertex_count(); ++c) {
        if (g.degree(c) < 3) continue;
        auto comps = component_masks_without(g, bit(c));
        if (comps.size() != 3) continue;
        PetalWitness witness;
        witness.center = c;
        bool ok = true;
        for (std::uint64_t comp : comps) {
            const auto verts = mask_to_vertices(comp);
            const std::uint64_t center_nbrs = g.neighbor_mask(c) & comp;
            if (verts.size() == 2 && g.has_edge(verts[0], verts[1]) &&
                center_nbrs == comp) {
                witness.petals.push_back(verts);
                witness.petal_kinds.emplace_back("K3");
                continue;
            }
            // Star petal: the center attaches to exactly the star's center z,
            // and all component edges are incident to z.
            if (verts.size() < 2 || std::popcount(center_nbrs) != 1) {
                ok = false;
                break;
            }
            const int z = std::countr_zero(center_nbrs);
            bool star = true;
            for (int v : verts) {
                if (v == z) continue;
                if ((g.neighbor_mask(v) & comp) != bit(z)) {
                    star = false;
                    break;
                }
            }
            if (!star) {
                ok = false;
                break;
            }
            witness.petals.push_back(verts);
            witness.petal_kinds.emplace_back("star");
        }
        if (ok) return witness;
    }
    return std::nullopt;
}

namespace {

bool extend_isomorphism(const Graph& a, const Graph& b, std::vector<int>& map,
                        std::uint64_t used, int next) {
    if (next == a.vertex_count()) return true;
    for (int v = 0; v < b.vertex_count(); ++v) {
        if (used & bit(v)) continue;
        if (a.degree(next) != b.degree(v)) continue;
        bool ok = true;
        for (int p = 0; p < next && ok; ++p)
            if (a.has_edge(next, p) != b.has_edge(v, map[p])) ok = false;
        if (!ok) continue;
        map[next] = v;
        if (extend_isomorphism(a, b, map, used | bit(v), next + 1)) return true;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> recognize_fixed(const Graph& g, const Graph& reference) {
    if (g.vertex_count() != reference.vertex_count() ||
        g.edge_count() != reference.edge_count())
        return std::nullopt;
    std::vector<int> map(reference.vertex_count(), -1);
    if (!extend_isomorphism(reference, g, map, 0, 0)) return std::nullopt;
    return map;
}

bool component_is_k3_or_star(const Graph& g, const std::vector<int>& component) {
    std::uint64_t mask = 0;
    for (int v : component) mask |= bit(v);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if ((bit(e.u) & mask) && (bit(e.v) & mask)) edges.push_back(e);
    if (edges.empty()) return false;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Edge &a = edges[i], &b = edges[j];
            if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) return false;
        }
    return true;
}

}  // namespace matchtop
