#include "matchtop/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "matchtop/errors.hpp"

namespace matchtop {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

}  // namespace

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    if (n > kMaxVertices)
        throw CapabilityError("graphs with more than 64 vertices are not supported");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
        if (e.u == e.v) throw InputError("self-loops are not allowed");
        if (e.u < 0 || e.v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                             std::to_string(e.v));
        g.adj_[e.u] |= bit(e.v);
        g.adj_[e.v] |= bit(e.u);
    }
    for (int u = 0; u < n; ++u)
        for (std::uint64_t m = g.adj_[u] >> (u + 1) << (u + 1); m != 0; m &= m - 1)
            g.edges_.push_back(Edge(u, std::countr_zero(m)));
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v) || u == v) return false;
    return (adj_[u] & bit(v)) != 0;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::optional<int> Graph::edge_index(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

bool Graph::has_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
        if (adj_[v] == 0) return true;
    return false;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_)
        throw InputError("label count does not match vertex count");
    labels_ = std::move(labels);
}

std::string Graph::label_of(int v) const {
    if (!labels_.empty()) return labels_[v];
    return std::to_string(v);
}

Graph path_graph(int vertices) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < vertices; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(vertices, es);
}

Graph cycle_graph(int vertices) {
    std::vector<Edge> es;
    for (int i = 0; i < vertices; ++i) es.emplace_back(i, (i + 1) % vertices);
    return Graph::from_edges(vertices, es);
}

Graph complete_graph(int vertices) {
    std::vector<Edge> es;
    for (int u = 0; u < vertices; ++u)
        for (int v = u + 1; v < vertices; ++v) es.emplace_back(u, v);
    return Graph::from_edges(vertices, es);
}

Graph complete_bipartite(int m, int n) {
    std::vector<Edge> es;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) es.emplace_back(u, m + v);
    return Graph::from_edges(m + n, es);
}

Graph star_graph(int leaves) {
    std::vector<Edge> es;
    for (int v = 1; v <= leaves; ++v) es.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es(a.edges());
    const int off = a.vertex_count();
    for (const Edge& e : b.edges()) es.emplace_back(e.u + off, e.v + off);
    return Graph::from_edges(off + b.vertex_count(), es);
}

Graph bowtie_graph() {
    // Two triangles sharing vertex 2.
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

NormalizedGraph normalize(const Graph& g) {
    NormalizedGraph out;
    std::vector<int> new_id(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.neighbor_mask(v) != 0) {
            new_id[v] = static_cast<int>(out.to_parent.size());
            out.to_parent.push_back(v);
        } else {
            out.removed_isolated = true;
        }
    }
    std::vector<Edge> es;
    es.reserve(g.edges().size());
    for (const Edge& e : g.edges()) es.emplace_back(new_id[e.u], new_id[e.v]);
    out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), es);
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        labels.reserve(out.to_parent.size());
        for (int p : out.to_parent) labels.push_back(g.labels()[p]);
        out.graph.set_labels(std::move(labels));
    }
    return out;
}

RelabeledSubgraph non_adjacent_subgraph(const Graph& g, Edge e) {
    if (!g.edge_index(e))
        throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is not in the graph");
    const std::uint64_t blocked = bit(e.u) | bit(e.v);
    std::vector<Edge> kept;
    std::uint64_t used = 0;
    for (const Edge& f : g.edges()) {
        if ((bit(f.u) | bit(f.v)) & blocked) continue;
        kept.push_back(f);
        used |= bit(f.u) | bit(f.v);
    }
    RelabeledSubgraph out;
    std::vector<int> new_id(g.vertex_count(), -1);
    for (std::uint64_t m = used; m != 0; m &= m - 1) {
        int v = std::countr_zero(m);
        new_id[v] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<Edge> es;
    es.reserve(kept.size());
    for (const Edge& f : kept) es.emplace_back(new_id[f.u], new_id[f.v]);
    out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), es);
    return out;
}

namespace {

// Backtracking over edges in index order; stops as soon as `cap` is reached.
int matching_search(const std::vector<Edge>& edges, std::size_t first, std::uint64_t used,
                    int size, int cap) {
    if (size == cap) return size;
    int best = size;
    for (std::size_t i = first; i < edges.size(); ++i) {
        const std::uint64_t m = bit(edges[i].u) | bit(edges[i].v);
        if (m & used) continue;
        best = std::max(best, matching_search(edges, i + 1, used | m, size + 1, cap));
        if (best == cap) return best;
    }
    return best;
}

}  // namespace

int max_matching_size(const Graph& g, int cap) {
    if (cap < 1) throw PreconditionError("max_matching_size requires cap >= 1");
    return matching_search(g.edges(), 0, 0, 0, cap);
}

namespace {

void matchings_rec(const Graph& g, std::size_t first, std::uint64_t used,
                   std::vector<Edge>& current, int max_size, std::vector<Matching>& out) {
    out.push_back(Matching{current});
    if (static_cast<int>(current.size()) == max_size) return;
    const auto& edges = g.edges();
    for (std::size_t i = first; i < edges.size(); ++i) {
        const std::uint64_t m = bit(edges[i].u) | bit(edges[i].v);
        if (m & used) continue;
        current.push_back(edges[i]);
        matchings_rec(g, i + 1, used | m, current, max_size, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Matching> enumerate_matchings(const Graph& g, int max_size) {
    if (max_size < 0) throw PreconditionError("enumerate_matchings requires max_size >= 0");
    std::vector<Matching> out;
    std::vector<Edge> current;
    matchings_rec(g, 0, 0, current, max_size, out);
    return out;
}

namespace {

// Extends a simple path start..v looking for a cycle of length exactly k
// closing back at `start`. Only vertices larger than `start` may appear, so
// each cycle is found from its smallest vertex.
bool cycle_dfs(const Graph& g, int start, int v, std::uint64_t visited, int remaining) {
    if (remaining == 0) return g.has_edge(v, start);
    std::uint64_t cand = g.neighbor_mask(v) & ~visited;
    cand &= ~(bit(start) - 1);  // nothing below start
    cand &= ~bit(start);
    for (; cand != 0; cand &= cand - 1) {
        int w = std::countr_zero(cand);
        if (cycle_dfs(g, start, w, visited | bit(w), remaining - 1)) return true;
    }
    return false;
}

bool path_dfs(const Graph& g, int v, std::uint64_t visited, int remaining) {
    if (remaining == 0) return true;
    std::uint64_t cand = g.neighbor_mask(v) & ~visited;
    for (; cand != 0; cand &= cand - 1) {
        int w = std::countr_zero(cand);
        if (path_dfs(g, w, visited | bit(w), remaining - 1)) return true;
    }
    return false;
}

}  // namespace

bool contains_cycle(const Graph& g, int k) {
    if (k < 3 || k > g.vertex_count())
        throw PreconditionError("contains_cycle requires 3 <= k <= n");
    for (int start = 0; start + k <= g.vertex_count(); ++start) {
        if (cycle_dfs(g, start, start, bit(start), k - 1)) return true;
    }
    return false;
}

bool longest_path_at_least(const Graph& g, int len) {
    if (len < 1) throw PreconditionError("longest_path_at_least requires len >= 1");
    if (len >= g.vertex_count()) return false;  // a path with len edges needs len+1 vertices
    for (int v = 0; v < g.vertex_count(); ++v)
        if (path_dfs(g, v, bit(v), len)) return true;
    return false;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (seen & bit(v)) continue;
        std::uint64_t comp = bit(v);
        for (;;) {
            std::uint64_t grown = comp;
            for (std::uint64_t m = comp; m != 0; m &= m - 1)
                grown |= g.neighbor_mask(std::countr_zero(m));
            if (grown == comp) break;
            comp = grown;
        }
        seen |= comp;
        std::vector<int> vs;
        for (std::uint64_t m = comp; m != 0; m &= m - 1) vs.push_back(std::countr_zero(m));
        comps.push_back(std::move(vs));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

StructuralPredicates structural_predicates(const Graph& g) {
    StructuralPredicates out;
    out.components = connected_components(g);
    out.is_connected = out.components.size() <= 1;

    // 2-coloring by BFS; a color clash means an odd cycle.
    std::vector<int> color(g.vertex_count(), -1);
    out.is_bipartite = true;
    for (int s = 0; s < g.vertex_count() && out.is_bipartite; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty() && out.is_bipartite) {
            int v = queue.back();
            queue.pop_back();
            for (std::uint64_t m = g.neighbor_mask(v); m != 0; m &= m - 1) {
                int w = std::countr_zero(m);
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    out.is_bipartite = false;
                    break;
                }
            }
        }
    }
    if (out.is_bipartite) {
        out.bipartition.assign(2, {});
        for (int v = 0; v < g.vertex_count(); ++v)
            out.bipartition[color[v] == 1 ? 1 : 0].push_back(v);
    }
    for (int v = 0; v < g.vertex_count(); ++v) out.degree_sequence.push_back(g.degree(v));
    std::sort(out.degree_sequence.rbegin(), out.degree_sequence.rend());
    return out;
}

}  // namespace matchtop
