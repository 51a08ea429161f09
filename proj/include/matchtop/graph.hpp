#ifndef MATCHTOP_GRAPH_HPP
#define MATCHTOP_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace matchtop {

// An undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A set of pairwise vertex-disjoint edges.
struct Matching {
    std::vector<Edge> edges;  // sorted

    friend bool operator==(const Matching&, const Matching&) = default;
};

// Simple undirected graph on dense vertex ids 0..n-1, at most 64 vertices.
// Adjacency is kept as one 64-bit set per vertex. Instances are immutable
// once built; all operations below are pure functions.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    explicit Graph(int n);

    // Throws InputError on self-loops or out-of-range endpoints,
    // CapabilityError when n exceeds kMaxVertices. Duplicate edges collapse.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < n_; }
    std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
    int degree(int v) const;

    // Edges in lexicographic (u, v) order.
    const std::vector<Edge>& edges() const { return edges_; }
    // Index of an edge in edges(), if present.
    std::optional<int> edge_index(Edge e) const;

    bool has_isolated_vertex() const;

    // Optional per-vertex labels carried from parsers; empty when unset.
    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label_of(int v) const;  // falls back to the numeric id

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
};

// A subgraph together with the map back to the parent graph's vertex ids.
struct RelabeledSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new id -> parent id
};

// The graph with isolated vertices removed and ids recompacted.
struct NormalizedGraph {
    Graph graph;
    std::vector<int> to_parent;
    bool removed_isolated = false;
};

// --- constructions ---------------------------------------------------------

Graph path_graph(int vertices);
Graph cycle_graph(int vertices);
Graph complete_graph(int vertices);
Graph complete_bipartite(int m, int n);
Graph star_graph(int leaves);  // S_n: center 0, leaves 1..n
Graph disjoint_union(const Graph& a, const Graph& b);
Graph bowtie_graph();

NormalizedGraph normalize(const Graph& g);

// --- operations -------------------------------------------------------------

// The subgraph induced by all edges of g disjoint from e, with isolated
// vertices removed and ids recompacted. Throws InputError if e is not in g.
RelabeledSubgraph non_adjacent_subgraph(const Graph& g, Edge e);

// min(cap, maximum matching cardinality), by bounded backtracking.
int max_matching_size(const Graph& g, int cap);

// All matchings with at most max_size edges, the empty matching included,
// in lexicographic order of their sorted edge lists.
std::vector<Matching> enumerate_matchings(const Graph& g, int max_size);

// True iff g contains a k-cycle as a subgraph (3 <= k <= n).
bool contains_cycle(const Graph& g, int k);

// True iff g has a simple path with at least len edges (len >= 1).
bool longest_path_at_least(const Graph& g, int len);

struct StructuralPredicates {
    bool is_connected = false;
    std::vector<std::vector<int>> components;  // vertex sets, each sorted
    bool is_bipartite = false;
    std::vector<std::vector<int>> bipartition;  // two sides when bipartite
    std::vector<int> degree_sequence;           // descending
};

StructuralPredicates structural_predicates(const Graph& g);

// Vertex sets of connected components, sorted, in order of smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace matchtop

#endif  // MATCHTOP_GRAPH_HPP
