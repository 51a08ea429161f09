#include "matchtop/iso.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "matchtop/errors.hpp"
#include "matchtop/graph_io.hpp"

namespace matchtop {

namespace {

constexpr int kMaxCanonVertices = 16;

using Cells = std::vector<std::vector<int>>;

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Upper-triangle adjacency bits in graph6 bit order, packed big-endian into
// two words; enough for n <= 16 (120 bits).
struct Encoding {
    std::array<std::uint64_t, 2> words{0, 0};
    int nbits = 0;

    void push(bool b) {
        if (b) words[nbits / 64] |= std::uint64_t{1} << (63 - nbits % 64);
        ++nbits;
    }
    friend auto operator<=>(const Encoding& a, const Encoding& b) {
        return a.words <=> b.words;
    }
    friend bool operator==(const Encoding&, const Encoding&) = default;
};

struct Canonizer {
    const Graph& g;
    int n;
    Encoding best;
    std::vector<int> best_order;
    bool have_best = false;

    explicit Canonizer(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

    // Splits every cell by the multiset of neighbor counts per cell until the
    // partition is equitable. New cells are ordered by (size, signature) so
    // the refinement is label-independent.
    void refine(Cells& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<int> cell_of(n, 0);
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) cell_of[v] = static_cast<int>(c);

            Cells next;
            next.reserve(cells.size());
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                // signature of v = counts of neighbors in each current cell
                std::vector<std::pair<std::vector<int>, int>> sigs;
                sigs.reserve(cell.size());
                for (int v : cell) {
                    std::vector<int> sig(cells.size(), 0);
                    for (std::uint64_t m = g.neighbor_mask(v); m != 0; m &= m - 1)
                        ++sig[cell_of[std::countr_zero(m)]];
                    sigs.emplace_back(std::move(sig), v);
                }
                std::stable_sort(sigs.begin(), sigs.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                // group equal signatures
                std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
                for (auto& [sig, v] : sigs) {
                    if (groups.empty() || groups.back().first != sig)
                        groups.push_back({sig, {}});
                    groups.back().second.push_back(v);
                }
                if (groups.size() > 1) changed = true;
                std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
                    if (a.second.size() != b.second.size())
                        return a.second.size() < b.second.size();
                    return a.first < b.first;
                });
                for (auto& grp : groups) next.push_back(std::move(grp.second));
            }
            cells = std::move(next);
        }
    }

    Encoding encode(const std::vector<int>& order) const {
        Encoding enc;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) enc.push(g.has_edge(order[i], order[j]));
        return enc;
    }

    void search(Cells cells) {
        refine(cells);
        std::size_t split = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1) {
                split = c;
                break;
            }
        if (split == cells.size()) {
            std::vector<int> order;
            order.reserve(n);
            for (const auto& cell : cells) order.push_back(cell[0]);
            Encoding enc = encode(order);
            if (!have_best || enc < best) {
                best = enc;
                best_order = order;
                have_best = true;
            }
            return;
        }
        // Individualize each member of the first non-singleton cell. Vertices
        // interchangeable with an already-tried one (twins) give identical
        // subtrees and are skipped.
        std::vector<int> tried;
        for (int v : cells[split]) {
            bool twin = false;
            for (int u : tried) {
                std::uint64_t strip = ~(bit(u) | bit(v));
                if ((g.neighbor_mask(u) & strip) == (g.neighbor_mask(v) & strip)) {
                    twin = true;
                    break;
                }
            }
            if (twin) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != split) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[c])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxCanonVertices)
        throw CapabilityError("canonical labeling supports at most 16 vertices");
    if (n == 0) return Graph(0);

    Canonizer cz(g);
    Cells initial(1);
    initial[0].resize(n);
    for (int v = 0; v < n; ++v) initial[0][v] = v;
    cz.search(std::move(initial));

    // best_order[i] = original vertex placed at canonical position i
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[cz.best_order[i]] = i;
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.emplace_back(pos[e.u], pos[e.v]);
    return Graph::from_edges(n, edges);
}

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{to_graph6(canonical_graph(g))};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> dedup_by_iso(const std::vector<Graph>& gs) {
    std::vector<Graph> out;
    std::unordered_set<std::string> seen;
    for (const Graph& g : gs)
        if (seen.insert(canonical_form(g).bytes).second) out.push_back(g);
    return out;
}

}  // namespace matchtop
