#include "matchtop/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "matchtop/errors.hpp"

namespace matchtop {

namespace {

constexpr long long kMaxFaces = 2'000'000;

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : f) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

SimplicialComplex SimplicialComplex::from_faces(int n_vertices, std::vector<Face> faces,
                                                std::vector<std::string> labels) {
    SimplicialComplex c;
    c.n_vertices_ = n_vertices;
    c.labels_ = std::move(labels);

    int dim = -1;
    for (const Face& f : faces) dim = std::max(dim, static_cast<int>(f.size()) - 1);
    c.faces_by_dim_.assign(dim + 1, {});
    for (Face& f : faces) {
        if (f.empty()) continue;  // the empty face is implicit
        c.faces_by_dim_[f.size() - 1].push_back(std::move(f));
    }
    for (auto& level : c.faces_by_dim_) {
        std::sort(level.begin(), level.end());
        level.erase(std::unique(level.begin(), level.end()), level.end());
    }

    // A face is a facet iff it is not contained in a face one dimension up.
    for (int d = 0; d <= dim; ++d) {
        std::unordered_set<Face, FaceHash> dominated;
        if (d + 1 <= dim) {
            for (const Face& f : c.faces_by_dim_[d + 1]) {
                Face sub(f.size() - 1);
                for (std::size_t skip = 0; skip < f.size(); ++skip) {
                    for (std::size_t i = 0, j = 0; i < f.size(); ++i)
                        if (i != skip) sub[j++] = f[i];
                    dominated.insert(sub);
                }
            }
        }
        for (const Face& f : c.faces_by_dim_[d])
            if (!dominated.count(f)) c.facets_.push_back(f);
    }
    std::sort(c.facets_.begin(), c.facets_.end());
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(int n_vertices, std::vector<Face> facets,
                                                 std::vector<std::string> labels) {
    std::unordered_set<Face, FaceHash> all;
    for (Face f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= n_vertices) throw InputError("facet vertex out of range");
        if (f.size() > 62) throw CapabilityError("facet too large to enumerate");
        const std::uint64_t subsets = std::uint64_t{1} << f.size();
        for (std::uint64_t m = 1; m < subsets; ++m) {
            Face sub;
            for (std::uint64_t b = m; b != 0; b &= b - 1)
                sub.push_back(f[std::countr_zero(b)]);
            all.insert(std::move(sub));
            if (static_cast<long long>(all.size()) > kMaxFaces)
                throw CapabilityError("complex exceeds the supported face count");
        }
    }
    std::vector<Face> faces(all.begin(), all.end());
    return from_faces(n_vertices, std::move(faces), std::move(labels));
}

int SimplicialComplex::dimension() const {
    return static_cast<int>(faces_by_dim_.size()) - 1;
}

const std::vector<Face>& SimplicialComplex::faces_of_dim(int d) const {
    static const std::vector<Face> kEmpty;
    if (d < 0 || d >= static_cast<int>(faces_by_dim_.size())) return kEmpty;
    return faces_by_dim_[d];
}

std::vector<long long> SimplicialComplex::f_vector() const {
    std::vector<long long> f;
    f.reserve(faces_by_dim_.size());
    for (const auto& level : faces_by_dim_) f.push_back(static_cast<long long>(level.size()));
    return f;
}

long long SimplicialComplex::face_count() const {
    long long total = 0;
    for (const auto& level : faces_by_dim_) total += static_cast<long long>(level.size());
    return total;
}

bool SimplicialComplex::has_face(std::span<const int> face) const {
    if (face.empty()) return true;
    const int d = static_cast<int>(face.size()) - 1;
    if (d >= static_cast<int>(faces_by_dim_.size())) return false;
    Face key(face.begin(), face.end());
    std::sort(key.begin(), key.end());
    const auto& level = faces_by_dim_[d];
    return std::binary_search(level.begin(), level.end(), key);
}

std::string SimplicialComplex::label_of(int v) const {
    if (!labels_.empty()) return labels_[v];
    return std::to_string(v);
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    const std::size_t top = faces_by_dim_.size();
    for (const Face& f : facets_)
        if (f.size() != top) return false;
    return true;
}

std::vector<std::vector<int>> SimplicialComplex::skeleton_components() const {
    std::vector<int> parent(n_vertices_, -1);
    for (const Face& v : faces_of_dim(0)) parent[v[0]] = v[0];
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Face& e : faces_of_dim(1)) parent[find(e[0])] = find(e[1]);

    std::vector<std::vector<int>> comps;
    std::vector<int> comp_index(n_vertices_, -1);
    for (int v = 0; v < n_vertices_; ++v) {
        if (parent[v] == -1) continue;
        int r = find(v);
        if (comp_index[r] == -1) {
            comp_index[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[comp_index[r]].push_back(v);
    }
    return comps;
}

std::string SimplicialComplex::facets_text() const {
    std::string out;
    for (const Face& f : facets_) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out += ',';
            out += label_of(f[i]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json SimplicialComplex::to_json() const {
    nlohmann::ordered_json j;
    auto& vertices = j["vertices"] = nlohmann::ordered_json::array();
    for (const Face& v : faces_of_dim(0)) vertices.push_back(label_of(v[0]));
    auto& facets = j["facets"] = nlohmann::ordered_json::array();
    for (const Face& f : facets_) {
        nlohmann::ordered_json jf = nlohmann::ordered_json::array();
        for (int v : f) jf.push_back(label_of(v));
        facets.push_back(std::move(jf));
    }
    j["f_vector"] = f_vector();
    j["dimension"] = dimension();
    return j;
}

namespace {

// Matchings of g as faces over edge indices, in index order.
void direct_matchings(const Graph& g, std::size_t first, std::uint64_t used, Face& current,
                      std::vector<Face>& out) {
    if (!current.empty()) out.push_back(current);
    if (static_cast<long long>(out.size()) > kMaxFaces)
        throw CapabilityError("matching complex exceeds the supported face count");
    const auto& edges = g.edges();
    for (std::size_t i = first; i < edges.size(); ++i) {
        const std::uint64_t m =
            (std::uint64_t{1} << edges[i].u) | (std::uint64_t{1} << edges[i].v);
        if (m & used) continue;
        current.push_back(static_cast<int>(i));
        direct_matchings(g, i + 1, used | m, current, out);
        current.pop_back();
    }
}

// Cliques of the edge-disjointness graph, via its adjacency rows only.
void clique_faces(const std::vector<std::vector<std::uint64_t>>& adj,
                  std::vector<std::uint64_t>& candidates, Face& current,
                  std::vector<Face>& out) {
    const int words = static_cast<int>(candidates.size());
    for (int w = 0; w < words; ++w) {
        for (std::uint64_t m = candidates[w]; m != 0; m &= m - 1) {
            const int v = w * 64 + std::countr_zero(m);
            current.push_back(v);
            out.push_back(current);
            if (static_cast<long long>(out.size()) > kMaxFaces)
                throw CapabilityError("matching complex exceeds the supported face count");
            // restrict candidates to neighbors of v above v
            std::vector<std::uint64_t> next(words);
            for (int i = 0; i < words; ++i) next[i] = candidates[i] & adj[v][i];
            next[w] &= ~((std::uint64_t{2} << (v % 64)) - 1);
            for (int i = 0; i < w; ++i) next[i] = 0;
            clique_faces(adj, next, current, out);
            current.pop_back();
        }
    }
}

}  // namespace

SimplicialComplex matching_complex(const Graph& g) {
    if (g.edge_count() == 0)
        throw InputError("matching complex requires a graph with at least one edge");

    const auto& edges = g.edges();
    const int ne = static_cast<int>(edges.size());

    std::vector<Face> faces;
    Face scratch;
    direct_matchings(g, 0, 0, scratch, faces);

    // Independent route: clique complex of the disjointness graph.
    const int words = (ne + 63) / 64;
    std::vector<std::vector<std::uint64_t>> adj(ne, std::vector<std::uint64_t>(words, 0));
    for (int i = 0; i < ne; ++i)
        for (int j = i + 1; j < ne; ++j) {
            const Edge &a = edges[i], &b = edges[j];
            if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) {
                adj[i][j / 64] |= std::uint64_t{1} << (j % 64);
                adj[j][i / 64] |= std::uint64_t{1} << (i % 64);
            }
        }
    std::vector<Face> via_cliques;
    std::vector<std::uint64_t> candidates(words, 0);
    for (int v = 0; v < ne; ++v) candidates[v / 64] |= std::uint64_t{1} << (v % 64);
    scratch.clear();
    clique_faces(adj, candidates, scratch, via_cliques);

    std::sort(faces.begin(), faces.end());
    std::sort(via_cliques.begin(), via_cliques.end());
    if (faces != via_cliques)
        throw std::logic_error("matching complex construction routes disagree");

    std::vector<std::string> labels;
    labels.reserve(edges.size());
    for (const Edge& e : edges) labels.push_back(g.label_of(e.u) + "-" + g.label_of(e.v));
    return SimplicialComplex::from_faces(ne, std::move(faces), std::move(labels));
}

SimplicialComplex link(const SimplicialComplex& c, std::span<const int> face) {
    if (!c.has_face(face)) throw InputError("link requires a face of the complex");
    Face sigma(face.begin(), face.end());
    std::sort(sigma.begin(), sigma.end());
    if (sigma.empty()) return c;

    std::vector<Face> faces;
    for (int d = static_cast<int>(sigma.size()) - 1; d <= c.dimension(); ++d) {
        for (const Face& f : c.faces_of_dim(d)) {
            if (!std::includes(f.begin(), f.end(), sigma.begin(), sigma.end())) continue;
            Face tau;
            std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(),
                                std::back_inserter(tau));
            if (!tau.empty()) faces.push_back(std::move(tau));
        }
    }
    return SimplicialComplex::from_faces(c.vertex_universe(), std::move(faces),
                                         c.labels());
}

bool is_pure(const SimplicialComplex& c) { return c.is_pure(); }
int dimension(const SimplicialComplex& c) { return c.dimension(); }
std::vector<long long> f_vector(const SimplicialComplex& c) { return c.f_vector(); }

bool one_skeleton_is_connected_graph_with_edge(const SimplicialComplex& c) {
    if (c.dimension() != 1) return false;
    return c.skeleton_components().size() == 1;
}

}  // namespace matchtop
