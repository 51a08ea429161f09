#ifndef MATCHTOP_COMPLEX_HPP
#define MATCHTOP_COMPLEX_HPP

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchtop/graph.hpp"

namespace matchtop {

using Face = std::vector<int>;  // sorted vertex ids

// A finite simplicial complex over dense vertex ids. The full face set is
// enumerated at construction and kept (complexes at this scale are small);
// instances are immutable afterwards. The empty face is always present and
// implicit: a complex with no facets is the complex {∅} of dimension -1.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Downward closure of `facets`. Dominated and duplicate facets collapse.
    static SimplicialComplex from_facets(int n_vertices, std::vector<Face> facets,
                                         std::vector<std::string> labels = {});

    // Fast path when the full, downward-closed face list is already known.
    static SimplicialComplex from_faces(int n_vertices, std::vector<Face> faces,
                                        std::vector<std::string> labels = {});

    int vertex_universe() const { return n_vertices_; }
    int dimension() const;                       // -1 for {∅}
    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<Face>& faces_of_dim(int d) const;
    std::vector<long long> f_vector() const;     // indexed from dimension 0
    long long face_count() const;                // excluding the empty face
    bool has_face(std::span<const int> face) const;
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label_of(int v) const;

    bool is_pure() const;

    // Vertex sets of the connected components of the 1-skeleton (0-faces
    // joined by 1-faces); isolated vertices form their own components.
    std::vector<std::vector<int>> skeleton_components() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.faces_by_dim_ == b.faces_by_dim_;
    }

    std::string facets_text() const;
    nlohmann::ordered_json to_json() const;

private:
    int n_vertices_ = 0;
    std::vector<Face> facets_;                      // sorted lexicographically
    std::vector<std::vector<Face>> faces_by_dim_;   // [d] = (d)-faces, sorted
    std::vector<std::string> labels_;
};

// The matching complex M(G): faces are the matchings of g, vertices are g's
// edges (labeled "u-v"). Built both by direct matching enumeration and as the
// clique complex of the edge-disjointness graph; the two must agree.
// Throws InputError when g has no edges.
SimplicialComplex matching_complex(const Graph& g);

// The link of `face`, as a complex on the same vertex universe.
// Throws InputError when face is not in c.
SimplicialComplex link(const SimplicialComplex& c, std::span<const int> face);

bool is_pure(const SimplicialComplex& c);
int dimension(const SimplicialComplex& c);
std::vector<long long> f_vector(const SimplicialComplex& c);

// True iff c is a connected graph with at least one edge: dimension 1,
// one skeleton component, at least one 1-face.
bool one_skeleton_is_connected_graph_with_edge(const SimplicialComplex& c);

}  // namespace matchtop

#endif  // MATCHTOP_COMPLEX_HPP
