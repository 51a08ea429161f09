#ifndef MATCHTOP_ISO_HPP
#define MATCHTOP_ISO_HPP

#include <string>
#include <vector>

#include "matchtop/graph.hpp"

namespace matchtop {

// Exact isomorphism certificate: the graph6 string of the canonically
// relabeled graph. Equal for isomorphic graphs, distinct otherwise.
struct CanonicalForm {
    std::string bytes;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Canonical certificate via iterated color refinement plus backtracking over
// refined-partition completions, taking the lexicographically minimal
// adjacency encoding. Requires n <= 16 (throws CapabilityError).
CanonicalForm canonical_form(const Graph& g);

// Canonical relabeling itself; canonical_form(g) == graph6 of this graph.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class; first occurrence kept, input
// order of survivors preserved.
std::vector<Graph> dedup_by_iso(const std::vector<Graph>& gs);

}  // namespace matchtop

#endif  // MATCHTOP_ISO_HPP
