#ifndef MATCHTOP_TEST_HELPERS_HPP
#define MATCHTOP_TEST_HELPERS_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "matchtop/enumerate.hpp"
#include "matchtop/graph.hpp"

namespace matchtop::test {

// Brute-force oracle for N_e: keep every edge disjoint from e, collect the
// touched vertices. No relabeling; returns parent-id edges.
inline std::vector<Edge> brute_disjoint_edges(const Graph& g, Edge e) {
    std::vector<Edge> kept;
    for (const Edge& f : g.edges())
        if (f.u != e.u && f.u != e.v && f.v != e.u && f.v != e.v) kept.push_back(f);
    return kept;
}

// All matchings by filtering every subset of the edge set (edge count <= 20).
inline std::vector<std::vector<Edge>> brute_matchings(const Graph& g, int max_size) {
    const auto& edges = g.edges();
    std::vector<std::vector<Edge>> out;
    for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
        if (std::popcount(mask) > max_size) continue;
        std::vector<Edge> m;
        bool ok = true;
        for (std::size_t i = 0; i < edges.size() && ok; ++i) {
            if (!(mask & (1u << i))) continue;
            for (const Edge& f : m)
                if (edges[i].u == f.u || edges[i].u == f.v || edges[i].v == f.u ||
                    edges[i].v == f.v) {
                    ok = false;
                    break;
                }
            if (ok) m.push_back(edges[i]);
        }
        if (ok) out.push_back(std::move(m));
    }
    return out;
}

// Cycle detection by trying every k-permutation of the vertices.
inline bool brute_contains_cycle(const Graph& g, int k) {
    std::vector<int> verts(g.vertex_count());
    std::iota(verts.begin(), verts.end(), 0);
    std::vector<int> pick;
    bool found = false;
    auto rec = [&](auto&& self, std::uint64_t used) -> void {
        if (found) return;
        if (static_cast<int>(pick.size()) == k) {
            for (int i = 0; i < k; ++i)
                if (!g.has_edge(pick[i], pick[(i + 1) % k])) return;
            found = true;
            return;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (used & (std::uint64_t{1} << v)) continue;
            pick.push_back(v);
            self(self, used | (std::uint64_t{1} << v));
            pick.pop_back();
            if (found) return;
        }
    };
    rec(rec, 0);
    return found;
}

inline bool brute_path_at_least(const Graph& g, int len) {
    if (len + 1 > g.vertex_count()) return false;
    std::vector<int> pick;
    bool found = false;
    auto rec = [&](auto&& self, std::uint64_t used) -> void {
        if (found) return;
        if (static_cast<int>(pick.size()) == len + 1) {
            for (int i = 0; i + 1 <= len; ++i)
                if (!g.has_edge(pick[i], pick[i + 1])) return;
            found = true;
            return;
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (used & (std::uint64_t{1} << v)) continue;
            pick.push_back(v);
            self(self, used | (std::uint64_t{1} << v));
            pick.pop_back();
            if (found) return;
        }
    };
    rec(rec, 0);
    return found;
}

// Exhaustive isomorphism search over all n! vertex maps (n <= 8).
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const Edge& e : a.edges())
            if (!b.has_edge(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Number of k-matchings of the n-cycle: (n / (n-k)) * C(n-k, k).
inline long long cycle_k_matchings(int n, int k) {
    if (k == 0) return 1;
    if (2 * k > n) return 0;
    auto choose = [](int a, int b) {
        long long r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    return choose(n - k, k) * n / (n - k);
}

// Deterministic test graphs from the library PRNG.
inline Graph random_test_graph(int n, int density_tenths, std::uint64_t seed) {
    return random_graph(n, density_tenths, splitmix64_mix(seed));
}

// A petal graph: p1/p2/p3 pick petal shapes. "k3" makes a triangle through
// the center; an integer k >= 2 makes a star with k edges met at a leaf.
inline Graph petal_example(int star1, int star2, bool third_is_k3) {
    std::vector<Edge> edges;
    int next = 1;  // vertex 0 is the center
    auto add_star = [&](int k) {
        const int hub = next++;
        edges.emplace_back(0, hub);  // the center is a leaf of this star
        for (int i = 1; i < k; ++i) edges.emplace_back(hub, next++);
    };
    add_star(star1);
    add_star(star2);
    if (third_is_k3) {
        const int a = next++, b = next++;
        edges.emplace_back(0, a);
        edges.emplace_back(0, b);
        edges.emplace_back(a, b);
    } else {
        add_star(2);
    }
    return Graph::from_edges(next, edges);
}

}  // namespace matchtop::test

#endif
