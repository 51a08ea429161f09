#ifndef MATCHTOP_ENUMERATE_HPP
#define MATCHTOP_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchtop/graph.hpp"

namespace matchtop {

// --- deterministic PRNG ------------------------------------------------------

// SplitMix64; the fixed generator behind every seeded sweep.
std::uint64_t splitmix64_next(std::uint64_t& state);
std::uint64_t splitmix64_mix(std::uint64_t x);

// Erdos-Renyi draw: each vertex pair (u < v, lexicographic order) is an edge
// iff the next draw modulo 10 is below `density_tenths`. Fully determined by
// the seed.
Graph random_graph(int n, int density_tenths, std::uint64_t seed);

// Stream seed for draw i at density index d on n vertices.
std::uint64_t stream_seed(std::uint64_t seed, int n, int density_index, long long draw);

// --- reports -----------------------------------------------------------------

struct ScanRow {
    int added_edges = 0;
    long long iso_classes = 0;
    long long buchsbaum_classes = 0;
};

struct ScanReport {
    std::vector<ScanRow> rows;  // added_edges = 0..14
    long long total_iso_classes = 0;
    long long total_buchsbaum_classes = 0;
    long long global_iso_classes = 0;
    long long graphs_examined = 0;
    long long runtime_ms = 0;

    bool passed() const { return total_iso_classes == 383 && total_buchsbaum_classes == 125; }
    std::string to_csv() const;
    nlohmann::ordered_json to_json() const;
};

struct Discrepancy {
    std::string check;
    std::string graph_edge_list;  // minimized counterexample
    std::string detail;

    nlohmann::ordered_json to_json() const;
};

struct VerifyReport {
    std::string kind;  // "exhaustive" or "random"
    int max_n = 0;
    int n = 0;
    long long count_per_density = 0;
    std::uint64_t seed = 0;
    std::vector<int> density_tenths;

    long long graphs_examined = 0;
    long long graphs_skipped_empty = 0;
    long long classes_verified = 0;
    std::map<std::string, long long> dim_counts;
    long long buchsbaum_2d = 0;
    long long buchsbaum_not_cm_1d = 0;
    std::map<std::string, long long> checks_run;
    std::map<std::string, long long> violations;
    std::vector<Discrepancy> discrepancies;
    long long runtime_ms = 0;

    bool passed() const;
    long long total_violations() const;
    std::string to_csv() const;  // key,value pairs
    nlohmann::ordered_json to_json() const;
};

// --- sweeps ------------------------------------------------------------------

// Adds every subset of the 14 possible chords to a fixed labeled 7-cycle,
// dedups per chord count by isomorphism, and counts the classes whose
// matching complex is two-dimensional Buchsbaum.
ScanReport scan_c7(int threads = 0);

// Runs the full assertion battery over all labeled graphs on max_n vertices
// (isolated vertices stripped, empty graphs skipped), one representative per
// isomorphism class. Requires max_n <= 7.
VerifyReport exhaustive_verify(int max_n, int threads = 0);

// Runs the battery over `count` seeded draws at each density in
// {0.2, 0.4, 0.6}. Requires 7 <= n <= 12. Reports are identical for equal
// (n, count, seed) regardless of thread count, runtime aside.
VerifyReport random_verify(int n, long long count, std::uint64_t seed, int threads = 0);

// Greedy edge deletion (isolated vertices stripped along the way) while the
// predicate keeps failing; returns a local minimum.
Graph minimize_counterexample(Graph g, const std::function<bool(const Graph&)>& still_fails);

// One graph's assertion battery; exposed for the verification sweeps and
// their tests. Returns the name of every failed check.
std::vector<std::string> failed_checks(const Graph& g);

// Re-runs one named check; true when it fails on g.
bool check_fails(const std::string& check, const Graph& g);

}  // namespace matchtop

#endif  // MATCHTOP_ENUMERATE_HPP
