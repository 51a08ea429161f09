#include "matchtop/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "matchtop/classify.hpp"
#include "matchtop/complex.hpp"
#include "matchtop/errors.hpp"
#include "matchtop/graph_io.hpp"
#include "matchtop/homology.hpp"
#include "matchtop/iso.hpp"

namespace matchtop {

// --- PRNG --------------------------------------------------------------------

std::uint64_t splitmix64_mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    return splitmix64_mix(state);
}

std::uint64_t stream_seed(std::uint64_t seed, int n, int density_index, long long draw) {
    std::uint64_t s = seed;
    s = splitmix64_mix(s ^ (static_cast<std::uint64_t>(n) * 0xD1B54A32D192ED03ull));
    s = splitmix64_mix(s ^ (static_cast<std::uint64_t>(density_index) * 0x8CB92BA72F3D8DD7ull));
    s = splitmix64_mix(s ^ (static_cast<std::uint64_t>(draw) * 0x9E3779B97F4A7C15ull));
    return s;
}

Graph random_graph(int n, int density_tenths, std::uint64_t seed) {
    std::uint64_t state = seed;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (splitmix64_next(state) % 10 < static_cast<std::uint64_t>(density_tenths))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

// --- chunked deterministic parallelism ----------------------------------------

namespace {

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Workers grab chunk indices from a shared counter; the caller merges
// per-chunk results in chunk order, so output never depends on scheduling.
void run_chunked(long long total, long long chunk_size, int threads,
                 const std::function<void(int, long long, long long)>& body) {
    if (total <= 0) return;
    const int nchunks = static_cast<int>((total + chunk_size - 1) / chunk_size);
    threads = std::min(resolve_threads(threads), nchunks);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int c = next.fetch_add(1);
            if (c >= nchunks) return;
            const long long begin = static_cast<long long>(c) * chunk_size;
            const long long end = std::min(total, begin + chunk_size);
            body(c, begin, end);
        }
    };
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

}  // namespace

// --- the per-graph assertion battery ------------------------------------------

namespace {

namespace checks {
constexpr const char* kLemma32 = "lemma_3_2_equivalence";
constexpr const char* kLinkNe = "link_equals_matching_of_ne";
constexpr const char* kThm31Cm = "theorem_3_1_cm";
constexpr const char* kThm31Buchs = "theorem_3_1_buchsbaum";
constexpr const char* kThm41 = "theorem_4_1_equivalence";
constexpr const char* kHom1d = "homology_matches_1d";
constexpr const char* kHom2d = "homology_matches_2d";
constexpr const char* kC5C7 = "c5_implies_c7";
constexpr const char* kC6C3C7 = "c6_and_c3_imply_c7";
constexpr const char* kC7Seven = "c7_implies_seven_vertices";
constexpr const char* kBip3 = "bipartite_side_of_three";
constexpr const char* kMatroid = "matroid_routes_agree";
}  // namespace checks

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// All nonempty matchings as edge-index masks (edge count <= 64).
void matching_masks(const std::vector<std::uint64_t>& vmask, std::size_t first,
                    std::uint64_t used, std::uint64_t face, std::vector<std::uint64_t>& out) {
    for (std::size_t i = first; i < vmask.size(); ++i) {
        if (vmask[i] & used) continue;
        out.push_back(face | bit(static_cast<int>(i)));
        matching_masks(vmask, i + 1, used | vmask[i], face | bit(static_cast<int>(i)), out);
    }
}

void sub_matching_masks(const std::vector<std::uint64_t>& vmask, const std::vector<int>& idx,
                        std::size_t first, std::uint64_t used, std::uint64_t face,
                        std::vector<std::uint64_t>& out) {
    for (std::size_t i = first; i < idx.size(); ++i) {
        const int e = idx[i];
        if (vmask[e] & used) continue;
        out.push_back(face | bit(e));
        sub_matching_masks(vmask, idx, i + 1, used | vmask[e], face | bit(e), out);
    }
}

// Compares, for every edge e, the link of e in M(G) against an independent
// enumeration of the matchings of N_e. Returns the first offending edge.
std::optional<Edge> link_ne_mismatch_fast(const Graph& g) {
    const auto& edges = g.edges();
    const int ne = static_cast<int>(edges.size());
    std::vector<std::uint64_t> vmask(ne);
    for (int i = 0; i < ne; ++i) vmask[i] = bit(edges[i].u) | bit(edges[i].v);

    std::vector<std::uint64_t> faces;
    matching_masks(vmask, 0, 0, 0, faces);

    std::vector<std::uint64_t> link_faces, ne_faces;
    std::vector<int> sub;
    for (int i = 0; i < ne; ++i) {
        link_faces.clear();
        for (std::uint64_t f : faces)
            if ((f & bit(i)) && f != bit(i)) link_faces.push_back(f ^ bit(i));

        sub.clear();
        for (int j = 0; j < ne; ++j)
            if (j != i && (vmask[j] & vmask[i]) == 0) sub.push_back(j);
        ne_faces.clear();
        sub_matching_masks(vmask, sub, 0, 0, 0, ne_faces);

        std::sort(link_faces.begin(), link_faces.end());
        std::sort(ne_faces.begin(), ne_faces.end());
        if (link_faces != ne_faces) return edges[i];
    }
    return std::nullopt;
}

// General-representation fallback for graphs with more than 64 edges.
std::optional<Edge> link_ne_mismatch_general(const Graph& g) {
    const SimplicialComplex m = matching_complex(g);
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int face[1] = {static_cast<int>(i)};
        const SimplicialComplex lk = link(m, face);

        const auto sub = non_adjacent_subgraph(g, edges[i]);
        std::vector<Face> mapped;
        if (sub.graph.edge_count() > 0) {
            const SimplicialComplex mn = matching_complex(sub.graph);
            // translate N_e edges back to g edge indices
            std::vector<int> to_g;
            for (const Edge& f : sub.graph.edges()) {
                const Edge orig(sub.to_parent[f.u], sub.to_parent[f.v]);
                to_g.push_back(*g.edge_index(orig));
            }
            for (int d = 0; d <= mn.dimension(); ++d)
                for (const Face& f : mn.faces_of_dim(d)) {
                    Face t;
                    t.reserve(f.size());
                    for (int v : f) t.push_back(to_g[v]);
                    std::sort(t.begin(), t.end());
                    mapped.push_back(std::move(t));
                }
        }
        std::vector<Face> link_all;
        for (int d = 0; d <= lk.dimension(); ++d)
            for (const Face& f : lk.faces_of_dim(d)) link_all.push_back(f);
        std::sort(mapped.begin(), mapped.end());
        std::sort(link_all.begin(), link_all.end());
        if (mapped != link_all) return edges[i];
    }
    return std::nullopt;
}

struct BatterySummary {
    int bounded_dim = -1;  // min(dim M(G), 3)
    bool buchsbaum_2d = false;
    bool buchsbaum_not_cm_1d = false;
};

// Runs the assertion battery on one normalized graph. When `only` is set,
// just that check executes. `emit(name, failed, detail)` fires once per
// executed check.
BatterySummary run_battery(
    const Graph& g, const char* only,
    const std::function<void(const char*, bool, const std::string&)>& emit) {
    BatterySummary summary;
    auto want = [&](const char* name) { return only == nullptr || std::string_view(only) == name; };

    const int mm = g.edge_count() == 0 ? 0 : max_matching_size(g, 4);
    const int dim = mm - 1;
    summary.bounded_dim = dim;

    std::optional<bool> direct_cache;
    auto direct = [&]() {
        if (!direct_cache) direct_cache = is_2d_buchsbaum_direct(g);
        return *direct_cache;
    };

    if (want(checks::kLemma32)) {
        const bool via = is_2d_buchsbaum_via_ne(g);
        emit(checks::kLemma32, via != direct(),
             via ? "via_ne true, direct false" : "via_ne false, direct true");
    }
    if (want(checks::kLinkNe)) {
        std::optional<Edge> bad = g.edge_count() <= 64 ? link_ne_mismatch_fast(g)
                                                       : link_ne_mismatch_general(g);
        emit(checks::kLinkNe, bad.has_value(),
             bad ? "link mismatch at edge (" + std::to_string(bad->u) + "," +
                       std::to_string(bad->v) + ")"
                 : "");
    }
    if (want(checks::kMatroid)) {
        emit(checks::kMatroid, is_matroid_by_path(g) != is_matroid_by_decomposition(g), "");
    }

    if (dim == 1) {
        // direct verdicts straight off the disjointness relation
        const auto& edges = g.edges();
        const int ne = static_cast<int>(edges.size());
        std::vector<int> parent(ne);
        for (int i = 0; i < ne; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<bool> has_partner(ne, false);
        for (int i = 0; i < ne; ++i)
            for (int j = i + 1; j < ne; ++j) {
                const Edge &a = edges[i], &b = edges[j];
                if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) {
                    parent[find(i)] = find(j);
                    has_partner[i] = has_partner[j] = true;
                }
            }
        bool cm_direct = true, buchs_direct = true;
        for (int i = 0; i < ne; ++i) {
            if (find(i) != find(0)) cm_direct = false;
            if (!has_partner[i]) buchs_direct = false;
        }

        if (want(checks::kThm31Cm) || want(checks::kThm31Buchs)) {
            const ClassificationResult r = classify_1d(g);
            summary.buchsbaum_not_cm_1d = r.is_buchsbaum && !r.is_cm;
            if (want(checks::kThm31Cm))
                emit(checks::kThm31Cm, r.is_cm != cm_direct,
                     "classified cm=" + std::to_string(r.is_cm));
            if (want(checks::kThm31Buchs))
                emit(checks::kThm31Buchs, r.is_buchsbaum != buchs_direct,
                     "classified buchsbaum=" + std::to_string(r.is_buchsbaum));
        }
        if (want(checks::kHom1d)) {
            const SimplicialComplex m = matching_complex(g);
            const bool fail = is_cm_homological(m) != cm_direct ||
                              is_buchsbaum_homological(m) != buchs_direct;
            emit(checks::kHom1d, fail, "");
        }
    }

    if (dim == 2) {
        summary.buchsbaum_2d = direct();
        if (want(checks::kThm41)) {
            const ClassificationResult r = classify_2d(g);
            emit(checks::kThm41, !r.families.empty() != direct(),
                 r.families.empty() ? "no family matched a Buchsbaum graph"
                                    : "family " + r.family_names().front() +
                                          " matched a non-Buchsbaum graph");
        }
        if (want(checks::kHom2d)) {
            emit(checks::kHom2d, is_buchsbaum_homological(matching_complex(g)) != direct(), "");
        }
        if (direct()) {
            const int n = g.vertex_count();
            if (want(checks::kC5C7)) {
                // connectivity is part of the hypothesis; a disconnected
                // star-plus-pentagon graph is Buchsbaum with a C5 and no C7
                const bool has5 =
                    n >= 5 && is_connected(g) && contains_cycle(g, 5);
                const bool has7 = n >= 7 && contains_cycle(g, 7);
                emit(checks::kC5C7, has5 && !has7, "");
            }
            if (want(checks::kC6C3C7)) {
                const bool has6 = n >= 6 && contains_cycle(g, 6);
                const bool has3 = n >= 3 && contains_cycle(g, 3);
                const bool has7 = n >= 7 && contains_cycle(g, 7);
                emit(checks::kC6C3C7, has6 && has3 && !has7, "");
            }
            if (want(checks::kC7Seven)) {
                const bool has7 = n >= 7 && contains_cycle(g, 7);
                emit(checks::kC7Seven, has7 && n != 7, "");
            }
            if (want(checks::kBip3)) {
                const auto sp = structural_predicates(g);
                bool fail = false;
                if (sp.is_connected && sp.is_bipartite)
                    fail = sp.bipartition[0].size() != 3 && sp.bipartition[1].size() != 3;
                emit(checks::kBip3, fail, "");
            }
        }
    }
    return summary;
}

}  // namespace

std::vector<std::string> failed_checks(const Graph& g) {
    std::vector<std::string> out;
    run_battery(g, nullptr, [&](const char* name, bool failed, const std::string&) {
        if (failed) out.emplace_back(name);
    });
    return out;
}

bool check_fails(const std::string& check, const Graph& g) {
    bool failed = false;
    run_battery(g, check.c_str(), [&](const char*, bool f, const std::string&) {
        failed = failed || f;
    });
    return failed;
}

Graph minimize_counterexample(Graph g, const std::function<bool(const Graph&)>& still_fails) {
    bool progress = true;
    while (progress) {
        progress = false;
        for (const Edge& e : g.edges()) {
            std::vector<Edge> remaining;
            for (const Edge& f : g.edges())
                if (f != e) remaining.push_back(f);
            const Graph smaller =
                normalize(Graph::from_edges(g.vertex_count(), remaining)).graph;
            if (smaller.edge_count() == 0) continue;
            if (still_fails(smaller)) {
                g = smaller;
                progress = true;
                break;
            }
        }
    }
    return g;
}

// --- sweep bookkeeping ---------------------------------------------------------

namespace {

constexpr std::size_t kMaxStoredDiscrepancies = 25;

struct SweepStats {
    long long graphs = 0;
    long long skipped_empty = 0;
    long long classes = 0;
    std::map<std::string, long long> dim_counts;
    std::map<std::string, long long> checks_run;
    std::map<std::string, long long> violations;
    long long buchsbaum_2d = 0;
    long long buchsbaum_not_cm_1d = 0;
    std::vector<Discrepancy> discrepancies;

    void absorb(SweepStats&& o) {
        graphs += o.graphs;
        skipped_empty += o.skipped_empty;
        classes += o.classes;
        for (auto& [k, v] : o.dim_counts) dim_counts[k] += v;
        for (auto& [k, v] : o.checks_run) checks_run[k] += v;
        for (auto& [k, v] : o.violations) violations[k] += v;
        buchsbaum_2d += o.buchsbaum_2d;
        buchsbaum_not_cm_1d += o.buchsbaum_not_cm_1d;
        for (auto& d : o.discrepancies)
            if (discrepancies.size() < kMaxStoredDiscrepancies)
                discrepancies.push_back(std::move(d));
    }
};

std::string dim_key(int bounded_dim) {
    if (bounded_dim >= 3) return ">=3";
    return std::to_string(bounded_dim);
}

void verify_into(const Graph& g, SweepStats& st) {
    const BatterySummary s =
        run_battery(g, nullptr, [&](const char* name, bool failed, const std::string& detail) {
            ++st.checks_run[name];
            if (!failed) return;
            ++st.violations[name];
            if (st.discrepancies.size() < kMaxStoredDiscrepancies) {
                const std::string check = name;
                const Graph minimized = minimize_counterexample(
                    g, [&check](const Graph& h) { return check_fails(check, h); });
                st.discrepancies.push_back(
                    Discrepancy{check, to_edge_list(minimized), detail});
            }
        });
    ++st.dim_counts[dim_key(s.bounded_dim)];
    if (s.buchsbaum_2d) ++st.buchsbaum_2d;
    if (s.buchsbaum_not_cm_1d) ++st.buchsbaum_not_cm_1d;
}

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

Graph graph_from_pair_mask(int n, const std::vector<std::pair<int, int>>& pairs,
                           std::uint64_t mask) {
    std::vector<Edge> edges;
    for (std::uint64_t m = mask; m != 0; m &= m - 1)
        edges.emplace_back(pairs[std::countr_zero(m)].first,
                           pairs[std::countr_zero(m)].second);
    return Graph::from_edges(n, edges);
}

}  // namespace

// --- scan_c7 -------------------------------------------------------------------

ScanReport scan_c7(int threads) {
    const long long t0 = now_ms();
    const Graph c7 = cycle_graph(7);
    std::vector<std::pair<int, int>> chords;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
            if (!c7.has_edge(u, v)) chords.emplace_back(u, v);
    const int nchords = static_cast<int>(chords.size());  // 14
    const long long total = 1ll << nchords;

    auto build = [&](std::uint64_t mask) {
        std::vector<Edge> edges(c7.edges());
        for (std::uint64_t m = mask; m != 0; m &= m - 1)
            edges.emplace_back(chords[std::countr_zero(m)].first,
                               chords[std::countr_zero(m)].second);
        return Graph::from_edges(7, edges);
    };

    // per chunk, per chord count: first-seen canonical forms with their masks
    using ChunkClasses = std::vector<std::vector<std::pair<std::string, std::uint64_t>>>;
    const long long chunk_size = 512;
    const int nchunks = static_cast<int>((total + chunk_size - 1) / chunk_size);
    std::vector<ChunkClasses> chunk_results(nchunks);

    run_chunked(total, chunk_size, threads, [&](int chunk, long long begin, long long end) {
        ChunkClasses local(nchords + 1);
        std::unordered_set<std::string> seen;
        for (long long mask = begin; mask < end; ++mask) {
            const int k = std::popcount(static_cast<std::uint64_t>(mask));
            const std::string canon = canonical_form(build(mask)).bytes;
            if (seen.insert(canon).second)
                local[k].emplace_back(canon, static_cast<std::uint64_t>(mask));
        }
        chunk_results[chunk] = std::move(local);
    });

    ScanReport report;
    report.graphs_examined = total;
    std::unordered_set<std::string> global;
    for (int k = 0; k <= nchords; ++k) {
        ScanRow row;
        row.added_edges = k;
        for (int c = 0; c < nchunks; ++c) {
            for (const auto& [canon, mask] : chunk_results[c][k]) {
                if (!global.insert(canon).second) continue;
                ++row.iso_classes;
                if (is_2d_buchsbaum_via_ne(build(mask))) ++row.buchsbaum_classes;
            }
        }
        report.total_iso_classes += row.iso_classes;
        report.total_buchsbaum_classes += row.buchsbaum_classes;
        report.rows.push_back(row);
    }
    report.global_iso_classes = static_cast<long long>(global.size());
    report.runtime_ms = now_ms() - t0;
    return report;
}

// --- exhaustive sweep ------------------------------------------------------------

VerifyReport exhaustive_verify(int max_n, int threads) {
    if (max_n < 2 || max_n > 7)
        throw CapabilityError("exhaustive_verify supports 2 <= max_n <= 7");
    const long long t0 = now_ms();

    const auto pairs = vertex_pairs(max_n);
    const long long total = 1ll << pairs.size();

    // Phase 1: canonical form per labeled graph, deduped within each chunk.
    const long long chunk_size = 1ll << 12;
    const int nchunks = static_cast<int>((total + chunk_size - 1) / chunk_size);
    struct ChunkOut {
        std::vector<std::pair<std::string, std::uint64_t>> classes;
        long long skipped = 0;
    };
    std::vector<ChunkOut> chunk_out(nchunks);
    run_chunked(total, chunk_size, threads, [&](int chunk, long long begin, long long end) {
        ChunkOut out;
        std::unordered_set<std::string> seen;
        for (long long mask = begin; mask < end; ++mask) {
            const Graph g =
                normalize(graph_from_pair_mask(max_n, pairs, static_cast<std::uint64_t>(mask)))
                    .graph;
            if (g.edge_count() == 0) {
                ++out.skipped;
                continue;
            }
            const std::string canon = canonical_form(g).bytes;
            if (seen.insert(canon).second)
                out.classes.emplace_back(canon, static_cast<std::uint64_t>(mask));
        }
        chunk_out[chunk] = std::move(out);
    });

    VerifyReport report;
    report.kind = "exhaustive";
    report.max_n = max_n;
    report.graphs_examined = total;

    std::unordered_set<std::string> global;
    std::vector<std::uint64_t> reps;
    for (const auto& out : chunk_out) {
        report.graphs_skipped_empty += out.skipped;
        for (const auto& [canon, mask] : out.classes)
            if (global.insert(canon).second) reps.push_back(mask);
    }

    // Phase 2: the assertion battery, one representative per class.
    const long long rep_chunk = 32;
    const int rep_chunks =
        static_cast<int>((static_cast<long long>(reps.size()) + rep_chunk - 1) / rep_chunk);
    std::vector<SweepStats> stats(rep_chunks);
    run_chunked(static_cast<long long>(reps.size()), rep_chunk, threads,
                [&](int chunk, long long begin, long long end) {
                    SweepStats st;
                    for (long long i = begin; i < end; ++i) {
                        const Graph g =
                            normalize(graph_from_pair_mask(max_n, pairs, reps[i])).graph;
                        ++st.classes;
                        verify_into(g, st);
                    }
                    stats[chunk] = std::move(st);
                });

    SweepStats all;
    for (auto& st : stats) all.absorb(std::move(st));
    report.classes_verified = all.classes;
    report.dim_counts = std::move(all.dim_counts);
    report.checks_run = std::move(all.checks_run);
    report.violations = std::move(all.violations);
    report.buchsbaum_2d = all.buchsbaum_2d;
    report.buchsbaum_not_cm_1d = all.buchsbaum_not_cm_1d;
    report.discrepancies = std::move(all.discrepancies);
    report.runtime_ms = now_ms() - t0;
    return report;
}

// --- random sweep ---------------------------------------------------------------

VerifyReport random_verify(int n, long long count, std::uint64_t seed, int threads) {
    if (n < 7 || n > 12) throw CapabilityError("random_verify supports 7 <= n <= 12");
    if (count < 0) throw PreconditionError("random_verify requires count >= 0");
    const long long t0 = now_ms();

    VerifyReport report;
    report.kind = "random";
    report.n = n;
    report.count_per_density = count;
    report.seed = seed;
    report.density_tenths = {2, 4, 6};

    const long long total = 3 * count;
    const long long chunk_size = 256;
    const int nchunks =
        total == 0 ? 0 : static_cast<int>((total + chunk_size - 1) / chunk_size);
    std::vector<SweepStats> stats(nchunks);

    run_chunked(total, chunk_size, threads, [&](int chunk, long long begin, long long end) {
        SweepStats st;
        for (long long t = begin; t < end; ++t) {
            const int d = static_cast<int>(t / count);
            const long long draw = t % count;
            const Graph raw =
                random_graph(n, report.density_tenths[d], stream_seed(seed, n, d, draw));
            const Graph g = normalize(raw).graph;
            ++st.graphs;
            if (g.edge_count() == 0) {
                ++st.skipped_empty;
                continue;
            }
            verify_into(g, st);
        }
        stats[chunk] = std::move(st);
    });

    SweepStats all;
    for (auto& st : stats) all.absorb(std::move(st));
    report.graphs_examined = all.graphs;
    report.graphs_skipped_empty = all.skipped_empty;
    report.dim_counts = std::move(all.dim_counts);
    report.checks_run = std::move(all.checks_run);
    report.violations = std::move(all.violations);
    report.buchsbaum_2d = all.buchsbaum_2d;
    report.buchsbaum_not_cm_1d = all.buchsbaum_not_cm_1d;
    report.discrepancies = std::move(all.discrepancies);
    report.runtime_ms = now_ms() - t0;
    return report;
}

// --- serialization ----------------------------------------------------------------

std::string ScanReport::to_csv() const {
    std::ostringstream os;
    os << "k";
    for (const ScanRow& r : rows) os << ',' << r.added_edges;
    os << ",total\n";
    os << "iso_classes";
    for (const ScanRow& r : rows) os << ',' << r.iso_classes;
    os << ',' << total_iso_classes << '\n';
    os << "buchsbaum_classes";
    for (const ScanRow& r : rows) os << ',' << r.buchsbaum_classes;
    os << ',' << total_buchsbaum_classes << '\n';
    return os.str();
}

nlohmann::ordered_json ScanReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "scan_c7";
    auto& jr = j["rows"] = nlohmann::ordered_json::array();
    for (const ScanRow& r : rows) {
        nlohmann::ordered_json row;
        row["added_edges"] = r.added_edges;
        row["iso_classes"] = r.iso_classes;
        row["buchsbaum_classes"] = r.buchsbaum_classes;
        jr.push_back(std::move(row));
    }
    j["totals"]["iso_classes"] = total_iso_classes;
    j["totals"]["buchsbaum_classes"] = total_buchsbaum_classes;
    j["totals"]["global_iso_classes"] = global_iso_classes;
    j["graphs_examined"] = graphs_examined;
    j["passed"] = passed();
    j["runtime_ms"] = runtime_ms;
    return j;
}

nlohmann::ordered_json Discrepancy::to_json() const {
    nlohmann::ordered_json j;
    j["check"] = check;
    j["graph_edge_list"] = graph_edge_list;
    j["detail"] = detail;
    return j;
}

bool VerifyReport::passed() const { return total_violations() == 0; }

long long VerifyReport::total_violations() const {
    long long total = 0;
    for (const auto& [_, v] : violations) total += v;
    return total;
}

std::string VerifyReport::to_csv() const {
    std::ostringstream os;
    os << "key,value\n";
    os << "kind," << kind << '\n';
    os << "graphs_examined," << graphs_examined << '\n';
    os << "classes_verified," << classes_verified << '\n';
    os << "violations," << total_violations() << '\n';
    return os.str();
}

nlohmann::ordered_json VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "verify_" + kind;
    nlohmann::ordered_json params;
    if (kind == "exhaustive") {
        params["max_n"] = max_n;
    } else {
        params["n"] = n;
        params["count_per_density"] = count_per_density;
        params["seed"] = seed;
        params["density_tenths"] = density_tenths;
    }
    j["params"] = params;
    nlohmann::ordered_json totals;
    totals["graphs_examined"] = graphs_examined;
    totals["graphs_skipped_empty"] = graphs_skipped_empty;
    if (kind == "exhaustive") totals["classes_verified"] = classes_verified;
    totals["dim_counts"] = dim_counts;
    totals["buchsbaum_2d"] = buchsbaum_2d;
    totals["buchsbaum_not_cm_1d"] = buchsbaum_not_cm_1d;
    j["totals"] = totals;
    j["checks_run"] = checks_run;
    j["violations"] = violations;
    auto& jd = j["discrepancies"] = nlohmann::ordered_json::array();
    for (const Discrepancy& d : discrepancies) jd.push_back(d.to_json());
    j["passed"] = passed();
    j["runtime_ms"] = runtime_ms;
    return j;
}

}  // namespace matchtop
