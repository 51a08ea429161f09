#include "matchtop/report.hpp"

#include <chrono>

#include "matchtop/classify.hpp"
#include "matchtop/complex.hpp"
#include "matchtop/graph_io.hpp"
#include "matchtop/homology.hpp"
#include "matchtop/iso.hpp"

namespace matchtop {

namespace {

long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

nlohmann::ordered_json input_echo_json(const Graph& g, const InputEcho& echo) {
    nlohmann::ordered_json j;
    j["format"] = echo.format;
    j["graph6"] = to_graph6(g);
    if (g.vertex_count() <= 16)
        j["canonical_graph6"] = canonical_form(g).bytes;
    else
        j["canonical_graph6"] = nullptr;
    j["n"] = g.vertex_count();
    j["edge_count"] = g.edge_count();
    j["removed_isolated"] = echo.removed_isolated;
    return j;
}

}  // namespace

nlohmann::ordered_json analyze_report(const Graph& g, const InputEcho& echo) {
    const long long t0 = now_ms();
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "analyze";
    j["input"] = input_echo_json(g, echo);

    nlohmann::ordered_json a;
    const auto sp = structural_predicates(g);
    a["component_count"] = sp.components.size();
    a["components"] = sp.components;
    a["is_connected"] = sp.is_connected;
    a["is_bipartite"] = sp.is_bipartite;
    if (sp.is_bipartite)
        a["bipartition"] = sp.bipartition;
    else
        a["bipartition"] = nullptr;
    a["degree_sequence"] = sp.degree_sequence;
    a["max_matching_size_cap4"] = g.edge_count() == 0 ? 0 : max_matching_size(g, 4);

    if (g.edge_count() > 0) {
        const SimplicialComplex m = matching_complex(g);
        a["matching_complex"] = m.to_json();
        a["matching_complex_components"] = m.skeleton_components().size();
        a["homology"] = homology_json(m);
    } else {
        nlohmann::ordered_json empty;
        empty["vertices"] = nlohmann::ordered_json::array();
        empty["facets"] = nlohmann::ordered_json::array();
        empty["f_vector"] = nlohmann::ordered_json::array();
        empty["dimension"] = -1;
        a["matching_complex"] = empty;
        a["matching_complex_components"] = 0;
        nlohmann::ordered_json hom;
        hom["betti"] = nlohmann::ordered_json::array();
        hom["euler"] = 0;
        a["homology"] = hom;
    }
    j["analysis"] = a;
    j["timings"]["total_ms"] = now_ms() - t0;
    return j;
}

nlohmann::ordered_json classify_report(const Graph& g, const InputEcho& echo) {
    const long long t0 = now_ms();
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["kind"] = "classify";
    j["input"] = input_echo_json(g, echo);
    j["classification"] = classify(g).to_json();
    j["timings"]["total_ms"] = now_ms() - t0;
    return j;
}

}  // namespace matchtop
