#ifndef MATCHTOP_REPORT_HPP
#define MATCHTOP_REPORT_HPP

#include <string>

#include <json.hpp>

#include "matchtop/graph.hpp"

namespace matchtop {

struct InputEcho {
    std::string format;  // "edgelist" or "graph6"
    bool removed_isolated = false;
};

// n, edge count, components, bipartiteness, bounded max matching, dimension,
// f-vector, Betti numbers, plus the complex export.
nlohmann::ordered_json analyze_report(const Graph& g, const InputEcho& echo);

// ClassificationResult JSON wrapped with the input echo.
nlohmann::ordered_json classify_report(const Graph& g, const InputEcho& echo);

}  // namespace matchtop

#endif  // MATCHTOP_REPORT_HPP
