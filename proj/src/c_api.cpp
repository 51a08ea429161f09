#include "matchtop/matchtop.h"

#include <cstring>
#include <string>
#include <variant>

#include "matchtop/classify.hpp"
#include "matchtop/complex.hpp"
#include "matchtop/enumerate.hpp"
#include "matchtop/errors.hpp"
#include "matchtop/graph_io.hpp"
#include "matchtop/iso.hpp"
#include "matchtop/report.hpp"

struct mt_graph {
    matchtop::Graph graph;  // normalized
    std::string format;
    bool removed_isolated = false;
};

struct mt_report {
    std::variant<matchtop::ScanReport, matchtop::VerifyReport> report;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
mt_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const matchtop::ParseError& e) {
        g_last_error = e.what();
        return MT_ERR_INPUT;
    } catch (const matchtop::InputError& e) {
        g_last_error = e.what();
        return MT_ERR_INPUT;
    } catch (const matchtop::CapabilityError& e) {
        g_last_error = e.what();
        return MT_ERR_CAPABILITY;
    } catch (const matchtop::PreconditionError& e) {
        g_last_error = e.what();
        return MT_ERR_PRECONDITION;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MT_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* mt_version(void) { return "1.0.0"; }

const char* mt_last_error(void) { return g_last_error.c_str(); }

void mt_string_free(char* s) { std::free(s); }

mt_status mt_graph_parse(const char* text, const char* format, mt_graph** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return MT_ERR_INPUT;
    }
    return guarded([&]() {
        matchtop::GraphFormat f = matchtop::GraphFormat::Auto;
        if (format && std::strcmp(format, "auto") != 0) {
            if (std::strcmp(format, "edgelist") == 0)
                f = matchtop::GraphFormat::EdgeList;
            else if (std::strcmp(format, "graph6") == 0)
                f = matchtop::GraphFormat::Graph6;
            else {
                g_last_error = std::string("unknown format: ") + format;
                return MT_ERR_INPUT;
            }
        }
        if (f == matchtop::GraphFormat::Auto) f = matchtop::detect_format(text);
        const matchtop::Graph raw = matchtop::parse_graph(text, f);
        auto normalized = matchtop::normalize(raw);
        auto* handle = new mt_graph;
        handle->graph = std::move(normalized.graph);
        handle->format = matchtop::format_name(f);
        handle->removed_isolated = normalized.removed_isolated;
        *out = handle;
        return MT_OK;
    });
}

void mt_graph_free(mt_graph* g) { delete g; }

int mt_graph_vertex_count(const mt_graph* g) { return g->graph.vertex_count(); }

int mt_graph_edge_count(const mt_graph* g) { return g->graph.edge_count(); }

int mt_graph_removed_isolated(const mt_graph* g) { return g->removed_isolated ? 1 : 0; }

const char* mt_graph_format(const mt_graph* g) { return g->format.c_str(); }

mt_status mt_graph_to_graph6(const mt_graph* g, char** out) {
    return guarded([&]() {
        *out = dup_string(matchtop::to_graph6(g->graph));
        return MT_OK;
    });
}

mt_status mt_graph_canonical_form(const mt_graph* g, char** out) {
    return guarded([&]() {
        *out = dup_string(matchtop::canonical_form(g->graph).bytes);
        return MT_OK;
    });
}

mt_status mt_graph_dot(const mt_graph* g, char** out) {
    return guarded([&]() {
        *out = dup_string(matchtop::to_dot(g->graph));
        return MT_OK;
    });
}

mt_status mt_matching_skeleton_dot(const mt_graph* g, char** out) {
    return guarded([&]() {
        *out = dup_string(matchtop::matching_skeleton_dot(g->graph));
        return MT_OK;
    });
}

mt_status mt_matching_facets(const mt_graph* g, char** out) {
    return guarded([&]() {
        *out = dup_string(matchtop::matching_complex(g->graph).facets_text());
        return MT_OK;
    });
}

mt_status mt_analyze_json(const mt_graph* g, char** out_json) {
    return guarded([&]() {
        matchtop::InputEcho echo{g->format, g->removed_isolated};
        *out_json = dup_string(matchtop::analyze_report(g->graph, echo).dump(2));
        return MT_OK;
    });
}

mt_status mt_classify_json(const mt_graph* g, char** out_json) {
    return guarded([&]() {
        matchtop::InputEcho echo{g->format, g->removed_isolated};
        *out_json = dup_string(matchtop::classify_report(g->graph, echo).dump(2));
        return MT_OK;
    });
}

mt_status mt_scan_c7(int threads, mt_report** out) {
    return guarded([&]() {
        auto* handle = new mt_report{matchtop::scan_c7(threads)};
        *out = handle;
        return MT_OK;
    });
}

mt_status mt_verify_exhaustive(int max_n, int threads, mt_report** out) {
    return guarded([&]() {
        auto* handle = new mt_report{matchtop::exhaustive_verify(max_n, threads)};
        *out = handle;
        return MT_OK;
    });
}

mt_status mt_verify_random(int n, long long count_per_density, uint64_t seed, int threads,
                           mt_report** out) {
    return guarded([&]() {
        auto* handle =
            new mt_report{matchtop::random_verify(n, count_per_density, seed, threads)};
        *out = handle;
        return MT_OK;
    });
}

void mt_report_free(mt_report* r) { delete r; }

int mt_report_passed(const mt_report* r) {
    return std::visit([](const auto& rep) { return rep.passed(); }, r->report) ? 1 : 0;
}

mt_status mt_report_json(const mt_report* r, char** out) {
    return guarded([&]() {
        *out = dup_string(
            std::visit([](const auto& rep) { return rep.to_json().dump(2); }, r->report));
        return MT_OK;
    });
}

mt_status mt_report_csv(const mt_report* r, char** out) {
    return guarded([&]() {
        *out =
            dup_string(std::visit([](const auto& rep) { return rep.to_csv(); }, r->report));
        return MT_OK;
    });
}

mt_status mt_report_first_counterexample(const mt_report* r, char** out) {
    return guarded([&]() {
        const auto* verify = std::get_if<matchtop::VerifyReport>(&r->report);
        if (!verify || verify->discrepancies.empty()) {
            g_last_error = "report has no stored counterexample";
            return MT_ERR_PRECONDITION;
        }
        *out = dup_string(verify->discrepancies.front().graph_edge_list);
        return MT_OK;
    });
}

}  // extern "C"
