/* C interface to the matchtop library: opaque handles, status codes, and
 * JSON/CSV string outputs. Strings returned through char** are owned by the
 * caller and released with mt_string_free. All functions are thread-safe;
 * mt_last_error is thread-local. */
#ifndef MATCHTOP_MATCHTOP_H
#define MATCHTOP_MATCHTOP_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mt_graph mt_graph;
typedef struct mt_report mt_report;

typedef enum mt_status {
    MT_OK = 0,
    MT_DISCREPANCY = 1,      /* a verification sweep found a counterexample */
    MT_ERR_INPUT = 2,        /* parse failure or malformed input */
    MT_ERR_CAPABILITY = 3,   /* outside the supported size envelope */
    MT_ERR_PRECONDITION = 4, /* operation called outside its contract */
    MT_ERR_INTERNAL = 5
} mt_status;

const char* mt_version(void);

/* Message for the last failing call on this thread. */
const char* mt_last_error(void);

void mt_string_free(char* s);

/* format: NULL or "auto" | "edgelist" | "graph6". Isolated vertices are
 * removed; mt_graph_removed_isolated reports whether any were. */
mt_status mt_graph_parse(const char* text, const char* format, mt_graph** out);
void mt_graph_free(mt_graph* g);

int mt_graph_vertex_count(const mt_graph* g);
int mt_graph_edge_count(const mt_graph* g);
int mt_graph_removed_isolated(const mt_graph* g);
const char* mt_graph_format(const mt_graph* g);

mt_status mt_graph_to_graph6(const mt_graph* g, char** out);
mt_status mt_graph_canonical_form(const mt_graph* g, char** out);
mt_status mt_graph_dot(const mt_graph* g, char** out);
mt_status mt_matching_skeleton_dot(const mt_graph* g, char** out);

/* One facet of M(G) per line, comma-separated "u-v" edge labels. */
mt_status mt_matching_facets(const mt_graph* g, char** out);

mt_status mt_analyze_json(const mt_graph* g, char** out_json);
mt_status mt_classify_json(const mt_graph* g, char** out_json);

/* threads <= 0 selects the hardware concurrency. */
mt_status mt_scan_c7(int threads, mt_report** out);
mt_status mt_verify_exhaustive(int max_n, int threads, mt_report** out);
mt_status mt_verify_random(int n, long long count_per_density, uint64_t seed, int threads,
                           mt_report** out);

void mt_report_free(mt_report* r);
int mt_report_passed(const mt_report* r);
mt_status mt_report_json(const mt_report* r, char** out);
mt_status mt_report_csv(const mt_report* r, char** out);

/* Edge list of the first stored counterexample, or MT_ERR_PRECONDITION when
 * the report passed. */
mt_status mt_report_first_counterexample(const mt_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MATCHTOP_MATCHTOP_H */
