#ifndef UDGMCP_H
#define UDGMCP_H

/* C interface to the unit-disk-graph minimum-clique-partition library.
 *
 * Conventions:
 *  - every fallible call returns a udgmcp_status; UDGMCP_OK is 0
 *  - on failure, udgmcp_last_error() describes the problem for the calling
 *    thread until its next library call
 *  - char** outputs receive a heap string owned by the caller; release it
 *    with udgmcp_string_free
 *  - handle outputs are only written on UDGMCP_OK; release with the
 *    matching *_free
 */

#ifdef __cplusplus
extern "C" {
#endif

#include <stdint.h>

typedef enum udgmcp_status {
    UDGMCP_OK = 0,
    UDGMCP_ERR_INVALID_ARGUMENT = 1,
    UDGMCP_ERR_IO = 2,
    UDGMCP_ERR_PARSE = 3,
    UDGMCP_ERR_CAPACITY = 4,
    UDGMCP_ERR_SOLVER = 5,
    UDGMCP_ERR_DEGENERATE_GEOMETRY = 6,
    UDGMCP_ERR_CONTAINMENT = 7,
    UDGMCP_ERR_UNSUPPORTED = 8,
    UDGMCP_ERR_INTERNAL = 9
} udgmcp_status;

typedef struct udgmcp_points udgmcp_points;
typedef struct udgmcp_partition udgmcp_partition;

/* static version string; do not free */
const char* udgmcp_version(void);

/* message for the calling thread's most recent failure; empty after
 * a success; do not free */
const char* udgmcp_last_error(void);

void udgmcp_string_free(char* s);

/* ---- point sets ---- */

/* n points from interleaved coordinates x0 y0 x1 y1 ... */
udgmcp_status udgmcp_points_from_coords(const double* xy, int n, udgmcp_points** out);

/* text format: one point per line as two decimals, '#' comments,
 * blank lines ignored */
udgmcp_status udgmcp_points_parse(const char* text, udgmcp_points** out);
udgmcp_status udgmcp_points_read(const char* path, udgmcp_points** out);
udgmcp_status udgmcp_points_format(const udgmcp_points* pts, char** out);
udgmcp_status udgmcp_points_write(const udgmcp_points* pts, const char* path);

/* spec: {"n": int, "box_w": num, "box_h": num, "seed": int,
 *        "dist": "uniform"|"clustered"}; only "n" is required */
udgmcp_status udgmcp_points_generate(const char* spec_json, udgmcp_points** out);

/* -1 on a null handle */
int udgmcp_points_count(const udgmcp_points* pts);
udgmcp_status udgmcp_points_get(const udgmcp_points* pts, int index, double* x, double* y);
void udgmcp_points_free(udgmcp_points* pts);

/* ---- solving ---- */

/* config: {"algorithm": "exact"|"strips3"|"strips-rand"|"grid-ptas",
 *          "eps", "delta", "seed", "variant": "irrational"|"rational",
 *          "rational_t", "rounds", "k", "cell_solver": "oracle"|"enum",
 *          "oracle_cap", "threads"}; only "algorithm" is required.
 * out_result_json (optional, may be NULL) receives the run report:
 * {"algorithm", "n", "num_cliques", "cliques", "optimal", "ratio",
 *  "seed", "rounds", "width", "elapsed_ms"} */
udgmcp_status udgmcp_solve(const udgmcp_points* pts, const char* config_json,
                           udgmcp_partition** out_partition, char** out_result_json);

/* ---- partitions ---- */

/* accepts any JSON object with a "cliques" list of lists of indices */
udgmcp_status udgmcp_partition_parse(const char* json_text, udgmcp_partition** out);
udgmcp_status udgmcp_partition_to_json(const udgmcp_partition* part, char** out);

/* -1 on a null handle / bad index */
int udgmcp_partition_count(const udgmcp_partition* part);
int udgmcp_partition_part_size(const udgmcp_partition* part, int index);
int udgmcp_partition_member(const udgmcp_partition* part, int index, int pos);

/* *valid receives 1 when the partition covers every point exactly once with
 * every part a clique; out_report (optional) receives a diagnostic when not */
udgmcp_status udgmcp_partition_validate(const udgmcp_points* pts, const udgmcp_partition* part,
                                        int* valid, char** out_report);

/* rewrites the partition until part hulls are pairwise non-overlapping,
 * preserving part count and membership multiset; out_trace_json (optional)
 * receives {"psi": [...], "moves": n} with the potential after each move */
udgmcp_status udgmcp_uncross(const udgmcp_points* pts, const udgmcp_partition* part,
                             udgmcp_partition** out, char** out_trace_json);

void udgmcp_partition_free(udgmcp_partition* part);

/* ---- rational strip widths ---- */

/* continued-fraction convergent p/q of 1 + 2/sqrt(3) at index t, as
 * {"t": int, "p": "<decimal>", "q": "<decimal>", "width": {"p", "q"}|null,
 *  "value": num|null}; "width" is the strip width q/(p-q) in lowest terms,
 * present for odd t */
udgmcp_status udgmcp_convergent_json(long t, char** out);

/* smallest odd-t width whose convergent denominator satisfies
 * q^2 >= ceil(3/eps); same shape as udgmcp_convergent_json */
udgmcp_status udgmcp_select_width_json(double eps, char** out);

#ifdef __cplusplus
}
#endif

#endif /* UDGMCP_H */
