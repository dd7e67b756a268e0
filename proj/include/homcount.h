/* homcount — exact H-colouring counting engine.
 *
 * C interface to the shared library. All objects are opaque handles;
 * functions return a status code and write results through out
 * parameters. Strings returned through char** are heap-allocated and
 * must be released with homc_string_free(). Counts travel as decimal
 * strings so arbitrary precision survives the boundary.
 */
#ifndef HOMCOUNT_H
#define HOMCOUNT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum homc_status {
    HOMC_OK = 0,
    HOMC_ERROR = 1,     /* internal failure, see homc_last_error() */
    HOMC_EINVAL = 2,    /* bad arguments or malformed input */
    HOMC_EBUDGET = 3,   /* work budget exceeded: a refusal, not a zero */
    HOMC_EINTEGRITY = 4 /* cache or cross-check integrity violation */
} homc_status;

typedef struct homc_graph homc_graph;   /* simple loopless graph */
typedef struct homc_target homc_target; /* target graph, loops allowed */
typedef struct homc_engine homc_engine; /* counting engine + memo cache */

/* Message for the most recent failure on this thread. */
const char *homc_last_error(void);
void homc_string_free(char *s);

/* ---- source graphs ---------------------------------------------------- */

homc_status homc_graph_from_g6(const char *g6, homc_graph **out);
/* edges as flat pairs u0,v0,u1,v1,... */
homc_status homc_graph_build(int n, const int *edges, size_t edge_count,
                             homc_graph **out);
homc_status homc_graph_complete(int n, homc_graph **out);
homc_status homc_graph_complete_bipartite(int a, int b, homc_graph **out);
homc_status homc_graph_turan(int t, int x, homc_graph **out);
homc_status homc_graph_turan_minus_matching(int t, int x, int class_a, int class_b,
                                            homc_graph **out);
homc_status homc_graph_disjoint_union(const homc_graph *g, const homc_graph *h,
                                      homc_graph **out);
void homc_graph_free(homc_graph *g);

int homc_graph_order(const homc_graph *g);
homc_status homc_graph_g6(const homc_graph *g, char **out);
homc_status homc_graph_certificate(const homc_graph *g, char **hex_out);
homc_status homc_graph_classify(const homc_graph *g, int *connected, int *bipartite,
                                int *min_degree, int *max_degree);

/* ---- target graphs ---------------------------------------------------- */

/* {"n": int, "loops": [..], "edges": [[u,v],..]} */
homc_status homc_target_from_json(const char *json_text, homc_target **out);
/* K<q>, Kloop<k>, Kb<k>, <m>xK<t>, Turan<t>_<x>, optionally "named:"-prefixed */
homc_status homc_target_named(const char *name, homc_target **out);
void homc_target_free(homc_target *h);

int homc_target_order(const homc_target *h);
int homc_target_max_degree(const homc_target *h);
homc_status homc_target_json(const homc_target *h, char **out);
homc_status homc_target_certificate(const homc_target *h, char **hex_out);

/* ---- engine ----------------------------------------------------------- */

homc_status homc_engine_new(homc_engine **out);
void homc_engine_free(homc_engine *e); /* flushes an attached cache */
void homc_engine_set_budget(homc_engine *e, uint64_t assignments);
void homc_engine_set_workers(homc_engine *e, int workers);
/* Loads dir/homcount-cache.jsonl into the memo and holds an exclusive
 * lock until the engine is freed; new entries are appended on free. */
homc_status homc_engine_cache_attach(homc_engine *e, const char *directory);
homc_status homc_engine_cache_flush(homc_engine *e);

/* ---- counting --------------------------------------------------------- */

homc_status homc_count(homc_engine *e, const homc_graph *g, const homc_target *h,
                       char **decimal_out);
homc_status homc_count_brute(homc_engine *e, const homc_graph *g, const homc_target *h,
                             char **decimal_out);
/* proper q-colourings = hom into the complete graph K_q */
homc_status homc_count_qcolourings(homc_engine *e, const homc_graph *g, int q,
                                   char **decimal_out);
/* hom(G, copies * H) for connected H; copies is a decimal string */
homc_status homc_count_disjoint_copies(homc_engine *e, const homc_graph *g,
                                       const char *copies_decimal, const homc_target *h,
                                       char **decimal_out);
homc_status homc_count_complete_bipartite(homc_engine *e, int a, int b,
                                          const homc_target *h, char **decimal_out);
homc_status homc_s_value(homc_engine *e, int delta, const homc_target *h,
                         char **decimal_out);
homc_status homc_k0(int t, int alpha, char **decimal_out);

/* ---- enumeration ------------------------------------------------------ */

/* graph6 lines, one isomorphism class per line, certificate order.
 * shard_prefix_hex may be NULL or empty; cap <= 0 uses the default. */
homc_status homc_enumerate_g6(int n, int min_degree, int connected_only,
                              const char *shard_prefix_hex, int cap, char **lines_out);
homc_status homc_count_classes(int n, int min_degree, int connected_only, int cap,
                               char **decimal_out);

/* ---- verification harness --------------------------------------------- */
/* Each op writes its JSON report (canonical key order) and optionally a
 * CSV rendering; pass NULL to skip either. pass_out receives 1/0. */

homc_status homc_scan_extremal(homc_engine *e, int n, int min_degree, int connected_only,
                               int cap, const homc_target *h, char **json_out,
                               char **csv_out);
homc_status homc_verify_path_lemma(homc_engine *e, int max_target_vertices, int r_max,
                                   const char *force_include_named_csv, char **json_out,
                                   char **csv_out, int *pass_out);
homc_status homc_verify_lemma42(homc_engine *e, int delta, const homc_target *h, int n_min,
                                int n_max, char **json_out, char **csv_out, int *pass_out);
/* k_decimal NULL means the least admissible k, computeK0(t, alpha) */
homc_status homc_verify_theorem31(homc_engine *e, int t, int alpha, int m,
                                  const char *k_decimal, char **json_out, char **csv_out,
                                  int *pass_out);
homc_status homc_verify_tprime(homc_engine *e, char **json_out, char **csv_out,
                               int *pass_out);
homc_status homc_verify_closed_forms(homc_engine *e, int samples, uint64_t seed,
                                     char **json_out, char **csv_out, int *pass_out);
homc_status homc_verify_prop41(homc_engine *e, int max_n, char **json_out, char **csv_out,
                               int *pass_out);

/* Conjectured three-term bound for one graph; bound_holds_out gets 1/0. */
homc_status homc_check_conjecture(homc_engine *e, const homc_graph *g, int delta,
                                  const homc_target *h, char **json_out, char **csv_out,
                                  int *bound_holds_out);
/* Same against k disjoint copies of a connected base target. */
homc_status homc_check_conjecture_copies(homc_engine *e, const homc_graph *g, int delta,
                                         const char *copies_decimal,
                                         const homc_target *base, char **json_out,
                                         char **csv_out, int *bound_holds_out);
/* Least violating copy count in [1, k_max]; reports the comparisons at k
 * and k-1. found_out gets 1/0. */
homc_status homc_conjecture_minimal_k(homc_engine *e, const homc_graph *g, int delta,
                                      const homc_target *base, const char *k_max_decimal,
                                      char **json_out, char **k_decimal_out,
                                      int *found_out);

#ifdef __cplusplus
}
#endif

#endif /* HOMCOUNT_H */
