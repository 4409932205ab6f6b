/* seqnet - statistical network analysis of sign-sequence corpora.
 *
 * C interface of the shared library. All functions return SEQNET_OK on
 * success; on failure they return an error code and leave a human-readable
 * message in seqnet_last_error() (thread-local). Output strings are
 * heap-allocated and must be released with seqnet_string_free(); handles with
 * their matching *_free() function.
 */
#ifndef SEQNET_H
#define SEQNET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct seqnet_corpus seqnet_corpus;
typedef struct seqnet_network seqnet_network;
typedef struct seqnet_ztable seqnet_ztable;

typedef enum seqnet_status {
    SEQNET_OK = 0,
    SEQNET_ERR_ARGUMENT = 1, /* invalid parameter value */
    SEQNET_ERR_PARSE = 2,    /* malformed input text */
    SEQNET_ERR_IO = 3,       /* file not readable/writable */
    SEQNET_ERR_DOMAIN = 4,   /* result undefined for this data */
    SEQNET_ERR_INTERNAL = 5
} seqnet_status;

typedef enum seqnet_direction { SEQNET_DIR_IN = 0, SEQNET_DIR_OUT = 1 } seqnet_direction;
typedef enum seqnet_mode { SEQNET_MODE_DEGREE = 0, SEQNET_MODE_STRENGTH = 1 } seqnet_mode;

const char *seqnet_version(void);
const char *seqnet_last_error(void);
void seqnet_string_free(char *s);

/* ---- corpus ------------------------------------------------------------ */

seqnet_status seqnet_corpus_parse(const char *text, seqnet_corpus **out);
seqnet_status seqnet_corpus_load(const char *path, seqnet_corpus **out);
/* Keeps the first occurrence of each distinct sign list. */
seqnet_status seqnet_corpus_dedup(const seqnet_corpus *corpus, seqnet_corpus **out);
void seqnet_corpus_free(seqnet_corpus *corpus);

size_t seqnet_corpus_sequences(const seqnet_corpus *corpus);
size_t seqnet_corpus_inventory_size(const seqnet_corpus *corpus);
uint64_t seqnet_corpus_tokens(const seqnet_corpus *corpus);
uint64_t seqnet_corpus_bigrams(const seqnet_corpus *corpus);
seqnet_status seqnet_corpus_stats_text(const seqnet_corpus *corpus, char **out);
seqnet_status seqnet_corpus_serialize(const seqnet_corpus *corpus, char **out);

/* ---- adjacency network -------------------------------------------------- */

seqnet_status seqnet_network_build(const seqnet_corpus *corpus, seqnet_network **out);
void seqnet_network_free(seqnet_network *net);

size_t seqnet_network_nodes(const seqnet_network *net);
size_t seqnet_network_edges(const seqnet_network *net);
seqnet_status seqnet_network_reciprocity(const seqnet_network *net, double *out);
seqnet_status seqnet_network_connectivity(const seqnet_network *net, double *out);
seqnet_status seqnet_network_summary_text(const seqnet_network *net, char **out);
seqnet_status seqnet_network_dot(const seqnet_network *net, char **out);
seqnet_status seqnet_network_edges_csv(const seqnet_network *net, char **out);
/* Complementary CDF of degree or strength. */
seqnet_status seqnet_network_cdf_csv(const seqnet_network *net, seqnet_direction dir,
                                     seqnet_mode mode, char **out);
seqnet_status seqnet_top_q_connectivity(const seqnet_corpus *corpus, size_t q, double *out);
seqnet_status seqnet_top_q_profile_csv(const seqnet_corpus *corpus, char **out);

/* ---- shuffle ensemble ---------------------------------------------------- */

/* Named metrics: reciprocity, connectivity, distinct_pairs, solos, beginners,
 * enders, dual, medial_only, bigrams, kcore_in, kcore_out, score_in,
 * score_out. with_values != 0 emits per-realization CSV instead of the
 * summary document. */
seqnet_status seqnet_ensemble_metric_text(const seqnet_corpus *corpus, const char *metric,
                                          uint64_t seed, size_t realizations, unsigned threads,
                                          int with_values, char **out);
seqnet_status seqnet_classify_text(const seqnet_corpus *corpus, char **out);
/* class_name: "beginner" or "ender". realizations == 0 -> empirical only. */
seqnet_status seqnet_positional_histogram_csv(const seqnet_corpus *corpus, const char *class_name,
                                              uint64_t seed, size_t realizations, unsigned threads,
                                              char **out);
seqnet_status seqnet_never_random_text(const seqnet_corpus *corpus, uint64_t seed,
                                       size_t realizations, unsigned threads, char **out);

/* ---- core decomposition -------------------------------------------------- */

seqnet_status seqnet_core_profile_csv(const seqnet_network *net, seqnet_direction dir,
                                      seqnet_mode mode, char **out);
/* Adds per-order ensemble columns from `realizations` shuffled corpora. */
seqnet_status seqnet_core_profile_ensemble_csv(const seqnet_corpus *corpus, seqnet_direction dir,
                                               seqnet_mode mode, uint64_t seed,
                                               size_t realizations, unsigned threads, char **out);
seqnet_status seqnet_core_sets_text(const seqnet_network *net, seqnet_direction dir,
                                    seqnet_mode mode, char **out);
seqnet_status seqnet_lexicon_text(const seqnet_network *net, seqnet_mode mode, char **out);

/* ---- pair significance ---------------------------------------------------- */

seqnet_status seqnet_ztable_compute(const seqnet_corpus *corpus, uint64_t seed,
                                    size_t realizations, unsigned threads, int include_absent,
                                    seqnet_ztable **out);
void seqnet_ztable_free(seqnet_ztable *table);
size_t seqnet_ztable_rows(const seqnet_ztable *table);
seqnet_status seqnet_ztable_csv(const seqnet_ztable *table, char **out);
seqnet_status seqnet_ztable_cdf_csv(const seqnet_ztable *table, char **out);
seqnet_status seqnet_significant_dot(const seqnet_ztable *table, double z_c, char **out);
seqnet_status seqnet_significant_components_text(const seqnet_ztable *table, double z_c,
                                                 char **out);

/* ---- segmentation trees --------------------------------------------------- */

seqnet_status seqnet_parse_report_text(const seqnet_corpus *corpus, const seqnet_ztable *table,
                                       size_t min_len, char **out);

/* ---- sign-frequency power law --------------------------------------------- */

seqnet_status seqnet_frequency_cdf_csv(const seqnet_corpus *corpus, char **out);
seqnet_status seqnet_fit_power_law_text(const seqnet_corpus *corpus, uint64_t f_min,
                                        uint64_t f_max, char **out);

/* ---- synthetic corpora ----------------------------------------------------- */

/* gamma > 1: sign weights follow rank^(-1/(gamma-1)); gamma == 0: uniform. */
seqnet_status seqnet_generate_null(size_t sign_count, double gamma, size_t len_min,
                                   size_t len_max, size_t count, uint64_t seed,
                                   seqnet_corpus **out);
/* Grammar text format: see README. truth_csv may be NULL. */
seqnet_status seqnet_generate_grammar(const char *grammar_text, size_t count, uint64_t seed,
                                      seqnet_corpus **out, char **truth_csv);

#ifdef __cplusplus
}
#endif

#endif /* SEQNET_H */
