/* C interface to the wfadis weighted-automaton toolkit.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a wfadis_status; on
 * failure, wfadis_last_error() describes the problem (thread-local, valid
 * until the next call on the same thread). Strings returned through char**
 * are heap-allocated and released with wfadis_string_free.
 */
#ifndef WFADIS_WFADIS_H_
#define WFADIS_WFADIS_H_

#include <stddef.h>

#if defined(WFADIS_BUILDING_LIBRARY)
#define WFADIS_API __attribute__((visibility("default")))
#else
#define WFADIS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wfadis_wfa wfadis_wfa;
typedef struct wfadis_relation wfadis_relation;

typedef enum wfadis_status {
  WFADIS_OK = 0,
  WFADIS_ERR_USAGE = 1,
  WFADIS_ERR_PARSE = 2,
  WFADIS_ERR_LIMIT = 3,
  WFADIS_ERR_UNSUPPORTED = 4,
  WFADIS_ERR_DIVISION_BY_ZERO = 5,
  WFADIS_ERR_INTERNAL = 6
} wfadis_status;

typedef enum wfadis_semiring {
  WFADIS_TROPICAL = 0,
  WFADIS_PROBABILITY = 1
} wfadis_semiring;

typedef enum wfadis_relation_kind {
  WFADIS_RELATION_COMMON_FUTURE = 0,
  WFADIS_RELATION_COMPLETE = 1
} wfadis_relation_kind;

typedef enum wfadis_strategy {
  WFADIS_STRATEGY_LISTS = 0,
  WFADIS_STRATEGY_PAIRS = 1
} wfadis_strategy;

typedef enum wfadis_twins_mode {
  WFADIS_TWINS_WEAK = 0,
  WFADIS_TWINS_CLASSIC = 1
} wfadis_twins_mode;

typedef enum wfadis_stats_op {
  WFADIS_STATS_DISAMBIGUATE = 0,
  WFADIS_STATS_DETERMINIZE = 1
} wfadis_stats_op;

WFADIS_API const char *wfadis_last_error(void);
WFADIS_API void wfadis_string_free(char *s);

/* Automata: text format I/O. */
WFADIS_API wfadis_status wfadis_wfa_parse(const char *text, wfadis_wfa **out);
WFADIS_API wfadis_status wfadis_wfa_read(const char *path, wfadis_wfa **out);
WFADIS_API wfadis_status wfadis_wfa_write(const wfadis_wfa *a, const char *path);
WFADIS_API wfadis_status wfadis_wfa_serialize(const wfadis_wfa *a, char **out);
WFADIS_API void wfadis_wfa_free(wfadis_wfa *a);

typedef struct wfadis_wfa_info {
  wfadis_semiring semiring;
  size_t num_states;
  size_t num_transitions;
  size_t num_initial;
  size_t num_final;
  size_t alphabet_size;
} wfadis_wfa_info;

WFADIS_API wfadis_status wfadis_wfa_get_info(const wfadis_wfa *a,
                                             wfadis_wfa_info *out);

/* Structural queries; boolean results are written as 0/1. */
WFADIS_API wfadis_status wfadis_trim(const wfadis_wfa *a, wfadis_wfa **out);
WFADIS_API wfadis_status wfadis_is_trim(const wfadis_wfa *a, int *out);
WFADIS_API wfadis_status wfadis_is_unambiguous(const wfadis_wfa *a, int *out);
WFADIS_API wfadis_status wfadis_is_cycle_unambiguous(const wfadis_wfa *a,
                                                     int *out);
WFADIS_API wfadis_status wfadis_is_deterministic(const wfadis_wfa *a, int *out);
/* tokens: space-separated labels ("" for the empty string). The weight is
 * written in canonical text form. */
WFADIS_API wfadis_status wfadis_string_weight(const wfadis_wfa *a,
                                              const char *tokens, char **out);

/* Relations over the states of a trim automaton. */
WFADIS_API wfadis_status wfadis_relation_make(const wfadis_wfa *a,
                                              wfadis_relation_kind kind,
                                              wfadis_relation **out);
/* Parses "rel p q" lines, symmetrizes and checks admissibility; an
 * inadmissible relation fails with WFADIS_ERR_USAGE and a report. */
WFADIS_API wfadis_status wfadis_relation_parse(const wfadis_wfa *a,
                                               const char *text,
                                               wfadis_relation **out);
WFADIS_API void wfadis_relation_free(wfadis_relation *r);

/* Pre-disambiguation. dump may be NULL; otherwise it receives one
 * "state <id> head <q> subset {..} witness <x>" line per state. */
WFADIS_API wfadis_status wfadis_predisambiguate(const wfadis_wfa *a,
                                                const wfadis_relation *r,
                                                size_t state_limit,
                                                wfadis_wfa **out, char **dump);

typedef struct wfadis_disambiguate_options {
  wfadis_strategy strategy;
  int relaxed;
  size_t state_limit;
} wfadis_disambiguate_options;

WFADIS_API void wfadis_disambiguate_options_init(
    wfadis_disambiguate_options *options);
WFADIS_API wfadis_status wfadis_disambiguate(
    const wfadis_wfa *a, const wfadis_relation *r,
    const wfadis_disambiguate_options *options, wfadis_wfa **out);
WFADIS_API wfadis_status wfadis_determinize(const wfadis_wfa *a,
                                            size_t state_limit,
                                            wfadis_wfa **out);

/* Twins tests. witness may be NULL; otherwise it receives a description of a
 * nonzero cycle, or NULL when the property holds. */
WFADIS_API wfadis_status wfadis_twins_check(const wfadis_wfa *a,
                                            wfadis_twins_mode mode, int *holds,
                                            char **witness);

/* Bounded equivalence by enumeration. difference may be NULL; otherwise it
 * receives "<string>: <w1> vs <w2>" for the first differing string, or NULL. */
WFADIS_API wfadis_status wfadis_equivalent_up_to(const wfadis_wfa *a,
                                                 const wfadis_wfa *b,
                                                 int max_len, int *equivalent,
                                                 char **difference);

typedef struct wfadis_random_config {
  int num_states;
  int alphabet_size;
  double transition_density;
  int acyclic;
  int deterministic;
  long long min_weight;
  long long max_weight;
  int num_initial;
  int num_final;
  wfadis_semiring semiring;
  unsigned long long seed;
} wfadis_random_config;

WFADIS_API void wfadis_random_config_init(wfadis_random_config *config);
WFADIS_API wfadis_status wfadis_random(const wfadis_random_config *config,
                                       wfadis_wfa **out);
/* A member of the synthetic lattice corpus. */
WFADIS_API wfadis_status wfadis_random_lattice(unsigned long long seed,
                                               wfadis_wfa **out);
/* The unambiguous family whose deterministic equivalents need 2^n states. */
WFADIS_API wfadis_status wfadis_exponential_gap(int n, wfadis_wfa **out);

typedef struct wfadis_stats_options {
  wfadis_stats_op op;
  size_t state_limit;
  wfadis_relation_kind relation;
  wfadis_strategy strategy;
} wfadis_stats_options;

WFADIS_API void wfadis_stats_options_init(wfadis_stats_options *options);
/* Runs op over every *.wfa file in dir and renders the report. */
WFADIS_API wfadis_status wfadis_stats_run(const char *dir,
                                          const wfadis_stats_options *options,
                                          char **report);

#ifdef __cplusplus
}
#endif

#endif /* WFADIS_WFADIS_H_ */
