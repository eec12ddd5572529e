#ifndef SIGMAPER_H
#define SIGMAPER_H

#include <stddef.h>

#if defined(SIGMAPER_BUILDING)
#define SGP_API __attribute__((visibility("default")))
#else
#define SGP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sgp_map sgp_map;

enum {
  SGP_OK = 0,
  SGP_ERR_SYNTAX = 1,
  SGP_ERR_NOT_MARKOV = 2,
  SGP_ERR_DUPLICATE_NODE = 3,
  SGP_ERR_DISCONTINUOUS_AT_BASE = 4,
  SGP_ERR_MISSING_NODE = 5,
  SGP_ERR_BAD_PARTITION = 6,
  SGP_ERR_NOT_A_LOOP = 7,
  SGP_ERR_NO_CYCLE = 8,
  SGP_ERR_NOT_A_STAR_ORBIT = 9,
  SGP_ERR_BAD_ROTATION_DATA = 10,
  SGP_ERR_NOT_TRUE_ORBIT = 11,
  SGP_ERR_UNREPRESENTABLE_TAIL = 12,
  SGP_ERR_NOT_IN_DOMAIN = 13,
  SGP_ERR_INVALID_ARGUMENT = 14,
  SGP_ERR_INCOMPLETE = 15,
  SGP_ERR_INTERNAL = 16
};

/* Message of the last failed call on this thread. */
SGP_API const char* sgp_last_error(void);
SGP_API void sgp_string_free(char* s);

SGP_API int sgp_map_parse(const char* text, sgp_map** out);
SGP_API int sgp_map_load(const char* path, sgp_map** out);
/* Builders: "5_1" (param n), "5_2", "6_1" (n), "6_3" (k), "6_4", "theorem_d",
   "branch" (param = d, param2 = s). Unused parameters are ignored. */
SGP_API int sgp_map_example(const char* id, long param, long param2, sgp_map** out);
/* Random Markov lifting of the given degree, reproducible from seed. */
SGP_API int sgp_map_random(unsigned long long seed, int degree, sgp_map** out);
SGP_API void sgp_map_free(sgp_map* m);

SGP_API int sgp_map_to_text(const sgp_map* m, char** out);
SGP_API int sgp_graph_dot(const sgp_map* m, char** out);
SGP_API int sgp_rotation(const sgp_map* m, char** report);

/* members must hold n_max + 1 bytes; members[n] is set to 1 for periods. */
SGP_API int sgp_periods(const sgp_map* m, int n_max, unsigned char* members);
SGP_API int sgp_periods_at(const sgp_map* m, long p, long q, int n_max, unsigned char* members);
SGP_API int sgp_oracle_periods(const sgp_map* m, int n_max, long budget, unsigned char* members);
SGP_API int sgp_format_set(const unsigned char* members, int n_max, char** out);
SGP_API int sgp_shape(const unsigned char* members, int n_max, char** out);

/* Orbits up to period max_len with their flags. Returns SGP_ERR_INCOMPLETE
   (with a partial report) when the budget runs out. */
SGP_API int sgp_classify(const sgp_map* m, int max_len, long budget, char** report);

/* *all_pass is 1 when every asserted claim holds. */
SGP_API int sgp_verify_example(const char* id, int n_max, long budget, char** report, int* all_pass);

/* Orderings: "expr", "sh-le", "sh-tail", "baldwin-le", "baldwin-tail", "m",
   "union-of-tails". Lambda sets are written as L(..) terms of "expr". */
SGP_API int sgp_orders(const char* command, const char* const* args, int nargs, int n_max, char** out);

#ifdef __cplusplus
}
#endif

#endif
