#ifndef RRB_RRB_H
#define RRB_RRB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RRB_BUILDING_LIBRARY)
#    define RRB_API __declspec(dllexport)
#  else
#    define RRB_API __declspec(dllimport)
#  endif
#else
#  define RRB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Mirrors rrb::ErrorCode; RRB_OK is 0 and RRB_INTERNAL covers anything
   that escaped the library's own error type. */
typedef enum rrb_status {
  RRB_OK = 0,
  RRB_NOT_ASSOCIATIVE,
  RRB_NO_IDENTITY,
  RRB_NOT_LATIN_SQUARE,
  RRB_ORDER_LIMIT_EXCEEDED,
  RRB_INVALID_ACTION,
  RRB_NOT_NORMAL,
  RRB_NOT_ROTA_BAXTER,
  RRB_NOT_A_MORPHISM,
  RRB_NOT_AN_IDEAL,
  RRB_NOT_IN_S,
  RRB_SEARCH_SPACE_TOO_LARGE,
  RRB_EXTENDED_MODE_REQUIRED,
  RRB_NOT_A_BRACE,
  RRB_YBE_VIOLATION,
  RRB_WELL_DEFINEDNESS_VIOLATION,
  RRB_INVALID_WITNESS,
  RRB_MALFORMED_INPUT,
  RRB_INVALID_ARGUMENT,
  RRB_INTERNAL
} rrb_status;

typedef struct rrb_group rrb_group;
typedef struct rrb_operator rrb_operator;
typedef struct rrb_brace rrb_brace;

typedef struct rrb_limits {
  size_t order_cap;
  size_t subgroup_cap;
  uint64_t brute_force_cap;
  size_t isoclinism_cap;
  unsigned jobs;
} rrb_limits;

RRB_API rrb_limits rrb_limits_default(void);

/* Name of a status ("NotRotaBaxter", ...); static storage. */
RRB_API const char* rrb_status_name(rrb_status status);
/* True for OrderLimitExceeded and SearchSpaceTooLarge. */
RRB_API int rrb_status_is_cap(rrb_status status);
/* Message of the last failure on this thread; empty after success. */
RRB_API const char* rrb_last_error(void);
/* Frees every char* handed out by this library. */
RRB_API void rrb_string_free(char* s);

/* Every char** output is canonical JSON owned by the caller. NULL limits
   means the defaults. */

/* ---- groups ---- */
RRB_API rrb_status rrb_group_load(const char* path, const rrb_limits* limits, rrb_group** out);
RRB_API rrb_status rrb_group_parse(const char* json, const rrb_limits* limits, rrb_group** out);
RRB_API rrb_status rrb_group_catalog(const char* name, rrb_group** out);
RRB_API void rrb_group_free(rrb_group* g);
RRB_API size_t rrb_group_order(const rrb_group* g);
/* The ingestion form, byte-identical to a canonical input file. */
RRB_API rrb_status rrb_group_emit(const rrb_group* g, char** out);
RRB_API rrb_status rrb_group_summary(const rrb_group* g, char** out);
RRB_API rrb_status rrb_group_automorphisms(const rrb_group* g, const rrb_limits* limits,
                                           char** out);
/* Number of homomorphisms G -> Aut(H). */
RRB_API rrb_status rrb_action_count(const rrb_group* g, const rrb_group* h,
                                    const rrb_limits* limits, size_t* out);

/* ---- enumeration ---- */
enum { RRB_ACTION_ALL = -1, RRB_ACTION_ADJOINT = -2 };
enum { RRB_STRATEGY_BACKTRACK = 0, RRB_STRATEGY_SUBGROUPS = 1 };
enum { RRB_RULE_MOD_CENTER = 0, RRB_RULE_STRICT = 1 };

typedef struct rrb_enumerate_options {
  /* Index into the actions G -> Aut(H) (0 is trivial), or RRB_ACTION_*. */
  long action;
  int strategy;
  /* Also run the brute-force search and report "oracle_agrees". */
  int oracle;
  /* Equivalence classes under Aut(G); needs H = G with the adjoint action. */
  int classes;
  int rule;
  /* Include wall time; reports are then no longer byte-deterministic. */
  int timing;
  /* When set, every operator is written there as its own file. */
  const char* emit_dir;
} rrb_enumerate_options;

RRB_API rrb_enumerate_options rrb_enumerate_options_default(void);
RRB_API rrb_status rrb_rbo_enumerate(const rrb_group* h, const rrb_group* g,
                                     const rrb_enumerate_options* options,
                                     const rrb_limits* limits, char** out);
/* Pairwise graph and brace isomorphism data for one action; observations
   only. */
RRB_API rrb_status rrb_rbo_graph_experiment(const rrb_group* h, const rrb_group* g, long action,
                                            const rrb_limits* limits, char** out);
/* Order-96 census; fails with RRB_EXTENDED_MODE_REQUIRED unless extended. */
RRB_API rrb_status rrb_census96(int id, int extended, const char* data_dir, int timing,
                                const rrb_limits* limits, char** out);

/* ---- operators ---- */
RRB_API rrb_status rrb_operator_load(const char* path, const rrb_limits* limits,
                                     rrb_operator** out);
RRB_API rrb_status rrb_operator_parse(const char* json, const char* base_dir,
                                      const rrb_limits* limits, rrb_operator** out);
RRB_API void rrb_operator_free(rrb_operator* op);
RRB_API rrb_status rrb_operator_emit(const rrb_operator* op, char** out);
RRB_API rrb_status rrb_operator_report(const rrb_operator* op, char** out);
/* Searches for a witness; when one is found the bridge check is run on it. */
RRB_API rrb_status rrb_operator_isoclinic(const rrb_operator* a, const rrb_operator* b,
                                          const rrb_limits* limits, char** out);
/* Checks a given witness (JSON) and runs the bridge check. */
RRB_API rrb_status rrb_operator_check_witness(const rrb_operator* a, const rrb_operator* b,
                                              const char* witness_json, char** out);
/* Trivial braces on non-isomorphic abelian groups up to order 8: brace
   isoclinic, operator structures not isoclinic. */
RRB_API rrb_status rrb_converse_counterexample(const rrb_limits* limits, char** out);

/* ---- braces ---- */
RRB_API rrb_status rrb_brace_load(const char* path, rrb_brace** out);
RRB_API rrb_status rrb_brace_parse(const char* json, rrb_brace** out);
RRB_API void rrb_brace_free(rrb_brace* b);
RRB_API rrb_status rrb_brace_verify(const rrb_brace* b, char** out);
/* The n*n table of rows is included only when emit_rows is set. */
RRB_API rrb_status rrb_brace_ybe(const rrb_brace* b, int emit_rows, char** out);
RRB_API rrb_status rrb_brace_isoclinic(const rrb_brace* a, const rrb_brace* b,
                                       const rrb_limits* limits, char** out);

#ifdef __cplusplus
}
#endif

#endif
