/* C interface to the exact Hochschild / Tate engine.
 *
 * All heavy objects live behind opaque handles. Functions return 0 on
 * success and a negative error code otherwise; tatehh_last_error() gives a
 * human-readable message for the most recent failure on this thread.
 */
#ifndef TATEHH_H
#define TATEHH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tatehh_problem tatehh_problem;
typedef struct tatehh_report tatehh_report;

enum tatehh_status {
    TATEHH_OK = 0,
    TATEHH_ERR_PARSE = -1,    /* malformed input or violated axioms */
    TATEHH_ERR_USAGE = -2,    /* bad arguments, unknown command */
    TATEHH_ERR_INTERNAL = -3, /* engine failure */
    TATEHH_ERR_NULL = -4      /* null pointer argument */
};

typedef struct tatehh_options {
    /* 0 means: use the field characteristic */
    unsigned group_prime;
    /* top homological degree for tables; <= 0 means the default (6) */
    int max_degree;
    /* degree window for Tate tables; used when window_set != 0 */
    int window_lo, window_hi, window_set;
    /* spectral sequence page bound; < 0 means automatic */
    int r_max;
    int strict;
    int verbose;
} tatehh_options;

void tatehh_options_init(tatehh_options* opt);

const char* tatehh_version(void);
const char* tatehh_last_error(void);

/* ---- problems ---- */
int tatehh_problem_from_text(const char* json_text, tatehh_problem** out);
int tatehh_problem_from_file(const char* path, tatehh_problem** out);
const char* tatehh_problem_name(const tatehh_problem* p);
void tatehh_problem_free(tatehh_problem* p);

/* ---- built-in corpus ---- */
int tatehh_corpus_count(void);
const char* tatehh_corpus_name(int index);
const char* tatehh_corpus_json(int index);
/* resolve "f2", "f2.json" or a path ending in a corpus name; NULL if none */
const char* tatehh_corpus_find(const char* name);

/* ---- running commands ----
 * command: hh | tate | ss | d1check | degeneration | subdivision-selftest |
 *          selftest (selftest ignores the problem, which may be NULL)
 */
int tatehh_run(const char* command, const tatehh_problem* problem,
               const tatehh_options* opt, tatehh_report** out);

const char* tatehh_report_text(const tatehh_report* r);
const char* tatehh_report_json(const tatehh_report* r);
/* 0 = success, 1 = parse/validation failure, 2 = inconclusive/failed checks */
int tatehh_report_exit_code(const tatehh_report* r);
void tatehh_report_free(tatehh_report* r);

#ifdef __cplusplus
}
#endif

#endif /* TATEHH_H */
