/*
 * heegaard - combinatorial certificates for Heegaard diagrams.
 *
 * C interface to the shared library.  All state lives behind opaque handles;
 * every function that can fail returns an HG_* status code and, when given a
 * buffer, copies a human-readable message into it.  Handles are freed with
 * the matching *_free function; freeing NULL is a no-op.
 *
 * Analyses produce report handles carrying the same certificate rendered as
 * plain text and as a JSON document, plus a decision code: 0 for a positive
 * certificate, 1 for a negative or inapplicable result.  Report generation
 * is deterministic: equal inputs yield byte-identical output.
 */

#ifndef HEEGAARD_H
#define HEEGAARD_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by the functions below. */
#define HG_OK 0
#define HG_ERR_INVALID 1  /* null handle, bad argument, precondition violation */
#define HG_ERR_PARSE 2    /* input text does not match the documented format */
#define HG_ERR_LIMIT 3    /* an enumeration or size cap was exceeded */
#define HG_ERR_INTERNAL 4

/* check-lo modes. */
#define HG_LO_DET 0
#define HG_LO_BRUTEFORCE 1

typedef struct hg_diagram hg_diagram; /* a combinatorial Heegaard diagram */
typedef struct hg_signmat hg_signmat; /* a matrix over {0,+,-,*} */
typedef struct hg_report hg_report;   /* a finished certificate report */

/* Enumeration caps.  Initialize with hg_limits_init and adjust as needed;
 * all fields must stay positive. */
typedef struct hg_limits {
  long long max_generators;  /* generator / matching enumeration (default 1e6) */
  int max_perm_n;            /* formal determinant size (default 12) */
  int max_bruteforce_rows;   /* 3^m row-scaling sweep (default 16) */
} hg_limits;

const char* hg_version(void);
void hg_limits_init(hg_limits* limits);

/* ---- diagrams ----
 * The diagram file format is a JSON object {"genus": g, "beta": [...]} where
 * "beta" holds g lists of [alpha_index, sign] pairs, alpha_index 1-based and
 * sign in {1, -1}. */
int hg_diagram_parse_json(const char* text, hg_diagram** out,
                          char* errmsg, size_t errcap);
int hg_diagram_lens(long long p, hg_diagram** out, char* errmsg, size_t errcap);
/* Serializes to the diagram file format; free the string with hg_string_free. */
int hg_diagram_to_json(const hg_diagram* d, char** out_text,
                       char* errmsg, size_t errcap);
void hg_diagram_free(hg_diagram* d);

/* ---- sign matrices ----
 * Text format: one line per row, entries 0 + - * separated by exactly one
 * space, no trailing whitespace, equal row lengths. */
int hg_signmat_parse(const char* text, hg_signmat** out,
                     char* errmsg, size_t errcap);
/* Builds the sign matrix of a presentation given in the presentation text
 * format: first line "gens m", then one relator per line as tokens gK or
 * gK^-1 (K 1-based).  Entry (i,j) records how generator i occurs in relator
 * j: 0 absent, + only positively, - only negatively, * both ways. */
int hg_signmat_from_presentation(const char* text, hg_signmat** out,
                                 char* errmsg, size_t errcap);
void hg_signmat_free(hg_signmat* m);

/* ---- analyses ----
 * limits may be NULL for the defaults. */
int hg_analyze(const hg_diagram* d, const hg_limits* limits, hg_report** out,
               char* errmsg, size_t errcap);
int hg_check_strong(const hg_diagram* d, const hg_limits* limits,
                    hg_report** out, char* errmsg, size_t errcap);
int hg_matrix_summary(const hg_diagram* d, const hg_limits* limits,
                      hg_report** out, char* errmsg, size_t errcap);
int hg_recognize_s3(const hg_diagram* d, const hg_limits* limits,
                    hg_report** out, char* errmsg, size_t errcap);
/* mode is HG_LO_DET or HG_LO_BRUTEFORCE; det mode needs a square matrix. */
int hg_check_lo(const hg_signmat* m, int mode, const hg_limits* limits,
                hg_report** out, char* errmsg, size_t errcap);

/* ---- reports ----
 * The returned strings are owned by the report and live until hg_report_free. */
const char* hg_report_text(const hg_report* r);
const char* hg_report_json(const hg_report* r);
int hg_report_exit_code(const hg_report* r); /* 0 positive, 1 negative */
void hg_report_free(hg_report* r);

void hg_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* HEEGAARD_H */
