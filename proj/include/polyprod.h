#ifndef POLYPROD_H
#define POLYPROD_H

/* C interface to the polyhedral-product engine. All functions returning int
 * give PP_OK on success and PP_ERR on failure, with pp_last_error() holding
 * a thread-local message. Returned strings stay owned by the handle they
 * came from and live until it is freed. */

#ifdef __cplusplus
extern "C" {
#endif

enum {
    PP_OK = 0,
    PP_ERR = 1,
    PP_UNDECIDED = 2 /* report exit code for honest unknown/failure verdicts */
};

typedef struct pp_complex pp_complex;
typedef struct pp_report pp_report;

const char* pp_version(void);
const char* pp_last_error(void);

/* Documents are either plain text (vertex count on the first line, one facet
 * of whitespace-separated vertices per further line, '#' comments) or a JSON
 * object {"m", "facets", "pairs"?, "name"?}. */
int pp_complex_parse(const char* document, pp_complex** out);
int pp_complex_corpus(const char* name, pp_complex** out);
const char* pp_complex_text(const pp_complex* c);     /* canonical digest */
const char* pp_complex_document(const pp_complex* c); /* parseable text form */
int pp_complex_m(const pp_complex* c);
int pp_complex_dim(const pp_complex* c);
void pp_complex_free(pp_complex* c);

/* Commands: classify, homology, mac, rz, skeleton-mac, golod, decompose,
 * skeleton-decompose, loops, prove-p, quasitoric.
 * options_json (NULL or any subset of the keys):
 *   {"cap": 20, "cutoff": 12, "facet": [1,2,3], "n": 4, "timing": false}
 * The report carries both renderings; its exit code is 0 for a settled
 * result and PP_UNDECIDED for an honest unknown/failure verdict. */
int pp_run(const char* command, const char* document, const char* options_json,
           pp_report** out);
/* corpus NAME or NAME(p1,p2,...): the named example complex as a document */
int pp_run_corpus(const char* name, const char* options_json, pp_report** out);

const char* pp_report_json(const pp_report* r);
const char* pp_report_text(const pp_report* r);
int pp_report_exit_code(const pp_report* r);
void pp_report_free(pp_report* r);

#ifdef __cplusplus
}
#endif

#endif /* POLYPROD_H */
