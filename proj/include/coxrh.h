#ifndef COXRH_H
#define COXRH_H

/* C interface to the Coxeter relative-hyperbolicity library.
 *
 * All functions return a status code:
 *   COXRH_OK        success
 *   COXRH_EINPUT    malformed or invalid input
 *   COXRH_ECAP      a documented capacity cap was exceeded
 *   COXRH_EUSAGE    bad arguments (null pointers, unknown command)
 *
 * Strings returned through out-parameters are heap-allocated and must be
 * released with coxrh_string_free.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define COXRH_OK 0
#define COXRH_EINPUT 2
#define COXRH_ECAP 3
#define COXRH_EUSAGE 4

typedef struct coxrh_input coxrh_input;

#define COXRH_FORMAT_AUTO 0
#define COXRH_FORMAT_JSON 1
#define COXRH_FORMAT_TXT 2

/* Parses input text (JSON, TXT, or a named family) into an opaque handle.
 * On failure *out is null and *error_out (if non-null) holds a message. */
int coxrh_input_parse(const char* text, int format, coxrh_input** out,
                      char** error_out);

void coxrh_input_free(coxrh_input* input);

/* Number of generators, or -1 if input is null. */
int coxrh_input_rank(const coxrh_input* input);

/* Runs one command ("classify", "perp", "moussong", "relhyp-verify",
 * "relhyp-minimal", "decide", "maxparab", "isolated-flats", "racg", "dot")
 * with options given as a JSON object (may be null or empty). On success
 * *report_out holds the report: canonical JSON when the "json" option is
 * true, human-readable text otherwise. */
int coxrh_run(const coxrh_input* input, const char* command,
              const char* options_json, char** report_out, char** error_out);

void coxrh_string_free(char* s);

const char* coxrh_version(void);

#ifdef __cplusplus
}
#endif

#endif /* COXRH_H */
