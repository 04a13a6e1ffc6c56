#ifndef HSS_H
#define HSS_H

/* C interface to the hss library: exact Hochschild cohomology, Ext
 * algebras, the shearing map, and the coefficient-filtration spectral
 * sequence for finite-dimensional coconnective dgas over F_p or Q.
 *
 * All objects are opaque handles; every function that can fail returns a
 * status code and, where documented, an error string to be released with
 * hss_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hss_dga hss_dga;
typedef struct hss_report hss_report;

/* Status codes; they double as CLI exit codes. */
enum {
    HSS_OK = 0,          /* success, all checks passed */
    HSS_CHECK_FAILED = 1,/* computation ran, a mathematical check failed */
    HSS_INPUT_ERROR = 2  /* unreadable, unparsable or invalid input */
};

typedef struct hss_options {
    int window;         /* certify total degrees |n| <= window; default 8 */
    int pages;          /* page limit for reports; 0 = to stabilization */
    long budget;        /* bar-word budget; 0 = library default */
    const char *format; /* "text" | "data" | "svg"; NULL means "text" */
} hss_options;

void hss_options_init(hss_options *opts);

const char *hss_version(void);

/* Bundled example algebras. */
int hss_fixture_count(void);
const char *hss_fixture_name(int index);                /* NULL when out of range */
const char *hss_fixture_source(const char *name);       /* NULL when unknown */

/* Parsing is syntactic; semantic validation happens in hss_run. */
int hss_dga_parse(const char *text, hss_dga **out, char **err);
int hss_dga_parse_file(const char *path, hss_dga **out, char **err);
void hss_dga_free(hss_dga *a);

/* command: validate | homology | hh | ext | shear | ss | check-all.
 * On HSS_OK and HSS_CHECK_FAILED a report is always produced; on
 * HSS_INPUT_ERROR a report is produced when the command is "validate"
 * (describing the failures), otherwise *err is set. */
int hss_run(const hss_dga *a, const char *command, const hss_options *opts, hss_report **out,
            char **err);

const char *hss_report_body(const hss_report *r); /* rendered in the requested format */
size_t hss_report_size(const hss_report *r);
int hss_report_ok(const hss_report *r);
void hss_report_free(hss_report *r);

void hss_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif
