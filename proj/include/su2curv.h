/* C interface to the SU(2)-structure curvature engine.
 *
 * All computation is exact rational arithmetic; reports serialize rationals
 * as strings ("p/q") inside JSON. Handles are opaque; every char* returned
 * through an out-parameter or return value is owned by the caller and must
 * be released with su2curv_free_string().
 */
#ifndef SU2CURV_H
#define SU2CURV_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct su2curv_instance su2curv_instance;

typedef enum su2curv_status {
  SU2CURV_OK = 0,
  SU2CURV_ERR_PARSE = 1,        /* syntax, index-range, or Jacobi failure */
  SU2CURV_ERR_UNKNOWN_NAME = 2, /* no such catalog instance */
  SU2CURV_ERR_BAD_COMMAND = 3,
  SU2CURV_ERR_VERIFY = 4,       /* computed report contains failures */
  SU2CURV_ERR_INTERNAL = 5
} su2curv_status;

/* Structure-file text -> instance. On error returns a status and, when err
 * is non-NULL, a diagnostic (line/column for syntax errors, the violating
 * 3-form for Jacobi failures). */
su2curv_status su2curv_instance_parse(const char* text, su2curv_instance** out, char** err);

/* Built-in instance by name. */
su2curv_status su2curv_instance_from_catalog(const char* name, su2curv_instance** out,
                                             char** err);

void su2curv_instance_free(su2curv_instance* inst);

const char* su2curv_instance_name(const su2curv_instance* inst);

/* JSON array [{"name": ..., "description": ...}, ...]. */
char* su2curv_catalog_json(void);

/* One "name - description" line per built-in instance. */
char* su2curv_catalog_text(void);

/* command is one of: validate, torsion, classify, curvature, verify.
 * Writes the JSON report to *json_out. Returns SU2CURV_ERR_VERIFY when the
 * report contains a failed check (the report is still written). */
su2curv_status su2curv_run(const su2curv_instance* inst, const char* command, char** json_out,
                           char** err);

/* Same report rendered as text. */
su2curv_status su2curv_run_text(const su2curv_instance* inst, const char* command,
                                char** text_out, char** err);

/* Number of "expect" lines carried by the instance's source file. */
int su2curv_expect_count(const su2curv_instance* inst);

/* Compares every "expect key = value" line against the computed verify
 * report. SU2CURV_OK when all match; SU2CURV_ERR_VERIFY with a detail list
 * otherwise. */
su2curv_status su2curv_check_expected(const su2curv_instance* inst, char** detail);

void su2curv_free_string(char* s);

const char* su2curv_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SU2CURV_H */
