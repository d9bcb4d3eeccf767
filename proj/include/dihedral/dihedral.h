#ifndef DIHEDRAL_DIHEDRAL_H
#define DIHEDRAL_DIHEDRAL_H

/* C interface to the dihedral matrix class library. Every call returns a
 * status; on failure dmc_last_error() describes the problem for the calling
 * thread. Strings handed out through char** belong to the caller and are
 * released with dmc_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DMC_API __declspec(dllexport)
#else
#define DMC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dmc_status {
  DMC_OK = 0,
  DMC_ERR_PARSE = 1,
  DMC_ERR_SUM_MISMATCH = 2,
  DMC_ERR_SHAPE = 3,
  DMC_ERR_BOUNDS = 4,
  DMC_ERR_DOMAIN = 5, /* fractional margins where integers are needed */
  DMC_ERR_ARGUMENT = 6,
  DMC_ERR_INFEASIBLE = 7,
  DMC_ERR_INTERNAL = 8
} dmc_status;

typedef enum dmc_format { DMC_FORMAT_JSON = 0, DMC_FORMAT_TEXT = 1 } dmc_format;

typedef struct dmc_instance dmc_instance;
typedef struct dmc_report dmc_report;
typedef struct dmc_matrix dmc_matrix;

DMC_API const char* dmc_last_error(void);
DMC_API const char* dmc_status_name(dmc_status status);
DMC_API void dmc_string_free(char* s);

/* rows and cols are comma-separated scalars such as "3,1/2,0"; matrix_class is
 * "real", "integral" or "zero-one"; subgroup is one of trivial, rot90, rot180,
 * h, v, diag, antidiag, times, plus, full. */
DMC_API dmc_status dmc_instance_create(const char* rows, const char* cols, const char* matrix_class,
                                       const char* subgroup, dmc_instance** out);
DMC_API dmc_status dmc_instance_from_json(const char* json, dmc_instance** out);
DMC_API dmc_status dmc_instance_to_json(const dmc_instance* inst, char** out);
/* Margins as comma-separated scalars; class and subgroup by name. */
DMC_API dmc_status dmc_instance_margins(const dmc_instance* inst, char** rows, char** cols);
DMC_API const char* dmc_instance_class(const dmc_instance* inst);
DMC_API const char* dmc_instance_subgroup(const dmc_instance* inst);
DMC_API void dmc_instance_free(dmc_instance* inst);

DMC_API dmc_status dmc_solve(const dmc_instance* inst, dmc_report** out);
DMC_API int dmc_report_is_feasible(const dmc_report* report);
DMC_API const char* dmc_report_theorem(const dmc_report* report);
DMC_API size_t dmc_report_condition_count(const dmc_report* report);
/* label and detail stay valid until the report is freed. */
DMC_API dmc_status dmc_report_condition(const dmc_report* report, size_t index, const char** label, int* holds,
                                        const char** detail);
/* DMC_ERR_INFEASIBLE when the report carries no witness. */
DMC_API dmc_status dmc_report_witness(const dmc_report* report, dmc_matrix** out);
DMC_API dmc_status dmc_report_render(const dmc_report* report, dmc_format format, char** out);
DMC_API void dmc_report_free(dmc_report* report);

/* Text (one row per line), a JSON array of rows, or a solve report. */
DMC_API dmc_status dmc_matrix_parse(const char* text, dmc_matrix** out);
DMC_API size_t dmc_matrix_rows(const dmc_matrix* a);
DMC_API size_t dmc_matrix_cols(const dmc_matrix* a);
DMC_API dmc_status dmc_matrix_entry(const dmc_matrix* a, size_t i, size_t j, char** out);
DMC_API dmc_status dmc_matrix_render(const dmc_matrix* a, char** out);
/* The matrix's own row and column sums, comma-separated. */
DMC_API dmc_status dmc_matrix_margins(const dmc_matrix* a, char** rows, char** cols);
DMC_API void dmc_matrix_free(dmc_matrix* a);

/* Checks margins, invariance and the entry domain. *passed is 1 or 0; the
 * rendered report goes to *out when out is not NULL. */
DMC_API dmc_status dmc_check(const dmc_matrix* a, const dmc_instance* inst, dmc_format format, int* passed,
                             char** out);

typedef struct dmc_sweep_config {
  size_t max_m;
  size_t max_n;
  int64_t max_total;
  const char* classes;   /* comma-separated; NULL means integral,zero-one */
  const char* subgroups; /* comma-separated; NULL means all ten */
  int64_t entry_bound;   /* negative: N */
  size_t jobs;
  int inject_fault;
} dmc_sweep_config;

DMC_API void dmc_sweep_config_init(dmc_sweep_config* cfg);
/* *listing gets one discrepancy per line, sorted. */
DMC_API dmc_status dmc_sweep(const dmc_sweep_config* cfg, size_t* checked, size_t* discrepancies, char** listing);

typedef struct dmc_gen_config {
  uint64_t seed;
  size_t max_m;
  size_t max_n;
  int64_t max_entry;
  const char* subgroup;
  const char* matrix_class;
  double feasible_bias;
} dmc_gen_config;

DMC_API void dmc_gen_config_init(dmc_gen_config* cfg);
DMC_API dmc_status dmc_generate(const dmc_gen_config* cfg, dmc_instance** out);

#ifdef __cplusplus
}
#endif

#endif
