#ifndef HOPFKIT_H
#define HOPFKIT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. `HK_STATUS_OK` and the next two match the CLI exit codes.
 */
typedef enum HkStatus {
  HK_STATUS_OK = 0,
  HK_STATUS_CERTIFICATE_FAILED = 1,
  HK_STATUS_INVALID_INPUT = 2,
  HK_STATUS_NULL_POINTER = 3,
  HK_STATUS_INTERNAL = 4,
} HkStatus;

/**
 * A verified Hopf algebra.
 */
typedef struct HkAlgebra HkAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a builtin algebra from a spec such as `"group-algebra:Q8"` or
 * `"small-quantum-sl2:p=3"`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum HkStatus hk_algebra_from_builtin(const char *spec, struct HkAlgebra **out);

/**
 * Parses structure constants in the JSON file format and verifies the axioms.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum HkStatus hk_algebra_from_json(const char *json, struct HkAlgebra **out);

/**
 * # Safety
 * `h` must be NULL or a handle not yet freed.
 */
void hk_algebra_free(struct HkAlgebra *h);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HkStatus hk_algebra_dim(const struct HkAlgebra *h, size_t *out);

/**
 * Serializes to the JSON file format; free the result with `hk_string_free`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HkStatus hk_algebra_to_json(const struct HkAlgebra *h, char **out);

/**
 * Dimension of the largest Hopf subalgebra inside the center.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HkStatus hk_hopf_center_dim(const struct HkAlgebra *h, size_t *out);

/**
 * Dimension of the universal cocentral quotient.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum HkStatus hk_hopf_cocenter_dim(const struct HkAlgebra *h, size_t *out);

/**
 * Runs a CLI command, e.g. `{"hopf-center", "--builtin", "sweedler", "--format", "json"}`
 * (no program name). `out_report` receives stdout, or stderr when the command
 * failed before producing a report; `out_exit_code` receives the CLI exit code.
 * The return value is `HK_STATUS_OK` whenever the command ran.
 *
 * # Safety
 * `argv` must hold `argc` NUL-terminated strings; the out pointers must be writable.
 */
enum HkStatus hk_run(size_t argc, const char *const *argv, char **out_report, int *out_exit_code);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void hk_string_free(char *s);

/**
 * Message of the last failed call on this thread, or NULL. Owned by the
 * library and valid until the next failing call on the same thread.
 */
const char *hk_last_error_message(void);

/**
 * Library version as a static string.
 */
const char *hk_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HOPFKIT_H */
