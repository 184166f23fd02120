/*
 * C interface to the Leibniz algebra toolkit.
 *
 * Algebras are opaque handles. Every call returns an lz_status; on failure
 * lz_last_error() describes the cause (thread-local, valid until the next
 * call on the same thread). Strings returned through char** are allocated
 * by the library and must be released with lz_string_free().
 */
#ifndef LEIBNIZ_LEIBNIZ_H
#define LEIBNIZ_LEIBNIZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LEIBNIZ_BUILDING_CAPI)
#    define LZ_API __declspec(dllexport)
#  else
#    define LZ_API __declspec(dllimport)
#  endif
#else
#  define LZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    LZ_OK = 0,
    /* the input is well formed but mathematically invalid (identity fails,
       invalid Levi datum, no inner match, ...) */
    LZ_ERR_MATH = 1,
    /* malformed JSON or schema violation */
    LZ_ERR_SCHEMA = 2,
    /* file could not be read or written */
    LZ_ERR_IO = 3,
    LZ_ERR_INVALID_ARGUMENT = 4,
    /* a Levi block is required but absent */
    LZ_ERR_MISSING_LEVI = 5,
    LZ_ERR_INTERNAL = 6
} lz_status;

typedef struct lz_algebra lz_algebra;

LZ_API const char* lz_version(void);
LZ_API const char* lz_last_error(void);
LZ_API const char* lz_status_name(lz_status status);
LZ_API void lz_string_free(char* s);

/* Construction */
LZ_API lz_status lz_algebra_from_json(const char* json, lz_algebra** out);
LZ_API lz_status lz_algebra_load(const char* path, lz_algebra** out);
/* family: "sl2", "simple", "pair", "solvable2". m is ignored where the
   family has no parameter. force admits simple with m = 1. */
LZ_API lz_status lz_catalog_build(const char* family, long m, int force, lz_algebra** out);
LZ_API lz_status lz_algebra_direct_sum(const lz_algebra* a, const lz_algebra* b, lz_algebra** out);
LZ_API void lz_algebra_free(lz_algebra* alg);

/* Inspection */
LZ_API lz_status lz_algebra_dim(const lz_algebra* alg, size_t* out);
LZ_API lz_status lz_algebra_has_levi(const lz_algebra* alg, int* out);
LZ_API lz_status lz_algebra_to_json(const lz_algebra* alg, char** out);
LZ_API lz_status lz_algebra_save(const lz_algebra* alg, const char* path);

/* Direct queries */
LZ_API lz_status lz_leibniz_violation_count(const lz_algebra* alg, size_t* out);
LZ_API lz_status lz_derivation_dims(const lz_algebra* alg, size_t* der, size_t* inner, size_t* outer);

/* Reports (JSON documents; see docs/report-schema.md). A report whose
   "ok" field is false still returns LZ_OK. */
LZ_API lz_status lz_report_check(const lz_algebra* alg, char** out);
LZ_API lz_status lz_report_derive(const lz_algebra* alg, int decompose, int use_seed, uint64_t seed, char** out);
LZ_API lz_status lz_report_radical(const lz_algebra* alg, char** out);
LZ_API lz_status lz_report_modules(const lz_algebra* alg, char** out);

#ifdef __cplusplus
}
#endif

#endif /* LEIBNIZ_LEIBNIZ_H */
