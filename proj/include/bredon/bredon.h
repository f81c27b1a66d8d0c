#ifndef BREDON_H
#define BREDON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(BREDON_BUILDING_LIBRARY)
#define BREDON_API __attribute__((visibility("default")))
#else
#define BREDON_API
#endif

typedef enum bredon_status {
    BREDON_OK = 0,
    BREDON_VALIDATION_FAILURE = 2,
    BREDON_RESOURCE_CAP = 3,
    BREDON_INPUT_ERROR = 4,
    BREDON_INTERNAL_ERROR = 5
} bredon_status;

typedef enum bredon_method {
    BREDON_METHOD_AUTO = 0,
    BREDON_METHOD_CHAIN = 1,
    BREDON_METHOD_CLOSED = 2
} bredon_method;

typedef enum bredon_format {
    BREDON_FORMAT_JSON = 0,
    BREDON_FORMAT_TEXT = 1
} bredon_format;

typedef struct bredon_options {
    bredon_method method;
    /* Highest homological degree reported; negative means the rank. */
    int max_degree;
    /* Largest spherical subgroup order the chain path will realize. */
    uint64_t order_cap;
    int dump_tables;
    int cells;
    bredon_format format;
} bredon_options;

typedef struct bredon_system bredon_system;
typedef struct bredon_result bredon_result;

BREDON_API void bredon_options_init(bredon_options* options);

/* Row-major rank x rank Coxeter matrix; 0 stands for infinity. */
BREDON_API bredon_status bredon_system_from_matrix(const int* entries, size_t rank, bredon_system** out);
/* {"rank": N, "m": [[...]]} */
BREDON_API bredon_status bredon_system_from_json(const char* json, bredon_system** out);
BREDON_API bredon_status bredon_system_from_file(const char* path, bredon_system** out);
BREDON_API void bredon_system_free(bredon_system* system);

BREDON_API size_t bredon_system_rank(const bredon_system* system);
BREDON_API int bredon_system_is_finite(const bredon_system* system);
/* Number of spherical subsets of the given size; -1 on bad arguments. */
BREDON_API long bredon_spherical_count(const bredon_system* system, size_t size);

/* Status of the run itself (discrepancy, cap) is read from the result. */
BREDON_API bredon_status bredon_compute(const bredon_system* system, const bredon_options* options,
                                        bredon_result** out);
BREDON_API void bredon_result_free(bredon_result* result);

BREDON_API bredon_status bredon_result_status(const bredon_result* result);
/* Degrees 0 .. count-1 are available from the primary method. */
BREDON_API size_t bredon_result_degree_count(const bredon_result* result);
BREDON_API long bredon_result_free_rank(const bredon_result* result, size_t degree);
BREDON_API size_t bredon_result_torsion_count(const bredon_result* result, size_t degree);
/* Decimal string owned by the result; NULL when out of range. */
BREDON_API const char* bredon_result_torsion(const bredon_result* result, size_t degree, size_t index);
BREDON_API int bredon_result_k_decided(const bredon_result* result);
BREDON_API size_t bredon_result_discrepancy_count(const bredon_result* result);
/* Full report in the format requested by the options; owned by the result. */
BREDON_API const char* bredon_result_report(const bredon_result* result);

/* Report strings below are heap allocated; release with bredon_string_free. */
BREDON_API bredon_status bredon_classify_report(const bredon_system* system, bredon_format format, char** out);
BREDON_API bredon_status bredon_cells_report(const bredon_system* system, const bredon_options* options, char** out);
BREDON_API bredon_status bredon_tables_report(const bredon_system* system, const bredon_options* options, char** out);
/* out_status receives the corpus verdict (OK, VALIDATION_FAILURE, RESOURCE_CAP). */
BREDON_API bredon_status bredon_validate_directory(const char* directory, const bredon_options* options,
                                                   bredon_status* out_status, char** out);
BREDON_API void bredon_string_free(char* s);

/* Message of the last failed call on this thread; never NULL. */
BREDON_API const char* bredon_last_error(void);
BREDON_API const char* bredon_version(void);

#ifdef __cplusplus
}
#endif

#endif
