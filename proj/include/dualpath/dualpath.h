/* C interface of the dualpath library. Every call returns an arr_status;
 * on failure arr_last_error() describes the problem for the calling thread.
 * Strings returned through arr_string** must be released with arr_string_free. */
#ifndef DUALPATH_DUALPATH_H
#define DUALPATH_DUALPATH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define ARR_API __attribute__((visibility("default")))
#else
#define ARR_API
#endif

/* Values match the command-line exit codes. */
typedef enum arr_status {
    ARR_OK = 0,
    ARR_USAGE = 1,
    ARR_VALIDATION = 2,
    ARR_AUDIT = 3,
    ARR_INCOMPLETE = 4,
    ARR_INTERNAL = 5
} arr_status;

typedef struct arr_arrangement arr_arrangement;
typedef struct arr_string arr_string;

ARR_API const char* arr_last_error(void);
ARR_API const char* arr_string_data(const arr_string* s);
ARR_API size_t arr_string_length(const arr_string* s);
ARR_API void arr_string_free(arr_string* s);

/* `wiring <n>` text with optional colors trailer. Partial diagrams are
 * accepted only with permissive != 0 and then only render. */
ARR_API arr_status arr_load_wiring(const char* text, int permissive, arr_arrangement** out);
/* `lines <n>` text; the sweep yields the wiring diagram. */
ARR_API arr_status arr_load_lines(const char* text, arr_arrangement** out);
ARR_API void arr_free(arr_arrangement* a);
ARR_API int arr_n(const arr_arrangement* a);
/* Letters R/B, one per pseudoline. Replaces any stored coloring. */
ARR_API arr_status arr_set_coloring(arr_arrangement* a, const char* letters);
ARR_API arr_status arr_to_wiring(const arr_arrangement* a, arr_string** out);

ARR_API arr_status arr_gen_polygon(int k, arr_arrangement** out);
/* `checks` receives one PASS/FAIL line per structural check. */
ARR_API arr_status arr_gen_theorem2(int k, arr_arrangement** out, arr_string** checks);
ARR_API arr_status arr_gen_random(int n, uint64_t seed, arr_arrangement** out);

/* Text: `V=.. E=.. F=.. U=..` then `max_depth=..`. */
ARR_API arr_status arr_stats(const arr_arrangement* a, int json, arr_string** out);

/* ARR_AUDIT when a proof condition fails; the report is still produced.
 * A non-empty subset (1-based path indices) glues only those initial paths. */
ARR_API arr_status arr_longpath(const arr_arrangement* a, int audit, const int* subset, size_t subset_len,
                                arr_string** report, arr_string** path);

typedef struct arr_search_options {
    int alternating;
    uint64_t node_limit;
    double time_limit_s;
    int threads;
} arr_search_options;

ARR_API arr_search_options arr_search_defaults(void);
/* ARR_INCOMPLETE when a limit is hit; report and best path are still produced. */
ARR_API arr_status arr_brute(const arr_arrangement* a, const arr_search_options* opt, arr_string** report,
                             arr_string** path);

ARR_API arr_status arr_reach(const arr_arrangement* a, int face, int check_boundary, arr_string** out);

typedef struct arr_monte_carlo_options {
    int w; /* 0 selects the default width */
    int trials;
    uint64_t seed;
    int threads;
    int json;
} arr_monte_carlo_options;

ARR_API arr_status arr_random_coloring(const arr_arrangement* a, const arr_monte_carlo_options* opt,
                                       arr_string** table, arr_string** summary);

typedef struct arr_render_options {
    int tunnel_mode;
    int w;
    int offset;
    int width;
    int height;
    const char* path; /* path text or NULL */
    int use_coloring;
} arr_render_options;

ARR_API arr_status arr_render(const arr_arrangement* a, const arr_render_options* opt, arr_string** svg);

/* ARR_VALIDATION when the path has violations; the report lists them. */
ARR_API arr_status arr_verify_path(const arr_arrangement* a, const char* path_text, int alternating,
                                   arr_string** report);

#ifdef __cplusplus
}
#endif

#endif
