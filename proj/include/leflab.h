/* C API for the leflab engine: exact-arithmetic Lie algebras generated by
 * Lefschetz operators on graded vector spaces.
 *
 * All functions return an error code; output strings are heap-allocated and
 * must be released with leflab_string_free. The scenario handle is opaque.
 * The library is not thread-safe across calls sharing one handle; distinct
 * handles may be used concurrently.
 */
#ifndef LEFLAB_H
#define LEFLAB_H

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes (also used as process exit codes by the CLI). */
#define LEFLAB_OK 0     /* success, all requested assertions hold */
#define LEFLAB_EFAIL 1  /* analysis ran but an assertion failed */
#define LEFLAB_EPARSE 2 /* malformed input, unknown name, bad usage */

typedef struct leflab_scenario leflab_scenario;

/* Version string, statically allocated. */
const char* leflab_version(void);

/* Description of the most recent error on this thread, statically allocated;
 * empty string when the last call succeeded. */
const char* leflab_last_error(void);

void leflab_string_free(char* s);

/* Creates a scenario from a JSON config: either
 *   {"model": "<name>", ...params..., "analyses": [...], "seed": n, "box": n}
 * or a bare module document (an object with "pieces"). */
int leflab_scenario_create(const char* config_json, leflab_scenario** out);
void leflab_scenario_free(leflab_scenario* s);

/* Override the search box / seed from the config before running. */
int leflab_scenario_set_box(leflab_scenario* s, int box);
int leflab_scenario_set_seed(leflab_scenario* s, unsigned seed);

/* Runs the configured analyses. Returns LEFLAB_OK when every requested
 * assertion holds, LEFLAB_EFAIL when the run completed with failures; the
 * report is available in both cases. */
int leflab_scenario_run(leflab_scenario* s);

/* Report of the last run as canonical JSON (byte-identical for a fixed
 * config and seed) or as deterministic plain text. NULL before a run or on
 * allocation failure. Caller frees with leflab_string_free. */
char* leflab_scenario_report_json(const leflab_scenario* s);
char* leflab_scenario_report_text(const leflab_scenario* s);

/* Catalog of builtin models with parameter schemas and defaults. */
int leflab_list_models(char** out_json);

/* Admissible-node table for root-system type 'A'..'E' and the given rank. */
int leflab_classify(char type, int rank, char** out_json);

/* Runs a verification suite (core, jordan, torus, hk, albert, flags,
 * appendix, all). Writes the summary JSON and sets *all_pass to 0/1.
 * Returns LEFLAB_OK / LEFLAB_EFAIL / LEFLAB_EPARSE. box <= 0 selects the
 * default search box. */
int leflab_verify(const char* suite, unsigned seed, int box, char** out_json, int* all_pass);

/* Same run, but the output is the PASS/FAIL line summary with anchors. */
int leflab_verify_text(const char* suite, unsigned seed, int box, char** out_text,
                       int* all_pass);

/* Renders any report JSON produced by this library as deterministic text. */
int leflab_render_text(const char* report_json, char** out_text);

#ifdef __cplusplus
}
#endif

#endif
