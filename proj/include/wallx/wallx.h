/* wallx: exact quantized wall-crossing engine, C API.
 *
 * All compound values travel as JSON text (see README for the formats).
 * Returned strings are heap-allocated; release them with wallx_string_free.
 * On any status other than WALLX_OK, wallx_last_error(engine) holds a
 * message that stays valid until the next call on the same engine.
 */
#ifndef WALLX_H
#define WALLX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wallx_engine wallx_engine;
typedef struct wallx_lattice wallx_lattice;

typedef enum wallx_status {
    WALLX_OK = 0,
    /* a contract failed: nonzero residual, violated precondition, ... */
    WALLX_CONTRACT_VIOLATION = 1,
    /* malformed input: bad JSON, schema violation, invalid lattice */
    WALLX_PARSE_ERROR = 2,
    WALLX_INTERNAL_ERROR = 3
} wallx_status;

const char *wallx_version(void);

wallx_engine *wallx_engine_new(void);
void wallx_engine_free(wallx_engine *engine);
const char *wallx_last_error(const wallx_engine *engine);

void wallx_string_free(char *text);

/* Lattice handle: parsed once, reused across calls. */
wallx_status wallx_lattice_parse(wallx_engine *engine, const char *json,
                                 wallx_lattice **out);
void wallx_lattice_free(wallx_lattice *lattice);

/* Symmetrized quantum integer [n] as a serialized coefficient list. */
wallx_status wallx_qint(wallx_engine *engine, long n, char **out_json);

/* K-theoretic residue of a serialized ZRat; result is a serialized SRat. */
wallx_status wallx_kres(wallx_engine *engine, const char *zrat_json,
                        char **out_json);

/* Master-space relation check on a JSON list of fixed loci. The reply
 * carries the residual and a pass flag; a nonzero residual also returns
 * WALLX_CONTRACT_VIOLATION. */
wallx_status wallx_master_check(wallx_engine *engine, const char *loci_json,
                                char **out_json);

/* Pair-invariant expansion of an invariant table at twist k. */
wallx_status wallx_expand(wallx_engine *engine, const wallx_lattice *lattice,
                          const char *table_json, long k,
                          const char *targets_json, char **out_json);

/* Unique inversion of a pair table at twist k. */
wallx_status wallx_invert(wallx_engine *engine, const wallx_lattice *lattice,
                          const char *table_json, long k,
                          const char *targets_json, char **out_json);

/* Wall-crossing relation residuals for two pair tables at twists k1, k2.
 * Nonzero residuals return WALLX_CONTRACT_VIOLATION. */
wallx_status wallx_check_relation(wallx_engine *engine,
                                  const wallx_lattice *lattice,
                                  const char *table1_json, long k1,
                                  const char *table2_json, long k2,
                                  const char *targets_json, char **out_json);

/* Stability report: Hilbert polynomial, r, tilde_r, tau, genericity and
 * lambda_k values for each target, plus the tau order on the targets. */
wallx_status wallx_stability(wallx_engine *engine,
                             const wallx_lattice *lattice,
                             const char *targets_json, const long *ks,
                             size_t ks_len, char **out_json);

/* Run a verification suite; the reply is a line-oriented JSON report.
 * range/cases <= 0 pick the suite defaults. Any failing check returns
 * WALLX_CONTRACT_VIOLATION. */
wallx_status wallx_verify(wallx_engine *engine, const char *suite,
                          unsigned long long seed, long range, long cases,
                          char **out_report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WALLX_H */
