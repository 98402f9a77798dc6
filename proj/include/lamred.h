/* lamred — lambda-term normalization over the suspension notation.
 *
 * C interface to the shared library. Engines own an arena of term nodes and
 * an allocation meter; terms are opaque handles owned by their engine and
 * freed with it. All functions return LAMRED_OK on success; on failure the
 * engine stores a message retrievable with lamred_engine_last_error.
 */
#ifndef LAMRED_H
#define LAMRED_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lamred_engine lamred_engine;
typedef struct lamred_term lamred_term;

typedef enum lamred_status {
  LAMRED_OK = 0,
  LAMRED_ERR_PARSE = 1,
  LAMRED_ERR_NONTERMINATING = 2,
  LAMRED_ERR_UNSUPPORTED = 3,
  LAMRED_ERR_ILL_FORMED = 4,
  LAMRED_ERR_BAD_ARGUMENT = 5,
  LAMRED_ERR_RESOURCE = 6,
  LAMRED_ERR_INTERNAL = 7
} lamred_status;

lamred_engine* lamred_engine_new(void);
void lamred_engine_free(lamred_engine* eng);

/* Message describing the most recent failure on this engine; empty string
 * when the last call succeeded. The pointer stays valid until the next call
 * on the same engine. */
const char* lamred_engine_last_error(const lamred_engine* eng);

/* Parses the surface syntax (named or de Bruijn) into a pure de Bruijn term
 * owned by the engine. */
lamred_status lamred_parse(lamred_engine* eng, const char* src,
                           lamred_term** out_term);

/* Formats a term; style 0 is the compact backslash syntax, style 1 the
 * fully parenthesized unicode one. The returned string must be released with
 * lamred_string_free. */
lamred_status lamred_format(lamred_engine* eng, const lamred_term* term,
                            int style, char** out_text);

/* Rewrites the term in place to the requested form under the chosen
 * strategy. strategy: "implicit" | "explicit" | "combined";
 * form: "hnf" | "whnf" | "nf". max_beta_steps <= 0 selects the default
 * budget. */
lamred_status lamred_normalize(lamred_engine* eng, lamred_term* term,
                               const char* strategy, const char* form,
                               long long max_beta_steps);

/* Fully reads suspended substitutions out of the term; out_term is a fresh
 * pure de Bruijn term in the same engine. */
lamred_status lamred_read_out(lamred_engine* eng, lamred_term* term,
                              lamred_term** out_term);

/* 1 when the two terms are structurally equal modulo indirections. */
lamred_status lamred_equal(lamred_engine* eng, const lamred_term* a,
                           const lamred_term* b, int* out_equal);

/* Single-step rule log of the explicit strategy's derivation (see the trace
 * subcommand); lines are "STEP n RULE id AT path -> term". */
lamred_status lamred_trace(lamred_engine* eng, lamred_term* term,
                           long long max_steps, int style, char** out_text);

/* Allocation meter of this engine: reset and JSON snapshot. The snapshot
 * reports nodes by kind, environment items, derived byte totals under the
 * declared byte model, and rule-application counts. */
lamred_status lamred_meter_reset(lamred_engine* eng);
lamred_status lamred_meter_json(lamred_engine* eng, char** out_json);

/* Runs a benchmark suite described by a JSON spec:
 *   {"suite":"ski","seed":1,"count":500,"size":12,"fuel":100000,
 *    "strategy":"combined"}
 * strategy "all" compares the three strategies with non-normalizing cases
 * excluded symmetrically. The result is a JSON array of reports. */
lamred_status lamred_bench(const char* spec_json, char** out_json,
                           char** out_error);

void lamred_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LAMRED_H */
