#ifndef SPX_SETPAIR_H
#define SPX_SETPAIR_H

/* C interface to the set-pair toolkit. All payloads are UTF-8 JSON
 * strings; big integers travel as decimal strings. Every call returns an
 * error code, writes its result (if any) to *out as a malloc'd string the
 * caller releases with spx_buffer_free, and records a human-readable
 * message retrievable with spx_context_last_error on failure. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct spx_context spx_context;

enum {
  SPX_OK = 0,
  SPX_VERIFY = 1,   /* the object fails its claimed property (result JSON still produced) */
  SPX_USAGE = 2,    /* malformed request or out-of-range parameters */
  SPX_BUDGET = 3,   /* instance exceeds a hard size/node budget */
  SPX_INTERNAL = 4, /* unexpected failure; see last_error */
};

spx_context* spx_context_create(void);
void spx_context_destroy(spx_context* ctx);

/* Message from the most recent failing call on this context; empty string
 * after a success. Owned by the context; valid until the next call. */
const char* spx_context_last_error(const spx_context* ctx);

void spx_buffer_free(char* buf);

/* Build a named construction.
 * request: {"name": "tuza_tau_k" | "erdos_lovasz" | "colex_skew" |
 *           "weakly_triples" | "ekr_star", "k": int, "l"?: int,
 *           "n"?: int, "e"?: int}
 * out: the family or pair-system JSON. */
int spx_construct(spx_context* ctx, const char* request, char** out);

/* Verify a pair system against a flavor ("cross" | "skew" | "weakly";
 * defaults to the system's own claim). request: {"system": {...},
 * "flavor"?: str}. out: verdict JSON plus the Bollobas weight when
 * condition (1) holds. Returns SPX_VERIFY when the verdict is negative. */
int spx_verify(spx_context* ctx, const char* request, char** out);

/* Evaluate every closed-form bound applicable to the parameters.
 * request: {"k": int, "l"?: int, "n"?: int, "g"?: int}
 * out: JSON array of bound reports. */
int spx_bounds(spx_context* ctx, const char* request, char** out);

/* Family-level operations. request: {"op": "closure" | "is_maximal" |
 * "covering_number" | "generator", "family": {...}} with the family
 * carrying its own n and k. out depends on op. */
int spx_family_op(spx_context* ctx, const char* request, char** out);

/* System-level analysis. request: {"op": "alpha_beta" | "peel" |
 * "weight" | "vertex_set", "system": {...}}. */
int spx_system_op(spx_context* ctx, const char* request, char** out);

/* Exact extremal search. request: {"quantity": "M" | "f" | "g" |
 * "n_cross" | "n_skew" | "n_weakly", "n"?: int, "k": int, "l"?: int,
 * "max_nodes"?: uint, "workers"?: int}. out: search result JSON with a
 * witness and an optimality statement. */
int spx_search(spx_context* ctx, const char* request, char** out);

/* Run the built-in verification matrix. request: {"only"?: substring}.
 * out: JSON array of {id, name, pass, detail, wall_ms}. Returns
 * SPX_VERIFY if any criterion fails. */
int spx_reproduce(spx_context* ctx, const char* request, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPX_SETPAIR_H */
