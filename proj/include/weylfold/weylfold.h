/* weylfold -- exact invariants of crepant partial resolutions of conical
 * affine symplectic singularities: folded Dynkin diagrams, Namikawa Weyl
 * groups, Mori-fan face classification, Kleinian partial-resolution
 * bookkeeping, and double-coset Hecke algebras.
 *
 * Every command consumes a JSON request and produces a JSON report; all
 * arithmetic behind the API is exact rational. Reports are deterministic
 * given the request (including its "seed" field, default 0).
 */
#ifndef WEYLFOLD_H
#define WEYLFOLD_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wf_status {
    WF_OK = 0,
    WF_ERR_INVALID_INPUT = 2, /* malformed request or invalid mathematical data */
    WF_ERR_BUDGET = 3,        /* an enumeration exceeded the session budget */
    WF_ERR_INTERNAL = 4       /* a library-guaranteed identity failed: a bug */
} wf_status;

/* Opaque session: holds the group-order budget and the last error message.
 * Sessions are not thread-safe; use one per thread. */
typedef struct wf_session wf_session;

wf_session *wf_session_new(void);
void wf_session_free(wf_session *session);

/* Caps the order of any single group enumeration (default 1000000, which
 * admits W(E6) and rejects W(E7) and beyond). */
wf_status wf_session_set_budget(wf_session *session, unsigned long long max_group_order);
unsigned long long wf_session_budget(const wf_session *session);

/* Message for the most recent failing call on this session; empty string if
 * the last call succeeded. The pointer is valid until the next call. */
const char *wf_session_last_error(const wf_session *session);

/* Commands. On WF_OK, *report_json receives a malloc'd JSON document; free
 * it with wf_string_free. On failure *report_json is set to NULL.
 *
 * Requests:
 *   fold      {"type":"A4","generators":[[4,3,2,1]]}
 *   namikawa  {"singularity":{"leaves":[{"id":"L1","slice":"A4",
 *              "monodromy_generators":[[4,3,2,1]]}]},
 *              "contracted":["L1:1"]}   or   {"nilpotent":"A2"}
 *   fan       {"fan":{"dim":2,"hyperplanes":[...],"chambers":[...],...},
 *              "seed":0,"samples":100}
 *   kleinian  {"type":"A3","contracted":[2],"seed":0,"samples":20}
 *   hecke     {"type":"A2","parabolic":[1]}
 *   selftest  {"seed":0}
 */
wf_status wf_fold(wf_session *session, const char *request_json, char **report_json);
wf_status wf_namikawa(wf_session *session, const char *request_json, char **report_json);
wf_status wf_fan(wf_session *session, const char *request_json, char **report_json);
wf_status wf_kleinian(wf_session *session, const char *request_json, char **report_json);
wf_status wf_hecke(wf_session *session, const char *request_json, char **report_json);
wf_status wf_selftest(wf_session *session, const char *request_json, char **report_json);

void wf_string_free(char *s);
const char *wf_version(void);

#ifdef __cplusplus
}
#endif

#endif /* WEYLFOLD_H */
