#ifndef WELDKIT_H
#define WELDKIT_H

/* C interface to the welded-diagram library. All functions return a
 * wk_status; WK_OK means the out-parameters are filled. On failure
 * wk_last_error() holds a message for the calling thread until the next
 * failing call. Strings returned through char** are heap copies the caller
 * releases with wk_string_free. Structured results are UTF-8 JSON
 * documents; arbitrary-precision totals are decimal strings. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wk_status {
    WK_OK = 0,
    WK_EMALFORMED_TOKEN = 1,
    WK_ECROSSING_COUNT = 2,
    WK_EDUPLICATE_ROLE = 3,
    WK_ESIGN_MISMATCH = 4,
    WK_EUNKNOWN_CROSSING = 5,
    WK_EINAPPLICABLE_MOVE = 6,
    WK_EBAD_MODULUS = 7,
    WK_ENOT_RANK_ONE = 8,
    WK_EBAD_GAP = 9,
    WK_EBAD_PARAMETER = 10,
    WK_EIO = 11,
    WK_ESCHEMA = 12,
    WK_EFINGERPRINT = 13,
    WK_ECATALOG_MISSING = 14,
    WK_EINTERNAL = 15,
    WK_EBAD_ARGUMENT = 16
} wk_status;

typedef struct wk_diagram wk_diagram;
typedef struct wk_catalog wk_catalog;

const char* wk_last_error(void);
void wk_string_free(char* s);

/* ---- diagrams ---- */

wk_status wk_diagram_parse(const char* text, wk_diagram** out);
void wk_diagram_free(wk_diagram* d);

/* the code as a Gauss string, labels and order preserved */
wk_status wk_diagram_serialize(const wk_diagram* d, char** out);
/* {"code": "...", "crossings": n, "welded": [labels...]} */
wk_status wk_diagram_json(const wk_diagram* d, char** out);
wk_status wk_diagram_crossing_count(const wk_diagram* d, int* out);
wk_status wk_diagram_canonical(const wk_diagram* d, wk_diagram** out);
/* welds the listed crossings (duplicates collapse, order free) */
wk_status wk_diagram_weld(const wk_diagram* d, const int* labels, size_t nlabels,
                          wk_diagram** out);

/* ---- moves / search ---- */

/* {"result","crossings","states","budget_exhausted","trace":[...]} */
wk_status wk_simplify(const wk_diagram* d, uint64_t budget, char** json_out);

/* ---- warping ---- */

/* {"descending": bool, "basepoint": int|null} */
wk_status wk_descending(const wk_diagram* d, char** json_out);
/* {"forward": int, "reverse": int} */
wk_status wk_warping(const wk_diagram* d, char** json_out);

/* ---- verdicts ---- */

/* {"status","witness":{...}|null,"certificate":{...}|null} */
wk_status wk_verdict(const wk_diagram* d, uint64_t budget, char** json_out);
/* {"lower","upper","unresolved"}; budget applies per subset verdict */
wk_status wk_uw_bounds(const wk_diagram* d, uint64_t budget, char** json_out);

/* ---- groups ---- */

/* {"ngens","relators":[[[gen,exp],...]],"display"} */
wk_status wk_group_wirtinger(const wk_diagram* d, char** json_out);
/* wirtinger then tietze; adds "certificate": "Proved"|"Unknown" */
wk_status wk_group_tietze(const wk_diagram* d, uint64_t budget, char** json_out);
/* {"invariant_factors":["1","0",...],"free_rank":n} */
wk_status wk_group_abelianization(const wk_diagram* d, char** json_out);
/* {"coefficients":["1","-1","1"],"display":"1 - t + t^2"} */
wk_status wk_group_alexander(const wk_diagram* d, char** json_out);
/* {"m","total","nontrivial"}; total is a decimal string */
wk_status wk_colorings(const wk_diagram* d, long m, char** json_out);

/* ---- families; welds = 0, 1 or 2 welded crossings ---- */

wk_status wk_family_torus(int n, int welds, int m1, wk_diagram** out);
wk_status wk_family_twist(int n, int welds, wk_diagram** out);

/* ---- catalog ---- */

wk_status wk_catalog_open(const char* path, wk_catalog** out);
void wk_catalog_free(wk_catalog* c);
/* ["3_1",...] */
wk_status wk_catalog_names(const wk_catalog* c, char** json_out);
/* the stored entry, fingerprint included */
wk_status wk_catalog_entry(const wk_catalog* c, const char* name, char** json_out);
wk_status wk_catalog_diagram(const wk_catalog* c, const char* name, wk_diagram** out);

/* ---- six-crossing weld tables ----
 * sizes is a comma list such as "1,2,3"; as_text selects the aligned text
 * rendering instead of JSON. */
wk_status wk_table_six(const wk_catalog* c, const char* sizes, uint64_t budget,
                       int as_text, char** out);

#ifdef __cplusplus
}
#endif

#endif /* WELDKIT_H */
