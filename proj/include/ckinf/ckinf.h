/* C interface for the ckinf coding-theory engine.
 *
 * Conventions:
 *   - Every function returns a status code (CKINF_OK on success) unless it
 *     frees or inspects thread-local state.
 *   - On failure, out parameters are untouched and ckinf_last_error() holds
 *     a message until the next call on the same thread.
 *   - Strings returned through char** are heap-allocated; release them with
 *     ckinf_string_free. Arrays returned through uint32_t** are released
 *     with ckinf_buffer_free.
 *   - Field elements are integer encodings: the element sum c_i x^i maps to
 *     the integer sum c_i p^i.
 */
#ifndef CKINF_H
#define CKINF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CKINF_OK 0        /* success */
#define CKINF_EASSERT 1   /* a checked result or fixture did not hold */
#define CKINF_EINVAL 2    /* invalid argument or malformed input */
#define CKINF_EBUDGET 3   /* configured enumeration budget exceeded */
#define CKINF_EINTERNAL 4 /* invariant violated inside the library */

typedef struct ckinf_field ckinf_field;
typedef struct ckinf_code ckinf_code;

/* Message for the most recent failure on this thread; never NULL. */
const char* ckinf_last_error(void);

void ckinf_string_free(char* s);
void ckinf_buffer_free(void* p);

/* ---- fields ---- */

/* Smallest-encoding irreducible modulus is chosen when none is given. */
int ckinf_field_create(uint32_t p, uint32_t m, ckinf_field** out);
int ckinf_field_create_with_modulus(uint32_t p, uint32_t m, const uint32_t* modulus,
                                    size_t modulus_len, ckinf_field** out);
/* {"p":..., "m":..., "modulus":[c0,...,cm]} (modulus optional). */
int ckinf_field_from_json(const char* text, ckinf_field** out);
int ckinf_field_to_json(const ckinf_field* f, char** out);
void ckinf_field_free(ckinf_field* f);

int ckinf_field_order(const ckinf_field* f, uint64_t* q);
int ckinf_field_characteristic(const ckinf_field* f, uint32_t* p);
int ckinf_primitive_element(const ckinf_field* f, uint32_t* out);

int ckinf_add(const ckinf_field* f, uint32_t a, uint32_t b, uint32_t* out);
int ckinf_sub(const ckinf_field* f, uint32_t a, uint32_t b, uint32_t* out);
int ckinf_neg(const ckinf_field* f, uint32_t a, uint32_t* out);
int ckinf_mul(const ckinf_field* f, uint32_t a, uint32_t b, uint32_t* out);
/* Fails with CKINF_EINVAL when a == 0. */
int ckinf_inv(const ckinf_field* f, uint32_t a, uint32_t* out);
int ckinf_pow(const ckinf_field* f, uint32_t a, int64_t e, uint32_t* out);
int ckinf_is_square(const ckinf_field* f, uint32_t a, int* out);
/* Canonical square root (the numerically smaller of the two); fails with
 * CKINF_EINVAL when a is a non-square. */
int ckinf_sqrt(const ckinf_field* f, uint32_t a, uint32_t* out);
/* Elements of the order-p^r subfield, ascending; caller frees with
 * ckinf_buffer_free. */
int ckinf_subfield_elements(const ckinf_field* f, uint32_t r, uint32_t** out, size_t* count);

/* ---- codes ---- */

/* Construction spec: {"field":..., "set":[enc,...]|"fq"|"fqstar",
 * "v":[enc,...]|"ones", "k":..., "variant":"ck"|"ck_mu"|"grs"|"egrs", "mu":...}.
 * variant defaults to "ck" and v to "ones". */
int ckinf_construct(const char* construction_json, ckinf_code** out);
int ckinf_code_from_json(const char* text, ckinf_code** out);
int ckinf_code_to_json(const ckinf_code* c, char** out);
int ckinf_code_length(const ckinf_code* c, size_t* out);
int ckinf_code_dimension(const ckinf_code* c, size_t* out);
void ckinf_code_free(ckinf_code* c);

/* ---- analysis verbs; each returns a JSON report ---- */

/* Kind, distances, and the zero-sum search transcript. */
int ckinf_classify(const char* construction_json, uint64_t max_enum, uint64_t max_subsets,
                   char** report);
/* method: "formula", "exhaustive", or "both". "both" additionally fails with
 * CKINF_EASSERT if the two methods disagree. */
int ckinf_wdist(const char* construction_json, const char* method, uint64_t max_enum,
                uint64_t max_subsets, char** report);
/* Square structure of the code and its dual plus the evaluation-structure
 * verdict. */
int ckinf_schur(const char* construction_json, char** report);
/* Orthogonality certificate polynomial (or null) and the gram-matrix test. */
int ckinf_so(const char* construction_json, char** report);
/* Self-orthogonal instance builder:
 * {"field":..., "set":[enc,...], "k":..., "mode":"char2"|"subfield", "r":...}. */
int ckinf_asd(const char* asd_json, char** report);
/* Replays the bundled reference checks. Returns CKINF_OK when every check
 * passes, CKINF_EASSERT otherwise; the report is written in both cases.
 * inject_fault: NULL or "" for a normal run, or a named fault such as
 * "table-I-q16" to deliberately perturb one check. */
int ckinf_paper_check(const char* inject_fault, char** report);

#ifdef __cplusplus
}
#endif

#endif /* CKINF_H */
