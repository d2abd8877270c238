/* C interface to the ctkit library.
 *
 * Objects are opaque handles created by ctk_*_parse / ctk_*_build style calls
 * and released with the matching ctk_*_free. Every fallible call returns a
 * ctk_status; on failure ctk_last_error() describes the problem for the
 * calling thread. Strings handed out by the library (char ** out parameters)
 * are owned by the caller and released with ctk_string_free. Reports are
 * JSON documents; their layout is described in docs/json-schema.md.
 */
#ifndef CTKIT_CTKIT_H
#define CTKIT_CTKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define CTK_API __declspec(dllexport)
#else
#  define CTK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ctk_status {
  CTK_OK = 0,
  CTK_INVALID_ARGUMENT = 1,
  CTK_NON_INVERTIBLE_DENOMINATOR = 2,
  CTK_VAR_COUNT_MISMATCH = 3,
  CTK_MODULUS_MISMATCH = 4,
  CTK_ZERO_POLYNOMIAL = 5,
  CTK_TOO_MANY_VARIABLES = 6,
  CTK_DECOMPOSITION_FAILURE = 7,
  CTK_NOT_REPRESENTABLE = 8,
  CTK_INVALID_FACTOR = 9,
  CTK_ZERO_BASE = 10,
  CTK_ALPHA_VANISHES = 11,
  CTK_NOT_PADIC_INTEGRAL = 12,
  CTK_NOT_COPRIME = 13,
  CTK_WRONG_RESIDUE_CLASS = 14,
  CTK_NOT_IN_FAMILY = 15,
  CTK_SYNTAX_ERROR = 16,
  CTK_NON_MONOMIAL_DENOMINATOR = 17,
  CTK_UNKNOWN_VARIABLE = 18,
  CTK_INTERNAL_ERROR = 99
} ctk_status;

typedef struct ctk_laurent ctk_laurent;
typedef struct ctk_cfinite ctk_cfinite;
typedef struct ctk_hypergeom ctk_hypergeom;
typedef struct ctk_witness ctk_witness;
typedef struct ctk_evaluator ctk_evaluator;

CTK_API const char * ctk_version(void);
CTK_API const char * ctk_status_name(ctk_status status);
/* Message of the last failed call on this thread; empty after success. */
CTK_API const char * ctk_last_error(void);
CTK_API void ctk_string_free(char * s);

/* Laurent polynomials. `vars` is a comma-separated declaration such as
 * "x,y,z" or NULL for first-appearance order. */
CTK_API ctk_status ctk_laurent_parse(const char * text, const char * vars, ctk_laurent ** out);
CTK_API void ctk_laurent_free(ctk_laurent * f);
CTK_API ctk_status ctk_laurent_to_string(const ctk_laurent * f, char ** out);
CTK_API ctk_status ctk_laurent_var_count(const ctk_laurent * f, size_t * out);
/* Variable names in order, comma separated. */
CTK_API ctk_status ctk_laurent_variables(const ctk_laurent * f, char ** out);
CTK_API ctk_status ctk_laurent_degree(const ctk_laurent * f, uint64_t * out);
CTK_API ctk_status ctk_laurent_mul(const ctk_laurent * f, const ctk_laurent * g, ctk_laurent ** out);
CTK_API ctk_status ctk_laurent_pow(const ctk_laurent * f, uint64_t n, ctk_laurent ** out);
CTK_API ctk_status ctk_laurent_constant_term(const ctk_laurent * f, char ** out);
/* JSON array of ct[P^n Q] for n = 0..N, each a rational string. */
CTK_API ctk_status ctk_ct_sequence(const ctk_laurent * P, const ctk_laurent * Q, uint64_t N, char ** out);
/* ct[P^N Q] mod `modulus`; `index` is a decimal string. */
CTK_API ctk_status ctk_ct_term_mod(const ctk_laurent * P, const ctk_laurent * Q, const char * index,
                                   uint64_t modulus, uint64_t * out);

/* C-finite sequences. `init` may be NULL when `rec` carries an init field;
 * `offset` < 0 means "as given in `rec`, else 0". */
CTK_API ctk_status ctk_cfinite_parse(const char * rec, const char * init, int64_t offset, ctk_cfinite ** out);
CTK_API void ctk_cfinite_free(ctk_cfinite * seq);
CTK_API ctk_status ctk_cfinite_terms(const ctk_cfinite * seq, uint64_t N, char ** out);
CTK_API ctk_status ctk_cfinite_eval_mod(const ctk_cfinite * seq, const char * index, uint64_t modulus,
                                        uint64_t * out);
/* Minimal annihilator, characteristic roots, trace decomposition, separable
 * part, generating function and the integral-roots check. */
CTK_API ctk_status ctk_cfinite_analyze(const ctk_cfinite * seq, char ** out);
/* combination != 0 decides linear combinations, 0 a single constant term. */
CTK_API ctk_status ctk_decide(const ctk_cfinite * seq, int combination, int * representable, char ** out);

/* Witnesses. */
CTK_API ctk_status ctk_witness_build(const ctk_cfinite * seq, ctk_witness ** out);
/* [{"weight": "1", "P": "...", "Q": "...", "vars": ["x"]}, ...]; weight and
 * vars are optional. */
CTK_API ctk_status ctk_witness_parse(const char * json, ctk_witness ** out);
CTK_API ctk_status ctk_witness_am(long m, ctk_witness ** out);
CTK_API void ctk_witness_free(ctk_witness * w);
CTK_API ctk_status ctk_witness_to_json(const ctk_witness * w, char ** out);
CTK_API ctk_status ctk_witness_term_count(const ctk_witness * w, size_t * out);
CTK_API ctk_status ctk_witness_verify(const ctk_cfinite * seq, const ctk_witness * w, int * pass, char ** out);
/* Terms as a comma-separated list, or as b-file text when `bfile` != 0. */
CTK_API ctk_status ctk_witness_verify_terms(const char * terms, int bfile, const ctk_witness * w, int * pass,
                                            char ** out);

/* Hypergeometric sequences. */
CTK_API ctk_status ctk_hypergeom_parse(const char * text, ctk_hypergeom ** out);
CTK_API ctk_status ctk_hypergeom_family_am(long m, ctk_hypergeom ** out);
/* The Christol sequence; scaled != 0 multiplies term n by 3^{5n}. */
CTK_API ctk_status ctk_hypergeom_christol(int scaled, ctk_hypergeom ** out);
/* s^n A(n) with s a rational string. */
CTK_API ctk_status ctk_hypergeom_scale(const ctk_hypergeom * h, const char * s, ctk_hypergeom ** out);
CTK_API void ctk_hypergeom_free(ctk_hypergeom * h);
CTK_API ctk_status ctk_hypergeom_terms(const ctk_hypergeom * h, uint64_t N, char ** out);
CTK_API ctk_status ctk_hypergeom_term_mod(const ctk_hypergeom * h, uint64_t n, uint64_t p, unsigned r,
                                          uint64_t * out);
/* Residue table of m^{2p} A_m(p) mod p against a(m - a) over primes in
 * [lo, hi] coprime to m and above m. modular != 0 forces valuation-tracked
 * evaluation. *consistent is 1 when every row matches and one residue value
 * covers all primes. */
CTK_API ctk_status ctk_am_residue_table(long m, uint64_t lo, uint64_t hi, int modular, int * consistent,
                                        char ** out);
/* 3^{5p} A(p) mod p over primes p = +-1 mod 9 in [lo, hi]; *consistent as
 * above, so a range holding both classes gives 0. */
CTK_API ctk_status ctk_christol_table(uint64_t lo, uint64_t hi, int modular, int * consistent, char ** out);

/* Sequence evaluators for the congruence sweeps. */
CTK_API ctk_status ctk_evaluator_from_cfinite(const ctk_cfinite * seq, ctk_evaluator ** out);
CTK_API ctk_status ctk_evaluator_from_hypergeom(const ctk_hypergeom * h, ctk_evaluator ** out);
CTK_API ctk_status ctk_evaluator_from_ct(const ctk_laurent * P, const ctk_laurent * Q, ctk_evaluator ** out);
CTK_API ctk_status ctk_evaluator_set_prime_floor(ctk_evaluator * e, uint64_t floor);
CTK_API void ctk_evaluator_free(ctk_evaluator * e);

/* Congruence reports. `verdict` receives 0 for AllPass, 1 for a
 * counterexample and 2 for FalsifiedNoConstant; it may be NULL. */
CTK_API ctk_status ctk_gauss_check(const ctk_evaluator * e, uint64_t p_max, unsigned r_max, uint64_t n_max,
                                   int * verdict, char ** out);
CTK_API ctk_status ctk_constant_c_falsifier(const ctk_evaluator * e, uint64_t p_lo, uint64_t p_hi, uint64_t k_max,
                                            const char * height_bound, int * verdict, char ** out);
CTK_API ctk_status ctk_ct_shift_check(const ctk_laurent * P, const ctk_laurent * Q, uint64_t p_lo, uint64_t p_hi,
                                      unsigned r_max, uint64_t n_max, uint64_t k_max, int * verdict, char ** out);
CTK_API ctk_status ctk_stability_check(const ctk_laurent * P, const ctk_laurent * Q, uint64_t p_lo, uint64_t p_hi,
                                       unsigned s, unsigned r, uint64_t n_max, uint64_t k_max, int * verdict,
                                       char ** out);
CTK_API ctk_status ctk_hypergeom_propagation_check(const ctk_hypergeom * h, uint64_t p_lo, uint64_t p_hi,
                                                   uint64_t k_max, int * verdict, char ** out);
CTK_API ctk_status ctk_minton_check(const ctk_laurent * P, const ctk_laurent * Q, uint64_t N, uint64_t p_lo,
                                    uint64_t p_hi, char ** out);

/* Scalar helpers. */
CTK_API ctk_status ctk_rational_mod(const char * q, uint64_t m, uint64_t * out);
CTK_API ctk_status ctk_primes_in_range(uint64_t lo, uint64_t hi, char ** out);

#ifdef __cplusplus
}
#endif

#endif /* CTKIT_CTKIT_H */
