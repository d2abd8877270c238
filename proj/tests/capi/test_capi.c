/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "ctkit/ctkit.h"

static int failures = 0;

#define CHECK(cond)                                                        \
  do {                                                                     \
    if (!(cond)) {                                                         \
      fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                          \
    }                                                                      \
  } while (0)

#define CHECK_OK(call) CHECK((call) == CTK_OK)

static int contains(const char * haystack, const char * needle)
{
  return haystack != NULL && strstr(haystack, needle) != NULL;
}

static void test_laurent(void)
{
  ctk_laurent *P = NULL, *Q = NULL, *sq = NULL;
  char * s = NULL;
  uint64_t deg = 0, r = 0;
  size_t nv = 0;

  CHECK_OK(ctk_laurent_parse("x^-1 + 2 + x", NULL, &P));
  CHECK_OK(ctk_laurent_parse("1 - x", NULL, &Q));
  CHECK_OK(ctk_laurent_pow(P, 2, &sq));
  CHECK_OK(ctk_laurent_to_string(sq, &s));
  CHECK(s != NULL && strcmp(s, "x^-2 + 4*x^-1 + 6 + 4*x + x^2") == 0);
  ctk_string_free(s);
  CHECK_OK(ctk_laurent_constant_term(sq, &s));
  CHECK(s != NULL && strcmp(s, "6") == 0);
  ctk_string_free(s);
  CHECK_OK(ctk_laurent_degree(P, &deg));
  CHECK(deg == 1);

  CHECK_OK(ctk_ct_sequence(P, Q, 4, &s));
  CHECK(contains(s, "\"14\""));
  ctk_string_free(s);
  CHECK_OK(ctk_ct_term_mod(P, Q, "10", 1000003, &r));
  CHECK(r == 16796);
  CHECK_OK(ctk_ct_term_mod(P, Q, "100000000000000000000", 7, &r));

  ctk_laurent_free(sq);
  ctk_laurent_free(Q);
  ctk_laurent_free(P);

  CHECK_OK(ctk_laurent_parse("y + x", "x,y,z", &P));
  CHECK_OK(ctk_laurent_var_count(P, &nv));
  CHECK(nv == 3);
  CHECK_OK(ctk_laurent_variables(P, &s));
  CHECK(s != NULL && strcmp(s, "x,y,z") == 0);
  ctk_string_free(s);
  ctk_laurent_free(P);
}

static void test_errors(void)
{
  ctk_laurent * P = NULL;
  ctk_laurent * Q = NULL;
  ctk_laurent * R = NULL;
  uint64_t v = 0;

  CHECK(ctk_laurent_parse("x^(1/2)", NULL, &P) == CTK_SYNTAX_ERROR);
  CHECK(P == NULL);
  CHECK(strlen(ctk_last_error()) > 0);
  CHECK(ctk_laurent_parse("1/(1+x)", NULL, &P) == CTK_NON_MONOMIAL_DENOMINATOR);
  CHECK(ctk_laurent_parse("x + w", "x,y", &P) == CTK_UNKNOWN_VARIABLE);
  CHECK(ctk_rational_mod("1/3", 9, &v) == CTK_NON_INVERTIBLE_DENOMINATOR);
  CHECK(strcmp(ctk_status_name(CTK_NON_INVERTIBLE_DENOMINATOR), "NonInvertibleDenominator") == 0);
  CHECK(ctk_laurent_parse(NULL, NULL, &P) == CTK_INVALID_ARGUMENT);
  CHECK(ctk_laurent_to_string(NULL, NULL) == CTK_INVALID_ARGUMENT);

  CHECK_OK(ctk_laurent_parse("x", NULL, &P));
  CHECK_OK(ctk_laurent_parse("x*y", NULL, &Q));
  CHECK(ctk_laurent_mul(P, Q, &R) == CTK_VAR_COUNT_MISMATCH);
  CHECK_OK(ctk_rational_mod("1/2", 5, &v));
  CHECK(v == 3);
  CHECK(strlen(ctk_last_error()) == 0);
  ctk_laurent_free(Q);
  ctk_laurent_free(P);
  ctk_laurent_free(NULL);
}

static void test_cfinite(void)
{
  ctk_cfinite * fib = NULL;
  ctk_cfinite * pow2 = NULL;
  ctk_witness * w = NULL;
  ctk_evaluator * e = NULL;
  char * s = NULL;
  uint64_t v = 0;
  int flag = -1, verdict = -1;
  size_t count = 0;

  CHECK_OK(ctk_cfinite_parse("a(n+2) = a(n+1) + a(n)", "0, 1", -1, &fib));
  CHECK_OK(ctk_cfinite_terms(fib, 6, &s));
  CHECK(contains(s, "\"8\""));
  ctk_string_free(s);
  CHECK_OK(ctk_cfinite_eval_mod(fib, "7", 7, &v));
  CHECK(v == 6);
  CHECK_OK(ctk_decide(fib, 1, &flag, &s));
  CHECK(flag == 0);
  CHECK(contains(s, "IrrationalRootsPresent"));
  ctk_string_free(s);
  CHECK(ctk_witness_build(fib, &w) == CTK_NOT_REPRESENTABLE);

  CHECK_OK(ctk_evaluator_from_cfinite(fib, &e));
  CHECK_OK(ctk_constant_c_falsifier(e, 7, 100, 0, NULL, &verdict, &s));
  CHECK(verdict == 2);
  CHECK(contains(s, "FalsifiedNoConstant"));
  ctk_string_free(s);
  ctk_evaluator_free(e);

  CHECK_OK(ctk_cfinite_parse("rec: a(n+2) = 3a(n+1) - 2a(n); init: 2, 3", NULL, -1, &pow2));
  CHECK_OK(ctk_cfinite_analyze(pow2, &s));
  CHECK(contains(s, "\"minimal_annihilator\""));
  ctk_string_free(s);
  CHECK_OK(ctk_witness_build(pow2, &w));
  CHECK_OK(ctk_witness_term_count(w, &count));
  CHECK(count == 2);
  CHECK_OK(ctk_witness_verify(pow2, w, &flag, &s));
  CHECK(flag == 1);
  CHECK(contains(s, "\"certified\": true"));
  ctk_string_free(s);
  CHECK_OK(ctk_witness_to_json(w, &s));
  CHECK(contains(s, "2 + x"));
  ctk_string_free(s);
  ctk_witness_free(w);

  ctk_cfinite_free(pow2);
  ctk_cfinite_free(fib);
}

static void test_witness_terms(void)
{
  ctk_witness * w = NULL;
  char * s = NULL;
  int pass = 0;

  CHECK_OK(ctk_witness_parse("{\"P\": \"x^-1 + 2 + x\", \"Q\": \"1 - x\"}", &w));
  CHECK_OK(ctk_witness_verify_terms("1, 1, 2, 5, 14, 42, 132", 0, w, &pass, &s));
  CHECK(pass == 1);
  ctk_string_free(s);
  CHECK_OK(ctk_witness_verify_terms("3 5\n4 14\n5 43\n", 1, w, &pass, &s));
  CHECK(pass == 0);
  CHECK(contains(s, "\"first_mismatch\": 5"));
  ctk_string_free(s);
  ctk_witness_free(w);
  CHECK(ctk_witness_parse("[{\"Q\": \"1\"}]", &w) == CTK_INVALID_ARGUMENT);
}

static void test_hypergeom(void)
{
  ctk_hypergeom * b = NULL;
  ctk_hypergeom * a2 = NULL;
  ctk_evaluator * e = NULL;
  ctk_laurent * P = NULL;
  ctk_laurent * Q = NULL;
  char * s = NULL;
  uint64_t v = 0;
  int flag = -1, verdict = -1;

  CHECK_OK(ctk_hypergeom_parse("alpha: (n+1)^2; beta: 5*(5n+1)*(5n+4); a0: 1", &b));
  CHECK_OK(ctk_hypergeom_terms(b, 4, &s));
  CHECK(contains(s, "\"10972500\""));
  ctk_string_free(s);
  CHECK_OK(ctk_hypergeom_term_mod(b, 7, 7, 1, &v));
  CHECK(v == 2);

  CHECK_OK(ctk_am_residue_table(5, 7, 300, 0, &flag, &s));
  CHECK(flag == 0);
  CHECK(contains(s, "\"all_match\": true"));
  CHECK(contains(s, "FalsifiedNoConstant"));
  ctk_string_free(s);
  CHECK_OK(ctk_am_residue_table(3, 5, 200, 1, &flag, &s));
  CHECK(flag == 1);
  ctk_string_free(s);
  CHECK_OK(ctk_christol_table(2, 100, 1, &flag, &s));
  CHECK(flag == 0);
  CHECK(contains(s, "\"all_match\": true"));
  ctk_string_free(s);
  CHECK_OK(ctk_christol_table(18, 40, 0, &flag, &s));
  CHECK(flag == 1);
  ctk_string_free(s);

  CHECK_OK(ctk_hypergeom_family_am(2, &a2));
  CHECK_OK(ctk_hypergeom_propagation_check(a2, 2, 100, 5, &verdict, &s));
  CHECK(verdict == 0);
  ctk_string_free(s);
  CHECK(ctk_hypergeom_family_am(1, &a2) != CTK_OK);

  CHECK_OK(ctk_evaluator_from_hypergeom(b, &e));
  CHECK_OK(ctk_evaluator_set_prime_floor(e, 6));
  CHECK_OK(ctk_gauss_check(e, 40, 1, 3, &verdict, &s));
  ctk_string_free(s);
  ctk_evaluator_free(e);

  CHECK_OK(ctk_laurent_parse("x^-1 + 2 + x", NULL, &P));
  CHECK_OK(ctk_laurent_parse("1 - x", NULL, &Q));
  CHECK_OK(ctk_ct_shift_check(P, Q, 5, 13, 2, 3, 2, &verdict, &s));
  CHECK(verdict == 0);
  ctk_string_free(s);
  CHECK_OK(ctk_stability_check(P, Q, 5, 11, 2, 1, 2, 2, &verdict, &s));
  CHECK(verdict == 0);
  ctk_string_free(s);
  CHECK_OK(ctk_minton_check(P, Q, 5, 3, 7, &s));
  CHECK(contains(s, "\"ct_equality\": false"));
  ctk_string_free(s);
  ctk_laurent_free(Q);
  ctk_laurent_free(P);

  ctk_hypergeom_free(a2);
  ctk_hypergeom_free(b);
}

int main(void)
{
  char * primes = NULL;
  CHECK(strlen(ctk_version()) > 0);
  CHECK_OK(ctk_primes_in_range(90, 100, &primes));
  CHECK(contains(primes, "97") && !contains(primes, "89"));
  ctk_string_free(primes);

  test_laurent();
  test_errors();
  test_cfinite();
  test_witness_terms();
  test_hypergeom();

  if (failures != 0) {
    fprintf(stderr, "%d C API checks failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
