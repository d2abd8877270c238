#include "doctest.h"

#include "ctkit/parse.hpp"
#include "ctkit/represent.hpp"
#include "oracles.hpp"

using namespace ctk;

namespace {

  LaurentPoly lp(const char * text, std::vector<std::string> vars = {"x"}) { return parse_laurent(text, vars).poly; }

  CFiniteSeq fib() { return CFiniteSeq({1, 1}, {0, 1}); }
  CFiniteSeq lucas() { return CFiniteSeq({1, 1}, {2, 1}); }
  CFiniteSeq pow2_plus1() { return CFiniteSeq({-2, 3}, {2, 3}); }
  CFiniteSeq n_pow3() { return CFiniteSeq({-9, 6}, {0, 3}); }
  CFiniteSeq five_then_pow2() { return CFiniteSeq({2}, {5, 2}, 1); }
  CFiniteSeq finite_705() { return CFiniteSeq({0}, {7, 0, 5, 0}, 3); }

  bool has_term(const CTWitness & w, const LaurentPoly & P, const LaurentPoly & Q)
  {
    return std::any_of(w.terms.begin(), w.terms.end(),
                       [&](const WitnessTerm & t) { return t.weight == 1 && t.P == P && t.Q == Q; });
  }

} // namespace

TEST_SUITE("represent") {

  TEST_CASE("single constant term decisions") {
    auto f = decide_single_ct(fib());
    CHECK_FALSE(f.representable);
    CHECK(f.reason == DecisionReason::IrrationalRootsPresent);
    auto n3 = decide_single_ct(n_pow3());
    CHECK(n3.representable);
    CHECK(n3.min_terms == 1u);
    CHECK_FALSE(decide_single_ct(pow2_plus1()).representable);
    CHECK(decide_single_ct(CFiniteSeq({0}, {0, 0}, 1)).reason == DecisionReason::ZeroSequence);
    CHECK(decide_single_ct(CFiniteSeq({0}, {4, 0}, 1)).representable);
  }

  TEST_CASE("combination decisions") {
    auto p = decide_combination(pow2_plus1());
    CHECK(p.representable);
    CHECK(p.min_terms == 2u);
    CHECK_FALSE(decide_combination(lucas()).representable);
    auto z = decide_combination(five_then_pow2());
    CHECK(z.representable);
    CHECK(z.min_terms == 2u);
  }

  TEST_CASE("witness construction") {
    auto w = build_witness(n_pow3());
    REQUIRE(w.terms.size() == 1);
    CHECK(w.terms[0].P == lp("x + 3"));
    CHECK(w.terms[0].Q == lp("3/x"));
    CHECK(ct_term(w.terms[0].P, w.terms[0].Q, 2) == 18);

    auto two = build_witness(pow2_plus1());
    CHECK(two.terms.size() == 2);
    CHECK(has_term(two, lp("x + 2"), lp("1")));
    CHECK(has_term(two, lp("x + 1"), lp("1")));

    auto fin = build_witness(CFiniteSeq({0}, {7, 0, 5}, 2));
    REQUIRE(fin.terms.size() == 1);
    CHECK(fin.terms[0].P == lp("x"));
    CHECK(fin.terms[0].Q == lp("7 + 5x^-2"));

    CHECK_THROWS_AS(build_witness(fib()), Error);
  }

  TEST_CASE("witness verification") {
    const CTWitness cat{{{1, lp("x^-1 + 2 + x"), lp("1 - x")}}};
    std::vector<Rational> terms;
    for (unsigned long n = 0; n <= 20; ++n)
      terms.emplace_back(oracle::catalan(n));
    auto r = verify_witness(terms, cat);
    CHECK(r.pass);
    CHECK(r.window == 21);
    CHECK_FALSE(r.certified);

    auto n3 = verify_witness(n_pow3(), build_witness(n_pow3()));
    CHECK(n3.pass);
    CHECK(n3.certified);

    auto bad = verify_witness(pow2_plus1(), CTWitness{{{1, lp("x + 2"), lp("1")}}});
    CHECK_FALSE(bad.pass);
    CHECK(bad.first_mismatch == 0u);
    CHECK(bad.expected == 2);
    CHECK(bad.actual == 1);

    std::vector<Rational> tail(terms.begin() + 5, terms.end());
    auto shifted = verify_witness(tail, cat, 5);
    CHECK(shifted.pass);
    tail[3] += 1;
    CHECK(verify_witness(tail, cat, 5).first_mismatch == 8u);
  }

  TEST_CASE("built witnesses reproduce their sequences") {
    for (const auto & s : {pow2_plus1(), n_pow3(), five_then_pow2(), finite_705(),
                           CFiniteSeq({Rational(-1, 4), 1}, {1, Rational(1, 3)})}) {
      auto w = build_witness(s);
      CHECK(witness_terms(w, 30) == eval_terms(s, 30));
      CHECK(verify_witness(s, w).certified);
    }
  }

  TEST_CASE("binomial products") {
    auto c = binomial_product_to_ct({{2, 1}}, 1);
    CHECK(c == lp("(1 + x)^2/x"));
    CHECK(ct_sequence(c, LaurentPoly::constant(1, 1), 3) == std::vector<Rational>{1, 2, 6, 20});
    auto t = binomial_product_to_ct({{3, 2}, {2, 1}}, 1);
    CHECK(t.var_count() == 2);
    CHECK(constant_term(t) == 6);
    auto five = binomial_product_to_ct({}, 5);
    CHECK(ct_sequence(five, LaurentPoly::constant(1, 1), 3) == std::vector<Rational>{1, 5, 25, 125});
    CHECK_THROWS_AS(binomial_product_to_ct({{1, 2}}, 1), Error);
  }

  TEST_CASE("Minton analog") {
    const auto even = lp("x^-2 + 3 + x^2");
    auto m = check_minton_analog(even, lp("1 + x"), 8, {3, 5});
    CHECK(m.ct_equality);
    CHECK(m.gauss_r1);

    auto cat = check_minton_analog(lp("x^-1 + 2 + x"), lp("1 - x"), 6, {3, 5, 7});
    CHECK_FALSE(cat.ct_equality);
    CHECK(cat.equality_failure == 1u);
    CHECK_FALSE(cat.gauss_r1);
    CHECK(std::find(cat.failing_primes.begin(), cat.failing_primes.end(), 3u) != cat.failing_primes.end());

    auto q1 = check_minton_analog(lp("x^-1 + 2 + x"), lp("1"), 5, {3});
    CHECK(q1.ct_equality);
    CHECK(q1.gauss_r2);

    auto skip = check_minton_analog(lp("x/3 + 1"), lp("1"), 3, {3, 5});
    CHECK(skip.skipped_primes == std::vector<std::uint64_t>{3});
  }

  TEST_CASE("integral roots") {
    CHECK(integral_roots_check(pow2_plus1(), 10).verdict == IntegralRootsVerdict::Consistent);
    CHECK(integral_roots_check(CFiniteSeq({Rational(1, 2)}, {1}), 10).verdict == IntegralRootsVerdict::NotApplicable);
    CHECK(integral_roots_check(lucas(), 10).verdict == IntegralRootsVerdict::NotApplicable);
  }
}
