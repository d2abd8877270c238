#include "doctest.h"

#include <type_traits>

#include "ctkit/congruence.hpp"
#include "ctkit/parse.hpp"
#include "oracles.hpp"

using namespace ctk;

namespace {

  LaurentPoly lp(const char * text) { return parse_laurent(text).poly; }

  CFiniteSeq fib() { return CFiniteSeq({1, 1}, {0, 1}); }
  CFiniteSeq lucas() { return CFiniteSeq({1, 1}, {2, 1}); }

  const char * apery_kernel = "(x + y)*(z + 1)*(x + y + z)*(y + z + 1)/(x*y*z)";

  LaurentPoly apery() { return parse_laurent(apery_kernel).poly; }

} // namespace

// Propagation is restricted to hypergeometric input at compile time.
static_assert(std::is_invocable_v<decltype(&hypergeom_propagation_check), const HypergeomSeq &,
                                  const std::vector<std::uint64_t> &, std::uint64_t>);
static_assert(!std::is_invocable_v<decltype(&hypergeom_propagation_check), const CFiniteSeq &,
                                   const std::vector<std::uint64_t> &, std::uint64_t>);
static_assert(!std::is_invocable_v<decltype(&hypergeom_propagation_check), const CFiniteEvaluator &,
                                   const std::vector<std::uint64_t> &, std::uint64_t>);
static_assert(!std::is_invocable_v<decltype(&hypergeom_propagation_check), const SeqEvaluator &,
                                   const std::vector<std::uint64_t> &, std::uint64_t>);

TEST_SUITE("congruence") {

  TEST_CASE("gauss") {
    CFiniteEvaluator L(lucas());
    L.set_prime_floor(1);
    auto r = gauss_check(L, 50, 2, 10);
    CHECK(r.verdict == Verdict::AllPass);
    CHECK(r.checks.size() == r.grid_size());

    CFiniteEvaluator F(fib());
    F.set_prime_floor(6);
    auto f = gauss_check(F, 7, 1, 1);
    CHECK(f.verdict == Verdict::Counterexample);
    REQUIRE(f.counterexample);
    CHECK(f.counterexample->p == 7);
    CHECK(f.counterexample->lhs == 6);
    CHECK(f.counterexample->rhs == 1);

    CFiniteEvaluator one(CFiniteSeq({1}, {1}));
    CHECK(gauss_check(one, 30, 2, 5).verdict == Verdict::AllPass);
  }

  TEST_CASE("prime floor and admissibility") {
    CFiniteEvaluator half(CFiniteSeq({Rational(1, 3)}, {1}));
    half.set_prime_floor(1);
    CHECK(half.inadmissible(3));
    CHECK_FALSE(half.inadmissible(5));
    auto r = gauss_check(half, 11, 1, 2);
    CHECK(std::any_of(r.skipped.begin(), r.skipped.end(), [](const SkipRecord & s) { return s.p == 3; }));
    for (const auto & c : r.checks)
      CHECK(c.p > 1);
    CFiniteEvaluator L(lucas());
    L.set_prime_floor(10);
    for (const auto & c : gauss_check(L, 20, 1, 2).checks)
      CHECK(c.p > 10);
  }

  TEST_CASE("ct shift") {
    const auto P = lp("x^-1 + 2 + x"), Q = lp("1 - x");
    auto c = ct_shift_check(P, Q, {5}, 1, 1, 0);
    CHECK(c.verdict == Verdict::AllPass);
    auto hit = std::find_if(c.checks.begin(), c.checks.end(), [](const CheckRecord & r) { return r.n == 1 && r.k == 0; });
    REQUIRE(hit != c.checks.end());
    CHECK(hit->lhs == 2);
    CHECK(hit->rhs == 2);
    CHECK(ct_shift_check(P, Q, {5, 7, 11, 13}, 2, 3, 3).verdict == Verdict::AllPass);

    const auto A = apery();
    auto a = ct_shift_check(A, LaurentPoly::constant(3, 1), {7}, 1, 1, 0);
    CHECK(a.verdict == Verdict::AllPass);
    const oracle::Z expect = oracle::apery(7) % 7;
    auto rec = std::find_if(a.checks.begin(), a.checks.end(), [](const CheckRecord & r) { return r.n == 1; });
    REQUIRE(rec != a.checks.end());
    CHECK(rec->lhs == expect.get_ui());
  }

  TEST_CASE("small primes below the degree bound are skipped") {
    auto r = ct_shift_check(lp("x^-1 + 2 + x"), lp("1 - x"), {2, 3}, 1, 2, 3);
    CHECK_FALSE(r.skipped.empty());
    for (const auto & c : r.checks)
      CHECK(c.p > c.k + 1);
  }

  TEST_CASE("stability") {
    const auto P = lp("x^-1 + 2 + x"), Q = lp("1 - x");
    auto c = stability_check(P, Q, {5}, 2, 1, 1, 0);
    CHECK(c.verdict == Verdict::AllPass);
    REQUIRE_FALSE(c.checks.empty());
    CHECK(c.checks.back().lhs == oracle::qmod(oracle::catalan(25), 5));
    CHECK(stability_check(P, Q, {7}, 1, 1, 3, 2).verdict == Verdict::AllPass);
    CHECK(stability_check(apery(), LaurentPoly::constant(3, 1), {5}, 2, 1, 1, 1).verdict == Verdict::AllPass);
  }

  TEST_CASE("constant falsifier") {
    const auto primes = primes_in_range(7, 97);
    CFiniteEvaluator F(fib());
    auto f = constant_c_falsifier(F, primes, 0);
    CHECK(f.verdict == Verdict::FalsifiedNoConstant);
    CHECK_FALSE(f.evidence_primes.empty());

    ConstantTermEvaluator C(lp("x^-1 + 2 + x"), lp("1 - x"));
    auto c = constant_c_falsifier(C, primes, 3);
    CHECK(c.verdict == Verdict::AllPass);
    CHECK(c.constant == Rational(2));

    CFiniteEvaluator one(CFiniteSeq({1}, {1}));
    CHECK(constant_c_falsifier(one, primes, 2).constant == Rational(1));

    HypergeomEvaluator B(b_sequence());
    CHECK(constant_c_falsifier(B, primes_in_range(7, 100), 0).verdict == Verdict::FalsifiedNoConstant);
    HypergeomEvaluator A3(family_Am(3).scaled(27));
    auto a3 = constant_c_falsifier(A3, primes_in_range(7, 100), 2);
    CHECK(a3.verdict == Verdict::AllPass);
    CHECK(a3.constant == Rational(6));
  }

  TEST_CASE("hypergeometric propagation") {
    const auto primes = primes_in_range(2, 100);
    auto a2 = hypergeom_propagation_check(family_Am(2), primes, 5);
    CHECK(a2.verdict == Verdict::AllPass);
    CHECK_FALSE(a2.checks.empty());
    CHECK(hypergeom_propagation_check(family_Am(5).scaled(125), primes_in_range(7, 60), 3).verdict ==
          Verdict::AllPass);
  }

  TEST_CASE("evaluators agree with exact values") {
    ConstantTermEvaluator C(lp("x^-1 + 2 + x"), lp("1 - x"));
    HypergeomEvaluator H(family_Am(2).scaled(16));
    CFiniteEvaluator L(lucas());
    for (std::uint64_t n = 0; n <= 12; ++n) {
      CHECK(C.exact(n) == oracle::catalan(n));
      CHECK(H.exact(n) == oracle::binom(2 * n, n) * oracle::binom(2 * n, n));
      for (std::uint64_t p : {5, 7, 11}) {
        CHECK(C.modular(Integer(n), p, 1).value() == oracle::qmod(C.exact(n), p));
        CHECK(H.modular(Integer(n), p, 2).value() == oracle::qmod(H.exact(n), p * p));
        CHECK(L.modular(Integer(n), p, 1).value() == oracle::qmod(L.exact(n), p));
      }
    }
    const std::vector<Integer> ns{Integer(3), Integer(50), Integer(7)};
    const auto many = C.modular_many(ns, 13, 1);
    for (std::size_t i = 0; i < ns.size(); ++i)
      CHECK(many[i] == C.modular(ns[i], 13, 1));
  }
}
