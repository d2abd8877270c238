#include "doctest.h"

#include "ctkit/laurent.hpp"
#include "ctkit/parse.hpp"
#include "oracles.hpp"

using namespace ctk;

namespace {

  LaurentPoly lp(const std::string & s, std::vector<std::string> vars = {"x"})
  {
    return parse_laurent(s, vars).poly;
  }

  const char * kApery = "(x + y)*(z + 1)*(x + y + z)*(y + z + 1)/(x*y*z)";

} // namespace

TEST_SUITE("laurent") {

  TEST_CASE("arithmetic and canonical form") {
    const auto f = lp("x^-1 + 2 + x");
    CHECK(to_string(f) == "x^-1 + 2 + x");
    CHECK(to_string(f * f) == "x^-2 + 4*x^-1 + 6 + 4*x + x^2");
    CHECK(to_string(f - f) == "0");
    CHECK(to_string(pow(f, 0)) == "1");
    CHECK(constant_term(pow(f, 3)) == 20);
    CHECK(degree(lp("x^-3 + x^2")) == 3);
    CHECK_THROWS_AS(degree(LaurentPoly(1)), Error);
    const auto g = lp("3/2*x*y^-1", {"x", "y"});
    CHECK(to_string(g, {"x", "y"}) == "3/2*x*y^-1");
  }

  TEST_CASE("variable count mismatch") {
    try {
      (void)(lp("x") * lp("x*y", {"x", "y"}));
      FAIL("expected VarCountMismatch");
    } catch (const Error & e) {
      CHECK(e.code() == ErrorCode::VarCountMismatch);
    }
    CHECK_THROWS_AS(ct_sequence(lp("x"), lp("y", {"x", "y"}), 2), Error);
  }

  TEST_CASE("too many variables") {
    try {
      LaurentPoly f(9);
      FAIL("expected TooManyVariables");
    } catch (const Error & e) {
      CHECK(e.code() == ErrorCode::TooManyVariables);
    }
  }

  TEST_CASE("ct_sequence examples") {
    auto cat = ct_sequence(lp("x^-1 + 2 + x"), lp("1 - x"), 4);
    CHECK(cat == std::vector<Rational>{1, 1, 2, 5, 14});
    CHECK(ct_sequence(lp("1"), lp("3"), 2) == std::vector<Rational>{3, 3, 3});
    const auto K = parse_laurent(kApery).poly;
    const auto one = LaurentPoly::constant(3, Rational(1));
    CHECK(ct_sequence(K, one, 1) == std::vector<Rational>{1, 5});
  }

  TEST_CASE("the kernel with (y + x + 1) is not the Apery kernel") {
    const auto K = parse_laurent("(x + y)*(z + 1)*(x + y + z)*(y + x + 1)/(x*y*z)").poly;
    CHECK(K.var_count() == 3);
    CHECK(degree(K) == 2);
    CHECK(ct_sequence(K, LaurentPoly::constant(3, Rational(1)), 2) == std::vector<Rational>{1, 4, 60});
  }

  TEST_CASE("Apery kernel against the binomial sum") {
    const auto K = parse_laurent(kApery).poly;
    const auto a = ct_sequence(K, LaurentPoly::constant(3, Rational(1)), 6);
    for (unsigned n = 0; n <= 6; ++n)
      CHECK(a[n] == Rational(oracle::apery(n)));
  }

  TEST_CASE("ct_term agrees with ct_sequence") {
    const auto P = lp("x^-2 - x + 3*x^3"), Q = lp("1 + x^-1");
    const auto s = ct_sequence(P, Q, 9);
    for (unsigned n = 0; n <= 9; ++n)
      CHECK(ct_term(P, Q, n) == s[n]);
  }

  TEST_CASE("section and substitution") {
    const auto f = lp("x^-2 + x^-1 + 5 + x^3 + x^4");
    CHECK(to_string(section(f, 2)) == "x^-1 + 5 + x^2");
    CHECK(to_string(substitute_power(lp("x^-1 + 2"), 3)) == "x^-3 + 2");
    CHECK(section(substitute_power(f, 5), 5) == f);
    CHECK_THROWS_AS(section(f, 0), Error);
  }

  TEST_CASE("reduce_mod") {
    const auto f = lp("1/2*x + 3");
    CHECK(to_string(reduce_mod(f, 7), {"x"}) == "3 + 4*x");
    try {
      reduce_mod(f, 4);
      FAIL("expected NonInvertibleDenominator");
    } catch (const Error & e) {
      CHECK(e.code() == ErrorCode::NonInvertibleDenominator);
    }
  }

  TEST_CASE("primitive part") {
    auto [c, g] = primitive_part(lp("2/3*x + 4/9"));
    CHECK(c == Rational(2, 9));
    CHECK(to_rational(g).scaled(c) == lp("2/3*x + 4/9"));
  }

  TEST_CASE("ct_term_mod matches exact values") {
    const auto P = lp("x^-1 + 2 + x"), Q = lp("1 - x");
    for (unsigned n = 0; n <= 30; ++n) {
      const auto exact = oracle::catalan(n);
      for (std::uint64_t m : {7ull, 49ull, 1000ull, 1000003ull})
        CHECK(ct_term_mod(P, Q, Integer(n), m).value() == Integer(exact % Integer(static_cast<unsigned long>(m))).get_ui());
    }
  }

  TEST_CASE("prime digit path against Lucas' theorem") {
    const auto P = lp("x^-1 + 2 + x"), one = lp("1");
    const Integer N("45078680581384516175726841");  // 2*7^30 + 7^3
    // binom(2N, N) mod 7 from base-7 digits
    Integer n = N, two_n = 2 * N;
    unsigned long acc = 1;
    while (two_n > 0) {
      const unsigned long a = Integer(two_n % 7).get_ui(), b = Integer(n % 7).get_ui();
      acc = acc * oracle::binom(a, b).get_ui() % 7;
      two_n /= 7;
      n /= 7;
    }
    CHECK(ct_term_mod(P, one, N, 7).value() == acc);
  }

  TEST_CASE("digit and direct paths agree") {
    const auto P = lp("x^-1 + 1 + 2*x^2"), Q = lp("3 - x^-1");
    for (std::uint64_t p : {5ull, 11ull, 13ull}) {
      for (std::uint64_t N : {p, p + 3, p * p + 2 * p + 1, 3 * p * p + 1}) {
        CHECK(ct_term_mod(P, Q, Integer(static_cast<unsigned long>(N)), p, CtMethod::Auto) ==
              ct_term_mod(P, Q, Integer(static_cast<unsigned long>(N)), p, CtMethod::Direct));
      }
    }
  }

  TEST_CASE("ct_sequence_mod matches exact") {
    const auto P = parse_laurent("x*y + x^-1 + y^-1 + 2").poly;
    const auto Q = parse_laurent("1 - x*y^-1").poly;
    const auto exact = ct_sequence(P, Q, 12);
    const auto mod = ct_sequence_mod(P, Q, 12, 121);
    for (unsigned n = 0; n <= 12; ++n)
      CHECK(mod[n].value() == rational_mod(exact[n], 121).value());
  }
}
