#include "doctest.h"

#include "ctkit/exactnum.hpp"
#include "oracles.hpp"

using namespace ctk;

TEST_SUITE("exactnum") {

  TEST_CASE("rationals parse canonically") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational(" -7 ") == Rational(-7));
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
  }

  TEST_CASE("rational_mod") {
    CHECK(rational_mod(Rational(1, 2), 7).value() == 4);
    CHECK(rational_mod(Rational(-3), 7).value() == 4);
    try {
      rational_mod(Rational(1, 7), 7);
      FAIL("expected NonInvertibleDenominator");
    } catch (const Error & e) {
      CHECK(e.code() == ErrorCode::NonInvertibleDenominator);
    }
  }

  TEST_CASE("residue arithmetic and modulus mismatch") {
    Residue a(5, 11), b(9, 11);
    CHECK((a + b).value() == 3);
    CHECK((a - b).value() == 7);
    CHECK((a * b).value() == 1);
    CHECK(a.inverse().value() == 9);
    CHECK(a.pow(std::uint64_t(10)).value() == 1);
    CHECK(a.pow(Integer(-1)) == a.inverse());
    try {
      (void)(a + Residue(1, 13));
      FAIL("expected ModulusMismatch");
    } catch (const Error & e) {
      CHECK(e.code() == ErrorCode::ModulusMismatch);
    }
    CHECK_THROWS_AS(Residue(4, 8).inverse(), Error);
    CHECK(Residue::from_integer(Integer(-1), 10).value() == 9);
  }

  TEST_CASE("residue near the modulus limit") {
    const std::uint64_t m = (std::uint64_t(1) << 62) + 135;  // odd, large
    Residue a(m - 1, m);
    CHECK((a * a).value() == 1);
    CHECK((a + a).value() == m - 2);
  }

  TEST_CASE("primality agrees with trial division") {
    for (std::uint64_t n = 0; n < 5000; ++n)
      CHECK_MESSAGE(is_prime(n) == oracle::is_prime_trial(n), n);
    CHECK(is_prime(18446744073709551557ull));
    CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to 2, 3, 5, 7
    CHECK(primes_in_range(7, 30) == std::vector<std::uint64_t>{7, 11, 13, 17, 19, 23, 29});
  }

  TEST_CASE("valuation, factorization, divisors") {
    CHECK(valuation(Integer(48), 2) == 4);
    CHECK(valuation(Integer(-27), 3) == 3);
    auto f = factor_integer(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Integer, unsigned>{2, 3});
    CHECK(positive_divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    CHECK(checked_pow(11, 2) == 121);
    CHECK_THROWS_AS(checked_pow(10, 20), Error);
  }

  TEST_CASE("CRT and rational reconstruction") {
    auto [x, m] = crt_combine(Integer(2), Integer(3), Integer(3), Integer(5));
    CHECK(x == 8);
    CHECK(m == 15);
    CHECK_THROWS_AS(crt_combine(Integer(1), Integer(4), Integer(1), Integer(6)), Error);
    // -3/7 mod 10007
    const Integer M = 10007;
    Integer inv7;
    mpz_invert(inv7.get_mpz_t(), Integer(7).get_mpz_t(), M.get_mpz_t());
    const Integer a = (M - 3) * inv7 % M;
    auto q = rational_reconstruct(a, M, Integer(70));
    REQUIRE(q);
    CHECK(*q == Rational(-3, 7));
  }

  TEST_CASE("binomial and factorial") {
    CHECK(binomial(10, 3) == 120);
    CHECK(factorial(10) == 3628800);
  }
}
