#ifndef CTKIT_EXACTNUM_HPP
#define CTKIT_EXACTNUM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ctkit/errors.hpp"

namespace ctk {

  using Integer = mpz_class;

  // mpq_class keeps results of arithmetic canonical; values built from a raw
  // numerator/denominator pair go through make_rational.
  using Rational = mpq_class;

  Rational make_rational(const Integer & num, const Integer & den);

  // Accepts `a` or `a/b` with an optional leading '-'.
  Rational parse_rational(std::string_view text);

  std::string to_string(const Integer & z);
  std::string to_string(const Rational & q);

  inline bool is_integral(const Rational & q) { return q.get_den() == 1; }

  Integer binomial(unsigned long n, unsigned long k);
  Integer factorial(unsigned long n);

  // Element of Z/mZ. The modulus travels with the value; mixing moduli is an
  // error, never a coercion. Moduli must stay below 2^63.
  class Residue {
  public:
    Residue() = default;
    Residue(std::uint64_t value, std::uint64_t modulus);

    static Residue from_integer(const Integer & z, std::uint64_t modulus);

    std::uint64_t value() const { return value_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return value_ == 0; }
    bool is_unit() const;

    Residue operator-() const;
    Residue & operator+=(const Residue & rhs);
    Residue & operator-=(const Residue & rhs);
    Residue & operator*=(const Residue & rhs);

    friend Residue operator+(Residue a, const Residue & b) { return a += b; }
    friend Residue operator-(Residue a, const Residue & b) { return a -= b; }
    friend Residue operator*(Residue a, const Residue & b) { return a *= b; }
    friend bool operator==(const Residue & a, const Residue & b)
    {
      return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }

    Residue pow(const Integer & e) const;
    Residue pow(std::uint64_t e) const;

    // Throws NonInvertibleDenominator when gcd(value, modulus) > 1.
    Residue inverse() const;

  private:
    void check_same_modulus(const Residue & rhs) const;

    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 1;
  };

  std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

  // numerator(q) * denominator(q)^{-1} mod m.
  Residue rational_mod(const Rational & q, std::uint64_t m);

  // p-adic valuation of a nonzero integer.
  unsigned valuation(const Integer & z, std::uint64_t p);

  bool is_prime(std::uint64_t n);
  std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

  // base^e, throwing InvalidArgument on 64-bit overflow.
  std::uint64_t checked_pow(std::uint64_t base, unsigned e);

  // Trial-division factorization; fine for the heights this library meets.
  std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n);
  std::vector<Integer> positive_divisors(const Integer & n);

  // x = a1 mod m1, x = a2 mod m2 with coprime moduli. Returns (x, m1*m2).
  std::pair<Integer, Integer> crt_combine(const Integer & a1, const Integer & m1,
                                          const Integer & a2, const Integer & m2);

  // Finds n/d with |n| <= bound, 0 < d <= bound and n = a*d mod m. The answer
  // is unique whenever m > 2*bound^2.
  std::optional<Rational> rational_reconstruct(const Integer & a, const Integer & m,
                                               const Integer & bound);

} // namespace ctk

#endif // CTKIT_EXACTNUM_HPP
