#include "ctkit/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>

namespace ctk {

  Rational make_rational(const Integer & num, const Integer & den)
  {
    if (den == 0)
      fail(ErrorCode::InvalidArgument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  namespace {

    bool all_digits(std::string_view s)
    {
      return !s.empty() &&
        std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    }

    std::string_view trim(std::string_view s)
    {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
      return s;
    }

  } // namespace

  Rational parse_rational(std::string_view text)
  {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
      negative = true;
      s.remove_prefix(1);
    }
    std::string_view num = s, den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
      num = s.substr(0, slash);
      den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
      fail(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    Integer n{std::string(num)}, d{std::string(den)};
    if (negative)
      n = -n;
    return make_rational(n, d);
  }

  std::string to_string(const Integer & z) { return z.get_str(); }

  std::string to_string(const Rational & q)
  {
    if (q.get_den() == 1)
      return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }

  Integer binomial(unsigned long n, unsigned long k)
  {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
  }

  Integer factorial(unsigned long n)
  {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
  }

  std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
  {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  }

  /////////////
  // Residue //
  /////////////

  Residue::Residue(std::uint64_t value, std::uint64_t modulus)
    : value_(0), modulus_(modulus)
  {
    if (modulus == 0 || modulus > (std::uint64_t(1) << 63))
      fail(ErrorCode::InvalidArgument, "residue modulus out of range");
    value_ = value % modulus;
  }

  Residue Residue::from_integer(const Integer & z, std::uint64_t modulus)
  {
    Integer m(std::to_string(modulus));
    Integer r = z % m;
    if (r < 0)
      r += m;
    return Residue(std::stoull(r.get_str()), modulus);
  }

  bool Residue::is_unit() const
  {
    return std::gcd(value_, modulus_) == 1;
  }

  void Residue::check_same_modulus(const Residue & rhs) const
  {
    if (modulus_ != rhs.modulus_)
      fail(ErrorCode::ModulusMismatch,
           "residues modulo " + std::to_string(modulus_) + " and " + std::to_string(rhs.modulus_));
  }

  Residue Residue::operator-() const
  {
    return Residue(value_ == 0 ? 0 : modulus_ - value_, modulus_);
  }

  Residue & Residue::operator+=(const Residue & rhs)
  {
    check_same_modulus(rhs);
    value_ += rhs.value_;
    if (value_ >= modulus_)
      value_ -= modulus_;
    return *this;
  }

  Residue & Residue::operator-=(const Residue & rhs)
  {
    check_same_modulus(rhs);
    value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + (modulus_ - rhs.value_);
    return *this;
  }

  Residue & Residue::operator*=(const Residue & rhs)
  {
    check_same_modulus(rhs);
    value_ = mul_mod(value_, rhs.value_, modulus_);
    return *this;
  }

  Residue Residue::pow(std::uint64_t e) const
  {
    Residue base = *this, acc(1, modulus_);
    while (e) {
      if (e & 1)
        acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Residue Residue::pow(const Integer & e) const
  {
    if (e < 0)
      return inverse().pow(Integer(-e));
    Residue base = *this, acc(1, modulus_);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < bits; ++i) {
      if (mpz_tstbit(e.get_mpz_t(), i))
        acc *= base;
      base *= base;
    }
    return acc;
  }

  Residue Residue::inverse() const
  {
    // extended Euclid on signed 128-bit values
    __int128 r0 = modulus_, r1 = value_, t0 = 0, t1 = 1;
    while (r1 != 0) {
      __int128 q = r0 / r1;
      std::swap(r0, r1);
      r1 -= q * r0;
      std::swap(t0, t1);
      t1 -= q * t0;
    }
    if (r0 != 1)
      fail(ErrorCode::NonInvertibleDenominator,
           std::to_string(value_) + " is not invertible modulo " + std::to_string(modulus_));
    if (t0 < 0)
      t0 += modulus_;
    return Residue(static_cast<std::uint64_t>(t0), modulus_);
  }

  Residue rational_mod(const Rational & q, std::uint64_t m)
  {
    Residue den = Residue::from_integer(q.get_den(), m);
    if (!den.is_unit())
      fail(ErrorCode::NonInvertibleDenominator,
           "denominator " + q.get_den().get_str() + " is not invertible modulo " + std::to_string(m));
    return Residue::from_integer(q.get_num(), m) * den.inverse();
  }

  unsigned valuation(const Integer & z, std::uint64_t p)
  {
    if (z == 0)
      fail(ErrorCode::InvalidArgument, "valuation of zero");
    Integer pz(std::to_string(p));
    Integer t = z;
    unsigned v = 0;
    while (mpz_divisible_p(t.get_mpz_t(), pz.get_mpz_t())) {
      mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
      ++v;
    }
    return v;
  }

  ////////////
  // Primes //
  ////////////

  namespace {

    std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
    {
      std::uint64_t acc = 1 % m;
      b %= m;
      while (e) {
        if (e & 1)
          acc = mul_mod(acc, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
      }
      return acc;
    }

  } // namespace

  bool is_prime(std::uint64_t n)
  {
    if (n < 2)
      return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
      if (n % p == 0)
        return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
      d >>= 1;
      ++s;
    }
    // deterministic witness set for all 64-bit n
    for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
      std::uint64_t x = pow_mod(a, d, n);
      if (x == 0 || x == 1 || x == n - 1)
        continue;
      bool composite = true;
      for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
          composite = false;
          break;
        }
      }
      if (composite)
        return false;
    }
    return true;
  }

  std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi)
  {
    std::vector<std::uint64_t> out;
    if (lo < 2)
      lo = 2;
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (is_prime(n))
        out.push_back(n);
      if (n == std::numeric_limits<std::uint64_t>::max())
        break;
    }
    return out;
  }

  std::uint64_t checked_pow(std::uint64_t base, unsigned e)
  {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < e; ++i) {
      acc *= base;
      if (acc > std::numeric_limits<std::uint64_t>::max())
        fail(ErrorCode::InvalidArgument, "power exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
  }

  std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n)
  {
    std::vector<std::pair<Integer, unsigned>> out;
    if (n < 0)
      n = -n;
    if (n == 0)
      fail(ErrorCode::InvalidArgument, "cannot factor zero");
    auto take = [&](const Integer & p) {
      unsigned e = 0;
      while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++e;
      }
      if (e)
        out.emplace_back(p, e);
    };
    take(Integer(2));
    for (Integer p = 3; p * p <= n; p += 2)
      take(p);
    if (n > 1)
      out.emplace_back(n, 1);
    return out;
  }

  std::vector<Integer> positive_divisors(const Integer & n)
  {
    std::vector<Integer> divs{1};
    for (const auto & [p, e] : factor_integer(n)) {
      const std::size_t base = divs.size();
      Integer pk = 1;
      for (unsigned k = 1; k <= e; ++k) {
        pk *= p;
        for (std::size_t i = 0; i < base; ++i)
          divs.push_back(divs[i] * pk);
      }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
  }

  std::pair<Integer, Integer> crt_combine(const Integer & a1, const Integer & m1,
                                          const Integer & a2, const Integer & m2)
  {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t()) == 0)
      fail(ErrorCode::NotCoprime, "CRT moduli are not coprime");
    Integer m = m1 * m2;
    Integer t = ((a2 - a1) % m2) * inv % m2;
    Integer x = (a1 + m1 * t) % m;
    if (x < 0)
      x += m;
    return {x, m};
  }

  std::optional<Rational> rational_reconstruct(const Integer & a, const Integer & m,
                                               const Integer & bound)
  {
    Integer r0 = m, r1 = a % m, s0 = 0, s1 = 1;
    if (r1 < 0)
      r1 += m;
    while (r1 > bound) {
      Integer q = r0 / r1;
      Integer t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    Integer num = r1, den = s1;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (den == 0 || den > bound)
      return std::nullopt;
    Integer g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1)
      return std::nullopt;
    return make_rational(num, den);
  }

} // namespace ctk
