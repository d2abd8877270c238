#include "ctkit/hypergeom.hpp"

#include <numeric>

namespace ctk {

  HypergeomSeq::HypergeomSeq(UPoly alpha, UPoly beta, Rational a0)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), a0_(std::move(a0))
  {
    if (alpha_.is_zero())
      fail(ErrorCode::InvalidArgument, "alpha must be a nonzero polynomial");
    if (alpha_.trailing_zeros() > 0) {
      alpha_root_ = 0;
      return;
    }
    if (alpha_.degree() == 0)
      return;
    for (const auto & [root, mult] : split_rational_roots(alpha_).roots) {
      if (is_integral(root) && root >= 0) {
        alpha_root_ = root.get_num().get_ui();
        break;  // roots come out ascending
      }
    }
  }

  HypergeomSeq HypergeomSeq::scaled(const Rational & s) const
  {
    return HypergeomSeq(alpha_, s * beta_, a0_);
  }

  Rational rising_factorial(const Rational & x, std::uint64_t n)
  {
    Rational r = 1;
    Rational t = x;
    for (std::uint64_t i = 0; i < n; ++i, t += 1)
      r *= t;
    return r;
  }

  namespace {

    Rational at(const UPoly & f, std::uint64_t n) { return f(Rational(Integer(std::to_string(n)))); }

    void check_alpha(const HypergeomSeq & h, std::uint64_t N)
    {
      if (auto z = h.alpha_root(); z && *z < N)
        fail(ErrorCode::AlphaVanishes, "alpha vanishes at n = " + std::to_string(*z));
    }

    // z = p^v * u with p not dividing u; returns v and writes u.
    unsigned split_valuation(Integer & z, const Integer & p)
    {
      if (z == 0)
        return 0;
      return static_cast<unsigned>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
    }

  } // namespace

  std::vector<Rational> hg_eval(const HypergeomSeq & h, std::uint64_t N)
  {
    check_alpha(h, N);
    std::vector<Rational> out;
    out.reserve(N + 1);
    out.push_back(h.a0());
    for (std::uint64_t n = 0; n < N; ++n)
      out.push_back(out.back() * at(h.beta(), n) / at(h.alpha(), n));
    return out;
  }

  Residue hg_term_mod(const HypergeomSeq & h, std::uint64_t n, std::uint64_t p, unsigned r)
  {
    check_alpha(h, n);
    const std::uint64_t modulus = checked_pow(p, r);
    const Integer pz(std::to_string(p));
    long v = 0;
    Residue unit(1, modulus);

    auto absorb = [&](Rational q, int sign) {
      Integer num = q.get_num(), den = q.get_den();
      v += sign * static_cast<long>(split_valuation(num, pz));
      v -= sign * static_cast<long>(split_valuation(den, pz));
      Residue f = Residue::from_integer(num, modulus) * Residue::from_integer(den, modulus).inverse();
      unit *= sign > 0 ? f : f.inverse();
    };

    if (h.a0() == 0)
      return Residue(0, modulus);
    absorb(h.a0(), 1);
    for (std::uint64_t j = 0; j < n; ++j) {
      const Rational b = at(h.beta(), j);
      if (b == 0)
        return Residue(0, modulus);
      absorb(b, 1);
      absorb(at(h.alpha(), j), -1);
    }
    if (v < 0)
      fail(ErrorCode::NotPAdicIntegral,
           "term " + std::to_string(n) + " has " + std::to_string(p) + "-adic valuation " + std::to_string(v));
    if (v >= static_cast<long>(r))
      return Residue(0, modulus);
    return unit * Residue(checked_pow(p, static_cast<unsigned>(v)), modulus);
  }

  Residue hg_term_mod_auto(const HypergeomSeq & h, std::uint64_t index, std::uint64_t p,
                           const HypergeomConfig & cfg)
  {
    if (p > cfg.exact_prime_limit)
      return hg_term_mod(h, index, p, 1);
    const Rational a = hg_eval(h, index).back();
    if (mpz_divisible_ui_p(a.get_den().get_mpz_t(), p))
      fail(ErrorCode::NotPAdicIntegral, "term " + std::to_string(index) + " is not " + std::to_string(p) + "-integral");
    return rational_mod(a, p);
  }

  HypergeomSeq family_Am(long m)
  {
    if (m < 2)
      fail(ErrorCode::InvalidArgument, "family A_m needs m >= 2");
    const Rational mq(m);
    const UPoly n1{Rational(1), Rational(1)};                 // n + 1
    const UPoly alpha = (mq * mq) * (n1 * n1);                // m^2 (n+1)^2
    const UPoly beta = UPoly{Rational(1), mq} * UPoly{mq - 1, mq};  // (mn+1)(mn+m-1)
    return HypergeomSeq(alpha, beta, Rational(1));
  }

  HypergeomSeq b_sequence() { return family_Am(5).scaled(Rational(125)); }

  HypergeomSeq christol_sequence()
  {
    const UPoly n1{Rational(1), Rational(1)};
    const UPoly alpha = Rational(243) * (n1 * n1 * UPoly{Rational(1), Rational(3)});
    const UPoly beta = UPoly{Rational(1), Rational(9)} * UPoly{Rational(4), Rational(9)} *
                       UPoly{Rational(5), Rational(9)};
    return HypergeomSeq(alpha, beta, Rational(1));
  }

  HypergeomSeq christol_scaled() { return christol_sequence().scaled(Rational(243)); }

  long residue_a(long m, std::uint64_t p, long r)
  {
    if (m < 2)
      fail(ErrorCode::InvalidArgument, "modulus m must be >= 2");
    const long pm = static_cast<long>(p % static_cast<std::uint64_t>(m));
    const long rm = ((r % m) + m) % m;
    if (std::gcd(pm, m) != 1 || std::gcd(rm, m) != 1)
      fail(ErrorCode::NotCoprime, "gcd condition fails for m = " + std::to_string(m));
    const Residue inv = Residue(static_cast<std::uint64_t>(pm), static_cast<std::uint64_t>(m)).inverse();
    return static_cast<long>((inv * Residue(static_cast<std::uint64_t>(rm), static_cast<std::uint64_t>(m))).value());
  }

  Residue predicted_Am_residue(long m, std::uint64_t p)
  {
    const long a = residue_a(m, p, 1);
    return Residue::from_integer(Integer(a * (m - a)), p);
  }

  std::uint64_t phi(std::uint64_t m)
  {
    if (m == 0)
      fail(ErrorCode::InvalidArgument, "phi needs m >= 1");
    std::uint64_t out = m;
    for (const auto & [q, e] : factor_integer(Integer(std::to_string(m)))) {
      const std::uint64_t qu = q.get_ui();
      out = out / qu * (qu - 1);
    }
    return out;
  }

  ChristolResult christol_check(std::uint64_t p, EvalMode mode)
  {
    if (!is_prime(p) || p <= 9)
      fail(ErrorCode::InvalidArgument, "christol_check needs a prime p > 9");
    const std::uint64_t cls = p % 9;
    if (cls != 1 && cls != 8)
      fail(ErrorCode::WrongResidueClass, std::to_string(p) + " is not +-1 mod 9");
    const HypergeomSeq h = christol_scaled();
    const Residue actual = mode == EvalMode::Exact
                             ? hg_term_mod_auto(h, p, p, HypergeomConfig{UINT64_MAX})
                             : hg_term_mod(h, p, p, 1);
    const Residue expected(cls == 1 ? 20 % p : 80 % p, p);
    return {p, actual, expected, actual == expected};
  }

  AmWitnessSpec am_witness_spec(long m)
  {
    switch (m) {
    case 2: return {{{2, 1}, {2, 1}}, Rational(1, 16)};
    case 3: return {{{3, 2}, {2, 1}}, Rational(1, 27)};
    case 4: return {{{4, 2}, {2, 1}}, Rational(1, 64)};
    case 6: return {{{6, 3}, {3, 1}}, Rational(1, 432)};
    default: break;
    }
    fail(ErrorCode::NotInFamily, "A_" + std::to_string(m) + " is not a constant term (m must be 2, 3, 4 or 6)");
  }

  CTWitness witness_Am(long m)
  {
    const auto spec = am_witness_spec(m);
    LaurentPoly P = binomial_product_to_ct(spec.factors, spec.scale);
    LaurentPoly Q = LaurentPoly::constant(P.var_count(), Rational(1));
    return CTWitness{{WitnessTerm{Rational(1), std::move(P), std::move(Q)}}};
  }

} // namespace ctk
