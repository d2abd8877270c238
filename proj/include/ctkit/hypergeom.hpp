#ifndef CTKIT_HYPERGEOM_HPP
#define CTKIT_HYPERGEOM_HPP

#include <cstdint>
#include <vector>

#include "ctkit/exactnum.hpp"
#include "ctkit/represent.hpp"
#include "ctkit/upoly.hpp"

namespace ctk {

  // alpha(n) A(n+1) = beta(n) A(n), A(0) = a0.
  class HypergeomSeq {
  public:
    HypergeomSeq(UPoly alpha, UPoly beta, Rational a0);

    const UPoly & alpha() const { return alpha_; }
    const UPoly & beta() const { return beta_; }
    const Rational & a0() const { return a0_; }

    // Smallest n >= 0 with alpha(n) = 0, if any.
    std::optional<std::uint64_t> alpha_root() const { return alpha_root_; }

    // s^n A(n).
    HypergeomSeq scaled(const Rational & s) const;

  private:
    UPoly alpha_;
    UPoly beta_;
    Rational a0_;
    std::optional<std::uint64_t> alpha_root_;
  };

  Rational rising_factorial(const Rational & x, std::uint64_t n);

  // A(0..N); AlphaVanishes if alpha(n) = 0 for some n < N.
  std::vector<Rational> hg_eval(const HypergeomSeq & h, std::uint64_t N);

  // A(n) mod p^r from the running product, tracking the p-adic valuation
  // separately from the unit part.
  Residue hg_term_mod(const HypergeomSeq & h, std::uint64_t n, std::uint64_t p, unsigned r = 1);

  enum class EvalMode { Exact, Modular };

  struct HypergeomConfig {
    // Exact big-rational evaluation up to this prime, valuation-tracked
    // modular evaluation above it.
    std::uint64_t exact_prime_limit = 500;
  };

  // A(index) mod p, exact or modular depending on the configuration.
  Residue hg_term_mod_auto(const HypergeomSeq & h, std::uint64_t index, std::uint64_t p,
                           const HypergeomConfig & cfg = {});

  // (1/m)_n (1 - 1/m)_n / n!^2
  HypergeomSeq family_Am(long m);

  // (n+1)^2 A(n+1) = 5(5n+1)(5n+4) A(n): the A_5 family scaled by 125^n.
  HypergeomSeq b_sequence();

  // (1/9)_n (4/9)_n (5/9)_n / (n!^2 (1/3)_n)
  HypergeomSeq christol_sequence();
  // 3^{5n} times christol_sequence().
  HypergeomSeq christol_scaled();

  // The a in {1..m-1} with a p = r (mod m).
  long residue_a(long m, std::uint64_t p, long r = 1);

  // a (m - a) mod p, with a p = 1 (mod m).
  Residue predicted_Am_residue(long m, std::uint64_t p);

  std::uint64_t phi(std::uint64_t m);

  struct ChristolResult {
    std::uint64_t p;
    Residue actual;
    Residue expected;
    bool match;
  };

  // 3^{5p} A(p) mod p against 20 (p = 1 mod 9) or 80 (p = 8 mod 9).
  ChristolResult christol_check(std::uint64_t p, EvalMode mode);

  struct AmWitnessSpec {
    std::vector<BinomialFactor> factors;
    Rational scale;
  };

  AmWitnessSpec am_witness_spec(long m);

  // ct[P^n] = A_m(n) for m in {2, 3, 4, 6}.
  CTWitness witness_Am(long m);

} // namespace ctk

#endif // CTKIT_HYPERGEOM_HPP
