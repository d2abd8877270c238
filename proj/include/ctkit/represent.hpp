#ifndef CTKIT_REPRESENT_HPP
#define CTKIT_REPRESENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "ctkit/cfinite.hpp"
#include "ctkit/laurent.hpp"

namespace ctk {

  enum class DecisionReason {
    SingleRationalRoot,
    MultipleRationalRoots,
    IrrationalRootsPresent,
    ZeroSequence,
  };

  std::string reason_name(DecisionReason r);

  struct Decision {
    bool representable = false;
    std::optional<unsigned> min_terms;
    DecisionReason reason = DecisionReason::IrrationalRootsPresent;
    // Distinct characteristic roots, 0 included when present; meaningful
    // only without irrational roots.
    unsigned root_count = 0;
  };

  // ct[P^n] times a single Q, optionally weighted.
  struct WitnessTerm {
    Rational weight = 1;
    LaurentPoly P;
    LaurentPoly Q;
  };

  struct CTWitness {
    std::vector<WitnessTerm> terms;
  };

  // Sum of weight * ct[P^n Q] for n = 0..N.
  std::vector<Rational> witness_terms(const CTWitness & w, std::uint64_t N);

  Decision decide_single_ct(const CFiniteSeq & seq);
  Decision decide_combination(const CFiniteSeq & seq);

  // One term per distinct nonzero root (P = x + lambda) plus one term with
  // P = x carrying the finite-support part. Throws NotRepresentable.
  CTWitness build_witness(const CFiniteSeq & seq);

  struct WitnessReport {
    bool pass = false;
    // Window agreement implies equality for every n.
    bool certified = false;
    std::size_t window = 0;
    std::optional<std::size_t> first_mismatch;
    Rational expected;
    Rational actual;
  };

  WitnessReport verify_witness(const CFiniteSeq & seq, const CTWitness & w);
  // Checks terms[i] against index start + i only; never certified.
  WitnessReport verify_witness(const std::vector<Rational> & terms, const CTWitness & w, std::size_t start = 0);

  struct BinomialFactor {
    long a;
    long b;
  };

  // scale * prod (1 + x_i)^{a_i} / x_i^{b_i}, one variable per factor.
  LaurentPoly binomial_product_to_ct(const std::vector<BinomialFactor> & factors, const Rational & scale);

  struct MintonReport {
    // A(n) = A(0) ct[P^n] for n <= N
    bool ct_equality = true;
    std::optional<std::uint64_t> equality_failure;
    // A(pn) = A(n) mod p for the tested primes
    bool gauss_r1 = true;
    // A(p^r n) = A(p^{r-1} n) mod p^r, r = 1, 2
    bool gauss_r2 = true;
    std::vector<std::uint64_t> failing_primes;
    std::vector<std::uint64_t> skipped_primes;
  };

  MintonReport check_minton_analog(const LaurentPoly & P, const LaurentPoly & Q, std::uint64_t N,
                                   const std::vector<std::uint64_t> & primes);

  enum class IntegralRootsVerdict { Consistent, Violation, NotApplicable };

  struct IntegralRootsReport {
    IntegralRootsVerdict verdict;
    std::string detail;
  };

  std::string verdict_name(IntegralRootsVerdict v);

  IntegralRootsReport integral_roots_check(const CFiniteSeq & seq, std::uint64_t window);

} // namespace ctk

#endif // CTKIT_REPRESENT_HPP
