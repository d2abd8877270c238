#ifndef CTKIT_CONGRUENCE_HPP
#define CTKIT_CONGRUENCE_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctkit/cfinite.hpp"
#include "ctkit/hypergeom.hpp"
#include "ctkit/laurent.hpp"

namespace ctk {

  // Primes at or below the floor are never used by evaluator sweeps. The
  // default comes from CTKIT_PRIME_FLOOR when set, else 5.
  std::uint64_t default_prime_floor();

  class SeqEvaluator {
  public:
    virtual ~SeqEvaluator() = default;

    virtual std::string describe() const = 0;
    virtual Rational exact(std::uint64_t n) const = 0;
    virtual Residue modular(const Integer & n, std::uint64_t p, unsigned r) const = 0;
    // Several indices at one modulus; backends may share work between them.
    virtual std::vector<Residue> modular_many(const std::vector<Integer> & ns, std::uint64_t p, unsigned r) const;
    // Reason p cannot be used for this sequence, if any.
    virtual std::optional<std::string> inadmissible(std::uint64_t p) const;

    std::uint64_t prime_floor() const { return floor_; }
    void set_prime_floor(std::uint64_t f) { floor_ = f; }

  private:
    std::uint64_t floor_ = default_prime_floor();
  };

  class CFiniteEvaluator : public SeqEvaluator {
  public:
    explicit CFiniteEvaluator(CFiniteSeq seq) : seq_(std::move(seq)) {}
    std::string describe() const override;
    Rational exact(std::uint64_t n) const override;
    Residue modular(const Integer & n, std::uint64_t p, unsigned r) const override;
    std::optional<std::string> inadmissible(std::uint64_t p) const override;
    const CFiniteSeq & sequence() const { return seq_; }

  private:
    CFiniteSeq seq_;
  };

  class HypergeomEvaluator : public SeqEvaluator {
  public:
    explicit HypergeomEvaluator(HypergeomSeq seq, HypergeomConfig cfg = {})
      : seq_(std::move(seq)), cfg_(cfg) {}
    std::string describe() const override;
    Rational exact(std::uint64_t n) const override;
    Residue modular(const Integer & n, std::uint64_t p, unsigned r) const override;
    const HypergeomSeq & sequence() const { return seq_; }

  private:
    HypergeomSeq seq_;
    HypergeomConfig cfg_;
  };

  class ConstantTermEvaluator : public SeqEvaluator {
  public:
    ConstantTermEvaluator(LaurentPoly P, LaurentPoly Q);
    std::string describe() const override;
    Rational exact(std::uint64_t n) const override;
    Residue modular(const Integer & n, std::uint64_t p, unsigned r) const override;
    std::vector<Residue> modular_many(const std::vector<Integer> & ns, std::uint64_t p, unsigned r) const override;
    std::optional<std::string> inadmissible(std::uint64_t p) const override;

  private:
    LaurentPoly P_;
    LaurentPoly Q_;
  };

  struct CheckRecord {
    std::uint64_t p;
    unsigned r;
    std::uint64_t n;
    std::uint64_t k;
    std::uint64_t lhs;
    std::uint64_t rhs;
    bool pass;
  };

  struct SkipRecord {
    std::uint64_t p;
    std::optional<std::uint64_t> k;
    std::string reason;
    // Grid points this skip removes.
    std::uint64_t points;
  };

  enum class Verdict { AllPass, Counterexample, FalsifiedNoConstant };

  std::string verdict_name(Verdict v);

  struct CongruenceReport {
    std::string check;
    std::string subject;
    std::vector<std::pair<std::string, std::string>> grid;
    std::vector<CheckRecord> checks;
    std::vector<SkipRecord> skipped;
    Verdict verdict = Verdict::AllPass;
    std::optional<CheckRecord> counterexample;
    std::vector<std::uint64_t> evidence_primes;
    // Constant found by constant_c_falsifier.
    std::optional<Rational> constant;
    std::string note;

    std::uint64_t grid_size() const;
  };

  // A(p^r n) = A(p^{r-1} n) mod p^r for admissible p <= p_max, 1 <= r <= r_max,
  // 1 <= n <= n_max.
  CongruenceReport gauss_check(const SeqEvaluator & e, std::uint64_t p_max, unsigned r_max, std::uint64_t n_max);

  // A(p^r n + k) = A(k) ct[P^{p^{r-1} n}] mod p^r with A(n) = ct[P^n Q],
  // for p > deg(P^k Q), 1 <= r <= r_max, 0 <= n <= n_max, 0 <= k <= k_max.
  CongruenceReport ct_shift_check(const LaurentPoly & P, const LaurentPoly & Q,
                                  const std::vector<std::uint64_t> & primes, unsigned r_max,
                                  std::uint64_t n_max, std::uint64_t k_max);

  // A(p^s n + k) = A(p^r n + k) mod p^r for s >= r >= 1.
  CongruenceReport stability_check(const LaurentPoly & P, const LaurentPoly & Q,
                                   const std::vector<std::uint64_t> & primes, unsigned s, unsigned r,
                                   std::uint64_t n_max, std::uint64_t k_max);

  // Looks for one rational c of height <= height_bound with
  // A(p + k) = c A(k) mod p for every admissible prime and 0 <= k <= k_max.
  CongruenceReport constant_c_falsifier(const SeqEvaluator & e, const std::vector<std::uint64_t> & primes,
                                        std::uint64_t k_max, const Integer & height_bound = Integer(1000000));

  // With c_p = A(p)/A(0) mod p, checks A(p + k) = c_p A(k) mod p for
  // 1 <= k <= k_max. Accepts hypergeometric sequences only.
  CongruenceReport hypergeom_propagation_check(const HypergeomSeq & h, const std::vector<std::uint64_t> & primes,
                                               std::uint64_t k_max);

} // namespace ctk

#endif // CTKIT_CONGRUENCE_HPP
