#ifndef CTKIT_CFINITE_HPP
#define CTKIT_CFINITE_HPP

#include <optional>
#include <vector>

#include "ctkit/exactnum.hpp"
#include "ctkit/upoly.hpp"

namespace ctk {

  // A(n+r) = c_{r-1} A(n+r-1) + ... + c_0 A(n) for all n >= offset, with the
  // first offset + r terms given explicitly.
  class CFiniteSeq {
  public:
    CFiniteSeq(std::vector<Rational> coeffs, std::vector<Rational> initial, std::size_t offset = 0);

    // Sequence annihilated by the monic polynomial `annihilator`, fixed by its
    // first deg(annihilator) terms (extra entries in `initial` are ignored).
    static CFiniteSeq from_annihilator(const UPoly & annihilator, const std::vector<Rational> & initial);

    std::size_t order() const { return coeffs_.size(); }
    std::size_t offset() const { return offset_; }
    const std::vector<Rational> & coeffs() const { return coeffs_; }
    const std::vector<Rational> & initial() const { return initial_; }

    // offset + order: number of terms that pin the sequence down.
    std::size_t window() const { return offset_ + coeffs_.size(); }

    // x^offset * chi(x).
    UPoly known_annihilator() const;

    // No coefficient or initial value has p in its denominator.
    bool p_integral(std::uint64_t p) const;

  private:
    std::vector<Rational> coeffs_;
    std::vector<Rational> initial_;
    std::size_t offset_;
  };

  std::vector<Rational> eval_terms(const CFiniteSeq & seq, std::uint64_t N);

  // A(index) mod `modulus` by powering the companion matrix over Z/modulus.
  Residue eval_mod(const CFiniteSeq & seq, const Integer & index, std::uint64_t modulus);

  UPoly minimal_annihilator(const CFiniteSeq & seq);

  struct CharRoots {
    std::vector<std::pair<Rational, unsigned>> rational_roots;  // ascending, nonzero
    unsigned zero_multiplicity = 0;
    unsigned residual_degree = 0;
    UPoly residual;  // monic factor without rational roots
  };

  CharRoots characteristic_roots(const CFiniteSeq & seq);

  // A(n) = constant*[n == 0] + sum alpha * (theta_1^n + ... + theta_k^n),
  // the theta_i being the roots of the reversal of u (u irreducible, u(0) = 1).
  struct TracePart {
    Rational alpha;
    UPoly u;
  };
  struct TraceDecomposition {
    Rational constant;
    std::vector<TracePart> parts;
  };

  std::optional<TraceDecomposition> is_trace_sequence(const CFiniteSeq & seq);

  // Power sums theta_1^n + ... + theta_k^n for n < count (n = 0 gives k).
  std::vector<Rational> power_sums(const UPoly & u, std::size_t count);

  CFiniteSeq separable_part(const CFiniteSeq & seq);

  struct GeneratingFunction {
    UPoly numerator;
    UPoly denominator;
  };

  GeneratingFunction generating_function(const CFiniteSeq & seq);

} // namespace ctk

#endif // CTKIT_CFINITE_HPP
