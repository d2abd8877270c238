#ifndef CTKIT_UPOLY_HPP
#define CTKIT_UPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "ctkit/exactnum.hpp"

namespace ctk {

  // Dense univariate polynomial over Q, coefficients stored low degree first
  // with no trailing zeros (the zero polynomial has no coefficients).
  class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    UPoly(std::initializer_list<Rational> coeffs) : UPoly(std::vector<Rational>(coeffs)) {}

    static UPoly monomial(std::size_t degree, const Rational & c = 1);
    // (x - root)
    static UPoly linear_factor(const Rational & root);

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational> & coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational & x) const;

    UPoly monic() const;
    UPoly derivative() const;
    // x^d p(1/x) with d = degree.
    UPoly reversed() const;
    // Multiplicity of 0 as a root.
    std::size_t trailing_zeros() const;
    UPoly shifted_down(std::size_t k) const;

    friend UPoly operator+(const UPoly & a, const UPoly & b);
    friend UPoly operator-(const UPoly & a, const UPoly & b);
    friend UPoly operator*(const UPoly & a, const UPoly & b);
    friend UPoly operator*(const Rational & s, const UPoly & a);
    friend bool operator==(const UPoly & a, const UPoly & b) { return a.c_ == b.c_; }

    // Euclidean division; throws on a zero divisor.
    std::pair<UPoly, UPoly> divmod(const UPoly & d) const;

    // Primitive integer multiple with positive leading coefficient.
    std::vector<Integer> primitive_integer() const;

    std::string to_string(const std::string & var = "x") const;

  private:
    void trim();
    std::vector<Rational> c_;
  };

  UPoly pow(const UPoly & p, unsigned e);
  // Monic gcd (zero if both are zero).
  UPoly gcd(UPoly a, UPoly b);
  // Product of the distinct monic irreducible factors.
  UPoly squarefree_radical(const UPoly & p);

  // Power series coefficients of num/den up to (excluding) x^count; den(0) != 0.
  std::vector<Rational> series_divide(const UPoly & num, const UPoly & den, std::size_t count);

  // Distinct rational roots with multiplicities, found via the rational root
  // theorem on the primitive integer form. Remaining cofactor returned monic.
  struct RationalRootSplit {
    std::vector<std::pair<Rational, unsigned>> roots;
    UPoly cofactor;
  };
  RationalRootSplit split_rational_roots(const UPoly & p);

  // Irreducible factors over Q of a square-free polynomial with no rational
  // roots (each returned monic), by Kronecker's method with a Mignotte bound.
  std::vector<UPoly> factor_without_linear(const UPoly & p);

} // namespace ctk

#endif // CTKIT_UPOLY_HPP
