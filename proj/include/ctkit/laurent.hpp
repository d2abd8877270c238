#ifndef CTKIT_LAURENT_HPP
#define CTKIT_LAURENT_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ctkit/exactnum.hpp"

namespace ctk {

  inline constexpr std::size_t kMaxVariables = 8;

  // Exponent of a monomial x_1^e_1 ... x_d^e_d. Stored inline; compares
  // lexicographically, which fixes the term order everywhere.
  class ExponentVector {
  public:
    ExponentVector() = default;

    explicit ExponentVector(std::size_t nvars)
    {
      if (nvars > kMaxVariables)
        fail(ErrorCode::TooManyVariables,
             "at most " + std::to_string(kMaxVariables) + " variables are supported");
      n_ = static_cast<std::uint8_t>(nvars);
    }

    ExponentVector(std::initializer_list<std::int32_t> entries)
      : ExponentVector(entries.size())
    {
      std::copy(entries.begin(), entries.end(), e_.begin());
    }

    std::size_t size() const { return n_; }
    std::int32_t operator[](std::size_t i) const { return e_[i]; }
    std::int32_t & operator[](std::size_t i) { return e_[i]; }

    bool is_zero() const
    {
      return std::all_of(e_.begin(), e_.begin() + n_, [](std::int32_t v) { return v == 0; });
    }

    friend ExponentVector operator+(ExponentVector a, const ExponentVector & b)
    {
      for (std::size_t i = 0; i < a.n_; ++i)
        a.e_[i] += b.e_[i];
      return a;
    }

    friend ExponentVector operator-(ExponentVector a)
    {
      for (std::size_t i = 0; i < a.n_; ++i)
        a.e_[i] = -a.e_[i];
      return a;
    }

    friend auto operator<=>(const ExponentVector &, const ExponentVector &) = default;
    friend bool operator==(const ExponentVector &, const ExponentVector &) = default;

    std::size_t hash() const
    {
      std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
      for (std::size_t i = 0; i < n_; ++i) {
        h ^= static_cast<std::uint32_t>(e_[i]) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      }
      return static_cast<std::size_t>(h);
    }

  private:
    std::array<std::int32_t, kMaxVariables> e_{};
    std::uint8_t n_ = 0;
  };

  struct ExponentHash {
    std::size_t operator()(const ExponentVector & e) const { return e.hash(); }
  };

  ////////////////////////
  // Coefficient rings  //
  ////////////////////////

  template <class C> struct CoeffRing;

  template <> struct CoeffRing<Rational> {
    struct Context {
      friend bool operator==(const Context &, const Context &) { return true; }
    };
    static Rational zero(const Context &) { return 0; }
    static Rational one(const Context &) { return 1; }
    static bool is_zero(const Rational & c) { return c == 0; }
    static std::string describe(const Context &) { return "Q"; }
  };

  template <> struct CoeffRing<Integer> {
    struct Context {
      friend bool operator==(const Context &, const Context &) { return true; }
    };
    static Integer zero(const Context &) { return 0; }
    static Integer one(const Context &) { return 1; }
    static bool is_zero(const Integer & c) { return c == 0; }
    static std::string describe(const Context &) { return "Z"; }
  };

  template <> struct CoeffRing<Residue> {
    struct Context {
      std::uint64_t modulus = 1;
      friend bool operator==(const Context &, const Context &) = default;
    };
    static Residue zero(const Context & ctx) { return Residue(0, ctx.modulus); }
    static Residue one(const Context & ctx) { return Residue(1, ctx.modulus); }
    static bool is_zero(const Residue & c) { return c.is_zero(); }
    static std::string describe(const Context & ctx) { return "Z/" + std::to_string(ctx.modulus); }
  };

  ///////////////////////////////
  // Sparse Laurent polynomial //
  ///////////////////////////////

  // Finite sum of nonzero terms c * x^e, kept sorted by exponent. Values are
  // immutable once built; every operation returns a fresh polynomial.
  template <class C>
  class Laurent {
  public:
    using Coeff = C;
    using Ring = CoeffRing<C>;
    using Context = typename Ring::Context;

    struct Term {
      ExponentVector exponent;
      C coeff;
    };

    Laurent() : Laurent(1) {}

    explicit Laurent(std::size_t nvars, Context ctx = {})
      : nvars_(nvars), ctx_(ctx)
    {
      if (nvars == 0)
        fail(ErrorCode::InvalidArgument, "a Laurent polynomial needs at least one variable");
      ExponentVector probe(nvars);
      (void)probe;
    }

    static Laurent constant(std::size_t nvars, const C & c, Context ctx = {})
    {
      return monomial(ExponentVector(nvars), c, ctx);
    }

    static Laurent monomial(const ExponentVector & e, const C & c, Context ctx = {})
    {
      Laurent f(e.size(), ctx);
      if (!Ring::is_zero(c))
        f.terms_.push_back(Term{e, c});
      return f;
    }

    // Merges duplicate exponents and drops zero coefficients.
    static Laurent from_terms(std::size_t nvars, std::vector<Term> terms, Context ctx = {})
    {
      Laurent f(nvars, ctx);
      for (const auto & t : terms) {
        if (t.exponent.size() != nvars)
          fail(ErrorCode::VarCountMismatch, "exponent vector length differs from variable count");
      }
      std::sort(terms.begin(), terms.end(),
                [](const Term & a, const Term & b) { return a.exponent < b.exponent; });
      for (auto & t : terms) {
        if (!f.terms_.empty() && f.terms_.back().exponent == t.exponent)
          f.terms_.back().coeff += t.coeff;
        else
          f.terms_.push_back(std::move(t));
      }
      f.drop_zeros();
      return f;
    }

    std::size_t var_count() const { return nvars_; }
    const Context & context() const { return ctx_; }
    const std::vector<Term> & terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    C coefficient(const ExponentVector & e) const
    {
      auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                 [](const Term & t, const ExponentVector & v) { return t.exponent < v; });
      if (it != terms_.end() && it->exponent == e)
        return it->coeff;
      return Ring::zero(ctx_);
    }

    Laurent operator-() const
    {
      Laurent f = *this;
      for (auto & t : f.terms_)
        t.coeff = -t.coeff;
      return f;
    }

    friend Laurent operator+(const Laurent & a, const Laurent & b)
    {
      a.check_compatible(b);
      Laurent f(a.nvars_, a.ctx_);
      f.terms_.reserve(a.size() + b.size());
      auto i = a.terms_.begin(), j = b.terms_.begin();
      while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent < j->exponent)) {
          f.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->exponent < i->exponent) {
          f.terms_.push_back(*j++);
        } else {
          C c = i->coeff + j->coeff;
          if (!Ring::is_zero(c))
            f.terms_.push_back(Term{i->exponent, std::move(c)});
          ++i;
          ++j;
        }
      }
      return f;
    }

    friend Laurent operator-(const Laurent & a, const Laurent & b) { return a + (-b); }

    friend Laurent operator*(const Laurent & a, const Laurent & b)
    {
      a.check_compatible(b);
      if (a.is_zero() || b.is_zero())
        return Laurent(a.nvars_, a.ctx_);
      std::unordered_map<ExponentVector, C, ExponentHash> acc;
      acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t(1) << 22));
      const C zero = Ring::zero(a.ctx_);
      for (const auto & ta : a.terms_) {
        for (const auto & tb : b.terms_) {
          auto it = acc.try_emplace(ta.exponent + tb.exponent, zero).first;
          it->second += ta.coeff * tb.coeff;
        }
      }
      return collect(a.nvars_, a.ctx_, acc);
    }

    friend bool operator==(const Laurent & a, const Laurent & b)
    {
      if (a.nvars_ != b.nvars_ || !(a.ctx_ == b.ctx_) || a.size() != b.size())
        return false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.terms_[i].exponent != b.terms_[i].exponent || !(a.terms_[i].coeff == b.terms_[i].coeff))
          return false;
      }
      return true;
    }

    Laurent scaled(const C & c) const
    {
      Laurent f(nvars_, ctx_);
      if (Ring::is_zero(c))
        return f;
      f.terms_.reserve(size());
      for (const auto & t : terms_) {
        C v = t.coeff * c;
        if (!Ring::is_zero(v))
          f.terms_.push_back(Term{t.exponent, std::move(v)});
      }
      return f;
    }

    // Terms are moved out of a hash accumulator into sorted order.
    template <class Map>
    static Laurent collect(std::size_t nvars, const Context & ctx, Map & acc)
    {
      Laurent f(nvars, ctx);
      f.terms_.reserve(acc.size());
      for (auto & [e, c] : acc) {
        if (!Ring::is_zero(c))
          f.terms_.push_back(Term{e, std::move(c)});
      }
      std::sort(f.terms_.begin(), f.terms_.end(),
                [](const Term & x, const Term & y) { return x.exponent < y.exponent; });
      return f;
    }

    void check_compatible(const Laurent & other) const
    {
      if (nvars_ != other.nvars_)
        fail(ErrorCode::VarCountMismatch,
             "variable counts " + std::to_string(nvars_) + " and " + std::to_string(other.nvars_));
      if (!(ctx_ == other.ctx_))
        fail(ErrorCode::ModulusMismatch,
             "coefficient rings " + Ring::describe(ctx_) + " and " + Ring::describe(other.ctx_));
    }

  private:
    void drop_zeros()
    {
      std::erase_if(terms_, [](const Term & t) { return Ring::is_zero(t.coeff); });
    }

    std::size_t nvars_;
    Context ctx_;
    std::vector<Term> terms_;
  };

  using LaurentPoly = Laurent<Rational>;
  using IntLaurent = Laurent<Integer>;
  using ModLaurent = Laurent<Residue>;

  template <class C>
  Laurent<C> scale(const C & c, const Laurent<C> & f) { return f.scaled(c); }

  // f^n by binary powering; f^0 = 1.
  template <class C>
  Laurent<C> pow(const Laurent<C> & f, std::uint64_t n)
  {
    using Ring = CoeffRing<C>;
    Laurent<C> acc = Laurent<C>::constant(f.var_count(), Ring::one(f.context()), f.context());
    Laurent<C> base = f;
    while (n) {
      if (n & 1)
        acc = acc * base;
      n >>= 1;
      if (n)
        base = base * base;
    }
    return acc;
  }

  template <class C>
  C constant_term(const Laurent<C> & f)
  {
    return f.coefficient(ExponentVector(f.var_count()));
  }

  // Largest |exponent| of any variable in any term. Throws ZeroPolynomial.
  template <class C>
  std::uint64_t degree(const Laurent<C> & f)
  {
    if (f.is_zero())
      fail(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    std::uint64_t d = 0;
    for (const auto & t : f.terms()) {
      for (std::size_t i = 0; i < f.var_count(); ++i) {
        std::int64_t e = t.exponent[i];
        d = std::max<std::uint64_t>(d, static_cast<std::uint64_t>(e < 0 ? -e : e));
      }
    }
    return d;
  }

  // Keeps terms whose exponents are all divisible by p, dividing them by p.
  template <class C>
  Laurent<C> section(const Laurent<C> & f, std::uint64_t p)
  {
    if (p == 0)
      fail(ErrorCode::InvalidArgument, "section operator needs p >= 1");
    std::vector<typename Laurent<C>::Term> kept;
    const auto step = static_cast<std::int64_t>(p);
    for (const auto & t : f.terms()) {
      ExponentVector e = t.exponent;
      bool divisible = true;
      for (std::size_t i = 0; i < f.var_count() && divisible; ++i) {
        divisible = e[i] % step == 0;
        e[i] = static_cast<std::int32_t>(e[i] / step);
      }
      if (divisible)
        kept.push_back({e, t.coeff});
    }
    return Laurent<C>::from_terms(f.var_count(), std::move(kept), f.context());
  }

  // x -> x^p in every variable.
  template <class C>
  Laurent<C> substitute_power(const Laurent<C> & f, std::uint64_t p)
  {
    if (p == 0)
      fail(ErrorCode::InvalidArgument, "substitution power must be >= 1");
    std::vector<typename Laurent<C>::Term> out;
    out.reserve(f.size());
    for (const auto & t : f.terms()) {
      ExponentVector e = t.exponent;
      for (std::size_t i = 0; i < f.var_count(); ++i) {
        const std::int64_t v = static_cast<std::int64_t>(e[i]) * static_cast<std::int64_t>(p);
        if (v > INT32_MAX || v < INT32_MIN)
          fail(ErrorCode::InvalidArgument, "exponent overflow in substitution");
        e[i] = static_cast<std::int32_t>(v);
      }
      out.push_back({e, t.coeff});
    }
    return Laurent<C>::from_terms(f.var_count(), std::move(out), f.context());
  }

  // Coefficientwise reduction mod m; NonInvertibleDenominator if some
  // denominator shares a factor with m.
  ModLaurent reduce_mod(const LaurentPoly & f, std::uint64_t modulus);

  // f = content * primitive with the primitive part over Z.
  std::pair<Rational, IntLaurent> primitive_part(const LaurentPoly & f);

  LaurentPoly to_rational(const IntLaurent & f);

  // [ct(P^0 Q), ..., ct(P^N Q)] by multiplying P into the running product.
  std::vector<Rational> ct_sequence(const LaurentPoly & P, const LaurentPoly & Q, std::uint64_t N);

  // ct(P^N Q) for a single N, computed the same way as ct_sequence.
  Rational ct_term(const LaurentPoly & P, const LaurentPoly & Q, std::uint64_t N);

  // ct(P^N Q) mod m. For prime m and N >= m, walks the base-m digits of N;
  // otherwise powers P by squaring over Z/m and discards, at every stage,
  // monomials that can no longer reach exponent zero.
  // Direct never uses the digit walk, so congruence checks built on it do
  // not assume the Frobenius identity they are testing.
  enum class CtMethod { Auto, Direct };

  Residue ct_term_mod(const LaurentPoly & P, const LaurentPoly & Q, const Integer & N,
                      std::uint64_t modulus, CtMethod method = CtMethod::Auto);
  Residue ct_term_mod(const ModLaurent & P, const ModLaurent & Q, std::uint64_t N,
                      CtMethod method = CtMethod::Auto);

  // [ct(P^0 Q), ..., ct(P^N Q)] mod m from one running product, dropping
  // monomials that cannot return to exponent zero by step N.
  std::vector<Residue> ct_sequence_mod(const ModLaurent & P, const ModLaurent & Q, std::uint64_t N);
  std::vector<Residue> ct_sequence_mod(const LaurentPoly & P, const LaurentPoly & Q, std::uint64_t N,
                                       std::uint64_t modulus);

  // True when every coefficient of f has a denominator coprime to p.
  bool coefficients_p_integral(const LaurentPoly & f, std::uint64_t p);

  std::vector<std::string> default_variable_names(std::size_t nvars);

  // Canonical text form, terms in lexicographic exponent order, for example
  // "x^-1 + 2 + x".
  std::string to_string(const LaurentPoly & f, const std::vector<std::string> & names);
  std::string to_string(const LaurentPoly & f);
  std::string to_string(const ModLaurent & f, const std::vector<std::string> & names);

} // namespace ctk

#endif // CTKIT_LAURENT_HPP
