#include "ctkit/upoly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ctk {

  UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  void UPoly::trim()
  {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }

  UPoly UPoly::monomial(std::size_t degree, const Rational & c)
  {
    std::vector<Rational> v(degree + 1, Rational(0));
    v[degree] = c;
    return UPoly(std::move(v));
  }

  UPoly UPoly::linear_factor(const Rational & root) { return UPoly({-root, Rational(1)}); }

  Rational UPoly::operator()(const Rational & x) const
  {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  UPoly UPoly::monic() const
  {
    if (c_.empty())
      return *this;
    return (1 / c_.back()) * *this;
  }

  UPoly UPoly::derivative() const
  {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(c_[i] * static_cast<unsigned long>(i));
    return UPoly(std::move(d));
  }

  UPoly UPoly::reversed() const
  {
    std::vector<Rational> r(c_.rbegin(), c_.rend());
    return UPoly(std::move(r));
  }

  std::size_t UPoly::trailing_zeros() const
  {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0)
      ++k;
    return k;
  }

  UPoly UPoly::shifted_down(std::size_t k) const
  {
    if (k > trailing_zeros())
      fail(ErrorCode::InvalidArgument, "shift would drop nonzero coefficients");
    return UPoly(std::vector<Rational>(c_.begin() + static_cast<long>(k), c_.end()));
  }

  UPoly operator+(const UPoly & a, const UPoly & b)
  {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
      r[i] += b.c_[i];
    return UPoly(std::move(r));
  }

  UPoly operator-(const UPoly & a, const UPoly & b) { return a + Rational(-1) * b; }

  UPoly operator*(const UPoly & a, const UPoly & b)
  {
    if (a.is_zero() || b.is_zero())
      return UPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }

  UPoly operator*(const Rational & s, const UPoly & a)
  {
    std::vector<Rational> r = a.c_;
    for (auto & v : r)
      v *= s;
    return UPoly(std::move(r));
  }

  std::pair<UPoly, UPoly> UPoly::divmod(const UPoly & d) const
  {
    if (d.is_zero())
      fail(ErrorCode::InvalidArgument, "polynomial division by zero");
    std::vector<Rational> rem = c_;
    if (degree() < d.degree())
      return {UPoly(), *this};
    std::vector<Rational> q(c_.size() - d.c_.size() + 1, Rational(0));
    const Rational lead_inv = 1 / d.c_.back();
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
      const Rational f = rem[static_cast<std::size_t>(i) + d.c_.size() - 1] * lead_inv;
      q[static_cast<std::size_t>(i)] = f;
      if (f == 0)
        continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        rem[static_cast<std::size_t>(i) + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(rem))};
  }

  std::vector<Integer> UPoly::primitive_integer() const
  {
    Integer l = 1, g = 0;
    for (const auto & c : c_)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> out;
    for (const auto & c : c_) {
      Rational v = c * l;
      out.push_back(v.get_num());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
    }
    if (g == 0)
      return out;
    if (out.back() < 0)
      g = -g;
    for (auto & v : out)
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return out;
  }

  std::string UPoly::to_string(const std::string & var) const
  {
    if (c_.empty())
      return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0)
        continue;
      const Rational a = abs(c_[i]);
      const bool neg = c_[i] < 0;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      first = false;
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      if (mono.empty())
        os << ctk::to_string(a);
      else if (a == 1)
        os << mono;
      else
        os << ctk::to_string(a) << "*" << mono;
    }
    return os.str();
  }

  UPoly pow(const UPoly & p, unsigned e)
  {
    UPoly acc({Rational(1)});
    for (unsigned i = 0; i < e; ++i)
      acc = acc * p;
    return acc;
  }

  UPoly gcd(UPoly a, UPoly b)
  {
    while (!b.is_zero()) {
      UPoly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  UPoly squarefree_radical(const UPoly & p)
  {
    if (p.degree() <= 0)
      return UPoly({Rational(1)});
    return p.divmod(gcd(p, p.derivative())).first.monic();
  }

  std::vector<Rational> series_divide(const UPoly & num, const UPoly & den, std::size_t count)
  {
    if (den.coeff(0) == 0)
      fail(ErrorCode::InvalidArgument, "series division needs den(0) != 0");
    const Rational inv = 1 / den.coeff(0);
    std::vector<Rational> out(count, Rational(0));
    for (std::size_t n = 0; n < count; ++n) {
      Rational acc = num.coeff(n);
      const std::size_t top = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(0L, den.degree())));
      for (std::size_t j = 1; j <= top; ++j)
        acc -= den.coeff(j) * out[n - j];
      out[n] = acc * inv;
    }
    return out;
  }

  RationalRootSplit split_rational_roots(const UPoly & p)
  {
    if (p.is_zero())
      fail(ErrorCode::InvalidArgument, "rational roots of the zero polynomial");
    if (p.coeff(0) == 0)
      fail(ErrorCode::InvalidArgument, "strip the zero roots before splitting");
    RationalRootSplit out;
    UPoly rest = p.monic();
    if (rest.degree() == 0) {
      out.cofactor = rest;
      return out;
    }
    const auto ints = p.primitive_integer();
    const auto nums = positive_divisors(ints.front());
    const auto dens = positive_divisors(ints.back());
    std::vector<Rational> candidates;
    for (const auto & a : nums) {
      for (const auto & b : dens) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1)
          continue;
        candidates.push_back(make_rational(a, b));
        candidates.push_back(make_rational(-a, b));
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto & r : candidates) {
      unsigned mult = 0;
      while (rest.degree() >= 1 && rest(r) == 0) {
        rest = rest.divmod(UPoly::linear_factor(r)).first;
        ++mult;
      }
      if (mult)
        out.roots.emplace_back(r, mult);
    }
    out.cofactor = rest.monic();
    return out;
  }

  namespace {

    // Lagrange interpolation through (xs[i], ys[i]).
    UPoly interpolate(const std::vector<Integer> & xs, const std::vector<Integer> & ys)
    {
      UPoly acc;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        UPoly basis({Rational(1)});
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
          if (j == i)
            continue;
          basis = basis * UPoly::linear_factor(Rational(xs[j]));
          denom *= Rational(xs[i] - xs[j]);
        }
        acc = acc + (Rational(ys[i]) / denom) * basis;
      }
      return acc;
    }

    bool integral_coefficients(const UPoly & g)
    {
      return std::all_of(g.coeffs().begin(), g.coeffs().end(),
                         [](const Rational & c) { return c.get_den() == 1; });
    }

    // Finds a proper factor of the primitive integer polynomial f of degree k,
    // or returns the zero polynomial.
    UPoly kronecker_factor(const UPoly & f, long k, const Integer & height_bound)
    {
      // Evaluation points with few divisors keep the search small.
      std::vector<std::pair<std::size_t, Integer>> scored;
      for (long x = -8; x <= 8; ++x) {
        Integer v = f(Rational(x)).get_num();
        scored.emplace_back(positive_divisors(v).size(), Integer(x));
      }
      std::sort(scored.begin(), scored.end(),
                [](const auto & a, const auto & b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
      std::vector<Integer> xs;
      std::vector<std::vector<Integer>> choices;
      for (long i = 0; i <= k; ++i) {
        xs.push_back(scored[static_cast<std::size_t>(i)].second);
        Integer v = f(Rational(xs.back())).get_num();
        std::vector<Integer> opts;
        for (const auto & d : positive_divisors(v)) {
          opts.push_back(d);
          if (i > 0)
            opts.push_back(-d);
        }
        choices.push_back(std::move(opts));
      }
      const Integer lead = f.leading().get_num();
      std::vector<Integer> ys(xs.size());
      UPoly found;
      std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
        if (i == xs.size()) {
          UPoly g = interpolate(xs, ys);
          if (g.degree() != k || !integral_coefficients(g))
            return false;
          for (const auto & c : g.coeffs()) {
            if (abs(c.get_num()) > height_bound)
              return false;
          }
          if (!mpz_divisible_p(lead.get_mpz_t(), g.leading().get_num().get_mpz_t()))
            return false;
          if (!f.divmod(g).second.is_zero())
            return false;
          found = g;
          return true;
        }
        for (const auto & y : choices[i]) {
          ys[i] = y;
          if (search(i + 1))
            return true;
        }
        return false;
      };
      search(0);
      return found;
    }

    void factor_into(const UPoly & p, std::vector<UPoly> & out)
    {
      if (p.degree() <= 3) {
        out.push_back(p.monic());
        return;
      }
      const auto ints = p.primitive_integer();
      std::vector<Rational> qs(ints.begin(), ints.end());
      UPoly f(qs);
      // Mignotte: any factor's coefficients are bounded by 2^deg * ||f||_2.
      Integer norm2 = 0;
      for (const auto & c : ints)
        norm2 += c * c;
      Integer root = sqrt(norm2) + 1;
      Integer bound = root << static_cast<unsigned long>(f.degree());
      for (long k = 2; 2 * k <= f.degree(); ++k) {
        UPoly g = kronecker_factor(f, k, bound);
        if (!g.is_zero()) {
          factor_into(g, out);
          factor_into(f.divmod(g).first, out);
          return;
        }
      }
      out.push_back(p.monic());
    }

  } // namespace

  std::vector<UPoly> factor_without_linear(const UPoly & p)
  {
    std::vector<UPoly> out;
    if (p.degree() <= 0)
      return out;
    factor_into(p, out);
    std::sort(out.begin(), out.end(), [](const UPoly & a, const UPoly & b) {
      if (a.degree() != b.degree())
        return a.degree() < b.degree();
      return a.coeffs() < b.coeffs();
    });
    return out;
  }

} // namespace ctk
