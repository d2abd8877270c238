#include "ctkit/laurent.hpp"

#include <limits>
#include <sstream>

namespace ctk {

  ModLaurent reduce_mod(const LaurentPoly & f, std::uint64_t modulus)
  {
    std::vector<ModLaurent::Term> terms;
    terms.reserve(f.size());
    for (const auto & t : f.terms())
      terms.push_back({t.exponent, rational_mod(t.coeff, modulus)});
    return ModLaurent::from_terms(f.var_count(), std::move(terms), {modulus});
  }

  std::pair<Rational, IntLaurent> primitive_part(const LaurentPoly & f)
  {
    if (f.is_zero())
      return {Rational(0), IntLaurent(f.var_count())};
    Integer g = 0, l = 1;
    for (const auto & t : f.terms()) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    const Rational content = make_rational(g, l);
    std::vector<IntLaurent::Term> terms;
    terms.reserve(f.size());
    for (const auto & t : f.terms()) {
      Rational c = t.coeff / content;
      terms.push_back({t.exponent, c.get_num()});
    }
    return {content, IntLaurent::from_terms(f.var_count(), std::move(terms))};
  }

  LaurentPoly to_rational(const IntLaurent & f)
  {
    std::vector<LaurentPoly::Term> terms;
    terms.reserve(f.size());
    for (const auto & t : f.terms())
      terms.push_back({t.exponent, Rational(t.coeff)});
    return LaurentPoly::from_terms(f.var_count(), std::move(terms));
  }

  std::vector<Rational> ct_sequence(const LaurentPoly & P, const LaurentPoly & Q, std::uint64_t N)
  {
    P.check_compatible(Q);
    // Work over Z: ct(P^n Q) = cP^n cQ ct(P~^n Q~) with P~, Q~ primitive.
    auto [cp, ip] = primitive_part(P);
    auto [cq, iq] = primitive_part(Q);
    std::vector<Rational> out;
    out.reserve(N + 1);
    IntLaurent running = iq;
    Rational scale = cq;
    for (std::uint64_t n = 0; n <= N; ++n) {
      if (n > 0) {
        running = running * ip;
        scale *= cp;
      }
      out.push_back(scale * Rational(constant_term(running)));
    }
    return out;
  }

  Rational ct_term(const LaurentPoly & P, const LaurentPoly & Q, std::uint64_t N)
  {
    return ct_sequence(P, Q, N).back();
  }

  namespace {

    struct Box {
      std::vector<std::int64_t> lo, hi;
    };

    Box bounding_box(const ModLaurent & f)
    {
      const std::size_t d = f.var_count();
      Box b{std::vector<std::int64_t>(d, std::numeric_limits<std::int64_t>::max()),
            std::vector<std::int64_t>(d, std::numeric_limits<std::int64_t>::min())};
      for (const auto & t : f.terms()) {
        for (std::size_t i = 0; i < d; ++i) {
          b.lo[i] = std::min<std::int64_t>(b.lo[i], t.exponent[i]);
          b.hi[i] = std::max<std::int64_t>(b.hi[i], t.exponent[i]);
        }
      }
      return b;
    }

    // Exponents a factor P^u may carry and still meet exponent zero after
    // being multiplied by P^(N-u) Q.
    Box window(const Box & p, const Box & q, std::uint64_t N, std::uint64_t u)
    {
      const auto rest = static_cast<std::int64_t>(N - u);
      Box w{p.lo, p.hi};
      for (std::size_t i = 0; i < p.lo.size(); ++i) {
        w.lo[i] = -(rest * p.hi[i] + q.hi[i]);
        w.hi[i] = -(rest * p.lo[i] + q.lo[i]);
      }
      return w;
    }

    bool inside(const ExponentVector & e, const Box & w)
    {
      for (std::size_t i = 0; i < w.lo.size(); ++i) {
        if (e[i] < w.lo[i] || e[i] > w.hi[i])
          return false;
      }
      return true;
    }

    ModLaurent multiply_within(const ModLaurent & a, const ModLaurent & b, const Box & w)
    {
      std::unordered_map<ExponentVector, std::uint64_t, ExponentHash> acc;
      const std::uint64_t m = a.context().modulus;
      const auto & bt = b.terms();
      auto first_at_least = [&](std::int64_t v) {
        return std::partition_point(bt.begin(), bt.end(),
                                    [v](const ModLaurent::Term & t) { return t.exponent[0] < v; });
      };
      for (const auto & ta : a.terms()) {
        // Terms are sorted with the first exponent as primary key, so the
        // partners that can land in the window form one contiguous slice.
        const auto begin = first_at_least(w.lo[0] - ta.exponent[0]);
        const auto end = first_at_least(w.hi[0] - ta.exponent[0] + 1);
        for (auto it = begin; it != end; ++it) {
          const auto & tb = *it;
          ExponentVector e = ta.exponent + tb.exponent;
          if (!inside(e, w))
            continue;
          std::uint64_t & slot = acc[e];
          slot += mul_mod(ta.coeff.value(), tb.coeff.value(), m);
          if (slot >= m)
            slot -= m;
        }
      }
      std::vector<ModLaurent::Term> terms;
      terms.reserve(acc.size());
      for (const auto & [e, v] : acc) {
        if (v)
          terms.push_back({e, Residue(v, m)});
      }
      return ModLaurent::from_terms(a.var_count(), std::move(terms), a.context());
    }

    ModLaurent restrict_to(const ModLaurent & f, const Box & w)
    {
      std::vector<ModLaurent::Term> terms;
      for (const auto & t : f.terms()) {
        if (inside(t.exponent, w))
          terms.push_back(t);
      }
      return ModLaurent::from_terms(f.var_count(), std::move(terms), f.context());
    }

    // Univariate polynomial mod m with coefficients for exponents lo, lo+1, ...
    struct Dense {
      std::int64_t lo = 0;
      std::vector<std::uint64_t> c;
    };

    Dense to_dense(const ModLaurent & f)
    {
      Dense d;
      if (f.is_zero())
        return d;
      d.lo = f.terms().front().exponent[0];
      d.c.assign(static_cast<std::size_t>(f.terms().back().exponent[0] - d.lo + 1), 0);
      for (const auto & t : f.terms())
        d.c[static_cast<std::size_t>(t.exponent[0] - d.lo)] = t.coeff.value();
      return d;
    }

    std::uint64_t dense_at(const Dense & d, std::int64_t e)
    {
      if (e < d.lo || e >= d.lo + static_cast<std::int64_t>(d.c.size()))
        return 0;
      return d.c[static_cast<std::size_t>(e - d.lo)];
    }

    // a * b keeping only exponents in [wlo, whi].
    Dense dense_multiply(const Dense & a, const Dense & b, std::int64_t wlo, std::int64_t whi, std::uint64_t m)
    {
      Dense out;
      if (a.c.empty() || b.c.empty())
        return out;
      const std::int64_t lo = std::max(wlo, a.lo + b.lo);
      const std::int64_t hi = std::min(whi, a.lo + b.lo + static_cast<std::int64_t>(a.c.size() + b.c.size()) - 2);
      if (lo > hi)
        return out;
      out.lo = lo;
      out.c.assign(static_cast<std::size_t>(hi - lo + 1), 0);
      const bool small = m <= (std::uint64_t(1) << 32);
      const auto bn = static_cast<std::int64_t>(b.c.size());
      for (std::size_t i = 0; i < a.c.size(); ++i) {
        const std::uint64_t ai = a.c[i];
        if (ai == 0)
          continue;
        const std::int64_t ea = a.lo + static_cast<std::int64_t>(i);
        const std::int64_t jlo = std::max<std::int64_t>(0, lo - ea - b.lo);
        const std::int64_t jhi = std::min<std::int64_t>(bn - 1, hi - ea - b.lo);
        std::uint64_t * dst = out.c.data() + (ea + b.lo - lo);
        for (std::int64_t j = jlo; j <= jhi; ++j) {
          const std::uint64_t prod = small ? ai * b.c[static_cast<std::size_t>(j)] % m
                                           : mul_mod(ai, b.c[static_cast<std::size_t>(j)], m);
          std::uint64_t & slot = dst[j];
          slot += prod;
          if (slot >= m)
            slot -= m;
        }
      }
      return out;
    }

    Residue ct_term_mod_dense(const ModLaurent & P, const ModLaurent & Q, std::uint64_t N)
    {
      const std::uint64_t m = P.context().modulus;
      const Dense p = to_dense(P), q = to_dense(Q);
      const std::int64_t plo = p.lo, phi = p.lo + static_cast<std::int64_t>(p.c.size()) - 1;
      const std::int64_t qlo = q.lo, qhi = q.lo + static_cast<std::int64_t>(q.c.size()) - 1;
      auto bounds = [&](std::uint64_t u) {
        const auto rest = static_cast<std::int64_t>(N - u);
        return std::pair<std::int64_t, std::int64_t>{-(rest * phi + qhi), -(rest * plo + qlo)};
      };
      int top = 63;
      while (!((N >> top) & 1))
        --top;
      std::uint64_t u = 1;
      auto [lo, hi] = bounds(u);
      Dense acc = dense_multiply(p, Dense{0, {1}}, lo, hi, m);
      for (int bit = top - 1; bit >= 0; --bit) {
        u *= 2;
        std::tie(lo, hi) = bounds(u);
        acc = dense_multiply(acc, acc, lo, hi, m);
        if ((N >> bit) & 1) {
          u += 1;
          std::tie(lo, hi) = bounds(u);
          acc = dense_multiply(acc, p, lo, hi, m);
        }
      }
      std::uint64_t ct = 0;
      for (std::size_t i = 0; i < q.c.size(); ++i)
        ct = (ct + mul_mod(dense_at(acc, -(q.lo + static_cast<std::int64_t>(i))), q.c[i], m)) % m;
      return Residue(ct, m);
    }

    // Prime modulus, one base-p digit of N at a time:
    // P^{a + pb} Q = (P^a Q) P(x^p)^b mod p and ct[F G(x^p)] = ct[section_p(F) G].
    Residue ct_term_mod_prime(const ModLaurent & P, ModLaurent Q, Integer N)
    {
      const std::uint64_t p = P.context().modulus;
      const Integer pz(static_cast<unsigned long>(p));
      while (N > 0 && !Q.is_zero()) {
        const std::uint64_t digit = Integer(N % pz).get_ui();
        N /= pz;
        for (std::uint64_t i = 0; i < digit; ++i)
          Q = Q * P;
        Q = section(Q, p);
      }
      return constant_term(Q);
    }

  } // namespace

  std::vector<Residue> ct_sequence_mod(const ModLaurent & P, const ModLaurent & Q, std::uint64_t N)
  {
    P.check_compatible(Q);
    const std::uint64_t m = P.context().modulus;
    std::vector<Residue> out;
    out.reserve(N + 1);
    if (P.is_zero() || Q.is_zero()) {
      out.push_back(constant_term(Q));
      out.resize(N + 1, Residue(0, m));
      return out;
    }
    const Box pb = bounding_box(P);
    if (P.var_count() == 1) {
      const Dense p = to_dense(P);
      Dense run = to_dense(Q);
      for (std::uint64_t u = 0; u <= N; ++u) {
        out.emplace_back(dense_at(run, 0), m);
        if (u == N)
          break;
        // Terms of P^{u+1} Q that P^{N-u-1} can still carry back to 0.
        const auto rest = static_cast<std::int64_t>(N - u - 1);
        run = dense_multiply(run, p, -rest * pb.hi[0], -rest * pb.lo[0], m);
      }
      return out;
    }
    const ExponentVector zero(P.var_count());
    ModLaurent run = Q;
    for (std::uint64_t u = 0; u <= N; ++u) {
      out.push_back(run.coefficient(zero));
      if (u == N)
        break;
      Box w = pb;
      const auto rest = static_cast<std::int64_t>(N - u - 1);
      for (std::size_t i = 0; i < w.lo.size(); ++i) {
        w.lo[i] = -rest * pb.hi[i];
        w.hi[i] = -rest * pb.lo[i];
      }
      run = multiply_within(run, P, w);
    }
    return out;
  }

  std::vector<Residue> ct_sequence_mod(const LaurentPoly & P, const LaurentPoly & Q, std::uint64_t N,
                                       std::uint64_t modulus)
  {
    return ct_sequence_mod(reduce_mod(P, modulus), reduce_mod(Q, modulus), N);
  }

  Residue ct_term_mod(const ModLaurent & P, const ModLaurent & Q, std::uint64_t N, CtMethod method)
  {
    P.check_compatible(Q);
    const std::uint64_t m = P.context().modulus;
    if (N == 0)
      return constant_term(Q);
    if (P.is_zero() || Q.is_zero())
      return Residue(0, m);
    if (method == CtMethod::Auto && N >= m && is_prime(m))
      return ct_term_mod_prime(P, Q, Integer(static_cast<unsigned long>(N)));
    const Box pb = bounding_box(P), qb = bounding_box(Q);
    const std::uint64_t reach = degree(P) + 1;
    if (N > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()) / reach)
      fail(ErrorCode::InvalidArgument, "power too large for 32-bit exponents");

    if (P.var_count() == 1)
      return ct_term_mod_dense(P, Q, N);
    int top = 63;
    while (!((N >> top) & 1))
      --top;
    std::uint64_t u = 1;
    ModLaurent acc = restrict_to(P, window(pb, qb, N, u));
    for (int bit = top - 1; bit >= 0; --bit) {
      u *= 2;
      acc = multiply_within(acc, acc, window(pb, qb, N, u));
      if ((N >> bit) & 1) {
        u += 1;
        acc = multiply_within(acc, P, window(pb, qb, N, u));
      }
    }
    Residue ct(0, m);
    for (const auto & t : Q.terms())
      ct += acc.coefficient(-t.exponent) * t.coeff;
    return ct;
  }

  Residue ct_term_mod(const LaurentPoly & P, const LaurentPoly & Q, const Integer & N,
                      std::uint64_t modulus, CtMethod method)
  {
    if (N < 0)
      fail(ErrorCode::InvalidArgument, "negative power");
    if (!N.fits_ulong_p()) {
      if (method == CtMethod::Direct || !is_prime(modulus))
        fail(ErrorCode::InvalidArgument, "power beyond 64 bits needs a prime modulus");
      P.check_compatible(Q);
      return ct_term_mod_prime(reduce_mod(P, modulus), reduce_mod(Q, modulus), N);
    }
    return ct_term_mod(reduce_mod(P, modulus), reduce_mod(Q, modulus), N.get_ui(), method);
  }

  bool coefficients_p_integral(const LaurentPoly & f, std::uint64_t p)
  {
    Integer pz(std::to_string(p));
    for (const auto & t : f.terms()) {
      if (mpz_divisible_p(t.coeff.get_den().get_mpz_t(), pz.get_mpz_t()))
        return false;
    }
    return true;
  }

  ///////////////
  // Printing  //
  ///////////////

  std::vector<std::string> default_variable_names(std::size_t nvars)
  {
    static const char * short_names[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i)
      names.push_back(nvars <= 4 ? short_names[i] : "x" + std::to_string(i + 1));
    return names;
  }

  namespace {

    std::string monomial_text(const ExponentVector & e, const std::vector<std::string> & names)
    {
      std::string out;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
          continue;
        if (!out.empty())
          out += "*";
        out += names.at(i);
        if (e[i] != 1)
          out += "^" + std::to_string(e[i]);
      }
      return out;
    }

    // Shared layout: `sign` false means the magnitude is printed as is.
    template <class Poly, class Split>
    std::string render(const Poly & f, const std::vector<std::string> & names, Split split)
    {
      if (names.size() < f.var_count())
        fail(ErrorCode::InvalidArgument, "not enough variable names");
      if (f.is_zero())
        return "0";
      std::ostringstream os;
      bool first = true;
      for (const auto & t : f.terms()) {
        auto [negative, magnitude, is_one] = split(t.coeff);
        const std::string mono = monomial_text(t.exponent, names);
        if (first)
          os << (negative ? "-" : "");
        else
          os << (negative ? " - " : " + ");
        first = false;
        if (mono.empty())
          os << magnitude;
        else if (is_one)
          os << mono;
        else
          os << magnitude << "*" << mono;
      }
      return os.str();
    }

  } // namespace

  std::string to_string(const LaurentPoly & f, const std::vector<std::string> & names)
  {
    return render(f, names, [](const Rational & c) {
      Rational a = abs(c);
      return std::make_tuple(c < 0, to_string(a), a == 1);
    });
  }

  std::string to_string(const LaurentPoly & f)
  {
    return to_string(f, default_variable_names(f.var_count()));
  }

  std::string to_string(const ModLaurent & f, const std::vector<std::string> & names)
  {
    return render(f, names, [](const Residue & c) {
      return std::make_tuple(false, std::to_string(c.value()), c.value() == 1);
    });
  }

} // namespace ctk
