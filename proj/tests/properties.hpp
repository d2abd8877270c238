// Randomized property checks shared by the unit suite (small counts) and the
// acceptance binary (full counts). Fixed seeds; every generator is local.
#ifndef CTKIT_TESTS_PROPERTIES_HPP
#define CTKIT_TESTS_PROPERTIES_HPP

#include <string>
#include <vector>

#include "ctkit/cfinite.hpp"
#include "ctkit/hypergeom.hpp"
#include "ctkit/laurent.hpp"
#include "ctkit/represent.hpp"
#include "oracles.hpp"

namespace props {

  using namespace ctk;

  struct Outcome {
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string & what)
    {
      ++cases;
      if (!ok && failures++ == 0)
        first_failure = what;
    }
    bool ok() const { return cases > 0 && failures == 0; }
  };

  inline LaurentPoly random_laurent(oracle::Rng & rng, std::size_t nvars, std::size_t min_terms, std::size_t max_terms,
                                    long exp_bound, long coeff_bound, bool rational)
  {
    const auto count = static_cast<std::size_t>(rng.uniform(static_cast<long>(min_terms), static_cast<long>(max_terms)));
    std::vector<LaurentPoly::Term> terms;
    for (std::size_t i = 0; i < count; ++i) {
      ExponentVector e(nvars);
      for (std::size_t v = 0; v < nvars; ++v)
        e[v] = static_cast<std::int32_t>(rng.uniform(-exp_bound, exp_bound));
      long num = 0;
      while (num == 0)
        num = rng.uniform(-coeff_bound, coeff_bound);
      const long den = rational ? rng.uniform(1, 4) : 1;
      terms.push_back({e, oracle::frac(num, den)});
    }
    auto f = LaurentPoly::from_terms(nvars, std::move(terms));
    if (f.is_zero())
      f = LaurentPoly::constant(nvars, 1);
    return f;
  }

  inline std::string show(const LaurentPoly & f) { return to_string(f); }

  // Commutativity, associativity, distributivity and identities over Q.
  inline Outcome ring_laws(std::size_t count, std::uint64_t seed)
  {
    oracle::Rng rng(seed);
    Outcome out;
    for (std::size_t i = 0; i < count; ++i) {
      const auto nv = static_cast<std::size_t>(rng.uniform(1, 3));
      const auto a = random_laurent(rng, nv, 1, 4, 3, 6, true);
      const auto b = random_laurent(rng, nv, 1, 4, 3, 6, true);
      const auto c = random_laurent(rng, nv, 1, 4, 3, 6, true);
      const auto one = LaurentPoly::constant(nv, 1);
      const bool ok = a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                      a + b == b + a && a * one == a && (a - a).is_zero() &&
                      pow(a, 3) == a * a * a;
      out.record(ok, "ring laws fail for a = " + show(a) + ", b = " + show(b) + ", c = " + show(c));
    }
    return out;
  }

  // P(x)^{p^r} = P(x^p)^{p^{r-1}} mod p^r for integer Laurent P.
  inline Outcome frobenius(std::size_t count, std::uint64_t seed)
  {
    oracle::Rng rng(seed);
    Outcome out;
    const std::vector<std::uint64_t> ps{2, 3, 5, 7};
    for (std::size_t i = 0; i < count; ++i) {
      const auto nv = static_cast<std::size_t>(rng.uniform(1, 2));
      const auto P = random_laurent(rng, nv, 2, 4, 2, 9, false);
      const std::uint64_t p = ps[rng.index(ps.size())];
      const auto r = static_cast<unsigned>(rng.uniform(1, 2));
      const std::uint64_t pr = checked_pow(p, r);
      const auto lhs = pow(reduce_mod(P, pr), pr);
      const auto rhs = pow(reduce_mod(substitute_power(P, p), pr), pr / p);
      out.record(lhs == rhs, "Frobenius fails for P = " + show(P) + ", p = " + std::to_string(p) +
                                 ", r = " + std::to_string(r));
    }
    return out;
  }

  // Section and substitution are adjoint: section_p(F * G(x^p)) = section_p(F) * G.
  inline Outcome section_adjunction(std::size_t count, std::uint64_t seed)
  {
    oracle::Rng rng(seed);
    Outcome out;
    for (std::size_t i = 0; i < count; ++i) {
      const auto nv = static_cast<std::size_t>(rng.uniform(1, 3));
      const auto F = random_laurent(rng, nv, 1, 6, 6, 9, true);
      const auto G = random_laurent(rng, nv, 1, 4, 2, 9, true);
      const auto p = static_cast<std::uint64_t>(rng.uniform(1, 5));
      const bool ok = section(F * substitute_power(G, p), p) == section(F, p) * G &&
                      section(substitute_power(G, p), p) == G;
      out.record(ok, "adjunction fails for F = " + show(F) + ", G = " + show(G) + ", p = " + std::to_string(p));
    }
    return out;
  }

  // deg(P^k Q) <= k deg(P) + deg(Q).
  inline Outcome degree_bound(std::size_t count, std::uint64_t seed)
  {
    oracle::Rng rng(seed);
    Outcome out;
    for (std::size_t i = 0; i < count; ++i) {
      const auto nv = static_cast<std::size_t>(rng.uniform(1, 3));
      const auto P = random_laurent(rng, nv, 1, 4, 3, 5, false);
      const auto Q = random_laurent(rng, nv, 1, 3, 3, 5, false);
      const auto k = static_cast<std::uint64_t>(rng.uniform(0, 4));
      const auto f = pow(P, k) * Q;
      const bool ok = f.is_zero() || degree(f) <= k * degree(P) + degree(Q);
      out.record(ok, "degree bound fails for P = " + show(P) + ", Q = " + show(Q));
    }
    return out;
  }

  struct RandomRecurrence {
    std::vector<long> coeffs;
    std::vector<long> init;
  };

  inline RandomRecurrence random_recurrence(oracle::Rng & rng)
  {
    RandomRecurrence r;
    const auto order = rng.uniform(1, 4);
    for (long i = 0; i < order; ++i)
      r.coeffs.push_back(rng.uniform(-3, 3));
    for (long i = 0; i < order; ++i)
      r.init.push_back(rng.uniform(-5, 5));
    return r;
  }

  inline CFiniteSeq to_seq(const RandomRecurrence & r)
  {
    std::vector<Rational> c, a;
    for (long v : r.coeffs)
      c.emplace_back(v);
    for (long v : r.init)
      a.emplace_back(v);
    return CFiniteSeq(c, a);
  }

  // Matrix-power evaluation against a plain unrolled recurrence.
  inline Outcome eval_mod_vs_unroll(std::size_t count, std::uint64_t max_index, std::uint64_t seed)
  {
    oracle::Rng rng(seed);
    Outcome out;
    std::vector<std::uint64_t> moduli;
    for (std::uint64_t q = 2; q <= 121; ++q) {
      std::uint64_t b = 2;
      while (q % b != 0)
        ++b;
      std::uint64_t t = q;
      while (t % b == 0)
        t /= b;
      if (t == 1)
        moduli.push_back(q);
    }
    for (std::size_t i = 0; i < count; ++i) {
      const auto rec = random_recurrence(rng);
      const std::uint64_t m = moduli[rng.index(moduli.size())];
      std::vector<std::uint64_t> idx{0, static_cast<std::uint64_t>(rng.uniform(0, static_cast<long>(max_index))),
                                     static_cast<std::uint64_t>(rng.uniform(0, static_cast<long>(max_index))),
                                     max_index};
      const auto truth = oracle::unroll_mod(rec.coeffs, rec.init, max_index, m);
      const auto seq = to_seq(rec);
      bool ok = true;
      for (auto n : idx)
        ok = ok && eval_mod(seq, Integer(std::to_string(n)), m).value() == truth[n];
      out.record(ok, "eval_mod disagrees for modulus " + std::to_string(m));
    }
    return out;
  }

  // Minimal annihilator against the Hankel-rank shape search.
  inline Outcome annihilator_vs_hankel(std::size_t count, std::uint64_t seed)
  {
    oracle::Rng rng(seed);
    Outcome out;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Rational> c, a;
      const auto order = rng.uniform(1, 4);
      for (long j = 0; j < order; ++j)
        c.push_back(oracle::frac(rng.uniform(-3, 3), rng.uniform(1, 2)));
      const auto offset = static_cast<std::size_t>(rng.uniform(0, 2));
      for (std::size_t j = 0; j < offset + static_cast<std::size_t>(order); ++j)
        a.emplace_back(rng.uniform(0, 3) == 0 ? 0 : rng.uniform(-4, 4));
      const CFiniteSeq s(c, a, offset);
      const auto terms = eval_terms(s, 2 * s.window() + 12);
      std::vector<oracle::Q> qs(terms.begin(), terms.end());
      const auto shape = oracle::annihilator_shape(qs, s.window());
      const UPoly M = minimal_annihilator(s);
      const bool ok = shape && M.degree() == static_cast<long>(shape->e + shape->d) &&
                      M.trailing_zeros() == shape->e && M.leading() == 1;
      out.record(ok, "minimal annihilator " + M.to_string() + " disagrees with the Hankel search");
    }
    return out;
  }

  // Sequences with only rational roots: build, evaluate, certify.
  inline Outcome witness_round_trip(std::size_t count, std::uint64_t seed)
  {
    oracle::Rng rng(seed);
    Outcome out;
    for (std::size_t i = 0; i < count; ++i) {
      UPoly ann{1};
      const auto roots = rng.uniform(1, 3);
      for (long j = 0; j < roots; ++j) {
        long num = 0;
        while (num == 0)
          num = rng.uniform(-4, 4);
        const Rational lambda = oracle::frac(num, rng.uniform(1, 3));
        ann = ann * pow(UPoly::linear_factor(lambda), static_cast<unsigned>(rng.uniform(1, 2)));
      }
      ann = ann * UPoly::monomial(static_cast<std::size_t>(rng.uniform(0, 2)));
      std::vector<Rational> init;
      for (long j = 0; j <= ann.degree(); ++j)
        init.push_back(oracle::frac(rng.uniform(-6, 6), rng.uniform(1, 2)));
      const auto s = CFiniteSeq::from_annihilator(ann, init);
      const auto w = build_witness(s);
      const auto rep = verify_witness(s, w);
      const bool ok = witness_terms(w, 30) == eval_terms(s, 30) && rep.pass && rep.certified;
      out.record(ok, "witness round trip fails for annihilator " + ann.to_string());
    }
    return out;
  }

  // Valuation-tracked modular evaluation against reduced exact values.
  inline Outcome hypergeom_exact_vs_modular(std::uint64_t n_max, std::uint64_t p_max)
  {
    Outcome out;
    std::vector<HypergeomSeq> seqs{b_sequence(), christol_scaled(), HypergeomSeq(UPoly{1, 1}, UPoly{3, 2}, 1)};
    for (long m = 2; m <= 12; ++m)
      seqs.push_back(family_Am(m).scaled(Rational(m * m)));
    for (const auto & h : seqs) {
      const auto exact = hg_eval(h, n_max);
      for (std::uint64_t p : primes_in_range(2, p_max)) {
        bool ok = true;
        for (std::uint64_t n = 0; n <= n_max; ++n) {
          if (exact[n].get_den() % p == 0) {
            bool threw = false;
            try {
              (void)hg_term_mod(h, n, p);
            } catch (const Error &) {
              threw = true;
            }
            ok = ok && threw;
          } else {
            ok = ok && hg_term_mod(h, n, p).value() == oracle::qmod(exact[n], p);
          }
        }
        out.record(ok, "hg_term_mod disagrees at p = " + std::to_string(p) + " for alpha = " +
                           h.alpha().to_string("n"));
      }
    }
    return out;
  }

} // namespace props

#endif // CTKIT_TESTS_PROPERTIES_HPP
