#include "ctkit/congruence.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace ctk {

  std::uint64_t default_prime_floor()
  {
    if (const char * env = std::getenv("CTKIT_PRIME_FLOOR"); env && *env) {
      char * end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end && *end == '\0')
        return v;
    }
    return 5;
  }

  std::string verdict_name(Verdict v)
  {
    switch (v) {
    case Verdict::AllPass: return "AllPass";
    case Verdict::Counterexample: return "Counterexample";
    case Verdict::FalsifiedNoConstant: return "FalsifiedNoConstant";
    }
    return "Unknown";
  }

  std::uint64_t CongruenceReport::grid_size() const
  {
    std::uint64_t total = checks.size();
    for (const auto & s : skipped)
      total += s.points;
    return total;
  }

  //////////////////
  // Evaluators   //
  //////////////////

  std::optional<std::string> SeqEvaluator::inadmissible(std::uint64_t p) const
  {
    if (p <= floor_)
      return "at or below prime floor " + std::to_string(floor_);
    return std::nullopt;
  }

  std::vector<Residue> SeqEvaluator::modular_many(const std::vector<Integer> & ns, std::uint64_t p, unsigned r) const
  {
    std::vector<Residue> out;
    out.reserve(ns.size());
    for (const auto & n : ns)
      out.push_back(modular(n, p, r));
    return out;
  }

  std::string CFiniteEvaluator::describe() const
  {
    return "C-finite order " + std::to_string(seq_.order()) + " offset " + std::to_string(seq_.offset());
  }

  Rational CFiniteEvaluator::exact(std::uint64_t n) const { return eval_terms(seq_, n).back(); }

  Residue CFiniteEvaluator::modular(const Integer & n, std::uint64_t p, unsigned r) const
  {
    return eval_mod(seq_, n, checked_pow(p, r));
  }

  std::optional<std::string> CFiniteEvaluator::inadmissible(std::uint64_t p) const
  {
    if (auto base = SeqEvaluator::inadmissible(p))
      return base;
    if (!seq_.p_integral(p))
      return "denominator divisible by " + std::to_string(p);
    return std::nullopt;
  }

  std::string HypergeomEvaluator::describe() const
  {
    return "hypergeometric alpha = " + seq_.alpha().to_string("n") + ", beta = " + seq_.beta().to_string("n") +
           ", a0 = " + to_string(seq_.a0());
  }

  Rational HypergeomEvaluator::exact(std::uint64_t n) const { return hg_eval(seq_, n).back(); }

  Residue HypergeomEvaluator::modular(const Integer & n, std::uint64_t p, unsigned r) const
  {
    if (!n.fits_ulong_p())
      fail(ErrorCode::InvalidArgument, "hypergeometric index too large");
    if (r == 1)
      return hg_term_mod_auto(seq_, n.get_ui(), p, cfg_);
    return hg_term_mod(seq_, n.get_ui(), p, r);
  }

  ConstantTermEvaluator::ConstantTermEvaluator(LaurentPoly P, LaurentPoly Q)
    : P_(std::move(P)), Q_(std::move(Q))
  {
    P_.check_compatible(Q_);
  }

  std::string ConstantTermEvaluator::describe() const
  {
    return "ct[P^n Q] with P = " + to_string(P_) + ", Q = " + to_string(Q_);
  }

  Rational ConstantTermEvaluator::exact(std::uint64_t n) const { return ct_term(P_, Q_, n); }

  Residue ConstantTermEvaluator::modular(const Integer & n, std::uint64_t p, unsigned r) const
  {
    return ct_term_mod(P_, Q_, n, checked_pow(p, r));
  }

  std::vector<Residue> ConstantTermEvaluator::modular_many(const std::vector<Integer> & ns, std::uint64_t p,
                                                          unsigned r) const
  {
    if (ns.empty())
      return {};
    const Integer top = *std::max_element(ns.begin(), ns.end());
    if (!top.fits_ulong_p())
      fail(ErrorCode::InvalidArgument, "power out of range for modular constant terms");
    const auto seq = ct_sequence_mod(P_, Q_, top.get_ui(), checked_pow(p, r));
    std::vector<Residue> out;
    out.reserve(ns.size());
    for (const auto & n : ns)
      out.push_back(seq[n.get_ui()]);
    return out;
  }

  std::optional<std::string> ConstantTermEvaluator::inadmissible(std::uint64_t p) const
  {
    if (auto base = SeqEvaluator::inadmissible(p))
      return base;
    if (!coefficients_p_integral(P_, p) || !coefficients_p_integral(Q_, p))
      return "coefficient denominator divisible by " + std::to_string(p);
    return std::nullopt;
  }

  namespace {

    Integer big(std::uint64_t v) { return Integer(std::to_string(v)); }

    std::string describe_primes(const std::vector<std::uint64_t> & primes)
    {
      if (primes.empty())
        return "none";
      return std::to_string(primes.front()) + ".." + std::to_string(primes.back()) + " (" +
             std::to_string(primes.size()) + " primes)";
    }

    bool recoverable(const Error & e)
    {
      return e.code() == ErrorCode::NonInvertibleDenominator || e.code() == ErrorCode::NotPAdicIntegral;
    }

    void finish(CongruenceReport & rep)
    {
      std::sort(rep.checks.begin(), rep.checks.end(), [](const CheckRecord & a, const CheckRecord & b) {
        return std::tie(a.p, a.r, a.n, a.k) < std::tie(b.p, b.r, b.n, b.k);
      });
      std::stable_sort(rep.skipped.begin(), rep.skipped.end(), [](const SkipRecord & a, const SkipRecord & b) {
        return std::tie(a.p, a.k) < std::tie(b.p, b.k);
      });
      if (rep.verdict != Verdict::AllPass)
        return;
      for (const auto & c : rep.checks) {
        if (!c.pass) {
          rep.verdict = Verdict::Counterexample;
          rep.counterexample = c;
          return;
        }
      }
    }

    // Degree of P^k Q for k = 0..k_max, 0 when the product vanishes.
    std::vector<std::uint64_t> shifted_degrees(const LaurentPoly & P, const LaurentPoly & Q, std::uint64_t k_max)
    {
      std::vector<std::uint64_t> out;
      LaurentPoly f = Q;
      for (std::uint64_t k = 0; k <= k_max; ++k) {
        out.push_back(f.is_zero() ? 0 : degree(f));
        f = f * P;
      }
      return out;
    }

    std::optional<std::string> lemma_inadmissible(const LaurentPoly & P, const LaurentPoly & Q, std::uint64_t p,
                                                  std::uint64_t deg)
    {
      if (!is_prime(p))
        return std::to_string(p) + " is not prime";
      if (!coefficients_p_integral(P, p) || !coefficients_p_integral(Q, p))
        return "coefficient denominator divisible by " + std::to_string(p);
      if (p <= deg)
        return "p <= deg(P^k Q) = " + std::to_string(deg);
      return std::nullopt;
    }

    void check_compatible_pair(const LaurentPoly & P, const LaurentPoly & Q) { P.check_compatible(Q); }

  } // namespace

  CongruenceReport gauss_check(const SeqEvaluator & e, std::uint64_t p_max, unsigned r_max, std::uint64_t n_max)
  {
    CongruenceReport rep;
    rep.check = "gauss";
    rep.subject = e.describe();
    rep.grid = {{"p_max", std::to_string(p_max)},
                {"r_max", std::to_string(r_max)},
                {"n_min", "1"},
                {"n_max", std::to_string(n_max)},
                {"prime_floor", std::to_string(e.prime_floor())}};
    const auto primes = p_max >= 2 ? primes_in_range(2, p_max) : std::vector<std::uint64_t>{};
    for (std::uint64_t p : primes) {
      if (auto why = e.inadmissible(p)) {
        rep.skipped.push_back({p, std::nullopt, *why, r_max * n_max});
        continue;
      }
      for (unsigned r = 1; r <= r_max; ++r) {
        const Integer lo_scale = big(checked_pow(p, r - 1));
        std::vector<Integer> idx;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
          idx.push_back(lo_scale * big(n) * big(p));
          idx.push_back(lo_scale * big(n));
        }
        try {
          const auto v = e.modular_many(idx, p, r);
          for (std::uint64_t n = 1; n <= n_max; ++n) {
            const Residue & lhs = v[2 * (n - 1)];
            const Residue & rhs = v[2 * (n - 1) + 1];
            rep.checks.push_back({p, r, n, 0, lhs.value(), rhs.value(), lhs == rhs});
          }
        } catch (const Error & err) {
          if (!recoverable(err))
            throw;
          rep.skipped.push_back({p, std::nullopt, "r = " + std::to_string(r) + ": " + err.what(), n_max});
        }
      }
    }
    finish(rep);
    return rep;
  }

  CongruenceReport ct_shift_check(const LaurentPoly & P, const LaurentPoly & Q,
                                  const std::vector<std::uint64_t> & primes, unsigned r_max,
                                  std::uint64_t n_max, std::uint64_t k_max)
  {
    check_compatible_pair(P, Q);
    CongruenceReport rep;
    rep.check = "ct-shift";
    rep.subject = "ct[P^n Q] with P = " + to_string(P) + ", Q = " + to_string(Q);
    rep.grid = {{"primes", describe_primes(primes)},
                {"r_max", std::to_string(r_max)},
                {"n_max", std::to_string(n_max)},
                {"k_max", std::to_string(k_max)}};
    const auto degs = shifted_degrees(P, Q, k_max);
    const auto A = ct_sequence(P, Q, k_max);
    const LaurentPoly one = LaurentPoly::constant(P.var_count(), Rational(1));
    // One running product per (p, r, Q) serves every (n, k).
    std::map<std::tuple<std::uint64_t, unsigned, bool>, std::vector<Residue>> cache;
    auto sweep = [&](std::uint64_t p, unsigned r, std::uint64_t N, const LaurentPoly & q) -> const std::vector<Residue> & {
      auto & slot = cache[{p, r, &q == &one}];
      if (slot.size() <= N)
        slot = ct_sequence_mod(P, q, std::max<std::uint64_t>(N, 1), checked_pow(p, r));
      return slot;
    };
    for (std::uint64_t p : primes) {
      for (std::uint64_t k = 0; k <= k_max; ++k) {
        if (auto why = lemma_inadmissible(P, Q, p, degs[k])) {
          rep.skipped.push_back({p, k, *why, r_max * (n_max + 1)});
          continue;
        }
        for (unsigned r = 1; r <= r_max; ++r) {
          const std::uint64_t m = checked_pow(p, r);
          const std::uint64_t pr1 = checked_pow(p, r - 1);
          const auto lhs_seq = sweep(p, r, m * n_max + k_max, Q);
          const auto rhs_seq = sweep(p, r, pr1 * n_max, one);
          const Residue ak = rational_mod(A[k], m);
          for (std::uint64_t n = 0; n <= n_max; ++n) {
            const Residue & lhs = lhs_seq[m * n + k];
            const Residue rhs = ak * rhs_seq[pr1 * n];
            rep.checks.push_back({p, r, n, k, lhs.value(), rhs.value(), lhs == rhs});
          }
        }
      }
    }
    finish(rep);
    return rep;
  }

  CongruenceReport stability_check(const LaurentPoly & P, const LaurentPoly & Q,
                                   const std::vector<std::uint64_t> & primes, unsigned s, unsigned r,
                                   std::uint64_t n_max, std::uint64_t k_max)
  {
    check_compatible_pair(P, Q);
    if (r < 1 || s < r)
      fail(ErrorCode::InvalidArgument, "stability check needs s >= r >= 1");
    CongruenceReport rep;
    rep.check = "stability";
    rep.subject = "ct[P^n Q] with P = " + to_string(P) + ", Q = " + to_string(Q);
    rep.grid = {{"primes", describe_primes(primes)},
                {"s", std::to_string(s)},
                {"r", std::to_string(r)},
                {"n_max", std::to_string(n_max)},
                {"k_max", std::to_string(k_max)}};
    const auto degs = shifted_degrees(P, Q, k_max);
    std::vector<Residue> seq;
    std::uint64_t seq_prime = 0;
    for (std::uint64_t p : primes) {
      for (std::uint64_t k = 0; k <= k_max; ++k) {
        if (auto why = lemma_inadmissible(P, Q, p, degs[k])) {
          rep.skipped.push_back({p, k, *why, n_max + 1});
          continue;
        }
        const std::uint64_t m = checked_pow(p, r);
        const std::uint64_t ps = checked_pow(p, s);
        if (seq_prime != p) {
          seq = ct_sequence_mod(P, Q, ps * n_max + k_max, m);
          seq_prime = p;
        }
        for (std::uint64_t n = 0; n <= n_max; ++n) {
          const Residue & lhs = seq[ps * n + k];
          const Residue & rhs = seq[m * n + k];
          rep.checks.push_back({p, r, n, k, lhs.value(), rhs.value(), lhs == rhs});
        }
      }
    }
    finish(rep);
    return rep;
  }

  namespace {

    struct Reconstruction {
      std::optional<Rational> value;
      Integer effective_bound;
      std::vector<std::uint64_t> primes_used;
    };

    // CRT over the residues in prime order until the modulus exceeds 2 H^2,
    // then rational reconstruction with the largest bound that modulus supports.
    Reconstruction reconstruct(const std::vector<std::pair<std::uint64_t, Residue>> & residues, const Integer & H)
    {
      Reconstruction out;
      Integer a = 0, M = 1;
      const Integer target = 2 * H * H;
      for (const auto & [p, rho] : residues) {
        if (M > target)
          break;
        std::tie(a, M) = crt_combine(a, M, big(rho.value()), big(p));
        out.primes_used.push_back(p);
      }
      Integer root;
      Integer half = (M - 1) / 2;
      mpz_sqrt(root.get_mpz_t(), half.get_mpz_t());
      out.effective_bound = M > target ? H : Integer(std::min<Integer>(H, root));
      if (out.effective_bound >= 1)
        out.value = rational_reconstruct(a, M, out.effective_bound);
      return out;
    }

    bool p_integral(const Rational & q, std::uint64_t p)
    {
      return !mpz_divisible_ui_p(q.get_den().get_mpz_t(), p);
    }

  } // namespace

  CongruenceReport constant_c_falsifier(const SeqEvaluator & e, const std::vector<std::uint64_t> & primes,
                                        std::uint64_t k_max, const Integer & height_bound)
  {
    if (height_bound < 1)
      fail(ErrorCode::InvalidArgument, "height bound must be positive");
    CongruenceReport rep;
    rep.check = "constant-c";
    rep.subject = e.describe();

    std::vector<std::uint64_t> usable;
    for (std::uint64_t p : primes) {
      if (!is_prime(p))
        fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
      if (auto why = e.inadmissible(p))
        rep.skipped.push_back({p, std::nullopt, *why, 0});
      else
        usable.push_back(p);
    }

    // Bases A(k); when every requested base is zero, look a few indices further.
    std::vector<std::uint64_t> ks;
    std::vector<Rational> base;
    std::uint64_t k_limit = k_max;
    for (std::uint64_t k = 0; k <= k_limit; ++k) {
      ks.push_back(k);
      base.push_back(e.exact(k));
      const bool all_zero = std::all_of(base.begin(), base.end(), [](const Rational & v) { return v == 0; });
      if (k == k_limit && all_zero && k_limit < k_max + 3)
        ++k_limit;
    }
    for (auto & s : rep.skipped)
      s.points = ks.size();
    rep.grid = {{"primes", describe_primes(primes)},
                {"k_max", std::to_string(ks.back())},
                {"height_bound", to_string(height_bound)},
                {"prime_floor", std::to_string(e.prime_floor())}};

    // Residues A(p + k) mod p and per-prime ratios.
    struct Point {
      std::uint64_t p, k;
      Residue shifted, base;
    };
    std::vector<Point> points;
    std::vector<std::pair<std::uint64_t, Residue>> ratios;
    std::set<std::uint64_t> zero_failures;
    for (std::uint64_t p : usable) {
      std::optional<Residue> rho;
      for (std::size_t i = 0; i < ks.size(); ++i) {
        const std::uint64_t k = ks[i];
        if (!p_integral(base[i], p)) {
          rep.skipped.push_back({p, k, "A(k) is not p-integral", 1});
          continue;
        }
        Residue shifted;
        try {
          shifted = e.modular(big(p + k), p, 1);
        } catch (const Error & err) {
          if (!recoverable(err))
            throw;
          rep.skipped.push_back({p, k, err.what(), 1});
          continue;
        }
        const Residue b = rational_mod(base[i], p);
        points.push_back({p, k, shifted, b});
        if (base[i] == 0 && !shifted.is_zero())
          zero_failures.insert(p);
        if (!rho && !b.is_zero())
          rho = shifted * b.inverse();
      }
      if (rho)
        ratios.emplace_back(p, *rho);
    }

    const bool all_bases_zero = std::all_of(base.begin(), base.end(), [](const Rational & v) { return v == 0; });
    if (all_bases_zero && zero_failures.empty())
      fail(ErrorCode::ZeroBase, "A(k) = 0 for every k <= " + std::to_string(ks.back()) + "; no constant can be read off");

    std::optional<Rational> c;
    Reconstruction rec;
    if (!ratios.empty()) {
      rec = reconstruct(ratios, height_bound);
      c = rec.value;
    }
    std::map<std::uint64_t, Residue> ratio_of(ratios.begin(), ratios.end());

    std::set<std::uint64_t> failing;
    for (const auto & pt : points) {
      Residue rhs(0, pt.p);
      if (c) {
        if (!p_integral(*c, pt.p)) {
          rep.skipped.push_back({pt.p, pt.k, "constant " + to_string(*c) + " is not p-integral", 1});
          continue;
        }
        rhs = rational_mod(*c, pt.p) * pt.base;
      } else if (auto it = ratio_of.find(pt.p); it != ratio_of.end()) {
        rhs = it->second * pt.base;
      }
      const bool pass = pt.shifted == rhs;
      if (!pass)
        failing.insert(pt.p);
      rep.checks.push_back({pt.p, 1, 1, pt.k, pt.shifted.value(), rhs.value(), pass});
    }

    const std::string bound = to_string(rec.effective_bound > 0 ? rec.effective_bound : height_bound);
    if (!zero_failures.empty()) {
      rep.verdict = Verdict::FalsifiedNoConstant;
      rep.evidence_primes.assign(zero_failures.begin(), zero_failures.end());
      rep.note = "A(k) = 0 but A(p + k) is nonzero mod p; no constant c fits";
    } else if (!ratios.empty() && !c) {
      rep.verdict = Verdict::FalsifiedNoConstant;
      rep.evidence_primes = rec.primes_used;
      rep.note = "no constant of height <= " + bound + " matches the residues";
    } else if (c && !failing.empty()) {
      rep.verdict = Verdict::FalsifiedNoConstant;
      rep.evidence_primes = rec.primes_used;
      rep.evidence_primes.insert(rep.evidence_primes.end(), failing.begin(), failing.end());
      std::sort(rep.evidence_primes.begin(), rep.evidence_primes.end());
      rep.evidence_primes.erase(std::unique(rep.evidence_primes.begin(), rep.evidence_primes.end()),
                                rep.evidence_primes.end());
      rep.note = "no constant of height <= " + bound + " matches the residues; the only candidate " +
                 to_string(*c) + " fails at " + std::to_string(*failing.begin());
    } else if (c) {
      rep.constant = c;
      rep.note = "c = " + to_string(*c) + ", unique among constants of height <= " + bound;
    }
    finish(rep);
    return rep;
  }

  CongruenceReport hypergeom_propagation_check(const HypergeomSeq & h, const std::vector<std::uint64_t> & primes,
                                               std::uint64_t k_max)
  {
    if (auto z = h.alpha_root(); z && *z <= k_max)
      fail(ErrorCode::AlphaVanishes, "alpha vanishes at n = " + std::to_string(*z));
    HypergeomEvaluator e(h);
    CongruenceReport rep;
    rep.check = "hypergeom-propagation";
    rep.subject = e.describe();
    rep.grid = {{"primes", describe_primes(primes)},
                {"k_min", "1"},
                {"k_max", std::to_string(k_max)},
                {"prime_floor", std::to_string(e.prime_floor())}};
    const auto A = hg_eval(h, k_max);
    std::vector<std::pair<std::uint64_t, Residue>> base_ratios;
    for (std::uint64_t p : primes) {
      if (auto why = e.inadmissible(p)) {
        rep.skipped.push_back({p, std::nullopt, *why, k_max});
        continue;
      }
      if (!p_integral(A[0], p) || rational_mod(A[0], p).is_zero()) {
        rep.skipped.push_back({p, std::nullopt, "A(0) is not a unit mod p", k_max});
        continue;
      }
      Residue cp;
      try {
        cp = e.modular(big(p), p, 1) * rational_mod(A[0], p).inverse();
      } catch (const Error & err) {
        if (!recoverable(err))
          throw;
        rep.skipped.push_back({p, std::nullopt, err.what(), k_max});
        continue;
      }
      base_ratios.emplace_back(p, cp);
      for (std::uint64_t k = 1; k <= k_max; ++k) {
        if (!p_integral(A[k], p)) {
          rep.skipped.push_back({p, k, "A(k) is not p-integral", 1});
          continue;
        }
        try {
          const Residue lhs = e.modular(big(p + k), p, 1);
          const Residue rhs = cp * rational_mod(A[k], p);
          rep.checks.push_back({p, 1, 1, k, lhs.value(), rhs.value(), lhs == rhs});
        } catch (const Error & err) {
          if (!recoverable(err))
            throw;
          rep.skipped.push_back({p, k, err.what(), 1});
        }
      }
    }
    if (!base_ratios.empty()) {
      const auto rec = reconstruct(base_ratios, Integer(1000000));
      rep.note = rec.value ? "base residues A(p)/A(0) agree with c = " + to_string(*rec.value)
                           : "base residues A(p)/A(0) fit no constant of height <= " + to_string(rec.effective_bound);
      if (rec.value) {
        for (const auto & [p, cp] : base_ratios) {
          if (!p_integral(*rec.value, p) || rational_mod(*rec.value, p) != cp) {
            rep.note = "base residues A(p)/A(0) fit no constant of height <= " + to_string(rec.effective_bound);
            break;
          }
        }
      }
    }
    finish(rep);
    return rep;
  }

} // namespace ctk
