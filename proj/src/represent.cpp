#include "ctkit/represent.hpp"

#include "ctkit/linalg.hpp"

namespace ctk {

  std::string reason_name(DecisionReason r)
  {
    switch (r) {
    case DecisionReason::SingleRationalRoot: return "SingleRationalRoot";
    case DecisionReason::MultipleRationalRoots: return "MultipleRationalRoots";
    case DecisionReason::IrrationalRootsPresent: return "IrrationalRootsPresent";
    case DecisionReason::ZeroSequence: return "ZeroSequence";
    }
    return "Unknown";
  }

  std::string verdict_name(IntegralRootsVerdict v)
  {
    switch (v) {
    case IntegralRootsVerdict::Consistent: return "Consistent";
    case IntegralRootsVerdict::Violation: return "Violation";
    case IntegralRootsVerdict::NotApplicable: return "NotApplicable";
    }
    return "Unknown";
  }

  std::vector<Rational> witness_terms(const CTWitness & w, std::uint64_t N)
  {
    std::vector<Rational> out(N + 1, Rational(0));
    for (const auto & t : w.terms) {
      if (t.weight == 0)
        continue;
      const auto s = ct_sequence(t.P, t.Q, N);
      for (std::size_t n = 0; n <= N; ++n)
        out[n] += t.weight * s[n];
    }
    return out;
  }

  namespace {

    bool is_zero_sequence(const UPoly & minimal) { return minimal.degree() == 0; }

    Decision classify(const CFiniteSeq & seq, bool single)
    {
      const UPoly M = minimal_annihilator(seq);
      Decision d;
      if (is_zero_sequence(M)) {
        d.representable = true;
        d.min_terms = 1;
        d.reason = DecisionReason::ZeroSequence;
        return d;
      }
      const CharRoots roots = characteristic_roots(seq);
      if (roots.residual_degree > 0) {
        d.reason = DecisionReason::IrrationalRootsPresent;
        return d;
      }
      d.root_count = static_cast<unsigned>(roots.rational_roots.size()) + (roots.zero_multiplicity > 0 ? 1 : 0);
      d.reason = d.root_count == 1 ? DecisionReason::SingleRationalRoot : DecisionReason::MultipleRationalRoots;
      d.representable = !single || d.root_count == 1;
      if (d.representable)
        d.min_terms = d.root_count;
      return d;
    }

    std::size_t max_abs_exponent(const LaurentPoly & f)
    {
      return f.is_zero() ? 0 : static_cast<std::size_t>(degree(f));
    }

    // P univariate of the form a*x + b or c*x^k: ct[P^n Q] is then annihilated
    // by a polynomial of degree <= max|exp(Q)| + 1.
    bool has_certified_shape(const WitnessTerm & t)
    {
      if (t.P.var_count() != 1 || t.Q.var_count() != 1)
        return false;
      if (t.P.size() == 1)
        return true;
      return std::all_of(t.P.terms().begin(), t.P.terms().end(), [](const auto & term) {
        return term.exponent[0] == 0 || term.exponent[0] == 1;
      });
    }

    WitnessReport compare(const std::vector<Rational> & expected, const std::vector<Rational> & actual,
                          std::size_t start = 0)
    {
      WitnessReport r;
      r.window = expected.size();
      r.pass = true;
      for (std::size_t n = 0; n < expected.size(); ++n) {
        if (expected[n] != actual[start + n]) {
          r.pass = false;
          r.first_mismatch = start + n;
          r.expected = expected[n];
          r.actual = actual[start + n];
          break;
        }
      }
      return r;
    }

  } // namespace

  Decision decide_single_ct(const CFiniteSeq & seq) { return classify(seq, true); }

  Decision decide_combination(const CFiniteSeq & seq) { return classify(seq, false); }

  CTWitness build_witness(const CFiniteSeq & seq)
  {
    const Decision d = decide_combination(seq);
    if (!d.representable)
      fail(ErrorCode::NotRepresentable, "sequence has characteristic roots outside Q");
    const LaurentPoly x = LaurentPoly::monomial(ExponentVector{1}, Rational(1));
    const LaurentPoly one = LaurentPoly::constant(1, Rational(1));
    CTWitness w;
    if (d.reason == DecisionReason::ZeroSequence) {
      w.terms.push_back({Rational(0), one, one});
      return w;
    }

    const CharRoots roots = characteristic_roots(seq);
    const std::size_t m0 = roots.zero_multiplicity;
    std::size_t K = 0;
    for (const auto & [root, mult] : roots.rational_roots)
      K += mult;

    // A(n) = sum_lambda sum_{r < mult} b_{lambda,r} binom(n, r) lambda^n for n >= m0.
    const auto a = eval_terms(seq, m0 + K + 1);
    Matrix A(K, std::vector<Rational>(K));
    std::vector<Rational> rhs(K);
    auto basis = [&](std::size_t n, std::size_t col_root, unsigned r) -> Rational {
      const Rational & lambda = roots.rational_roots[col_root].first;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), lambda.get_num_mpz_t(), n);
      mpz_pow_ui(p.get_den_mpz_t(), lambda.get_den_mpz_t(), n);
      p.canonicalize();
      return Rational(binomial(n, r)) * p;
    };
    for (std::size_t row = 0; row < K; ++row) {
      const std::size_t n = m0 + row;
      std::size_t col = 0;
      for (std::size_t i = 0; i < roots.rational_roots.size(); ++i)
        for (unsigned r = 0; r < roots.rational_roots[i].second; ++r)
          A[row][col++] = basis(n, i, r);
      rhs[row] = a[n];
    }
    const auto b = solve_linear(std::move(A), std::move(rhs));
    if (!b)
      fail(ErrorCode::DecompositionFailure, "binomial-basis system is inconsistent");

    std::size_t col = 0;
    for (std::size_t i = 0; i < roots.rational_roots.size(); ++i) {
      const Rational & lambda = roots.rational_roots[i].first;
      std::vector<LaurentPoly::Term> q;
      Rational lp = 1;
      for (unsigned r = 0; r < roots.rational_roots[i].second; ++r, ++col) {
        q.push_back({ExponentVector{-static_cast<std::int32_t>(r)}, (*b)[col] * lp});
        lp *= lambda;
      }
      w.terms.push_back({Rational(1), x + LaurentPoly::constant(1, lambda),
                         LaurentPoly::from_terms(1, std::move(q))});
    }

    if (m0 > 0) {
      std::vector<LaurentPoly::Term> q;
      for (std::size_t j = 0; j < m0; ++j) {
        Rational delta = a[j];
        std::size_t c = 0;
        for (std::size_t i = 0; i < roots.rational_roots.size(); ++i)
          for (unsigned r = 0; r < roots.rational_roots[i].second; ++r, ++c)
            delta -= (*b)[c] * basis(j, i, r);
        q.push_back({ExponentVector{-static_cast<std::int32_t>(j)}, delta});
      }
      w.terms.push_back({Rational(1), x, LaurentPoly::from_terms(1, std::move(q))});
    }
    return w;
  }

  WitnessReport verify_witness(const CFiniteSeq & seq, const CTWitness & w)
  {
    const UPoly M = minimal_annihilator(seq);
    bool shaped = true;
    std::size_t window = static_cast<std::size_t>(M.degree()) + 1;
    for (const auto & t : w.terms) {
      shaped = shaped && has_certified_shape(t);
      window += max_abs_exponent(t.Q) + 1;
    }
    const auto expected = eval_terms(seq, window - 1);
    const auto actual = witness_terms(w, window - 1);
    WitnessReport r = compare(expected, actual);
    r.certified = r.pass && shaped;
    return r;
  }

  WitnessReport verify_witness(const std::vector<Rational> & terms, const CTWitness & w, std::size_t start)
  {
    if (terms.empty())
      fail(ErrorCode::InvalidArgument, "no terms to verify against");
    return compare(terms, witness_terms(w, start + terms.size() - 1), start);
  }

  LaurentPoly binomial_product_to_ct(const std::vector<BinomialFactor> & factors, const Rational & scale)
  {
    const std::size_t d = std::max<std::size_t>(1, factors.size());
    LaurentPoly P = LaurentPoly::constant(d, scale);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto [a, b] = factors[i];
      if (a <= 0 || b <= 0 || b > a)
        fail(ErrorCode::InvalidFactor,
             "binomial factor (" + std::to_string(a) + ", " + std::to_string(b) + ") needs 0 < b <= a");
      ExponentVector e(d), inv(d);
      e[i] = 1;
      inv[i] = -static_cast<std::int32_t>(b);
      const LaurentPoly linear = LaurentPoly::constant(d, Rational(1)) + LaurentPoly::monomial(e, Rational(1));
      P = P * pow(linear, static_cast<std::uint64_t>(a)) * LaurentPoly::monomial(inv, Rational(1));
    }
    return P;
  }

  MintonReport check_minton_analog(const LaurentPoly & P, const LaurentPoly & Q, std::uint64_t N,
                                   const std::vector<std::uint64_t> & primes)
  {
    MintonReport out;
    const auto A = ct_sequence(P, Q, N);
    const auto one = LaurentPoly::constant(P.var_count(), Rational(1));
    const auto B = ct_sequence(P, one, N);
    for (std::uint64_t n = 0; n <= N; ++n) {
      if (A[n] != A[0] * B[n]) {
        out.ct_equality = false;
        out.equality_failure = n;
        break;
      }
    }

    for (std::uint64_t p : primes) {
      if (!coefficients_p_integral(P, p) || !coefficients_p_integral(Q, p)) {
        out.skipped_primes.push_back(p);
        continue;
      }
      bool ok1 = true, ok2 = true;
      for (std::uint64_t n = 1; n <= N; ++n) {
        const Integer nz(std::to_string(n));
        const Integer pz(std::to_string(p));
        if (ct_term_mod(P, Q, pz * nz, p, CtMethod::Direct) != ct_term_mod(P, Q, nz, p, CtMethod::Direct))
          ok1 = false;
        const std::uint64_t p2 = p * p;
        if (ct_term_mod(P, Q, pz * pz * nz, p2, CtMethod::Direct) != ct_term_mod(P, Q, pz * nz, p2, CtMethod::Direct))
          ok2 = false;
      }
      out.gauss_r1 = out.gauss_r1 && ok1;
      out.gauss_r2 = out.gauss_r2 && ok1 && ok2;
      if (!ok1 || !ok2)
        out.failing_primes.push_back(p);
    }
    return out;
  }

  IntegralRootsReport integral_roots_check(const CFiniteSeq & seq, std::uint64_t window)
  {
    const auto a = eval_terms(seq, window);
    if (!std::all_of(a.begin(), a.end(), [](const Rational & q) { return is_integral(q); }))
      return {IntegralRootsVerdict::NotApplicable, "terms are not all integers"};
    const CharRoots roots = characteristic_roots(seq);
    if (roots.residual_degree > 0)
      return {IntegralRootsVerdict::NotApplicable, "irrational characteristic roots"};
    for (const auto & [root, mult] : roots.rational_roots) {
      if (!is_integral(root))
        return {IntegralRootsVerdict::Violation, "non-integral root " + to_string(root)};
    }
    return {IntegralRootsVerdict::Consistent, "all rational roots are integers"};
  }

} // namespace ctk
