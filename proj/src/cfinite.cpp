#include "ctkit/cfinite.hpp"

#include "ctkit/linalg.hpp"

namespace ctk {

  CFiniteSeq::CFiniteSeq(std::vector<Rational> coeffs, std::vector<Rational> initial, std::size_t offset)
    : coeffs_(std::move(coeffs)), initial_(std::move(initial)), offset_(offset)
  {
    if (coeffs_.empty())
      fail(ErrorCode::InvalidArgument, "recurrence order must be positive");
    if (initial_.size() != offset_ + coeffs_.size())
      fail(ErrorCode::InvalidArgument,
           "expected " + std::to_string(offset_ + coeffs_.size()) + " initial values, got " +
           std::to_string(initial_.size()));
  }

  CFiniteSeq CFiniteSeq::from_annihilator(const UPoly & annihilator, const std::vector<Rational> & initial)
  {
    const UPoly M = annihilator.monic();
    if (M.is_zero())
      fail(ErrorCode::InvalidArgument, "zero annihilator");
    const auto D = static_cast<std::size_t>(M.degree());
    if (initial.size() < D)
      fail(ErrorCode::InvalidArgument, "not enough initial values for the annihilator");
    if (D == 0)
      return CFiniteSeq({Rational(0)}, {Rational(0)}, 0);
    const std::size_t m = M.trailing_zeros();
    const UPoly R = M.shifted_down(m);
    std::vector<Rational> init(initial.begin(), initial.begin() + static_cast<long>(D));
    if (R.degree() == 0)
      return CFiniteSeq({Rational(0)}, std::move(init), m - 1);
    std::vector<Rational> c;
    for (long i = 0; i < R.degree(); ++i)
      c.push_back(-R.coeff(static_cast<std::size_t>(i)));
    return CFiniteSeq(std::move(c), std::move(init), m);
  }

  UPoly CFiniteSeq::known_annihilator() const
  {
    std::vector<Rational> p(offset_, Rational(0));
    for (const auto & c : coeffs_)
      p.push_back(-c);
    p.push_back(1);
    return UPoly(std::move(p));
  }

  bool CFiniteSeq::p_integral(std::uint64_t p) const
  {
    Integer pz(std::to_string(p));
    auto ok = [&](const Rational & q) { return !mpz_divisible_p(q.get_den().get_mpz_t(), pz.get_mpz_t()); };
    return std::all_of(coeffs_.begin(), coeffs_.end(), ok) &&
           std::all_of(initial_.begin(), initial_.end(), ok);
  }

  std::vector<Rational> eval_terms(const CFiniteSeq & seq, std::uint64_t N)
  {
    std::vector<Rational> a;
    a.reserve(N + 1);
    const std::size_t r = seq.order();
    for (std::uint64_t n = 0; n <= N; ++n) {
      if (n < seq.window()) {
        a.push_back(seq.initial()[n]);
        continue;
      }
      Rational v = 0;
      for (std::size_t i = 0; i < r; ++i)
        v += seq.coeffs()[i] * a[n - r + i];
      a.push_back(std::move(v));
    }
    return a;
  }

  namespace {

    using ResidueMatrix = std::vector<std::vector<Residue>>;

    ResidueMatrix multiply(const ResidueMatrix & a, const ResidueMatrix & b, std::uint64_t m)
    {
      const std::size_t r = a.size();
      ResidueMatrix c(r, std::vector<Residue>(r, Residue(0, m)));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
          if (a[i][k].is_zero())
            continue;
          for (std::size_t j = 0; j < r; ++j)
            c[i][j] += a[i][k] * b[k][j];
        }
      return c;
    }

  } // namespace

  Residue eval_mod(const CFiniteSeq & seq, const Integer & index, std::uint64_t modulus)
  {
    if (index < 0)
      fail(ErrorCode::InvalidArgument, "negative index");
    if (index < Integer(std::to_string(seq.window())))
      return rational_mod(seq.initial()[index.get_ui()], modulus);

    const std::size_t r = seq.order();
    const std::size_t n0 = seq.offset();
    // Companion matrix maps (A(n), ..., A(n+r-1)) to (A(n+1), ..., A(n+r)).
    ResidueMatrix C(r, std::vector<Residue>(r, Residue(0, modulus)));
    for (std::size_t i = 0; i + 1 < r; ++i)
      C[i][i + 1] = Residue(1, modulus);
    for (std::size_t j = 0; j < r; ++j)
      C[r - 1][j] = rational_mod(seq.coeffs()[j], modulus);

    std::vector<Residue> state;
    for (std::size_t i = 0; i < r; ++i)
      state.push_back(rational_mod(seq.initial()[n0 + i], modulus));

    Integer steps = index - Integer(std::to_string(n0));
    ResidueMatrix acc(r, std::vector<Residue>(r, Residue(0, modulus)));
    for (std::size_t i = 0; i < r; ++i)
      acc[i][i] = Residue(1, modulus);
    ResidueMatrix base = C;
    const std::size_t bits = mpz_sizeinbase(steps.get_mpz_t(), 2);
    for (std::size_t b = 0; b < bits; ++b) {
      if (mpz_tstbit(steps.get_mpz_t(), b))
        acc = multiply(acc, base, modulus);
      if (b + 1 < bits)
        base = multiply(base, base, modulus);
    }
    Residue out(0, modulus);
    for (std::size_t j = 0; j < r; ++j)
      out += acc[0][j] * state[j];
    return out;
  }

  UPoly minimal_annihilator(const CFiniteSeq & seq)
  {
    const std::size_t D = seq.window();
    const auto a = eval_terms(seq, 2 * D);
    // Candidate of degree d is certified on n = 0..D-1: P(N)A satisfies the
    // known recurrence of order D, so vanishing on D consecutive terms is enough.
    for (std::size_t d = 0; d <= D; ++d) {
      Matrix A(D, std::vector<Rational>(d));
      std::vector<Rational> b(D);
      for (std::size_t n = 0; n < D; ++n) {
        for (std::size_t i = 0; i < d; ++i)
          A[n][i] = a[n + i];
        b[n] = -a[n + d];
      }
      if (auto sol = solve_linear(std::move(A), std::move(b))) {
        sol->push_back(1);
        return UPoly(std::move(*sol));
      }
    }
    fail(ErrorCode::DecompositionFailure, "known annihilator failed certification");
  }

  CharRoots characteristic_roots(const CFiniteSeq & seq)
  {
    const UPoly M = minimal_annihilator(seq);
    CharRoots out;
    out.zero_multiplicity = static_cast<unsigned>(M.trailing_zeros());
    const UPoly rest = M.shifted_down(out.zero_multiplicity);
    if (rest.degree() <= 0) {
      out.residual = UPoly({Rational(1)});
      return out;
    }
    auto split = split_rational_roots(rest);
    out.rational_roots = std::move(split.roots);
    out.residual = split.cofactor;
    out.residual_degree = static_cast<unsigned>(std::max(0L, split.cofactor.degree()));
    return out;
  }

  std::vector<Rational> power_sums(const UPoly & u, std::size_t count)
  {
    // deg(u) - x u'(x)/u(x)
    const UPoly xu = UPoly::monomial(1) * u.derivative();
    auto s = series_divide(xu, u, count);
    for (auto & v : s)
      v = -v;
    if (count > 0)
      s[0] += Rational(u.degree());
    return s;
  }

  std::optional<TraceDecomposition> is_trace_sequence(const CFiniteSeq & seq)
  {
    const UPoly M = minimal_annihilator(seq);
    const std::size_t m0 = M.trailing_zeros();
    if (m0 > 1)
      return std::nullopt;
    const UPoly M0 = M.shifted_down(m0);
    std::vector<UPoly> factors;
    if (M0.degree() >= 1) {
      if (gcd(M0, M0.derivative()).degree() > 0)
        return std::nullopt;
      auto split = split_rational_roots(M0);
      for (const auto & [root, mult] : split.roots)
        factors.push_back(UPoly::linear_factor(root));
      for (auto & f : factor_without_linear(split.cofactor))
        factors.push_back(std::move(f));
    }

    // Reversed factors u with u(0) = 1 and their power sums.
    std::vector<UPoly> us;
    std::size_t total = 0;
    for (const auto & f : factors) {
      us.push_back(f.monic().reversed());
      total += static_cast<std::size_t>(f.degree());
    }
    const std::size_t W = 2 * (total + 1) + 2;
    const auto a = eval_terms(seq, W - 1);
    std::vector<std::vector<Rational>> sums;
    for (const auto & u : us)
      sums.push_back(power_sums(u, W));

    Matrix A(W, std::vector<Rational>(1 + us.size(), Rational(0)));
    for (std::size_t n = 0; n < W; ++n) {
      A[n][0] = n == 0 ? 1 : 0;
      for (std::size_t i = 0; i < us.size(); ++i)
        A[n][1 + i] = sums[i][n];
    }
    auto sol = solve_linear(std::move(A), a);
    if (!sol)
      return std::nullopt;
    TraceDecomposition out{(*sol)[0], {}};
    for (std::size_t i = 0; i < us.size(); ++i)
      out.parts.push_back({(*sol)[1 + i], us[i]});
    return out;
  }

  namespace {

    // Terms 0..count-1 of the sequences annihilated by `ann` whose initial
    // vectors are the unit vectors.
    std::vector<std::vector<Rational>> basis_sequences(const UPoly & ann, std::size_t count)
    {
      const auto d = static_cast<std::size_t>(ann.degree());
      std::vector<std::vector<Rational>> out;
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<Rational> init(d, Rational(0));
        init[i] = 1;
        out.push_back(eval_terms(CFiniteSeq::from_annihilator(ann, init), count - 1));
      }
      return out;
    }

  } // namespace

  CFiniteSeq separable_part(const CFiniteSeq & seq)
  {
    const UPoly M = minimal_annihilator(seq);
    const std::size_t D = static_cast<std::size_t>(std::max(0L, M.degree()));
    const UPoly M0 = M.shifted_down(M.trailing_zeros());
    const UPoly rad = squarefree_radical(M0);
    const UPoly s_ann = UPoly::monomial(1) * rad;
    const std::size_t e = static_cast<std::size_t>(s_ann.degree());

    // A(n) = S(n) + n T(n); the difference of both sides is annihilated by a
    // polynomial of degree <= 2D + 1, so 2D + 2 terms certify the solution.
    const std::size_t W = std::max(D + e + 1, 2 * D + 2);
    const auto a = eval_terms(seq, W - 1);
    const auto sb = basis_sequences(s_ann, W);
    const auto tb = D > 0 ? basis_sequences(M, W) : std::vector<std::vector<Rational>>{};

    Matrix A(W, std::vector<Rational>(e + tb.size(), Rational(0)));
    for (std::size_t n = 0; n < W; ++n) {
      for (std::size_t i = 0; i < e; ++i)
        A[n][i] = sb[i][n];
      for (std::size_t j = 0; j < tb.size(); ++j)
        A[n][e + j] = Rational(static_cast<unsigned long>(n)) * tb[j][n];
    }
    auto sol = solve_linear(std::move(A), a);
    if (!sol)
      fail(ErrorCode::DecompositionFailure, "separable part system is inconsistent");
    std::vector<Rational> init(sol->begin(), sol->begin() + static_cast<long>(e));
    return CFiniteSeq::from_annihilator(s_ann, init);
  }

  GeneratingFunction generating_function(const CFiniteSeq & seq)
  {
    const UPoly M = minimal_annihilator(seq);
    const auto d = static_cast<std::size_t>(std::max(0L, M.degree()));
    // reversal of x^d M(1/x), kept at full length d
    std::vector<Rational> den(d + 1, Rational(0));
    for (std::size_t j = 0; j <= d; ++j)
      den[j] = M.coeff(d - j);
    const auto a = eval_terms(seq, d);
    std::vector<Rational> num(d, Rational(0));
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j <= k; ++j)
        num[k] += den[j] * a[k - j];
    return {UPoly(std::move(num)), UPoly(std::move(den))};
  }

} // namespace ctk
