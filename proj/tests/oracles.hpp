// Test-side reference computations. Nothing here calls into the library
// beyond its number types, so each one is an independent check.
#ifndef CTKIT_TESTS_ORACLES_HPP
#define CTKIT_TESTS_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

  using Z = mpz_class;
  using Q = mpq_class;

  inline Q frac(long num, long den)
  {
    Q q(num, den);
    q.canonicalize();
    return q;
  }

  inline Z binom(unsigned long n, unsigned long k)
  {
    Z r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
  }

  inline Z catalan(unsigned long n) { return binom(2 * n, n) - (n == 0 ? Z(0) : binom(2 * n, n + 1)); }

  inline Z apery(unsigned long n)
  {
    Z s = 0;
    for (unsigned long k = 0; k <= n; ++k) {
      Z a = binom(n, k), b = binom(n + k, k);
      s += a * a * b * b;
    }
    return s;
  }

  // x (x+1) ... (x+n-1)
  inline Q rising(const Q & x, unsigned long n)
  {
    Q r = 1;
    for (unsigned long i = 0; i < n; ++i)
      r *= x + Q(static_cast<long>(i));
    return r;
  }

  inline Z factorial(unsigned long n)
  {
    Z r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
  }

  // (1/m)_n (1-1/m)_n / n!^2
  inline Q family_a(long m, unsigned long n)
  {
    const Z f = factorial(n);
    return rising(Q(1, m), n) * rising(Q(m - 1, m), n) / Q(f * f);
  }

  // (1/9)_n (4/9)_n (5/9)_n / (n!^2 (1/3)_n)
  inline Q christol(unsigned long n)
  {
    const Z f = factorial(n);
    return rising(Q(1, 9), n) * rising(Q(4, 9), n) * rising(Q(5, 9), n) / (Q(f * f) * rising(Q(1, 3), n));
  }

  inline std::uint64_t qmod(const Q & q, std::uint64_t m)
  {
    Z mz(static_cast<unsigned long>(m)), inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), mz.get_mpz_t()) == 0)
      throw std::domain_error("denominator not invertible");
    Z r = q.get_num() * inv % mz;
    if (r < 0)
      r += mz;
    return r.get_ui();
  }

  inline Z pow_z(const Z & b, unsigned long e)
  {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
  }

  inline bool is_prime_trial(std::uint64_t n)
  {
    if (n < 2)
      return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0)
        return false;
    return true;
  }

  inline std::uint64_t totient(std::uint64_t m)
  {
    std::uint64_t c = 0;
    for (std::uint64_t a = 1; a <= m; ++a)
      if (std::gcd(a, m) == 1)
        ++c;
    return c;
  }

  // A(n+r) = c_{r-1} A(n+r-1) + ... + c_0 A(n), unrolled over Z/m.
  inline std::vector<std::uint64_t> unroll_mod(const std::vector<long> & c, const std::vector<long> & init,
                                               std::uint64_t N, std::uint64_t m)
  {
    auto red = [m](long v) {
      long r = v % static_cast<long>(m);
      return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(m) : r);
    };
    std::vector<std::uint64_t> a;
    a.reserve(N + 1);
    for (std::size_t i = 0; i < init.size() && a.size() <= N; ++i)
      a.push_back(red(init[i]));
    std::vector<std::uint64_t> cm;
    for (long v : c)
      cm.push_back(red(v));
    const std::size_t r = c.size();
    while (a.size() <= N) {
      const std::size_t n = a.size() - r;
      unsigned __int128 s = 0;
      for (std::size_t i = 0; i < r; ++i)
        s += static_cast<unsigned __int128>(cm[i]) * a[n + i];
      a.push_back(static_cast<std::uint64_t>(s % m));
    }
    return a;
  }

  inline std::vector<Q> unroll(const std::vector<Q> & c, const std::vector<Q> & init, std::size_t N)
  {
    std::vector<Q> a(init.begin(), init.end());
    const std::size_t r = c.size();
    while (a.size() <= N) {
      const std::size_t n = a.size() - r;
      Q s = 0;
      for (std::size_t i = 0; i < r; ++i)
        s += c[i] * a[n + i];
      a.push_back(s);
    }
    a.resize(N + 1);
    return a;
  }

  // Rank of a rational matrix by fraction-carrying Gaussian elimination.
  inline std::size_t rank(std::vector<std::vector<Q>> M)
  {
    std::size_t r = 0;
    const std::size_t cols = M.empty() ? 0 : M[0].size();
    for (std::size_t c = 0; c < cols && r < M.size(); ++c) {
      std::size_t piv = r;
      while (piv < M.size() && M[piv][c] == 0)
        ++piv;
      if (piv == M.size())
        continue;
      std::swap(M[piv], M[r]);
      for (std::size_t i = r + 1; i < M.size(); ++i) {
        if (M[i][c] == 0)
          continue;
        const Q f = M[i][c] / M[r][c];
        for (std::size_t j = c; j < cols; ++j)
          M[i][j] -= f * M[r][j];
      }
      ++r;
    }
    return r;
  }

  // Order of the shortest recurrence A(n+d) = sum c_i A(n+i) holding for all
  // n >= e on the given terms, searched over (e, d) with e + d minimal, then
  // d minimal: the degree of the minimal annihilator x^e chi(x). Uses the
  // Hankel criterion: d works from e on iff the rank of the (d+1)-column
  // window matrix starting at e is d (or every later term is 0 when d = 0).
  struct Shape {
    std::size_t e, d;
  };

  inline std::optional<Shape> annihilator_shape(const std::vector<Q> & a, std::size_t max_total)
  {
    for (std::size_t total = 0; total <= max_total; ++total) {
      for (std::size_t d = 0; d <= total; ++d) {
        const std::size_t e = total - d;
        if (e + d + 1 > a.size())
          continue;
        // rows n = e .. end-d-1, columns a(n), ..., a(n+d)
        std::vector<std::vector<Q>> H;
        for (std::size_t n = e; n + d < a.size(); ++n) {
          std::vector<Q> row;
          for (std::size_t i = 0; i <= d; ++i)
            row.push_back(a[n + i]);
          H.push_back(row);
        }
        if (H.size() < 2 * (d + 1))
          continue;
        if (d == 0) {
          if (std::all_of(a.begin() + static_cast<long>(e), a.end(), [](const Q & v) { return v == 0; }))
            return Shape{e, 0};
          continue;
        }
        // a rank-deficient window whose first d columns are independent
        std::vector<std::vector<Q>> lead;
        for (const auto & row : H)
          lead.emplace_back(row.begin(), row.end() - 1);
        if (rank(H) == d && rank(lead) == d)
          return Shape{e, d};
      }
    }
    return std::nullopt;
  }

  struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
  };

} // namespace oracle

#endif // CTKIT_TESTS_ORACLES_HPP
