#include "ctkit/linalg.hpp"

namespace ctk {

  namespace {

    // Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref(Matrix & A, std::size_t cols)
    {
      std::vector<std::size_t> pivots;
      std::size_t row = 0;
      for (std::size_t col = 0; col < cols && row < A.size(); ++col) {
        std::size_t sel = row;
        while (sel < A.size() && A[sel][col] == 0)
          ++sel;
        if (sel == A.size())
          continue;
        std::swap(A[row], A[sel]);
        const Rational inv = 1 / A[row][col];
        for (auto & v : A[row])
          v *= inv;
        for (std::size_t r = 0; r < A.size(); ++r) {
          if (r == row || A[r][col] == 0)
            continue;
          const Rational f = A[r][col];
          for (std::size_t c = col; c < A[r].size(); ++c)
            A[r][c] -= f * A[row][c];
        }
        pivots.push_back(col);
        ++row;
      }
      return pivots;
    }

  } // namespace

  std::optional<std::vector<Rational>> solve_linear(Matrix A, std::vector<Rational> b)
  {
    if (A.size() != b.size())
      fail(ErrorCode::InvalidArgument, "row count mismatch in linear system");
    const std::size_t cols = A.empty() ? 0 : A.front().size();
    for (std::size_t r = 0; r < A.size(); ++r) {
      if (A[r].size() != cols)
        fail(ErrorCode::InvalidArgument, "ragged matrix");
      A[r].push_back(b[r]);
    }
    const auto pivots = rref(A, cols);
    for (std::size_t r = pivots.size(); r < A.size(); ++r) {
      if (A[r][cols] != 0)
        return std::nullopt;
    }
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = A[i][cols];
    return x;
  }

  std::size_t rank(Matrix A)
  {
    const std::size_t cols = A.empty() ? 0 : A.front().size();
    return rref(A, cols).size();
  }

} // namespace ctk
