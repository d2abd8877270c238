#ifndef CTKIT_LINALG_HPP
#define CTKIT_LINALG_HPP

#include <optional>
#include <vector>

#include "ctkit/exactnum.hpp"

namespace ctk {

  using Matrix = std::vector<std::vector<Rational>>;

  // Solves A x = b exactly. Returns the solution with every free variable set
  // to zero, or nullopt when the system is inconsistent.
  std::optional<std::vector<Rational>> solve_linear(Matrix A, std::vector<Rational> b);

  std::size_t rank(Matrix A);

} // namespace ctk

#endif // CTKIT_LINALG_HPP
