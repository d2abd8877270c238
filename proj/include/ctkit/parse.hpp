#ifndef CTKIT_PARSE_HPP
#define CTKIT_PARSE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctkit/cfinite.hpp"
#include "ctkit/hypergeom.hpp"
#include "ctkit/laurent.hpp"

namespace ctk {

  struct ParsedLaurent {
    LaurentPoly poly;
    std::vector<std::string> variables;
  };

  // Grammar:
  //   expr    := term (('+' | '-') term)*
  //   term    := unary (('*' | '/') unary | unary)*      juxtaposition multiplies
  //   unary   := ('+' | '-') unary | power
  //   power   := primary ('^' exponent)?
  //   exponent:= ['-'] INT | '(' ['-'] INT ')'
  //   primary := INT | IDENT | '(' expr ')'
  // Division and negative powers need a single-monomial operand. Variables
  // follow `declared` when given, else order of first appearance.
  ParsedLaurent parse_laurent(std::string_view text,
                              const std::optional<std::vector<std::string>> & declared = std::nullopt);

  // Univariate polynomial in `var` with no negative powers.
  UPoly parse_upoly(std::string_view text, const std::string & var = "n");

  // "a(n+2) = a(n+1) + a(n)" or the full form
  // "rec: a(n+2) = a(n+1) + a(n); init: 0, 1; offset: 0".
  // `init` and `offset` fill in whatever the text leaves out.
  CFiniteSeq parse_recurrence(std::string_view text, const std::optional<std::string> & init = std::nullopt,
                              std::optional<std::size_t> offset = std::nullopt);

  // "alpha: <poly in n>; beta: <poly in n>; a0: <rational>"
  HypergeomSeq parse_hypergeom(std::string_view text);

  std::vector<Rational> parse_rational_list(std::string_view text);

  // OEIS b-file text: "n a(n)" lines with consecutive indices; '#' starts a
  // comment.
  struct BFile {
    std::uint64_t start = 0;
    std::vector<Rational> terms;
  };

  BFile parse_bfile(std::string_view text);

  // "lo..hi", inclusive.
  std::pair<std::uint64_t, std::uint64_t> parse_range(std::string_view text);

} // namespace ctk

#endif // CTKIT_PARSE_HPP
