#include "ctkit/parse.hpp"

#include <cctype>
#include <map>

namespace ctk {

  namespace {

    enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

    struct Token {
      Tok kind;
      std::string text;
      std::size_t pos;
    };

    [[noreturn]] void syntax(const std::string & what, std::size_t pos, ErrorCode code = ErrorCode::SyntaxError)
    {
      throw SyntaxError(code, what, pos);
    }

    std::vector<Token> lex(std::string_view s)
    {
      std::vector<Token> out;
      std::size_t i = 0;
      while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
          std::size_t j = i;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
          out.push_back({Tok::Int, std::string(s.substr(i, j - i)), i});
          i = j;
          continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
          std::size_t j = i;
          while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
            ++j;
          out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), i});
          i = j;
          continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default: syntax(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, std::string(1, c), i});
        ++i;
      }
      out.push_back({Tok::End, "", s.size()});
      return out;
    }

    class LaurentParser {
    public:
      LaurentParser(std::vector<Token> toks, std::map<std::string, std::size_t> vars, std::size_t nvars)
        : t_(std::move(toks)), vars_(std::move(vars)), nvars_(nvars) {}

      LaurentPoly run()
      {
        if (peek().kind == Tok::End)
          syntax("empty expression", peek().pos);
        LaurentPoly f = expr();
        if (peek().kind != Tok::End)
          syntax("unexpected '" + peek().text + "'", peek().pos);
        return f;
      }

    private:
      const Token & peek() const { return t_[i_]; }
      const Token & next() { return t_[i_++]; }

      void expect(Tok kind, const char * what)
      {
        if (peek().kind != kind)
          syntax(std::string("expected ") + what, peek().pos);
        ++i_;
      }

      LaurentPoly expr()
      {
        LaurentPoly f = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
          const bool minus = next().kind == Tok::Minus;
          LaurentPoly g = term();
          f = minus ? f - g : f + g;
        }
        return f;
      }

      static bool starts_factor(Tok k) { return k == Tok::Int || k == Tok::Ident || k == Tok::LParen; }

      LaurentPoly term()
      {
        LaurentPoly f = unary();
        for (;;) {
          const Tok k = peek().kind;
          if (k == Tok::Star) {
            ++i_;
            f = f * unary();
          } else if (k == Tok::Slash) {
            const std::size_t pos = next().pos;
            f = f * invert(unary(), pos);
          } else if (starts_factor(k)) {
            // Juxtaposition: a number or a closing parenthesis may be followed
            // directly by a factor; two bare identifiers may not.
            const Tok prev = t_[i_ - 1].kind;
            if (prev == Tok::Ident && k == Tok::Ident)
              syntax("missing operator between identifiers", peek().pos);
            if (prev == Tok::Int && k == Tok::Int)
              syntax("missing operator between numbers", peek().pos);
            f = f * power();
          } else {
            return f;
          }
        }
      }

      LaurentPoly unary()
      {
        if (peek().kind == Tok::Minus) {
          ++i_;
          return -unary();
        }
        if (peek().kind == Tok::Plus) {
          ++i_;
          return unary();
        }
        return power();
      }

      LaurentPoly power()
      {
        LaurentPoly base = primary();
        if (peek().kind != Tok::Caret)
          return base;
        const std::size_t caret = next().pos;
        const long e = exponent();
        if (e >= 0)
          return pow(base, static_cast<std::uint64_t>(e));
        return pow(invert(base, caret), static_cast<std::uint64_t>(-e));
      }

      long exponent()
      {
        const bool paren = peek().kind == Tok::LParen;
        if (paren)
          ++i_;
        bool negative = false;
        if (peek().kind == Tok::Minus) {
          negative = true;
          ++i_;
        }
        if (peek().kind != Tok::Int)
          syntax("exponent must be an integer", peek().pos);
        const Token & tok = next();
        if (tok.text.size() > 9)
          syntax("exponent too large", tok.pos);
        long e = std::stol(tok.text);
        if (paren)
          expect(Tok::RParen, "')' after exponent (exponents must be integers)");
        return negative ? -e : e;
      }

      LaurentPoly primary()
      {
        const Token & tok = peek();
        switch (tok.kind) {
        case Tok::Int: {
          ++i_;
          return LaurentPoly::constant(nvars_, Rational(Integer(tok.text)));
        }
        case Tok::Ident: {
          ++i_;
          auto it = vars_.find(tok.text);
          if (it == vars_.end())
            syntax("unknown variable '" + tok.text + "'", tok.pos, ErrorCode::UnknownVariable);
          ExponentVector e(nvars_);
          e[it->second] = 1;
          return LaurentPoly::monomial(e, Rational(1));
        }
        case Tok::LParen: {
          ++i_;
          LaurentPoly f = expr();
          expect(Tok::RParen, "')'");
          return f;
        }
        default:
          syntax(tok.kind == Tok::End ? "unexpected end of input" : "unexpected '" + tok.text + "'", tok.pos);
        }
      }

      LaurentPoly invert(const LaurentPoly & f, std::size_t pos)
      {
        if (f.size() != 1)
          syntax(f.is_zero() ? "division by zero" : "denominator is not a monomial; only Laurent polynomials are accepted",
                 pos, ErrorCode::NonMonomialDenominator);
        const auto & t = f.terms().front();
        return LaurentPoly::monomial(-t.exponent, Rational(1) / t.coeff);
      }

      std::vector<Token> t_;
      std::size_t i_ = 0;
      std::map<std::string, std::size_t> vars_;
      std::size_t nvars_;
    };

    std::string_view trim(std::string_view s)
    {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
      return s;
    }

    std::vector<std::string_view> split(std::string_view s, char sep)
    {
      std::vector<std::string_view> out;
      std::size_t start = 0;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
          out.push_back(s.substr(start, i - start));
          start = i + 1;
        }
      }
      return out;
    }

    // "key: value; key: value" into a map; a bare first field is stored
    // under `bare_key`.
    std::map<std::string, std::string> fields(std::string_view text, const std::string & bare_key)
    {
      std::map<std::string, std::string> out;
      bool first = true;
      for (auto part : split(text, ';')) {
        part = trim(part);
        if (part.empty())
          continue;
        const auto colon = part.find(':');
        std::string key, value;
        if (colon == std::string_view::npos) {
          if (!first)
            fail(ErrorCode::InvalidArgument, "expected 'key: value' in '" + std::string(part) + "'");
          key = bare_key;
          value = std::string(part);
        } else {
          key = std::string(trim(part.substr(0, colon)));
          value = std::string(trim(part.substr(colon + 1)));
        }
        if (out.count(key))
          fail(ErrorCode::InvalidArgument, "duplicate field '" + key + "'");
        out[key] = value;
        first = false;
      }
      return out;
    }

    // Sum of c * a(n + s) terms; returns shift -> coefficient.
    std::map<long, Rational> linear_side(const std::vector<Token> & t, std::size_t & i, std::string & name)
    {
      std::map<long, Rational> out;
      bool first = true;
      for (;;) {
        Rational sign = 1;
        if (t[i].kind == Tok::Plus || t[i].kind == Tok::Minus) {
          sign = t[i].kind == Tok::Minus ? -1 : 1;
          ++i;
        } else if (!first) {
          return out;
        }
        first = false;
        Rational coeff = 1;
        if (t[i].kind == Tok::Int) {
          coeff = Rational(Integer(t[i].text));
          ++i;
          if (t[i].kind == Tok::Slash) {
            ++i;
            if (t[i].kind != Tok::Int)
              syntax("expected denominator", t[i].pos);
            coeff /= Rational(Integer(t[i].text));
            ++i;
          }
          if (t[i].kind == Tok::Star)
            ++i;
        }
        if (t[i].kind != Tok::Ident)
          syntax("expected a sequence term such as a(n+1)", t[i].pos);
        if (name.empty())
          name = t[i].text;
        else if (name != t[i].text)
          syntax("mixed sequence names '" + name + "' and '" + t[i].text + "'", t[i].pos);
        ++i;
        if (t[i].kind != Tok::LParen)
          syntax("expected '('", t[i].pos);
        ++i;
        if (t[i].kind != Tok::Ident || t[i].text != "n")
          syntax("index must be written in n", t[i].pos);
        ++i;
        long shift = 0;
        if (t[i].kind == Tok::Plus || t[i].kind == Tok::Minus) {
          const bool neg = t[i].kind == Tok::Minus;
          ++i;
          if (t[i].kind != Tok::Int || t[i].text.size() > 6)
            syntax("expected an integer shift", t[i].pos);
          shift = std::stol(t[i].text) * (neg ? -1 : 1);
          ++i;
        }
        if (t[i].kind != Tok::RParen)
          syntax("expected ')'", t[i].pos);
        ++i;
        out[shift] += sign * coeff;
      }
    }

  } // namespace

  ParsedLaurent parse_laurent(std::string_view text, const std::optional<std::vector<std::string>> & declared)
  {
    auto toks = lex(text);
    std::vector<std::string> names;
    if (declared) {
      names = *declared;
    } else {
      for (const auto & tk : toks) {
        if (tk.kind == Tok::Ident && std::find(names.begin(), names.end(), tk.text) == names.end())
          names.push_back(tk.text);
      }
    }
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!index.emplace(names[i], i).second)
        fail(ErrorCode::InvalidArgument, "variable '" + names[i] + "' declared twice");
    }
    if (names.empty())
      names.push_back("x");
    if (names.size() > kMaxVariables)
      fail(ErrorCode::TooManyVariables, "at most " + std::to_string(kMaxVariables) + " variables are supported");
    LaurentParser parser(std::move(toks), std::move(index), names.size());
    return {parser.run(), names};
  }

  UPoly parse_upoly(std::string_view text, const std::string & var)
  {
    const auto parsed = parse_laurent(text, std::vector<std::string>{var});
    std::vector<Rational> c;
    for (const auto & t : parsed.poly.terms()) {
      if (t.exponent[0] < 0)
        fail(ErrorCode::InvalidArgument, "negative power of " + var + " in polynomial '" + std::string(text) + "'");
      const auto e = static_cast<std::size_t>(t.exponent[0]);
      if (c.size() <= e)
        c.resize(e + 1, Rational(0));
      c[e] = t.coeff;
    }
    return UPoly(std::move(c));
  }

  std::vector<Rational> parse_rational_list(std::string_view text)
  {
    std::vector<Rational> out;
    if (trim(text).empty())
      return out;
    for (auto part : split(text, ','))
      out.push_back(parse_rational(trim(part)));
    return out;
  }

  std::pair<std::uint64_t, std::uint64_t> parse_range(std::string_view text)
  {
    text = trim(text);
    const auto dots = text.find("..");
    auto number = [&](std::string_view s) -> std::uint64_t {
      s = trim(s);
      if (s.empty() || s.size() > 18 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail(ErrorCode::InvalidArgument, "malformed range '" + std::string(text) + "' (expected lo..hi)");
      return std::stoull(std::string(s));
    };
    if (dots == std::string_view::npos) {
      const auto v = number(text);
      return {v, v};
    }
    const auto lo = number(text.substr(0, dots)), hi = number(text.substr(dots + 2));
    if (lo > hi)
      fail(ErrorCode::InvalidArgument, "empty range '" + std::string(text) + "'");
    return {lo, hi};
  }

  BFile parse_bfile(std::string_view text)
  {
    BFile out;
    std::optional<std::uint64_t> next;
    std::size_t line_no = 0;
    while (!text.empty()) {
      const auto eol = text.find('\n');
      std::string_view line = text.substr(0, eol);
      text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      line = trim(line);
      if (line.empty())
        continue;
      const auto ws = line.find_first_of(" \t");
      if (ws == std::string_view::npos)
        fail(ErrorCode::InvalidArgument, "b-file line " + std::to_string(line_no) + " needs 'n a(n)'");
      const auto index = parse_range(line.substr(0, ws)).first;
      if (next && index != *next)
        fail(ErrorCode::InvalidArgument, "b-file indices are not consecutive at line " + std::to_string(line_no));
      if (!next)
        out.start = index;
      next = index + 1;
      out.terms.push_back(parse_rational(trim(line.substr(ws))));
    }
    if (out.terms.empty())
      fail(ErrorCode::InvalidArgument, "b-file has no terms");
    return out;
  }

  CFiniteSeq parse_recurrence(std::string_view text, const std::optional<std::string> & init,
                              std::optional<std::size_t> offset)
  {
    auto f = fields(text, "rec");
    if (!f.count("rec"))
      fail(ErrorCode::InvalidArgument, "missing 'rec' field");
    for (const auto & [k, v] : f) {
      if (k != "rec" && k != "init" && k != "offset")
        fail(ErrorCode::InvalidArgument, "unknown recurrence field '" + k + "'");
    }
    const std::string eq = f["rec"];
    // '=' is not a token of the expression lexer, so split on it first.
    const auto eqpos = eq.find('=');
    if (eqpos == std::string::npos)
      syntax("recurrence needs '='", eq.size());
    std::string name;
    auto side = [&](const std::string & part, std::size_t base) {
      const auto toks = lex(part);
      std::size_t i = 0;
      if (toks[0].kind == Tok::Int && toks[0].text == "0" && toks[1].kind == Tok::End)
        return std::map<long, Rational>{};
      auto terms = linear_side(toks, i, name);
      if (toks[i].kind != Tok::End)
        syntax("unexpected '" + toks[i].text + "'", toks[i].pos + base);
      return terms;
    };
    std::map<long, Rational> total = side(eq.substr(0, eqpos), 0);
    for (const auto & [shift, c] : side(eq.substr(eqpos + 1), eqpos + 1))
      total[shift] -= c;
    std::erase_if(total, [](const auto & kv) { return kv.second == 0; });
    if (total.empty())
      fail(ErrorCode::InvalidArgument, "recurrence is trivial");

    std::size_t user_offset = offset.value_or(0);
    if (f.count("offset"))
      user_offset = static_cast<std::size_t>(parse_range(f["offset"]).first);

    // Shifts are renumbered so the lowest becomes a(n); the offset moves with them.
    const long lo = total.begin()->first, hi = total.rbegin()->first;
    const Rational lead = total.rbegin()->second;
    std::vector<Rational> coeffs;
    long n0 = static_cast<long>(user_offset) + lo;
    if (lo == hi) {
      // c a(n+s) = 0: zero from index offset + s on, i.e. A(n+1) = 0 * A(n).
      coeffs.push_back(Rational(0));
      n0 -= 1;
    } else {
      for (long s = lo; s < hi; ++s) {
        auto it = total.find(s);
        coeffs.push_back(it == total.end() ? Rational(0) : -it->second / lead);
      }
    }

    std::vector<Rational> initial;
    if (f.count("init"))
      initial = parse_rational_list(f["init"]);
    else if (init)
      initial = parse_rational_list(*init);
    else
      fail(ErrorCode::InvalidArgument, "missing initial values");
    return CFiniteSeq(std::move(coeffs), std::move(initial), static_cast<std::size_t>(std::max<long>(0, n0)));
  }

  HypergeomSeq parse_hypergeom(std::string_view text)
  {
    auto f = fields(text, "");
    for (const char * key : {"alpha", "beta", "a0"}) {
      if (!f.count(key))
        fail(ErrorCode::InvalidArgument, std::string("missing '") + key + "' field");
    }
    if (f.size() != 3)
      fail(ErrorCode::InvalidArgument, "hypergeometric input takes exactly alpha, beta and a0");
    return HypergeomSeq(parse_upoly(f["alpha"]), parse_upoly(f["beta"]), parse_rational(f["a0"]));
  }

} // namespace ctk
