#include "ctkit/ctkit.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <set>
#include <string>

#include "json.hpp"

#include "ctkit/cfinite.hpp"
#include "ctkit/congruence.hpp"
#include "ctkit/hypergeom.hpp"
#include "ctkit/parse.hpp"
#include "ctkit/represent.hpp"

using json = nlohmann::ordered_json;

struct ctk_laurent {
  ctk::LaurentPoly poly;
  std::vector<std::string> vars;
};

struct ctk_cfinite {
  ctk::CFiniteSeq seq;
};

struct ctk_hypergeom {
  ctk::HypergeomSeq seq;
};

struct ctk_witness {
  ctk::CTWitness w;
  std::vector<std::vector<std::string>> vars;  // per term
};

struct ctk_evaluator {
  std::unique_ptr<ctk::SeqEvaluator> e;
};

namespace {

  thread_local std::string g_last_error;

  template <class F>
  ctk_status guard(F && f)
  {
    try {
      f();
      g_last_error.clear();
      return CTK_OK;
    } catch (const ctk::Error & e) {
      g_last_error = e.what();
      return static_cast<ctk_status>(e.code());
    } catch (const std::bad_alloc &) {
      g_last_error = "out of memory";
      return CTK_INTERNAL_ERROR;
    } catch (const std::exception & e) {
      g_last_error = e.what();
      return CTK_INTERNAL_ERROR;
    }
  }

  void require(bool ok, const char * what)
  {
    if (!ok)
      ctk::fail(ctk::ErrorCode::InvalidArgument, what);
  }

  char * dup(const std::string & s)
  {
    char * out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out)
      throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  void emit(const json & j, char ** out) { *out = dup(j.dump(2)); }

  std::vector<std::string> split_vars(const char * vars)
  {
    std::vector<std::string> out;
    std::string cur;
    for (const char * c = vars; *c; ++c) {
      if (*c == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (*c != ' ' && *c != '\t') {
        cur += *c;
      }
    }
    out.push_back(cur);
    for (const auto & v : out)
      require(!v.empty(), "empty variable name in declaration");
    return out;
  }

  json rationals(const std::vector<ctk::Rational> & v)
  {
    json a = json::array();
    for (const auto & q : v)
      a.push_back(ctk::to_string(q));
    return a;
  }

  std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi)
  {
    require(lo <= hi, "empty prime range");
    return ctk::primes_in_range(lo, hi);
  }

  ctk::Integer parse_index(const char * index)
  {
    require(index != nullptr, "null index");
    const ctk::Rational q = ctk::parse_rational(index);
    require(ctk::is_integral(q) && q >= 0, "index must be a nonnegative integer");
    return q.get_num();
  }

  json decision_json(const ctk::Decision & d)
  {
    json j;
    j["representable"] = d.representable;
    j["min_terms"] = d.min_terms ? json(*d.min_terms) : json(nullptr);
    j["reason"] = ctk::reason_name(d.reason);
    j["root_count"] = d.root_count;
    return j;
  }

  json witness_json(const ctk_witness & w)
  {
    json a = json::array();
    for (std::size_t i = 0; i < w.w.terms.size(); ++i) {
      const auto & t = w.w.terms[i];
      json j;
      j["weight"] = ctk::to_string(t.weight);
      j["P"] = ctk::to_string(t.P, w.vars[i]);
      j["Q"] = ctk::to_string(t.Q, w.vars[i]);
      j["vars"] = w.vars[i];
      a.push_back(j);
    }
    return a;
  }

  ctk_witness * wrap_witness(ctk::CTWitness w)
  {
    auto out = std::make_unique<ctk_witness>();
    for (const auto & t : w.terms)
      out->vars.push_back(ctk::default_variable_names(t.P.var_count()));
    out->w = std::move(w);
    return out.release();
  }

  json report_json(const ctk::WitnessReport & r)
  {
    json j;
    j["pass"] = r.pass;
    j["certified"] = r.certified;
    j["window"] = r.window;
    if (r.first_mismatch) {
      j["first_mismatch"] = *r.first_mismatch;
      j["expected"] = ctk::to_string(r.expected);
      j["actual"] = ctk::to_string(r.actual);
    } else {
      j["first_mismatch"] = nullptr;
    }
    return j;
  }

  json record_json(const ctk::CheckRecord & c)
  {
    json j;
    j["p"] = c.p;
    j["r"] = c.r;
    j["n"] = c.n;
    j["k"] = c.k;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["pass"] = c.pass;
    return j;
  }

  json report_json(const ctk::CongruenceReport & r)
  {
    json j;
    j["check"] = r.check;
    j["subject"] = r.subject;
    json grid = json::object();
    for (const auto & [k, v] : r.grid)
      grid[k] = v;
    j["grid"] = grid;
    j["grid_size"] = r.grid_size();
    j["verdict"] = ctk::verdict_name(r.verdict);
    j["counterexample"] = r.counterexample ? record_json(*r.counterexample) : json(nullptr);
    j["constant"] = r.constant ? json(ctk::to_string(*r.constant)) : json(nullptr);
    j["evidence_primes"] = r.evidence_primes;
    j["note"] = r.note;
    json checks = json::array();
    for (const auto & c : r.checks)
      checks.push_back(record_json(c));
    j["checks"] = checks;
    json skipped = json::array();
    for (const auto & s : r.skipped) {
      json k;
      k["p"] = s.p;
      k["k"] = s.k ? json(*s.k) : json(nullptr);
      k["reason"] = s.reason;
      k["points"] = s.points;
      skipped.push_back(k);
    }
    j["skipped"] = skipped;
    return j;
  }

  void finish(const ctk::CongruenceReport & r, int * verdict, char ** out)
  {
    if (verdict)
      *verdict = static_cast<int>(r.verdict);
    emit(report_json(r), out);
  }

  ctk::HypergeomConfig mode_config(int modular)
  {
    ctk::HypergeomConfig cfg;
    cfg.exact_prime_limit = modular ? 0 : UINT64_MAX;
    return cfg;
  }

  // P and Q share one variable list: declared, else first appearance in P then Q.
  std::pair<ctk::ParsedLaurent, ctk::ParsedLaurent> parse_pair(const std::string & P, const std::string & Q,
                                                               std::optional<std::vector<std::string>> vars)
  {
    if (!vars)
      vars = ctk::parse_laurent("(" + P + ") + (" + Q + ")").variables;
    return {ctk::parse_laurent(P, vars), ctk::parse_laurent(Q, vars)};
  }

} // namespace

extern "C" {

const char * ctk_version(void) { return "0.1.0"; }

const char * ctk_status_name(ctk_status status)
{
  if (status == CTK_OK)
    return "Ok";
  if (status == CTK_INTERNAL_ERROR)
    return "InternalError";
  if (status >= CTK_INVALID_ARGUMENT && status <= CTK_UNKNOWN_VARIABLE)
    return ctk::error_code_name(static_cast<ctk::ErrorCode>(status));
  return "Unknown";
}

const char * ctk_last_error(void) { return g_last_error.c_str(); }

void ctk_string_free(char * s) { std::free(s); }

///////////////////////
// Laurent polynomials

ctk_status ctk_laurent_parse(const char * text, const char * vars, ctk_laurent ** out)
{
  return guard([&] {
    require(text && out, "null argument");
    std::optional<std::vector<std::string>> declared;
    if (vars)
      declared = split_vars(vars);
    auto parsed = ctk::parse_laurent(text, declared);
    *out = new ctk_laurent{std::move(parsed.poly), std::move(parsed.variables)};
  });
}

void ctk_laurent_free(ctk_laurent * f) { delete f; }

ctk_status ctk_laurent_to_string(const ctk_laurent * f, char ** out)
{
  return guard([&] {
    require(f && out, "null argument");
    *out = dup(ctk::to_string(f->poly, f->vars));
  });
}

ctk_status ctk_laurent_var_count(const ctk_laurent * f, size_t * out)
{
  return guard([&] {
    require(f && out, "null argument");
    *out = f->poly.var_count();
  });
}

ctk_status ctk_laurent_variables(const ctk_laurent * f, char ** out)
{
  return guard([&] {
    require(f && out, "null argument");
    std::string s;
    for (const auto & v : f->vars)
      s += (s.empty() ? "" : ",") + v;
    *out = dup(s);
  });
}

ctk_status ctk_laurent_degree(const ctk_laurent * f, uint64_t * out)
{
  return guard([&] {
    require(f && out, "null argument");
    *out = ctk::degree(f->poly);
  });
}

ctk_status ctk_laurent_mul(const ctk_laurent * f, const ctk_laurent * g, ctk_laurent ** out)
{
  return guard([&] {
    require(f && g && out, "null argument");
    if (f->vars.size() != g->vars.size())
      ctk::fail(ctk::ErrorCode::VarCountMismatch, "operands have different variable counts");
    require(f->vars == g->vars, "operands use different variable lists");
    *out = new ctk_laurent{f->poly * g->poly, f->vars};
  });
}

ctk_status ctk_laurent_pow(const ctk_laurent * f, uint64_t n, ctk_laurent ** out)
{
  return guard([&] {
    require(f && out, "null argument");
    *out = new ctk_laurent{ctk::pow(f->poly, n), f->vars};
  });
}

ctk_status ctk_laurent_constant_term(const ctk_laurent * f, char ** out)
{
  return guard([&] {
    require(f && out, "null argument");
    *out = dup(ctk::to_string(ctk::constant_term(f->poly)));
  });
}

ctk_status ctk_ct_sequence(const ctk_laurent * P, const ctk_laurent * Q, uint64_t N, char ** out)
{
  return guard([&] {
    require(P && Q && out, "null argument");
    emit(rationals(ctk::ct_sequence(P->poly, Q->poly, N)), out);
  });
}

ctk_status ctk_ct_term_mod(const ctk_laurent * P, const ctk_laurent * Q, const char * index, uint64_t modulus,
                           uint64_t * out)
{
  return guard([&] {
    require(P && Q && out, "null argument");
    *out = ctk::ct_term_mod(P->poly, Q->poly, parse_index(index), modulus).value();
  });
}

///////////////////////
// C-finite sequences

ctk_status ctk_cfinite_parse(const char * rec, const char * init, int64_t offset, ctk_cfinite ** out)
{
  return guard([&] {
    require(rec && out, "null argument");
    std::optional<std::string> i;
    if (init)
      i = std::string(init);
    std::optional<std::size_t> o;
    if (offset >= 0)
      o = static_cast<std::size_t>(offset);
    *out = new ctk_cfinite{ctk::parse_recurrence(rec, i, o)};
  });
}

void ctk_cfinite_free(ctk_cfinite * seq) { delete seq; }

ctk_status ctk_cfinite_terms(const ctk_cfinite * seq, uint64_t N, char ** out)
{
  return guard([&] {
    require(seq && out, "null argument");
    emit(rationals(ctk::eval_terms(seq->seq, N)), out);
  });
}

ctk_status ctk_cfinite_eval_mod(const ctk_cfinite * seq, const char * index, uint64_t modulus, uint64_t * out)
{
  return guard([&] {
    require(seq && out, "null argument");
    *out = ctk::eval_mod(seq->seq, parse_index(index), modulus).value();
  });
}

ctk_status ctk_cfinite_analyze(const ctk_cfinite * seq, char ** out)
{
  return guard([&] {
    require(seq && out, "null argument");
    const auto & s = seq->seq;
    json j;
    j["order"] = s.order();
    j["offset"] = s.offset();
    j["coefficients"] = rationals(s.coeffs());
    j["initial"] = rationals(s.initial());
    j["terms"] = rationals(ctk::eval_terms(s, 11));

    const ctk::UPoly M = ctk::minimal_annihilator(s);
    j["minimal_annihilator"] = M.to_string();

    const auto roots = ctk::characteristic_roots(s);
    json rr = json::array();
    for (const auto & [root, mult] : roots.rational_roots)
      rr.push_back(json{{"root", ctk::to_string(root)}, {"multiplicity", mult}});
    j["roots"] = json{{"rational", rr},
                      {"zero_multiplicity", roots.zero_multiplicity},
                      {"residual_degree", roots.residual_degree},
                      {"residual", roots.residual.to_string()}};

    if (auto t = ctk::is_trace_sequence(s)) {
      json parts = json::array();
      for (const auto & p : t->parts)
        parts.push_back(json{{"alpha", ctk::to_string(p.alpha)}, {"u", p.u.to_string()}});
      j["trace"] = json{{"constant", ctk::to_string(t->constant)}, {"parts", parts}};
    } else {
      j["trace"] = nullptr;
    }

    const auto sep = ctk::separable_part(s);
    j["separable_part"] = json{{"coefficients", rationals(sep.coeffs())},
                               {"initial", rationals(sep.initial())},
                               {"offset", sep.offset()},
                               {"terms", rationals(ctk::eval_terms(sep, 11))}};

    const auto gf = ctk::generating_function(s);
    j["generating_function"] = json{{"numerator", gf.numerator.to_string()},
                                    {"denominator", gf.denominator.to_string()}};

    j["decision_single"] = decision_json(ctk::decide_single_ct(s));
    j["decision_combination"] = decision_json(ctk::decide_combination(s));

    const auto ir = ctk::integral_roots_check(s, 2 * s.window() + 16);
    j["integral_roots"] = json{{"verdict", ctk::verdict_name(ir.verdict)}, {"detail", ir.detail}};
    emit(j, out);
  });
}

ctk_status ctk_decide(const ctk_cfinite * seq, int combination, int * representable, char ** out)
{
  return guard([&] {
    require(seq && out, "null argument");
    const auto d = combination ? ctk::decide_combination(seq->seq) : ctk::decide_single_ct(seq->seq);
    if (representable)
      *representable = d.representable ? 1 : 0;
    json j = decision_json(d);
    j = json{{"mode", combination ? "combination" : "single"}, {"decision", j}};
    emit(j, out);
  });
}

///////////////
// Witnesses

ctk_status ctk_witness_build(const ctk_cfinite * seq, ctk_witness ** out)
{
  return guard([&] {
    require(seq && out, "null argument");
    *out = wrap_witness(ctk::build_witness(seq->seq));
  });
}

ctk_status ctk_witness_parse(const char * text, ctk_witness ** out)
{
  return guard([&] {
    require(text && out, "null argument");
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception & e) {
      ctk::fail(ctk::ErrorCode::SyntaxError, std::string("witness JSON: ") + e.what());
    }
    if (doc.is_object())
      doc = json::array({doc});
    require(doc.is_array() && !doc.empty(), "witness must be a nonempty array of terms");
    auto w = std::make_unique<ctk_witness>();
    for (const auto & t : doc) {
      require(t.is_object() && t.contains("P"), "witness term needs a 'P' field");
      const std::string P = t["P"].get<std::string>();
      const std::string Q = t.contains("Q") ? t["Q"].get<std::string>() : "1";
      std::optional<std::vector<std::string>> vars;
      if (t.contains("vars"))
        vars = t["vars"].get<std::vector<std::string>>();
      auto [p, q] = parse_pair(P, Q, vars);
      ctk::Rational weight = 1;
      if (t.contains("weight")) {
        const auto & wt = t["weight"];
        weight = wt.is_string() ? ctk::parse_rational(wt.get<std::string>())
                                : ctk::parse_rational(wt.dump());
      }
      w->w.terms.push_back({weight, std::move(p.poly), std::move(q.poly)});
      w->vars.push_back(std::move(p.variables));
    }
    *out = w.release();
  });
}

ctk_status ctk_witness_am(long m, ctk_witness ** out)
{
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = wrap_witness(ctk::witness_Am(m));
  });
}

void ctk_witness_free(ctk_witness * w) { delete w; }

ctk_status ctk_witness_to_json(const ctk_witness * w, char ** out)
{
  return guard([&] {
    require(w && out, "null argument");
    emit(witness_json(*w), out);
  });
}

ctk_status ctk_witness_term_count(const ctk_witness * w, size_t * out)
{
  return guard([&] {
    require(w && out, "null argument");
    *out = w->w.terms.size();
  });
}

ctk_status ctk_witness_verify(const ctk_cfinite * seq, const ctk_witness * w, int * pass, char ** out)
{
  return guard([&] {
    require(seq && w && out, "null argument");
    const auto r = ctk::verify_witness(seq->seq, w->w);
    if (pass)
      *pass = r.pass ? 1 : 0;
    json j = report_json(r);
    j["witness"] = witness_json(*w);
    emit(j, out);
  });
}

ctk_status ctk_witness_verify_terms(const char * terms, int bfile, const ctk_witness * w, int * pass, char ** out)
{
  return guard([&] {
    require(terms && w && out, "null argument");
    ctk::BFile data;
    if (bfile)
      data = ctk::parse_bfile(terms);
    else
      data.terms = ctk::parse_rational_list(terms);
    const auto r = ctk::verify_witness(data.terms, w->w, data.start);
    if (pass)
      *pass = r.pass ? 1 : 0;
    json j = report_json(r);
    j["start"] = data.start;
    j["witness"] = witness_json(*w);
    emit(j, out);
  });
}

/////////////////////////////
// Hypergeometric sequences

ctk_status ctk_hypergeom_parse(const char * text, ctk_hypergeom ** out)
{
  return guard([&] {
    require(text && out, "null argument");
    *out = new ctk_hypergeom{ctk::parse_hypergeom(text)};
  });
}

ctk_status ctk_hypergeom_family_am(long m, ctk_hypergeom ** out)
{
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = new ctk_hypergeom{ctk::family_Am(m)};
  });
}

ctk_status ctk_hypergeom_christol(int scaled, ctk_hypergeom ** out)
{
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = new ctk_hypergeom{scaled ? ctk::christol_scaled() : ctk::christol_sequence()};
  });
}

ctk_status ctk_hypergeom_scale(const ctk_hypergeom * h, const char * s, ctk_hypergeom ** out)
{
  return guard([&] {
    require(h && s && out, "null argument");
    *out = new ctk_hypergeom{h->seq.scaled(ctk::parse_rational(s))};
  });
}

void ctk_hypergeom_free(ctk_hypergeom * h) { delete h; }

ctk_status ctk_hypergeom_terms(const ctk_hypergeom * h, uint64_t N, char ** out)
{
  return guard([&] {
    require(h && out, "null argument");
    emit(rationals(ctk::hg_eval(h->seq, N)), out);
  });
}

ctk_status ctk_hypergeom_term_mod(const ctk_hypergeom * h, uint64_t n, uint64_t p, unsigned r, uint64_t * out)
{
  return guard([&] {
    require(h && out, "null argument");
    *out = ctk::hg_term_mod(h->seq, n, p, r).value();
  });
}

ctk_status ctk_am_residue_table(long m, uint64_t lo, uint64_t hi, int modular, int * consistent, char ** out)
{
  return guard([&] {
    require(out != nullptr, "null argument");
    require(m >= 2, "m must be >= 2");
    const auto h = ctk::family_Am(m).scaled(ctk::Rational(m) * m);
    const auto cfg = mode_config(modular);
    json rows = json::array();
    std::set<long> values;
    bool all_match = true;
    for (auto p : primes_between(lo, hi)) {
      if (p <= static_cast<std::uint64_t>(m) || m % static_cast<long>(p) == 0)
        continue;
      const long a = ctk::residue_a(m, p, 1);
      const auto expected = ctk::predicted_Am_residue(m, p);
      const auto actual = ctk::hg_term_mod_auto(h, p, p, cfg);
      const bool match = actual == expected;
      all_match = all_match && match;
      values.insert(a * (m - a));
      rows.push_back(json{{"p", p}, {"a", a}, {"value", a * (m - a)}, {"expected", expected.value()},
                          {"actual", actual.value()}, {"match", match}});
    }
    json j;
    j["m"] = m;
    j["mode"] = modular ? "modular" : "exact";
    j["rows"] = rows;
    j["distinct_values"] = std::vector<long>(values.begin(), values.end());
    j["predicted_distinct"] = std::max<std::uint64_t>(1, ctk::phi(static_cast<std::uint64_t>(m)) / 2);
    j["all_match"] = all_match;
    const bool ok = all_match && values.size() <= 1;
    j["verdict"] = ok ? "ConstantResidue" : (all_match ? "FalsifiedNoConstant" : "Counterexample");
    if (consistent)
      *consistent = ok ? 1 : 0;
    emit(j, out);
  });
}

ctk_status ctk_christol_table(uint64_t lo, uint64_t hi, int modular, int * consistent, char ** out)
{
  return guard([&] {
    require(out != nullptr, "null argument");
    const auto mode = modular ? ctk::EvalMode::Modular : ctk::EvalMode::Exact;
    json rows = json::array();
    std::set<std::uint64_t> classes;
    bool all_match = true;
    for (auto p : primes_between(lo, hi)) {
      if (p <= 9 || (p % 9 != 1 && p % 9 != 8))
        continue;
      const auto r = ctk::christol_check(p, mode);
      classes.insert(p % 9);
      all_match = all_match && r.match;
      rows.push_back(json{{"p", p}, {"class", p % 9}, {"expected", r.expected.value()},
                          {"actual", r.actual.value()}, {"match", r.match}});
    }
    json j;
    j["mode"] = modular ? "modular" : "exact";
    j["rows"] = rows;
    j["classes"] = std::vector<std::uint64_t>(classes.begin(), classes.end());
    j["all_match"] = all_match;
    const bool ok = all_match && classes.size() <= 1;
    j["verdict"] = ok ? "ConstantResidue" : (all_match ? "FalsifiedNoConstant" : "Counterexample");
    if (consistent)
      *consistent = ok ? 1 : 0;
    emit(j, out);
  });
}

////////////////
// Evaluators

ctk_status ctk_evaluator_from_cfinite(const ctk_cfinite * seq, ctk_evaluator ** out)
{
  return guard([&] {
    require(seq && out, "null argument");
    *out = new ctk_evaluator{std::make_unique<ctk::CFiniteEvaluator>(seq->seq)};
  });
}

ctk_status ctk_evaluator_from_hypergeom(const ctk_hypergeom * h, ctk_evaluator ** out)
{
  return guard([&] {
    require(h && out, "null argument");
    *out = new ctk_evaluator{std::make_unique<ctk::HypergeomEvaluator>(h->seq)};
  });
}

ctk_status ctk_evaluator_from_ct(const ctk_laurent * P, const ctk_laurent * Q, ctk_evaluator ** out)
{
  return guard([&] {
    require(P && Q && out, "null argument");
    *out = new ctk_evaluator{std::make_unique<ctk::ConstantTermEvaluator>(P->poly, Q->poly)};
  });
}

ctk_status ctk_evaluator_set_prime_floor(ctk_evaluator * e, uint64_t floor)
{
  return guard([&] {
    require(e != nullptr, "null argument");
    e->e->set_prime_floor(floor);
  });
}

void ctk_evaluator_free(ctk_evaluator * e) { delete e; }

////////////////////////
// Congruence reports

ctk_status ctk_gauss_check(const ctk_evaluator * e, uint64_t p_max, unsigned r_max, uint64_t n_max, int * verdict,
                           char ** out)
{
  return guard([&] {
    require(e && out, "null argument");
    finish(ctk::gauss_check(*e->e, p_max, r_max, n_max), verdict, out);
  });
}

ctk_status ctk_constant_c_falsifier(const ctk_evaluator * e, uint64_t p_lo, uint64_t p_hi, uint64_t k_max,
                                   const char * height_bound, int * verdict, char ** out)
{
  return guard([&] {
    require(e && out, "null argument");
    ctk::Integer H = 1000000;
    if (height_bound) {
      const auto q = ctk::parse_rational(height_bound);
      require(ctk::is_integral(q) && q > 0, "height bound must be a positive integer");
      H = q.get_num();
    }
    finish(ctk::constant_c_falsifier(*e->e, primes_between(p_lo, p_hi), k_max, H), verdict, out);
  });
}

ctk_status ctk_ct_shift_check(const ctk_laurent * P, const ctk_laurent * Q, uint64_t p_lo, uint64_t p_hi,
                              unsigned r_max, uint64_t n_max, uint64_t k_max, int * verdict, char ** out)
{
  return guard([&] {
    require(P && Q && out, "null argument");
    finish(ctk::ct_shift_check(P->poly, Q->poly, primes_between(p_lo, p_hi), r_max, n_max, k_max), verdict, out);
  });
}

ctk_status ctk_stability_check(const ctk_laurent * P, const ctk_laurent * Q, uint64_t p_lo, uint64_t p_hi,
                               unsigned s, unsigned r, uint64_t n_max, uint64_t k_max, int * verdict, char ** out)
{
  return guard([&] {
    require(P && Q && out, "null argument");
    finish(ctk::stability_check(P->poly, Q->poly, primes_between(p_lo, p_hi), s, r, n_max, k_max), verdict, out);
  });
}

ctk_status ctk_hypergeom_propagation_check(const ctk_hypergeom * h, uint64_t p_lo, uint64_t p_hi, uint64_t k_max,
                                           int * verdict, char ** out)
{
  return guard([&] {
    require(h && out, "null argument");
    finish(ctk::hypergeom_propagation_check(h->seq, primes_between(p_lo, p_hi), k_max), verdict, out);
  });
}

ctk_status ctk_minton_check(const ctk_laurent * P, const ctk_laurent * Q, uint64_t N, uint64_t p_lo, uint64_t p_hi,
                            char ** out)
{
  return guard([&] {
    require(P && Q && out, "null argument");
    const auto r = ctk::check_minton_analog(P->poly, Q->poly, N, primes_between(p_lo, p_hi));
    json j;
    j["ct_equality"] = r.ct_equality;
    j["equality_failure"] = r.equality_failure ? json(*r.equality_failure) : json(nullptr);
    j["gauss_r1"] = r.gauss_r1;
    j["gauss_r2"] = r.gauss_r2;
    j["failing_primes"] = r.failing_primes;
    j["skipped_primes"] = r.skipped_primes;
    emit(j, out);
  });
}

////////////
// Scalars

ctk_status ctk_rational_mod(const char * q, uint64_t m, uint64_t * out)
{
  return guard([&] {
    require(q && out, "null argument");
    *out = ctk::rational_mod(ctk::parse_rational(q), m).value();
  });
}

ctk_status ctk_primes_in_range(uint64_t lo, uint64_t hi, char ** out)
{
  return guard([&] {
    require(out != nullptr, "null argument");
    emit(json(primes_between(lo, hi)), out);
  });
}

} // extern "C"
