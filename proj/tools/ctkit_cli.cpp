#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ctkit/ctkit.h"

using json = nlohmann::ordered_json;

namespace {

  enum Exit { kOk = 0, kNegative = 1, kInputError = 2 };

  // Carries a failed library call out to main.
  struct CallError {
    ctk_status status;
    std::string message;
  };

  void check(ctk_status s)
  {
    if (s != CTK_OK)
      throw CallError{s, ctk_last_error()};
  }

  struct InputError {
    std::string message;
  };

  template <class T, void (*Free)(T *)>
  struct Deleter {
    void operator()(T * p) const { Free(p); }
  };

  using Laurent = std::unique_ptr<ctk_laurent, Deleter<ctk_laurent, ctk_laurent_free>>;
  using CFinite = std::unique_ptr<ctk_cfinite, Deleter<ctk_cfinite, ctk_cfinite_free>>;
  using Hypergeom = std::unique_ptr<ctk_hypergeom, Deleter<ctk_hypergeom, ctk_hypergeom_free>>;
  using Witness = std::unique_ptr<ctk_witness, Deleter<ctk_witness, ctk_witness_free>>;
  using Evaluator = std::unique_ptr<ctk_evaluator, Deleter<ctk_evaluator, ctk_evaluator_free>>;

  // Takes ownership of a library string.
  std::string take(char * s)
  {
    std::string out = s ? s : "";
    ctk_string_free(s);
    return out;
  }

  std::string read_file(const std::string & path)
  {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw InputError{"cannot read '" + path + "'"};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string & text)
  {
    const auto dots = text.find("..");
    auto number = [&](const std::string & s) -> std::uint64_t {
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          s.size() > 18)
        throw InputError{"malformed range '" + text + "' (expected lo..hi)"};
      return std::stoull(s);
    };
    if (dots == std::string::npos) {
      const auto v = number(text);
      return {v, v};
    }
    const auto lo = number(text.substr(0, dots)), hi = number(text.substr(dots + 2));
    if (lo > hi)
      throw InputError{"empty range '" + text + "'"};
    return {lo, hi};
  }

  ///////////////
  // Rendering

  std::string cell(const json & v)
  {
    if (v.is_null())
      return "-";
    if (v.is_string())
      return v.get<std::string>();
    if (v.is_boolean())
      return v.get<bool>() ? "yes" : "no";
    return v.dump();
  }

  void print_table(const std::vector<std::string> & header, const std::vector<std::vector<std::string>> & rows)
  {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c)
      width[c] = header[c].size();
    for (const auto & r : rows)
      for (std::size_t c = 0; c < r.size(); ++c)
        width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string> & r) {
      std::string s;
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c)
          s += "  ";
        s += std::string(width[c] - r[c].size(), ' ') + r[c];
      }
      std::cout << s << '\n';
    };
    line(header);
    for (const auto & r : rows)
      line(r);
  }

  void print_fields(const json & j, const std::vector<std::string> & keys)
  {
    std::size_t w = 0;
    for (const auto & k : keys)
      w = std::max(w, k.size());
    for (const auto & k : keys)
      std::cout << k << ':' << std::string(w - k.size() + 1, ' ') << cell(j[k]) << '\n';
  }

  void print_list(const std::string & label, const json & a)
  {
    std::cout << label << ": ";
    for (std::size_t i = 0; i < a.size(); ++i)
      std::cout << (i ? ", " : "") << cell(a[i]);
    std::cout << '\n';
  }

  void render_congruence(const json & j)
  {
    print_fields(j, {"check", "subject", "verdict", "constant", "grid_size"});
    std::string grid;
    for (const auto & [k, v] : j["grid"].items())
      grid += (grid.empty() ? "" : ", ") + k + "=" + cell(v);
    std::cout << "grid: " << grid << '\n';
    if (!j["note"].get<std::string>().empty())
      std::cout << "note: " << j["note"].get<std::string>() << '\n';
    if (!j["counterexample"].is_null()) {
      const auto & c = j["counterexample"];
      std::cout << "counterexample: p=" << cell(c["p"]) << " r=" << cell(c["r"]) << " n=" << cell(c["n"])
                << " k=" << cell(c["k"]) << " lhs=" << cell(c["lhs"]) << " rhs=" << cell(c["rhs"]) << '\n';
    }
    if (!j["evidence_primes"].empty())
      print_list("evidence primes", j["evidence_primes"]);
    std::cout << '\n';
    std::vector<std::vector<std::string>> rows;
    for (const auto & c : j["checks"])
      rows.push_back({cell(c["p"]), cell(c["r"]), cell(c["n"]), cell(c["k"]), cell(c["lhs"]), cell(c["rhs"]),
                      c["pass"].get<bool>() ? "ok" : "FAIL"});
    print_table({"p", "r", "n", "k", "lhs", "rhs", "pass"}, rows);
    if (!j["skipped"].empty()) {
      std::cout << '\n';
      rows.clear();
      for (const auto & s : j["skipped"])
        rows.push_back({cell(s["p"]), cell(s["k"]), cell(s["points"]), cell(s["reason"])});
      print_table({"p", "k", "points", "skipped because"}, rows);
    }
  }

  void render_witness(const json & w)
  {
    std::vector<std::vector<std::string>> rows;
    for (const auto & t : w) {
      std::string vars;
      for (const auto & v : t["vars"])
        vars += (vars.empty() ? "" : ",") + v.get<std::string>();
      rows.push_back({cell(t["weight"]), cell(t["P"]), cell(t["Q"]), vars});
    }
    print_table({"weight", "P", "Q", "vars"}, rows);
  }

  void render_decision(const json & j)
  {
    std::cout << "mode: " << j["mode"].get<std::string>() << '\n';
    print_fields(j["decision"], {"representable", "reason", "min_terms", "root_count"});
  }

  void render_verify(const json & j)
  {
    std::vector<std::string> keys{"pass", "certified", "window"};
    if (j.contains("start"))
      keys.push_back("start");
    if (!j["first_mismatch"].is_null())
      keys.insert(keys.end(), {"first_mismatch", "expected", "actual"});
    print_fields(j, keys);
    std::cout << '\n';
    render_witness(j["witness"]);
  }

  void render_analysis(const json & j)
  {
    print_fields(j, {"order", "offset", "minimal_annihilator"});
    print_list("initial", j["initial"]);
    print_list("terms", j["terms"]);
    const auto & r = j["roots"];
    std::string roots;
    for (const auto & x : r["rational"])
      roots += (roots.empty() ? "" : ", ") + cell(x["root"]) + " (x" + cell(x["multiplicity"]) + ")";
    std::cout << "rational roots: " << (roots.empty() ? "-" : roots) << '\n';
    std::cout << "zero multiplicity: " << cell(r["zero_multiplicity"]) << '\n';
    std::cout << "irrational part: " << (r["residual_degree"] == 0 ? "-" : cell(r["residual"])) << '\n';
    if (j["trace"].is_null()) {
      std::cout << "trace sequence: no\n";
    } else {
      std::cout << "trace sequence: constant " << cell(j["trace"]["constant"]);
      for (const auto & p : j["trace"]["parts"])
        std::cout << " + " << cell(p["alpha"]) << "*Tr[" << cell(p["u"]) << "]";
      std::cout << '\n';
    }
    print_list("separable part", j["separable_part"]["terms"]);
    std::cout << "generating function: (" << cell(j["generating_function"]["numerator"]) << ") / ("
              << cell(j["generating_function"]["denominator"]) << ")\n";
    const auto & s = j["decision_single"];
    const auto & c = j["decision_combination"];
    std::cout << "single constant term: " << cell(s["representable"]) << " (" << cell(s["reason"]) << ")\n";
    std::cout << "combination: " << cell(c["representable"]) << " (" << cell(c["reason"])
              << ", min terms " << cell(c["min_terms"]) << ")\n";
    std::cout << "integral roots: " << cell(j["integral_roots"]["verdict"]) << " ("
              << cell(j["integral_roots"]["detail"]) << ")\n";
  }

  void render_residues(const json & j, bool am)
  {
    if (am)
      print_fields(j, {"m", "mode", "verdict", "predicted_distinct"});
    else
      print_fields(j, {"mode", "verdict"});
    print_list(am ? "distinct values a(m-a)" : "residue classes mod 9", am ? j["distinct_values"] : j["classes"]);
    std::cout << '\n';
    std::vector<std::vector<std::string>> rows;
    for (const auto & r : j["rows"]) {
      if (am)
        rows.push_back({cell(r["p"]), cell(r["a"]), cell(r["value"]), cell(r["expected"]), cell(r["actual"]),
                        r["match"].get<bool>() ? "ok" : "FAIL"});
      else
        rows.push_back({cell(r["p"]), cell(r["class"]), cell(r["expected"]), cell(r["actual"]),
                        r["match"].get<bool>() ? "ok" : "FAIL"});
    }
    if (am)
      print_table({"p", "a", "a(m-a)", "expected", "actual", "match"}, rows);
    else
      print_table({"p", "p mod 9", "expected", "actual", "match"}, rows);
  }

  ////////////////
  // Arguments

  struct Options {
    std::string format = "table";
    std::optional<std::uint64_t> prime_floor;

    // subjects
    std::string rec, init, P, Q = "1", vars, hyp, witness, terms, bfile;
    std::optional<std::int64_t> offset;
    std::optional<long> m;
    std::string scale;

    std::string primes;
    unsigned rmax = 2;
    std::uint64_t nmax = 10, kmax = 3, N = 10;
    std::optional<unsigned> stability_s;
    std::string height_bound = "1000000";
    std::string mode;
    std::string modulus;
    std::string index;
    bool propagate = false;
  };

  void emit(const Options & o, const std::string & text, void (*render)(const json &))
  {
    if (o.format == "json")
      std::cout << text << '\n';
    else
      render(json::parse(text));
  }

  Laurent laurent(const std::string & text, const std::string & vars)
  {
    ctk_laurent * f = nullptr;
    check(ctk_laurent_parse(text.c_str(), vars.empty() ? nullptr : vars.c_str(), &f));
    return Laurent(f);
  }

  // P and Q over one variable list.
  std::pair<Laurent, Laurent> laurent_pair(const Options & o)
  {
    if (o.P.empty())
      throw InputError{"--P is required"};
    std::string vars = o.vars;
    if (vars.empty()) {
      auto both = laurent("(" + o.P + ") + (" + o.Q + ")", "");
      char * names = nullptr;
      check(ctk_laurent_variables(both.get(), &names));
      vars = take(names);
    }
    return {laurent(o.P, vars), laurent(o.Q, vars)};
  }

  CFinite cfinite(const Options & o)
  {
    if (o.rec.empty())
      throw InputError{"--rec is required"};
    ctk_cfinite * s = nullptr;
    check(ctk_cfinite_parse(o.rec.c_str(), o.init.empty() ? nullptr : o.init.c_str(), o.offset.value_or(-1), &s));
    return CFinite(s);
  }

  Hypergeom hypergeom(const Options & o)
  {
    ctk_hypergeom * h = nullptr;
    if (o.m)
      check(ctk_hypergeom_family_am(*o.m, &h));
    else
      check(ctk_hypergeom_parse(o.hyp.c_str(), &h));
    Hypergeom out(h);
    if (!o.scale.empty()) {
      ctk_hypergeom * s = nullptr;
      check(ctk_hypergeom_scale(out.get(), o.scale.c_str(), &s));
      out.reset(s);
    }
    return out;
  }

  bool is_hypergeom_subject(const Options & o) { return o.m.has_value() || !o.hyp.empty(); }

  Evaluator evaluator(const Options & o)
  {
    const int kinds = !o.rec.empty() + !o.P.empty() + is_hypergeom_subject(o);
    if (kinds != 1)
      throw InputError{"give exactly one subject: --rec, --P/--Q, --hyp or --m"};
    ctk_evaluator * e = nullptr;
    if (!o.rec.empty()) {
      auto s = cfinite(o);
      check(ctk_evaluator_from_cfinite(s.get(), &e));
    } else if (!o.P.empty()) {
      auto [P, Q] = laurent_pair(o);
      check(ctk_evaluator_from_ct(P.get(), Q.get(), &e));
    } else {
      auto h = hypergeom(o);
      check(ctk_evaluator_from_hypergeom(h.get(), &e));
    }
    Evaluator out(e);
    if (o.prime_floor)
      check(ctk_evaluator_set_prime_floor(out.get(), *o.prime_floor));
    return out;
  }

  Witness witness(const Options & o)
  {
    ctk_witness * w = nullptr;
    if (!o.witness.empty()) {
      const std::string text = o.witness[0] == '@' ? read_file(o.witness.substr(1)) : o.witness;
      check(ctk_witness_parse(text.c_str(), &w));
    } else if (!o.P.empty()) {
      json spec = json{{"P", o.P}, {"Q", o.Q}};
      if (!o.vars.empty()) {
        std::vector<std::string> names;
        std::stringstream ss(o.vars);
        for (std::string v; std::getline(ss, v, ',');)
          names.push_back(v);
        spec["vars"] = names;
      }
      check(ctk_witness_parse(json::array({spec}).dump().c_str(), &w));
    } else if (o.m) {
      check(ctk_witness_am(*o.m, &w));
    } else {
      throw InputError{"give a witness with --witness, --P/--Q or --m"};
    }
    return Witness(w);
  }

  int verdict_exit(int verdict) { return verdict == 0 ? kOk : kNegative; }

  ///////////
  // Verbs

  int run_ct_eval(const Options & o)
  {
    if (o.index.empty() || !std::all_of(o.index.begin(), o.index.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InputError{"--N must be a nonnegative integer"};
    auto [P, Q] = laurent_pair(o);
    json j;
    j["P"] = o.P;
    j["Q"] = o.Q;
    j["N"] = o.index;
    if (!o.modulus.empty()) {
      std::uint64_t m = 0, v = 0;
      try {
        m = std::stoull(o.modulus);
      } catch (const std::exception &) {
        throw InputError{"malformed --modulus"};
      }
      check(ctk_ct_term_mod(P.get(), Q.get(), o.index.c_str(), m, &v));
      j["modulus"] = m;
      j["value"] = v;
    } else {
      std::uint64_t N = 0;
      try {
        N = std::stoull(o.index);
      } catch (const std::exception &) {
        throw InputError{"--N is too large for exact evaluation; add --modulus"};
      }
      char * s = nullptr;
      check(ctk_ct_sequence(P.get(), Q.get(), N, &s));
      j["value"] = json::parse(take(s)).back();
    }
    if (o.format == "json")
      std::cout << j.dump(2) << '\n';
    else
      std::cout << cell(j["value"]) << '\n';
    return kOk;
  }

  int run_ct_seq(const Options & o)
  {
    auto [P, Q] = laurent_pair(o);
    char * s = nullptr;
    check(ctk_ct_sequence(P.get(), Q.get(), o.N, &s));
    const std::string text = take(s);
    if (o.format == "json") {
      std::cout << text << '\n';
    } else {
      std::vector<std::vector<std::string>> rows;
      const auto a = json::parse(text);
      for (std::size_t n = 0; n < a.size(); ++n)
        rows.push_back({std::to_string(n), cell(a[n])});
      print_table({"n", "ct[P^n Q]"}, rows);
    }
    return kOk;
  }

  int run_analyze(const Options & o)
  {
    auto s = cfinite(o);
    char * out = nullptr;
    check(ctk_cfinite_analyze(s.get(), &out));
    emit(o, take(out), render_analysis);
    return kOk;
  }

  int run_decide(const Options & o)
  {
    auto s = cfinite(o);
    if (!o.mode.empty() && o.mode != "single" && o.mode != "combination")
      throw InputError{"--mode must be single or combination"};
    int representable = 0;
    char * out = nullptr;
    check(ctk_decide(s.get(), o.mode != "single", &representable, &out));
    emit(o, take(out), render_decision);
    return representable ? kOk : kNegative;
  }

  int run_witness(const Options & o)
  {
    auto s = cfinite(o);
    ctk_witness * w = nullptr;
    const ctk_status st = ctk_witness_build(s.get(), &w);
    if (st == CTK_NOT_REPRESENTABLE) {
      if (o.format == "json")
        std::cout << json{{"representable", false}, {"reason", ctk_last_error()}}.dump(2) << '\n';
      else
        std::cout << "not representable: " << ctk_last_error() << '\n';
      return kNegative;
    }
    check(st);
    Witness guard(w);
    char * out = nullptr;
    check(ctk_witness_to_json(w, &out));
    emit(o, take(out), render_witness);
    return kOk;
  }

  int run_verify(const Options & o)
  {
    const int targets = !o.rec.empty() + !o.terms.empty() + !o.bfile.empty();
    if (targets != 1)
      throw InputError{"give exactly one target: --rec, --terms or --bfile"};
    auto w = witness(o);
    int pass = 0;
    char * out = nullptr;
    if (!o.rec.empty()) {
      auto s = cfinite(o);
      check(ctk_witness_verify(s.get(), w.get(), &pass, &out));
    } else if (!o.terms.empty()) {
      check(ctk_witness_verify_terms(o.terms.c_str(), 0, w.get(), &pass, &out));
    } else {
      const std::string text = read_file(o.bfile);
      check(ctk_witness_verify_terms(text.c_str(), 1, w.get(), &pass, &out));
    }
    emit(o, take(out), render_verify);
    return pass ? kOk : kNegative;
  }

  int run_gauss(const Options & o)
  {
    auto e = evaluator(o);
    const auto [lo, hi] = parse_range(o.primes.empty() ? "2..100" : o.primes);
    if (lo > 2) {
      // Primes below lo are excluded by raising the floor.
      ctk_evaluator * raw = e.get();
      if (!o.prime_floor || *o.prime_floor < lo - 1)
        check(ctk_evaluator_set_prime_floor(raw, std::max<std::uint64_t>(lo - 1, o.prime_floor.value_or(0))));
    }
    int verdict = 0;
    char * out = nullptr;
    check(ctk_gauss_check(e.get(), hi, o.rmax, o.nmax, &verdict, &out));
    emit(o, take(out), render_congruence);
    return verdict_exit(verdict);
  }

  int run_falsify(const Options & o)
  {
    const auto [lo, hi] = parse_range(o.primes.empty() ? "7..100" : o.primes);
    int verdict = 0;
    char * out = nullptr;
    if (o.propagate) {
      if (!is_hypergeom_subject(o) || !o.rec.empty() || !o.P.empty())
        throw InputError{"--propagate needs a hypergeometric subject (--hyp or --m)"};
      auto h = hypergeom(o);
      check(ctk_hypergeom_propagation_check(h.get(), lo, hi, o.kmax, &verdict, &out));
    } else {
      auto e = evaluator(o);
      check(ctk_constant_c_falsifier(e.get(), lo, hi, o.kmax, o.height_bound.c_str(), &verdict, &out));
    }
    emit(o, take(out), render_congruence);
    return verdict_exit(verdict);
  }

  int run_ctcheck(const Options & o)
  {
    auto [P, Q] = laurent_pair(o);
    const auto [lo, hi] = parse_range(o.primes.empty() ? "2..50" : o.primes);
    int verdict = 0;
    char * out = nullptr;
    if (o.stability_s) {
      if (*o.stability_s < o.rmax)
        throw InputError{"--stability-s must be >= --rmax"};
      check(ctk_stability_check(P.get(), Q.get(), lo, hi, *o.stability_s, o.rmax, o.nmax, o.kmax, &verdict, &out));
    } else {
      check(ctk_ct_shift_check(P.get(), Q.get(), lo, hi, o.rmax, o.nmax, o.kmax, &verdict, &out));
    }
    emit(o, take(out), render_congruence);
    return verdict_exit(verdict);
  }

  int parse_mode(const Options & o)
  {
    if (o.mode.empty() || o.mode == "exact")
      return 0;
    if (o.mode == "modular")
      return 1;
    throw InputError{"--mode must be exact or modular"};
  }

  int run_hyp_am(const Options & o)
  {
    if (!o.m)
      throw InputError{"--m is required"};
    const auto [lo, hi] = parse_range(o.primes.empty() ? "2..300" : o.primes);
    int consistent = 0;
    char * out = nullptr;
    check(ctk_am_residue_table(*o.m, lo, hi, parse_mode(o), &consistent, &out));
    emit(o, take(out), [](const json & j) { render_residues(j, true); });
    return consistent ? kOk : kNegative;
  }

  int run_hyp_christol(const Options & o)
  {
    const auto [lo, hi] = parse_range(o.primes.empty() ? "2..300" : o.primes);
    int consistent = 0;
    char * out = nullptr;
    check(ctk_christol_table(lo, hi, parse_mode(o), &consistent, &out));
    emit(o, take(out), [](const json & j) { render_residues(j, false); });
    return consistent ? kOk : kNegative;
  }

} // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Constant-term representability of recurrent and hypergeometric sequences"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ctk_version()));

  Options o;

  auto common = [&](CLI::App * sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--prime-floor", o.prime_floor, "Skip primes at or below this value");
  };
  auto rec_opts = [&](CLI::App * sub) {
    sub->add_option("--rec", o.rec, "Recurrence, e.g. \"a(n+2) = a(n+1) + a(n)\"");
    sub->add_option("--init", o.init, "Initial terms, comma separated");
    sub->add_option("--offset", o.offset, "Index from which the recurrence holds")->check(CLI::NonNegativeNumber);
  };
  auto ct_opts = [&](CLI::App * sub) {
    sub->add_option("--P", o.P, "Laurent polynomial P");
    sub->add_option("--Q", o.Q, "Laurent polynomial Q (default 1)");
    sub->add_option("--vars", o.vars, "Variable order, comma separated");
  };
  auto hyp_opts = [&](CLI::App * sub) {
    sub->add_option("--hyp", o.hyp, "Hypergeometric sequence \"alpha: ...; beta: ...; a0: ...\"");
    sub->add_option("--m", o.m, "The family member A_m")->check(CLI::Range(2L, 1000000L));
    sub->add_option("--scale", o.scale, "Multiply term n by scale^n");
  };
  auto grid_opts = [&](CLI::App * sub) {
    sub->add_option("--primes", o.primes, "Prime range lo..hi");
    sub->add_option("--rmax", o.rmax, "Largest prime-power exponent")->check(CLI::Range(1u, 8u));
    sub->add_option("--nmax", o.nmax, "Largest n");
    sub->add_option("--kmax", o.kmax, "Largest shift k");
  };

  auto * ct_eval = app.add_subcommand("ct-eval", "ct[P^N Q], exactly or modulo --modulus");
  ct_opts(ct_eval);
  common(ct_eval);
  ct_eval->add_option("--N", o.index, "Power (any size with --modulus)")->required();
  ct_eval->add_option("--modulus", o.modulus, "Reduce modulo this integer");

  auto * ct_seq = app.add_subcommand("ct-seq", "ct[P^n Q] for n = 0..N");
  ct_opts(ct_seq);
  common(ct_seq);
  ct_seq->add_option("--N", o.N, "Last index")->required();

  auto * analyze = app.add_subcommand("analyze", "Annihilator, roots, trace form, separable part");
  rec_opts(analyze);
  common(analyze);

  auto * decide = app.add_subcommand("decide", "Decide constant-term representability");
  rec_opts(decide);
  common(decide);
  decide->add_option("--mode", o.mode, "single or combination (default)");

  auto * witness_cmd = app.add_subcommand("witness", "Build a constant-term witness");
  rec_opts(witness_cmd);
  common(witness_cmd);

  auto * verify = app.add_subcommand("verify", "Check a witness against a sequence");
  rec_opts(verify);
  ct_opts(verify);
  common(verify);
  verify->add_option("--witness", o.witness, "Witness JSON, or @file");
  verify->add_option("--m", o.m, "Use the A_m witness")->check(CLI::Range(2L, 1000000L));
  verify->add_option("--terms", o.terms, "Expected terms from index 0, comma separated");
  verify->add_option("--bfile", o.bfile, "Expected terms from a b-file");

  auto * gauss = app.add_subcommand("gauss", "Gauss congruences A(p^r n) = A(p^{r-1} n) mod p^r");
  rec_opts(gauss);
  ct_opts(gauss);
  hyp_opts(gauss);
  grid_opts(gauss);
  common(gauss);

  auto * falsify = app.add_subcommand("falsify", "Search for c with A(p + k) = c A(k) mod p");
  rec_opts(falsify);
  ct_opts(falsify);
  hyp_opts(falsify);
  grid_opts(falsify);
  common(falsify);
  falsify->add_option("--height-bound", o.height_bound, "Height bound for c");
  falsify->add_flag("--propagate", o.propagate, "Per-prime constant propagation (hypergeometric subjects)");

  auto * ctcheck = app.add_subcommand("ctcheck", "A(p^r n + k) = A(k) ct[P^{p^{r-1} n}] mod p^r");
  ct_opts(ctcheck);
  grid_opts(ctcheck);
  common(ctcheck);
  ctcheck->add_option("--stability-s", o.stability_s, "Check A(p^s n + k) = A(p^r n + k) mod p^r instead")
    ->check(CLI::Range(1u, 8u));

  auto * hyp_am = app.add_subcommand("hyp-am", "m^{2p} A_m(p) mod p against a(m - a)");
  common(hyp_am);
  hyp_am->add_option("--m", o.m, "Family member")->required()->check(CLI::Range(2L, 1000000L));
  hyp_am->add_option("--primes", o.primes, "Prime range lo..hi");
  hyp_am->add_option("--mode", o.mode, "exact (default) or modular");

  auto * hyp_christol = app.add_subcommand("hyp-christol", "3^{5p} A(p) mod p for p = +-1 mod 9");
  common(hyp_christol);
  hyp_christol->add_option("--primes", o.primes, "Prime range lo..hi");
  hyp_christol->add_option("--mode", o.mode, "exact (default) or modular");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp & e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion & e) {
    return app.exit(e);
  } catch (const CLI::ParseError & e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*ct_eval)
      return run_ct_eval(o);
    if (*ct_seq)
      return run_ct_seq(o);
    if (*analyze)
      return run_analyze(o);
    if (*decide)
      return run_decide(o);
    if (*witness_cmd)
      return run_witness(o);
    if (*verify)
      return run_verify(o);
    if (*gauss)
      return run_gauss(o);
    if (*falsify)
      return run_falsify(o);
    if (*ctcheck)
      return run_ctcheck(o);
    if (*hyp_am)
      return run_hyp_am(o);
    if (*hyp_christol)
      return run_hyp_christol(o);
  } catch (const InputError & e) {
    std::cerr << "error: " << e.message << '\n';
    return kInputError;
  } catch (const CallError & e) {
    std::cerr << "error (" << ctk_status_name(e.status) << "): " << e.message << '\n';
    return kInputError;
  } catch (const json::exception & e) {
    std::cerr << "error: malformed report: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
