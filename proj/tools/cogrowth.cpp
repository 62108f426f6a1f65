// Command-line front end: series, oracle, poly, verify, rate, repro.
//
// Exit codes: 0 success, 1 internal failure (or failed verification /
// acceptance), 2 invalid arguments.

#include "cogrowth/algebraic.hpp"
#include "cogrowth/error.hpp"
#include "cogrowth/oracle.hpp"
#include "cogrowth/rate.hpp"
#include "cogrowth/repro.hpp"
#include "cogrowth/solver.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace cogrowth;
using nlohmann::ordered_json;

namespace {

enum class Output { text, csv, json };

const std::map<std::string, Output> kOutputNames{
    {"text", Output::text}, {"csv", Output::csv}, {"json", Output::json}};

struct Common {
  long N = 0;
  long M = 0;
  std::optional<std::string> out_path;
};

/// Writes to --out when given, stdout otherwise.
void emit(const std::optional<std::string> &path, const std::string &text) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream f(*path);
  if (!f)
    throw InvalidArgument("cannot open output file " + *path);
  f << text;
  if (!f)
    throw InternalError("failed writing " + *path);
}

std::string join(const std::vector<Integer> &v, const char *sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += sep;
    s += v[i].get_str();
  }
  return s;
}

ordered_json spec_json(const GroupSpec &spec) {
  return {{"N", spec.N}, {"M", spec.M}};
}

ordered_json strings(const std::vector<Integer> &v) {
  ordered_json a = ordered_json::array();
  for (const auto &x : v)
    a.push_back(x.get_str());
  return a;
}

// ---------------------------------------------------------------- series

struct SeriesArgs {
  int order = -1;
  std::string gf = "G";
  bool q0 = false, q1 = false, symbolic = false;
  Output output = Output::text;
};

int cmd_series(const Common &c, const SeriesArgs &a) {
  const GroupSpec spec(c.N, c.M);
  const int order = a.order >= 0 ? a.order : (spec.symmetric() ? 24 : 16);
  if ((a.q0 ? 1 : 0) + (a.q1 ? 1 : 0) + (a.symbolic ? 1 : 0) > 1)
    throw InvalidArgument("choose at most one of --q0, --q1, --symbolic");
  const std::string mode = a.q0 ? "q0" : a.q1 ? "q1" : "symbolic";

  const SolveResult s = spec.symmetric() ? solve_symmetric(spec.N, order)
                                         : solve(spec, order);
  const TruncatedSeries &S = a.gf == "L" ? s.L : a.gf == "K" ? s.K : s.G;

  std::ostringstream os;
  if (mode != "symbolic") {
    const std::vector<Integer> v = mode == "q0" ? diagonal_q0(S) : eval_q1(S);
    switch (a.output) {
    case Output::text:
      os << join(v, ",") << '\n';
      break;
    case Output::csv:
      os << "n,count\n";
      for (std::size_t n = 0; n < v.size(); ++n)
        os << n << ',' << v[n].get_str() << '\n';
      break;
    case Output::json: {
      ordered_json j{{"spec", spec_json(spec)},
                     {"gf", a.gf},
                     {"order", order},
                     {"mode", mode},
                     {"values", strings(v)}};
      os << j.dump(2) << '\n';
      break;
    }
    }
  } else {
    switch (a.output) {
    case Output::text:
      for (int n = 0; n <= order; ++n)
        os << n << ": " << S[n].to_string() << '\n';
      break;
    case Output::csv:
      os << "n,k,count\n";
      for (int n = 0; n <= order; ++n)
        for (const auto &[k, v] : S[n].terms())
          os << n << ',' << k.get_str() << ',' << v.get_str() << '\n';
      break;
    case Output::json: {
      ordered_json rows = ordered_json::array();
      for (int n = 0; n <= order; ++n) {
        ordered_json terms = ordered_json::array();
        for (const auto &[k, v] : S[n].terms())
          terms.push_back({{"k", k.get_str()}, {"count", v.get_str()}});
        rows.push_back({{"n", n}, {"terms", std::move(terms)}});
      }
      ordered_json j{{"spec", spec_json(spec)},
                     {"gf", a.gf},
                     {"order", order},
                     {"mode", mode},
                     {"coefficients", std::move(rows)}};
      os << j.dump(2) << '\n';
      break;
    }
    }
  }
  emit(c.out_path, os.str());
  return 0;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  int nmax = 10;
  std::string family = "g";
  Output output = Output::csv;
};

int cmd_oracle(const Common &c, const OracleArgs &a) {
  const GroupSpec spec(c.N, c.M);
  const Family f = parse_family(a.family);
  if (a.nmax < 0)
    throw InvalidArgument("--nmax must be non-negative");
  const CountTable t = count_tables(spec, a.nmax);
  std::ostringstream os;
  if (a.output == Output::json) {
    ordered_json rows = ordered_json::array();
    for (int n = 0; n <= a.nmax; ++n) {
      if (f == Family::d) {
        rows.push_back({{"n", n}, {"count", t.d[n].get_str()}});
        continue;
      }
      for (const auto &[k, v] : t.row(f, n))
        rows.push_back({{"n", n}, {"k", k.get_str()}, {"count", v.get_str()}});
    }
    ordered_json j{{"spec", spec_json(spec)},
                   {"family", family_name(f)},
                   {"nmax", a.nmax},
                   {"rows", std::move(rows)}};
    os << j.dump(2) << '\n';
  } else {
    const char sep = a.output == Output::csv ? ',' : ' ';
    os << (f == Family::d ? std::string("n") + sep + "count"
                          : std::string("n") + sep + "k" + sep + "count")
       << '\n';
    for (int n = 0; n <= a.nmax; ++n) {
      if (f == Family::d) {
        os << n << sep << t.d[n].get_str() << '\n';
        continue;
      }
      for (const auto &[k, v] : t.row(f, n))
        os << n << sep << k.get_str() << sep << v.get_str() << '\n';
    }
  }
  emit(c.out_path, os.str());
  return 0;
}

// ---------------------------------------------------------------- poly

int cmd_poly(const Common &c, bool allow_large, Output output) {
  const IntMultiPoly p = build_G_poly(c.N, allow_large);
  std::ostringstream os;
  if (output == Output::json) {
    ordered_json terms = ordered_json::array();
    for (const auto &[e, v] : p.terms())
      terms.push_back({{"exponents", e}, {"coeff", v.get_str()}});
    ordered_json j{{"N", c.N},
                   {"variables", p.variables()},
                   {"degree_G", p.degree(0)},
                   {"text", to_canonical_text(p)},
                   {"terms", std::move(terms)}};
    os << j.dump(2) << '\n';
  } else {
    os << to_canonical_text(p) << '\n';
  }
  emit(c.out_path, os.str());
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const Common &c, int order, const std::optional<std::string> &q,
               bool allow_large) {
  if (order < 0)
    throw InvalidArgument("--order must be non-negative");
  QValue qv = SymbolicQ{};
  if (q) {
    Rational r;
    if (r.set_str(*q, 10) != 0)
      throw InvalidArgument("--q expects a rational such as 1 or 2/3");
    r.canonicalize();
    if (sgn(r) == 0)
      throw InvalidArgument("--q must be nonzero");
    qv = r;
  }
  const IntMultiPoly p = build_G_poly(c.N, allow_large);
  const SolveResult s = solve_symmetric(c.N, order);
  const VerifyOutcome v = verify_series(p, s.G, qv, order);
  std::ostringstream os;
  if (v.ok)
    os << "ok: BS(" << c.N << ',' << c.N << ") G satisfies its equation through z^"
       << order << '\n';
  else
    os << "mismatch: first nonzero residual at z^" << v.first_failing_degree
       << '\n';
  emit(c.out_path, os.str());
  return v.ok ? 0 : 1;
}

// ---------------------------------------------------------------- rate

int cmd_rate(const Common &c, const std::string &method, int order,
             const std::string &correction, bool allow_large, Output output) {
  const RateMethod m = parse_method(method);
  const RateResult r =
      m == RateMethod::discriminant
          ? rate_discriminant(static_cast<int>(c.N), allow_large)
          : rate_ratio_result(static_cast<int>(c.N), order < 0 ? 24 : order,
                              parse_correction(correction));
  std::ostringstream os;
  if (output == Output::text) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "mu=%.9f lambda=%.9f", r.mu, r.lambda);
    os << buf << '\n';
  } else {
    os << r.to_json() << '\n';
  }
  emit(c.out_path, os.str());
  return 0;
}

// ---------------------------------------------------------------- repro

int cmd_repro(const std::optional<std::string> &out_path, bool verbose) {
  const auto results = run_acceptance([&](const CriterionResult &r) {
    std::cout << summary_line(r) << std::endl;
    if (verbose || !r.passed)
      for (const auto &d : r.details)
        std::cout << "    " << d << '\n';
  });
  if (out_path)
    emit(out_path, report_json(results) + "\n");
  for (const auto &r : results)
    if (!r.passed)
      return 1;
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Cogrowth series and rates of Baumslag-Solitar groups BS(N,M)"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  Common common;
  auto add_group = [&](CLI::App *sub, bool needs_m) {
    sub->add_option("--N", common.N, "First relator exponent (N >= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    if (needs_m)
      sub->add_option("--M", common.M, "Second relator exponent (M >= 1)")
          ->required()
          ->check(CLI::PositiveNumber);
    sub->add_option("--out", common.out_path, "Write output to this file");
  };
  auto add_output = [&](CLI::App *sub, Output &target) {
    sub->add_option("--output", target, "Output format: text, csv or json")
        ->transform(CLI::CheckedTransformer(kOutputNames, CLI::ignore_case));
  };

  SeriesArgs series;
  auto *s = app.add_subcommand("series", "Print L, K or G from the functional equations");
  add_group(s, true);
  s->add_option("--order", series.order,
                "Truncation order in z (default 24 if N=M, else 16)")
      ->check(CLI::NonNegativeNumber);
  s->add_option("--gf", series.gf, "Generating function: G, L or K")
      ->check(CLI::IsMember({"G", "L", "K"}));
  s->add_flag("--q0", series.q0, "Constant term in q (the cogrowth sequence)");
  s->add_flag("--q1", series.q1, "Evaluate at q = 1");
  s->add_flag("--symbolic", series.symbolic, "Full Laurent coefficients (default)");
  add_output(s, series.output);

  OracleArgs oracle;
  auto *o = app.add_subcommand("oracle", "Count words by brute-force dynamic programming");
  add_group(o, true);
  o->add_option("--nmax", oracle.nmax, "Maximum word length")->required();
  o->add_option("--family", oracle.family, "Count family: g, l, k or d")
      ->check(CLI::IsMember({"g", "l", "k", "d"}));
  add_output(o, oracle.output);

  bool allow_large = false;
  Output poly_output = Output::text;
  auto *p = app.add_subcommand("poly", "Algebraic equation for G(z;q) in BS(N,N)");
  add_group(p, false);
  p->add_flag("--allow-large", allow_large, "Permit N beyond the default cap");
  add_output(p, poly_output);

  int verify_order = 16;
  std::optional<std::string> verify_q;
  auto *v = app.add_subcommand("verify", "Check the equation against the solver series");
  add_group(v, false);
  v->add_option("--order", verify_order, "Truncation order in z");
  v->add_option("--q", verify_q, "Rational value for q (default: symbolic)");
  v->add_flag("--allow-large", allow_large, "Permit N beyond the default cap");

  std::string method = "discriminant";
  std::string correction = "n2";
  int rate_order = -1;
  Output rate_output = Output::json;
  auto *r = app.add_subcommand("rate", "Cogrowth rate mu and reduced rate lambda of BS(N,N)");
  add_group(r, false);
  r->add_option("--method", method, "discriminant or ratio")
      ->check(CLI::IsMember({"discriminant", "ratio"}));
  r->add_option("--order", rate_order, "Series order for --method ratio (default 24)");
  r->add_option("--correction", correction, "Ratio correction: n2 or none")
      ->check(CLI::IsMember({"n2", "none"}));
  r->add_flag("--allow-large", allow_large, "Permit N beyond the default cap");
  add_output(r, rate_output);

  std::optional<std::string> repro_out;
  bool verbose = false;
  auto *rp = app.add_subcommand("repro", "Run the acceptance suite and write a report");
  rp->add_option("--out", repro_out, "Write the JSON report to this file");
  rp->add_flag("--verbose", verbose, "Print every individual check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  try {
    if (s->parsed())
      return cmd_series(common, series);
    if (o->parsed())
      return cmd_oracle(common, oracle);
    if (p->parsed())
      return cmd_poly(common, allow_large, poly_output);
    if (v->parsed())
      return cmd_verify(common, verify_order, verify_q, allow_large);
    if (r->parsed())
      return cmd_rate(common, method, rate_order, correction, allow_large,
                      rate_output);
    if (rp->parsed())
      return cmd_repro(repro_out, verbose);
  } catch (const InvalidArgument &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
