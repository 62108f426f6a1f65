#include "cogrowth/repro.hpp"

#include "cogrowth/algebraic.hpp"
#include "cogrowth/error.hpp"
#include "cogrowth/oracle.hpp"
#include "cogrowth/rate.hpp"
#include "cogrowth/rational_series.hpp"
#include "cogrowth/reference.hpp"
#include "cogrowth/solver.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <sstream>

namespace cogrowth {

namespace {

using namespace acceptance;

/// Collects individual checks of one criterion.
class Checks {
public:
  void check(bool ok, const std::string &what) {
    passed_ = passed_ && ok;
    details_.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string &what) { details_.push_back("info " + what); }
  bool passed() const { return passed_; }
  std::vector<std::string> take() { return std::move(details_); }

private:
  bool passed_ = true;
  std::vector<std::string> details_;
};

std::string fmt(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

const std::vector<GroupSpec> &oracle_groups() {
  static const std::vector<GroupSpec> groups{
      {1, 1}, {2, 2}, {3, 3}, {2, 1}, {2, 3}};
  return groups;
}

LaurentPoly row_poly(const std::map<Integer, Integer> &row) {
  std::vector<LaurentPoly::Term> terms(row.begin(), row.end());
  return LaurentPoly::from_terms(std::move(terms));
}

void criterion1(Checks &c) {
  const int order = 20;
  const auto solver = cogrowth_coeffs(GroupSpec(1, 1), order);
  bool closed = true;
  for (int n = 0; n <= order; ++n) {
    Integer expect = 0;
    if (n % 2 == 0) {
      Integer b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                   static_cast<unsigned long>(n / 2));
      expect = b * b;
    }
    closed = closed && solver[static_cast<std::size_t>(n)] == expect;
  }
  c.check(closed, "cogrowth_coeffs(BS(1,1), 20) equals C(n,n/2)^2 / 0");
  bool rec = true;
  for (int n = 0; n + 2 <= order; n += 2)
    rec = rec && Integer(n / 2 + 1) * Integer(n / 2 + 1) *
                         solver[static_cast<std::size_t>(n + 2)] ==
                     4 * Integer(n + 1) * Integer(n + 1) *
                         solver[static_cast<std::size_t>(n)];
  c.check(rec, "(n/2+1)^2 c(n+2) = 4(n+1)^2 c(n) for even n <= 18");
  c.check(bs11_exact(order) == solver, "bs11_exact(20) equals solver output");
}

void criterion2(Checks &c) {
  const int n_max = kOracleCheckN;
  for (const auto &spec : oracle_groups()) {
    const SolveResult s = solve(spec, n_max);
    const CountTable t = count_tables(spec, n_max);
    const std::pair<Family, const TruncatedSeries *> families[] = {
        {Family::g, &s.G}, {Family::l, &s.L}, {Family::k, &s.K}};
    for (const auto &[f, series] : families) {
      int bad = -1;
      for (int n = 0; n <= n_max && bad < 0; ++n)
        if (!((*series)[n] == row_poly(t.row(f, n))))
          bad = n;
      c.check(bad < 0, spec.to_string() + " " + family_name(f) +
                           ": solver equals oracle for all n <= " +
                           std::to_string(n_max) +
                           (bad < 0 ? "" : " (first mismatch n=" +
                                               std::to_string(bad) + ")"));
    }
  }
}

void criterion3(Checks &c) {
  for (int N = 2; N <= 5; ++N) {
    const IntMultiPoly built = build_G_poly(N);
    const IntMultiPoly printed = canonical_form(parse_polynomial(
        *reference::reference_G_equation(N), {"G", "z", "Q"}));
    c.check(built == printed, "N=" + std::to_string(N) +
                                  ": constructed equation equals the "
                                  "reference equation after normalization");
    const auto v = verify_series(built, solve_symmetric(N, kVerifyOrder).G,
                                 SymbolicQ{}, kVerifyOrder);
    c.check(v.ok, "N=" + std::to_string(N) +
                      ": G(z;q) satisfies the equation through z^" +
                      std::to_string(kVerifyOrder) + " (symbolic q)");
  }
}

void criterion4(Checks &c) {
  for (int N = 1; N <= 5; ++N) {
    const auto ref = *reference::table_row(N);
    const RateResult r = rate_discriminant(N);
    const double dmu = std::fabs(r.mu - ref.mu);
    const double dl = std::fabs(r.lambda - ref.lambda);
    c.check(dmu <= kMuTolerance, "N=" + std::to_string(N) + ": mu=" +
                                     fmt(r.mu, 12) + " table " +
                                     fmt(ref.mu, 10) + " |d|=" + fmt(dmu, 2) +
                                     " <= " + fmt(kMuTolerance, 2));
    c.check(dl <= kLambdaTolerance,
            "N=" + std::to_string(N) + ": lambda=" + fmt(r.lambda, 12) +
                " table " + fmt(ref.lambda, 10) + " |d|=" + fmt(dl, 2) +
                " <= " + fmt(kLambdaTolerance, 2));
    if (dl > kLambdaTolerance)
      c.note("N=" + std::to_string(N) + ": table lambda corresponds to mu=" +
             fmt(mu_from_lambda(ref.lambda), 12) +
             " under mu = lambda + 3/lambda; exact mu is " + fmt(r.mu, 12));
  }
}

void criterion5(Checks &c) {
  double previous = 4.0;
  bool monotone = true;
  for (int N = 2; N <= 6; ++N) {
    const auto ref = *reference::table_row(N);
    const double mu = rate_ratio(cogrowth_coeffs(GroupSpec(N, N), kRatioOrder),
                                 RatioCorrection::n2);
    const double rel = std::fabs(mu - ref.mu) / ref.mu;
    c.check(rel <= kRatioRelativeTolerance,
            "N=" + std::to_string(N) + ": ratio estimate " + fmt(mu, 8) +
                " vs " + fmt(ref.mu, 10) + " relative error " + fmt(rel, 3));
    monotone = monotone && mu < previous && mu > reference::kFreeGroupMu;
    previous = mu;
  }
  c.check(monotone, "estimates decrease with N and stay above sqrt(12)");
}

void criterion6(Checks &c) {
  const int n_max = 2 * kPropertyN;
  for (const auto &spec : oracle_groups()) {
    const CountTable t = count_tables(spec, n_max);
    const std::string name = spec.to_string();
    bool sym = true, vanish = true, parity = true, star = true, square = true;
    for (int n = 0; n <= n_max; ++n)
      for (const auto &[k, v] : t.row(Family::g, n)) {
        sym = sym && t.get(Family::g, n, -k) == v;
        if (spec.symmetric()) {
          vanish = vanish && abs(k) <= n;
          parity = parity && mpz_even_p(Integer(n - k).get_mpz_t());
        }
      }
    for (int n = 0; n <= kPropertyN; ++n) {
      const auto [kstar, gstar] = most_popular(t, n);
      const Integer gn = t.total(n);
      if (spec.symmetric())
        star = star && gstar <= gn && gn <= (2 * n + 1) * gstar;
      square = square && gstar * gstar <= t.get(Family::g, 2 * n, 0);
    }
    c.check(sym, name + ": g(n,k) = g(n,-k) for n <= " + std::to_string(n_max));
    if (spec.symmetric()) {
      c.check(vanish, name + ": g(n,k) = 0 for |k| > n");
      c.check(parity, name + ": g(n,k) = 0 unless n = k mod 2");
      c.check(star, name + ": g(n,k*) <= g(n) <= (2n+1) g(n,k*) for n <= " +
                        std::to_string(kPropertyN));
    }
    c.check(square, name + ": g(n,k*)^2 <= g(2n,0) for n <= " +
                        std::to_string(kPropertyN));
    const SolveResult s = solve(spec, kOracleCheckN);
    if (spec.symmetric())
      c.check(s.L == s.K,
              name + ": L = K identically");
    else
      c.check(check_LK_q1(spec, kOracleCheckN), name + ": L(z;1) = K(z;1)");
  }
}

void criterion7(Checks &c) {
  const int n = kReducedCheckN;
  const auto C = RationalSeries::from_integers(
      cogrowth_coeffs(GroupSpec(2, 2), n));
  const auto D = reduced_from_all(C, 2).to_integers();
  const CountTable t = count_tables(GroupSpec(2, 2), n);
  c.check(D == t.d, "BS(2,2): reduced_from_all(C) equals oracle d(n) for n <= " +
                        std::to_string(n));
  const auto C20 = RationalSeries::from_integers(
      cogrowth_coeffs(GroupSpec(2, 2), kRoundTripOrder));
  c.check(all_from_reduced(reduced_from_all(C20, 2), 2) == C20,
          "BS(2,2): inverse transform recovers C through z^" +
              std::to_string(kRoundTripOrder));
}

struct Definition {
  const char *title;
  double budget_seconds;
  void (*run)(Checks &);
};

const Definition kCriteria[] = {
    {"BS(1,1) exactness", 1, criterion1},
    {"oracle equivalence of G, L, K", 300, criterion2},
    {"reference equations for N=2..5", 120, criterion3},
    {"rate table via the discriminant (N=1..5)", 300, criterion4},
    {"rate table trend via ratio extrapolation (N=2..6)", 600, criterion5},
    {"property suite", 300, criterion6},
    {"reduced-word transform", 300, criterion7},
};

} // namespace

CriterionResult run_criterion(int id) {
  if (id < kFirstCriterion || id > kLastCriterion)
    throw InvalidArgument("acceptance criteria are numbered " +
                          std::to_string(kFirstCriterion) + ".." +
                          std::to_string(kLastCriterion));
  const Definition &def = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = def.title;
  r.budget_seconds = def.budget_seconds;
  Checks checks;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    def.run(checks);
  } catch (const std::exception &e) {
    checks.check(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0)
                  .count();
  checks.check(r.seconds <= r.budget_seconds,
               "runtime " + fmt(r.seconds, 3) + " s within " +
                   fmt(r.budget_seconds, 3) + " s");
  r.passed = checks.passed();
  r.details = checks.take();
  return r;
}

std::vector<CriterionResult>
run_acceptance(const std::function<void(const CriterionResult &)> &on_done) {
  std::vector<CriterionResult> out;
  for (int id = kFirstCriterion; id <= kLastCriterion; ++id) {
    out.push_back(run_criterion(id));
    if (on_done)
      on_done(out.back());
  }
  return out;
}

std::string summary_line(const CriterionResult &r) {
  std::ostringstream os;
  os << "criterion " << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << ' '
     << r.title << " (" << fmt(r.seconds, 3) << " s)";
  return os.str();
}

std::string report_json(const std::vector<CriterionResult> &results) {
  nlohmann::ordered_json j;
  j["criteria"] = nlohmann::json::array();
  bool all = true;
  for (const auto &r : results) {
    all = all && r.passed;
    nlohmann::ordered_json e;
    e["id"] = r.id;
    e["title"] = r.title;
    e["passed"] = r.passed;
    e["seconds"] = r.seconds;
    e["budget_seconds"] = r.budget_seconds;
    e["details"] = r.details;
    j["criteria"].push_back(std::move(e));
  }
  j["passed"] = all;
  return j.dump(2);
}

} // namespace cogrowth
