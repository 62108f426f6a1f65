#include "cogrowth/rate.hpp"

#include "cogrowth/algebraic.hpp"
#include "cogrowth/error.hpp"
#include "cogrowth/solver.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace cogrowth {

std::string method_name(RateMethod m) {
  return m == RateMethod::discriminant ? "discriminant" : "ratio";
}

RateMethod parse_method(const std::string &name) {
  if (name == "discriminant")
    return RateMethod::discriminant;
  if (name == "ratio")
    return RateMethod::ratio;
  throw InvalidArgument("unknown rate method '" + name +
                        "' (expected discriminant or ratio)");
}

RatioCorrection parse_correction(const std::string &name) {
  if (name == "none")
    return RatioCorrection::none;
  if (name == "n2")
    return RatioCorrection::n2;
  throw InvalidArgument("unknown ratio correction '" + name +
                        "' (expected none or n2)");
}

std::string RateResult::to_json() const {
  nlohmann::ordered_json j;
  j["N"] = N;
  j["method"] = method_name(method);
  j["z_c"] = {{"lo", z_lo.get_str()}, {"hi", z_hi.get_str()}};
  j["mu"] = mu;
  j["lambda"] = lambda;
  j["digits"] = digits;
  return j.dump(2);
}

double lambda_from_mu(double mu) {
  const double lo = std::sqrt(12.0);
  // Tolerate rounding at the ends of the range.
  const double slack = 1e-12;
  if (!(mu >= lo - slack && mu <= 4.0 + slack))
    throw InvalidArgument("mu must lie in [sqrt(12), 4]");
  const double disc = std::max(0.0, mu * mu - 12.0);
  return (mu + std::sqrt(disc)) / 2.0;
}

double mu_from_lambda(double lambda) {
  const double slack = 1e-12;
  if (!(lambda >= std::sqrt(3.0) - slack && lambda <= 3.0 + slack))
    throw InvalidArgument("lambda must lie in [sqrt(3), 3]");
  return lambda + 3.0 / lambda;
}

std::vector<Integer> bs11_exact(int nmax) {
  if (nmax < 0)
    throw InvalidArgument("nmax must be non-negative");
  std::vector<Integer> c(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; n += 2) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(n / 2));
    c[static_cast<std::size_t>(n)] = b * b;
  }
  for (int n = 0; n + 2 <= nmax; n += 2) {
    const Integer lhs = Integer(n / 2 + 1) * Integer(n / 2 + 1) *
                        c[static_cast<std::size_t>(n + 2)];
    const Integer rhs =
        4 * Integer(n + 1) * Integer(n + 1) * c[static_cast<std::size_t>(n)];
    if (lhs != rhs)
      throw InternalError("BS(1,1) recurrence fails at n = " +
                          std::to_string(n));
  }
  return c;
}

namespace {

using Real = long double;

Real to_real(const Rational &r) {
  // Enough for the ~1e-20 intervals used here; long double keeps 18 digits.
  return static_cast<Real>(r.get_d()) +
         static_cast<Real>(Rational(r - Rational(r.get_d())).get_d());
}

struct Branch {
  const std::vector<ZPoly> &P;

  std::vector<Real> coeffs_at(Real z) const {
    std::vector<Real> c;
    c.reserve(P.size());
    for (const auto &p : P) {
      Real acc = 0;
      for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * z + static_cast<Real>(it->get_d());
      c.push_back(acc);
    }
    return c;
  }
  std::vector<Real> dcoeffs_at(Real z) const {
    std::vector<Real> c;
    c.reserve(P.size());
    for (const auto &p : P) {
      const ZPoly d = p.derivative();
      Real acc = 0;
      for (auto it = d.coeffs().rbegin(); it != d.coeffs().rend(); ++it)
        acc = acc * z + static_cast<Real>(it->get_d());
      c.push_back(acc);
    }
    return c;
  }
  static Real value(const std::vector<Real> &c, Real G) {
    Real acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
      acc = acc * G + *it;
    return acc;
  }
  static Real dG(const std::vector<Real> &c, Real G) {
    Real acc = 0;
    for (std::size_t i = c.size(); i-- > 1;)
      acc = acc * G + static_cast<Real>(i) * c[i];
    return acc;
  }
  /// |dP/dG| relative to the size of its terms; tends to 0 at a branch
  /// point of the tracked root.
  static Real normalized_dG(const std::vector<Real> &c, Real G) {
    Real scale = 0;
    Real pw = 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
      scale += static_cast<Real>(i) * std::fabs(c[i]) * pw;
      pw *= std::fabs(G);
    }
    return scale == 0 ? 0 : std::fabs(dG(c, G)) / scale;
  }

  /// Follows the root with G(0) = 1 from z to target (predictor along
  /// dG/dz, Newton corrector), with steps shrinking towards target.
  Real track(Real z, Real G, Real target, Real final_point) const {
    while (z < target) {
      Real h = std::min<Real>(1e-3, (final_point - z) / 4);
      if (z + h > target)
        h = target - z;
      const auto c = coeffs_at(z);
      const auto dc = dcoeffs_at(z);
      const Real slope = -value(dc, G) / dG(c, G);
      Real g = G + h * slope;
      z += h;
      const auto cn = coeffs_at(z);
      for (int it = 0; it < 50; ++it) {
        const Real step = value(cn, g) / dG(cn, g);
        g -= step;
        if (std::fabs(step) <= 1e-16L * std::max<Real>(1, std::fabs(g)))
          break;
      }
      G = g;
    }
    return G;
  }
};

/// Whether the branch through G(0) = 1 is singular at the candidate z0
/// (known to high precision): compares the tracked root at distances 1e-6
/// and 1e-8 (relative) below z0. At a branch point the normalized dP/dG
/// shrinks like the square root of the distance; at a pole or an infinite
/// branch |G| grows; at a regular point neither changes appreciably.
bool branch_singular_at(const std::vector<ZPoly> &P, Real z0) {
  const Branch b{P};
  const Real z1 = z0 * (1 - 1e-6L);
  const Real z2 = z0 * (1 - 1e-8L);
  const Real G1 = b.track(0, 1, z1, z0);
  const Real G2 = b.track(z1, G1, z2, z0);
  if (!std::isfinite(G1) || !std::isfinite(G2))
    return true;
  const Real d1 = Branch::normalized_dG(b.coeffs_at(z1), G1);
  const Real d2 = Branch::normalized_dG(b.coeffs_at(z2), G2);
  if (d2 < 0.5L * d1)
    return true;
  return std::fabs(G2) > 2 * std::fabs(G1);
}

int certified_digits(const Rational &lo, const Rational &hi) {
  if (lo == hi)
    return std::numeric_limits<double>::digits10;
  const double rel = Rational((hi - lo) / lo).get_d();
  const int d = static_cast<int>(std::floor(-std::log10(rel)));
  return std::clamp(d, 0, std::numeric_limits<double>::digits10);
}

// (0, 1/sqrt(12)] is contained in (0, 2887/10000]; the exact bound is
// enforced by 12 z^2 <= 1 on the candidate.
const Rational kSearchHi(2887, 10000);

// Isolation width for candidates: far below the 1e-9 accuracy required.
const Rational kIsolationWidth(1, Integer("100000000000000000000"));

} // namespace

DiscriminantData discriminant_data(int N, bool allow_large) {
  if (N < 1)
    throw InvalidArgument("N must be positive");
  if (N > kDefaultMaxRateN && !allow_large)
    throw InvalidArgument("exact rate for N > " +
                          std::to_string(kDefaultMaxRateN) +
                          " is expensive; pass allow_large to proceed");
  DiscriminantData out;
  out.P = specialize_Q(build_G_poly(N, true), Integer(2));
  if (out.P.size() < 2)
    throw InternalError("equation for G has no G-dependence");
  std::vector<ZPoly> dP;
  for (std::size_t i = 1; i < out.P.size(); ++i)
    dP.push_back(Integer(static_cast<long>(i)) * out.P[i]);
  out.discriminant = resultant_over_z(out.P, dP);

  std::vector<RootInterval> cands;
  for (const ZPoly &f : {out.discriminant, out.P.back()}) {
    if (f.is_zero())
      throw InternalError("vanishing discriminant or leading coefficient");
    const ZPoly sf = square_free_part(f);
    if (sf.degree() < 1)
      continue;
    for (const auto &r :
         isolate_real_roots(sf, Rational(0), kSearchHi, kIsolationWidth))
      if (12 * r.lo * r.lo <= 1)
        cands.push_back(r);
  }
  std::sort(cands.begin(), cands.end(),
            [](const RootInterval &a, const RootInterval &b) {
              return a.lo < b.lo;
            });
  // Merge duplicates shared by the two sources.
  for (const auto &r : cands)
    if (out.candidates.empty() || out.candidates.back().hi < r.lo)
      out.candidates.push_back(r);
    else {
      auto &last = out.candidates.back();
      last.lo = std::max(last.lo, r.lo);
      last.hi = std::min(last.hi, r.hi);
    }
  return out;
}

RateResult rate_discriminant(int N, bool allow_large) {
  const DiscriminantData data = discriminant_data(N, allow_large);
  const RootInterval *chosen = nullptr;
  for (const auto &c : data.candidates) {
    const Real z0 = to_real((c.lo + c.hi) / 2);
    if (branch_singular_at(data.P, z0)) {
      chosen = &c;
      break;
    }
  }
  if (chosen == nullptr)
    throw InternalError("no singular candidate in (0, 1/sqrt(12)] for BS(" +
                        std::to_string(N) + "," + std::to_string(N) + ")");

  // Cross-check: c(n)^{1/n} <= mu, i.e. c(n) z_lo^n <= 1 for every n.
  const std::vector<Integer> c = cogrowth_coeffs(GroupSpec(N, N), 24);
  Rational pw = 1;
  for (std::size_t n = 0; n < c.size(); ++n, pw *= chosen->lo)
    if (c[n] * pw > 1)
      throw InternalError("selected singularity exceeds the series bound at n = " +
                          std::to_string(n));

  RateResult r;
  r.N = N;
  r.method = RateMethod::discriminant;
  r.z_lo = chosen->lo;
  r.z_hi = chosen->hi;
  r.mu = static_cast<double>(1 / to_real((chosen->lo + chosen->hi) / 2));
  r.lambda = lambda_from_mu(r.mu);
  r.digits = certified_digits(chosen->lo, chosen->hi);
  return r;
}

RatioEstimate rate_ratio_estimate(const std::vector<Integer> &cogrowth,
                                  RatioCorrection correction) {
  std::vector<int> idx;
  for (std::size_t n = 0; n < cogrowth.size(); n += 2) {
    if (sgn(cogrowth[n]) < 0)
      throw InvalidArgument("cogrowth coefficients must be non-negative");
    if (sgn(cogrowth[n]) > 0)
      idx.push_back(static_cast<int>(n));
  }
  if (static_cast<int>(idx.size()) < kMinRatioTerms)
    throw InvalidArgument("rate_ratio needs at least " +
                          std::to_string(kMinRatioTerms) +
                          " nonzero even-index terms");
  // Ratio estimates m_n from consecutive nonzero even terms n -> n+2.
  std::vector<std::pair<int, double>> m;
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
    const int n = idx[i];
    if (idx[i + 1] != n + 2 || n == 0)
      continue;
    const Rational r(cogrowth[static_cast<std::size_t>(n + 2)],
                     cogrowth[static_cast<std::size_t>(n)]);
    double est = std::sqrt(r.get_d());
    if (correction == RatioCorrection::n2)
      est *= static_cast<double>(n + 2) / n;
    m.emplace_back(n, est);
  }
  if (m.size() < 2)
    throw InvalidArgument("rate_ratio needs consecutive nonzero even terms");
  const double p = correction == RatioCorrection::n2 ? 2.0 : 1.0;
  RatioEstimate out;
  for (std::size_t i = 1; i < m.size(); ++i) {
    const double a = std::pow(m[i].first, p);
    const double b = std::pow(m[i - 1].first, p);
    out.extrapolants.push_back((a * m[i].second - b * m[i - 1].second) /
                               (a - b));
  }
  out.mu = out.extrapolants.back();
  out.error = out.extrapolants.size() >= 2
                  ? std::fabs(out.extrapolants.back() -
                              out.extrapolants[out.extrapolants.size() - 2])
                  : 0.0;
  return out;
}

double rate_ratio(const std::vector<Integer> &cogrowth,
                  RatioCorrection correction) {
  return rate_ratio_estimate(cogrowth, correction).mu;
}

RateResult rate_ratio_result(int N, int order, RatioCorrection correction) {
  if (N < 1)
    throw InvalidArgument("N must be positive");
  const RatioEstimate e =
      rate_ratio_estimate(cogrowth_coeffs(GroupSpec(N, N), order), correction);
  RateResult r;
  r.N = N;
  r.method = RateMethod::ratio;
  const Rational z(1 / e.mu);
  r.z_lo = z;
  r.z_hi = z;
  r.mu = e.mu;
  const double lo = std::sqrt(12.0);
  r.lambda = lambda_from_mu(std::clamp(e.mu, lo, 4.0));
  r.digits = e.error > 0
                 ? std::max(0, static_cast<int>(std::floor(
                                   -std::log10(e.error / e.mu))))
                 : std::numeric_limits<double>::digits10;
  return r;
}

} // namespace cogrowth
