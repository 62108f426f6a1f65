#pragma once

#include "cogrowth/laurent.hpp"
#include "cogrowth/upoly.hpp"

#include <string>
#include <vector>

namespace cogrowth {

/// Above this N the exact route needs allow_large = true.
inline constexpr int kDefaultMaxRateN = 6;

enum class RateMethod { discriminant, ratio };
std::string method_name(RateMethod m);
RateMethod parse_method(const std::string &name);

struct RateResult {
  int N = 0;
  RateMethod method = RateMethod::discriminant;
  /// Rational interval containing the radius of convergence z_c (for the
  /// ratio method, lo = hi = 1/mu rounded to a rational).
  Rational z_lo;
  Rational z_hi;
  double mu = 0;
  double lambda = 0;
  /// Decimal digits of mu that the interval certifies (discriminant) or a
  /// crude estimate from the extrapolation error (ratio).
  int digits = 0;

  /// JSON object with fields N, method, z_c {lo, hi} as exact rational
  /// strings, mu, lambda, digits.
  std::string to_json() const;
};

/// Data behind the discriminant route, exposed for diagnostics and tests.
struct DiscriminantData {
  /// Coefficients of G^0..G^{N+1} of the equation at Q = 2 (q = 1).
  std::vector<ZPoly> P;
  /// Resultant of P and dP/dG with respect to G, as a polynomial in z.
  ZPoly discriminant;
  /// Real candidate singularities in (0, 1/sqrt(12)], increasing.
  std::vector<RootInterval> candidates;
};
DiscriminantData discriminant_data(int N, bool allow_large = false);

/// Cogrowth rate of BS(N,N) from the algebraic equation of G(z;1): the
/// radius of convergence is the first real candidate singularity (root of
/// the discriminant or of the leading coefficient) at which the branch with
/// G(0) = 1 is actually singular; mu = 1/z_c. The choice is cross-checked
/// against the bound c(n)^{1/n} <= mu from the cogrowth series.
RateResult rate_discriminant(int N, bool allow_large = false);

enum class RatioCorrection { none, n2 };
RatioCorrection parse_correction(const std::string &name);

struct RatioEstimate {
  double mu = 0;
  /// |last extrapolant - previous extrapolant|.
  double error = 0;
  /// Richardson-accelerated estimates, one per usable even index.
  std::vector<double> extrapolants;
};

/// Smallest number of nonzero even-index terms rate_ratio accepts.
inline constexpr int kMinRatioTerms = 4;

/// Estimates the growth rate from even-index coefficient ratios
/// sqrt(c_{n+2}/c_n), optionally corrected for an n^{-2} factor, followed by
/// one Richardson step.
RatioEstimate rate_ratio_estimate(const std::vector<Integer> &cogrowth,
                                  RatioCorrection correction);
double rate_ratio(const std::vector<Integer> &cogrowth,
                  RatioCorrection correction);

/// RateResult for BS(N,N) from the ratio estimator on the cogrowth series
/// of the given order. An estimate outside [sqrt(12), 4] is reported as is;
/// lambda is then taken from the nearest end of that range.
RateResult rate_ratio_result(int N, int order,
                             RatioCorrection correction = RatioCorrection::n2);

/// Root >= sqrt(3) of lambda^2 - mu lambda + 3 = 0; mu in [sqrt(12), 4].
double lambda_from_mu(double mu);
/// lambda + 3/lambda; lambda in [sqrt(3), 3].
double mu_from_lambda(double lambda);

/// Cogrowth of BS(1,1) = Z^2: c(n) = C(n, n/2)^2 for even n, 0 otherwise.
/// Verifies (n/2+1)^2 c(n+2) = 4(n+1)^2 c(n) for every even n <= nmax - 2.
std::vector<Integer> bs11_exact(int nmax);

} // namespace cogrowth
