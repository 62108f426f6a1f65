#pragma once

#include "cogrowth/error.hpp"
#include "cogrowth/laurent.hpp"
#include "cogrowth/series.hpp"

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

namespace cogrowth::testing {

/// Laurent polynomial from {exponent, coefficient} pairs.
inline LaurentPoly lp(std::initializer_list<std::pair<long, long>> terms) {
  std::vector<LaurentPoly::Term> t;
  for (const auto &[e, c] : terms)
    t.emplace_back(Integer(e), Integer(c));
  return LaurentPoly::from_terms(std::move(t));
}

/// Series from per-degree Laurent polynomials.
inline TruncatedSeries series(int order, std::vector<LaurentPoly> coeffs) {
  return TruncatedSeries(order, std::move(coeffs));
}

inline std::vector<Integer> ints(std::initializer_list<long> v) {
  return std::vector<Integer>(v.begin(), v.end());
}

inline LaurentPoly random_lp(std::mt19937 &rng) {
  std::uniform_int_distribution<int> len(0, 5), exp(-6, 6), co(-20, 20);
  std::vector<LaurentPoly::Term> t;
  for (int i = len(rng); i > 0; --i)
    t.emplace_back(Integer(exp(rng)), Integer(co(rng)));
  return LaurentPoly::from_terms(std::move(t));
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

} // namespace cogrowth::testing
