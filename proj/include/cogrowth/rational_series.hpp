#pragma once

#include "cogrowth/laurent.hpp"

#include <vector>

namespace cogrowth {

/// Power series with exact rational coefficients truncated at z^order.
class RationalSeries {
public:
  explicit RationalSeries(int order = 0);
  RationalSeries(int order, std::vector<Rational> coeffs);
  static RationalSeries from_integers(const std::vector<Integer> &coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational> &coeffs() const { return c_; }
  const Rational &operator[](int n) const { return c_.at(static_cast<std::size_t>(n)); }
  Rational &operator[](int n) { return c_.at(static_cast<std::size_t>(n)); }

  RationalSeries &operator+=(const RationalSeries &r);
  RationalSeries &operator-=(const RationalSeries &r);
  friend RationalSeries operator+(RationalSeries a, const RationalSeries &b) {
    return a += b;
  }
  friend RationalSeries operator-(RationalSeries a, const RationalSeries &b) {
    return a -= b;
  }
  friend RationalSeries operator*(const RationalSeries &a,
                                  const RationalSeries &b);
  friend RationalSeries operator*(const Rational &s, const RationalSeries &a);
  friend bool operator==(const RationalSeries &a, const RationalSeries &b) {
    return a.c_ == b.c_;
  }

  /// 1/f; needs a nonzero constant term.
  RationalSeries inverse() const;
  /// Square root with constant term 1; needs constant term 1.
  RationalSeries sqrt() const;
  /// f(u(z)); u must have zero constant term and the same order.
  RationalSeries compose(const RationalSeries &u) const;
  /// Multiply by z^k (k may be negative; negative shifts need the dropped
  /// coefficients to be zero). The order is preserved.
  RationalSeries shift(int k) const;

  std::vector<Integer> to_integers() const;

private:
  void require_same_order(const RationalSeries &r) const;
  std::vector<Rational> c_;
};

/// D(z) = (1 - z^2)/(1 + (2p-1) z^2) * C(z / (1 + (2p-1) z^2)): cogrowth
/// series of all trivial words -> freely reduced trivial words, for a group
/// on p generators.
RationalSeries reduced_from_all(const RationalSeries &C, int p = 2);

/// Inverse transform, using the series square root of 1 - 4(2p-1) z^2.
RationalSeries all_from_reduced(const RationalSeries &D, int p = 2);

} // namespace cogrowth
