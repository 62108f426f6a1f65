#pragma once

#include "cogrowth/laurent.hpp"

#include <vector>

namespace cogrowth {

/// Power series in z truncated at z^order, with Laurent-polynomial (in q)
/// coefficients. coeffs()[n] is the coefficient of z^n.
class TruncatedSeries {
public:
  /// The zero series of the given order.
  explicit TruncatedSeries(int order = 0);
  /// Pads with zeros or truncates to order + 1 entries.
  TruncatedSeries(int order, std::vector<LaurentPoly> coeffs);

  static TruncatedSeries one(int order);

  int order() const { return order_; }
  const std::vector<LaurentPoly> &coeffs() const { return coeffs_; }
  const LaurentPoly &operator[](int n) const;
  void set(int n, LaurentPoly p);

  bool is_zero() const;

  TruncatedSeries &operator+=(const TruncatedSeries &rhs);
  TruncatedSeries &operator-=(const TruncatedSeries &rhs);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries &b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries &b) {
    return a -= b;
  }
  friend TruncatedSeries operator*(const TruncatedSeries &a,
                                   const TruncatedSeries &b);
  /// Coefficientwise multiplication by a polynomial in q.
  friend TruncatedSeries operator*(const LaurentPoly &c,
                                   const TruncatedSeries &s);

  /// Multiply by z^k (k >= 0), dropping terms beyond the order.
  TruncatedSeries shift_z(int k) const;

  friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

private:
  void require_same_order(const TruncatedSeries &rhs) const;

  int order_;
  std::vector<LaurentPoly> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b);
TruncatedSeries series_phi(long d, long e, const TruncatedSeries &s);

/// Coefficient of z^n q^k. Throws InvalidArgument when n is outside 0..order.
Integer coeff(const TruncatedSeries &s, int n, const Integer &k);

/// Entry n is the sum of all q-coefficients at z^n.
std::vector<Integer> eval_q1(const TruncatedSeries &s);

/// Entry n is [z^n q^0] s.
std::vector<Integer> diagonal_q0(const TruncatedSeries &s);

/// Same quantity computed by a second route: build sum c_{n,k} z^n q^{n-k}
/// and read the diagonal sum_n f_{n,n} z^n.
std::vector<Integer> diagonal_q0_via_transform(const TruncatedSeries &s);

} // namespace cogrowth
