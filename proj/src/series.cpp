#include "cogrowth/series.hpp"

#include "cogrowth/error.hpp"

#include <string>

namespace cogrowth {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0)
    throw InvalidArgument("truncation order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<LaurentPoly> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0)
    throw InvalidArgument("truncation order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = LaurentPoly(1);
  return s;
}

const LaurentPoly &TruncatedSeries::operator[](int n) const {
  if (n < 0 || n > order_)
    throw InvalidArgument("z-degree " + std::to_string(n) +
                          " outside truncation order " +
                          std::to_string(order_));
  return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set(int n, LaurentPoly p) {
  if (n < 0 || n > order_)
    throw InvalidArgument("z-degree outside truncation order");
  coeffs_[static_cast<std::size_t>(n)] = std::move(p);
}

bool TruncatedSeries::is_zero() const {
  for (const auto &c : coeffs_)
    if (!c.is_zero())
      return false;
  return true;
}

void TruncatedSeries::require_same_order(const TruncatedSeries &rhs) const {
  if (order_ != rhs.order_)
    throw InvalidArgument("series order mismatch: " + std::to_string(order_) +
                          " vs " + std::to_string(rhs.order_));
}

TruncatedSeries &TruncatedSeries::operator+=(const TruncatedSeries &rhs) {
  require_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries &TruncatedSeries::operator-=(const TruncatedSeries &rhs) {
  require_same_order(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
  a.require_same_order(b);
  TruncatedSeries out(a.order_);
  for (int n = 0; n <= a.order_; ++n) {
    LaurentPoly acc;
    for (int i = 0; i <= n; ++i) {
      const auto &x = a.coeffs_[static_cast<std::size_t>(i)];
      const auto &y = b.coeffs_[static_cast<std::size_t>(n - i)];
      if (x.is_zero() || y.is_zero())
        continue;
      acc += x * y;
    }
    out.coeffs_[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return out;
}

TruncatedSeries operator*(const LaurentPoly &c, const TruncatedSeries &s) {
  TruncatedSeries out(s.order_);
  for (std::size_t i = 0; i < s.coeffs_.size(); ++i)
    out.coeffs_[i] = c * s.coeffs_[i];
  return out;
}

TruncatedSeries TruncatedSeries::shift_z(int k) const {
  if (k < 0)
    throw InvalidArgument("shift_z requires k >= 0");
  TruncatedSeries out(order_);
  for (int n = k; n <= order_; ++n)
    out.coeffs_[static_cast<std::size_t>(n)] =
        coeffs_[static_cast<std::size_t>(n - k)];
  return out;
}

TruncatedSeries series_add(const TruncatedSeries &a, const TruncatedSeries &b) {
  return a + b;
}

TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b) {
  return a * b;
}

TruncatedSeries series_phi(long d, long e, const TruncatedSeries &s) {
  std::vector<LaurentPoly> out;
  out.reserve(s.coeffs().size());
  for (const auto &c : s.coeffs())
    out.push_back(phi(d, e, c));
  return TruncatedSeries(s.order(), std::move(out));
}

Integer coeff(const TruncatedSeries &s, int n, const Integer &k) {
  return s[n].coeff(k);
}

std::vector<Integer> eval_q1(const TruncatedSeries &s) {
  std::vector<Integer> out;
  out.reserve(s.coeffs().size());
  for (const auto &c : s.coeffs())
    out.push_back(c.eval_one());
  return out;
}

std::vector<Integer> diagonal_q0(const TruncatedSeries &s) {
  std::vector<Integer> out;
  out.reserve(s.coeffs().size());
  for (const auto &c : s.coeffs())
    out.push_back(c.coeff(0));
  return out;
}

std::vector<Integer> diagonal_q0_via_transform(const TruncatedSeries &s) {
  // G(zq; 1/q): the term c z^n q^k becomes c z^n q^{n-k}.
  std::vector<LaurentPoly> transformed;
  transformed.reserve(s.coeffs().size());
  for (int n = 0; n <= s.order(); ++n)
    transformed.push_back(s[n].reflect().shift(Integer(n)));
  std::vector<Integer> out;
  out.reserve(transformed.size());
  for (int n = 0; n <= s.order(); ++n)
    out.push_back(transformed[static_cast<std::size_t>(n)].coeff(Integer(n)));
  return out;
}

} // namespace cogrowth
