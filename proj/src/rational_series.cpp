#include "cogrowth/rational_series.hpp"

#include "cogrowth/error.hpp"

namespace cogrowth {

RationalSeries::RationalSeries(int order) {
  if (order < 0)
    throw InvalidArgument("truncation order must be non-negative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

RationalSeries::RationalSeries(int order, std::vector<Rational> coeffs)
    : c_(std::move(coeffs)) {
  if (order < 0)
    throw InvalidArgument("truncation order must be non-negative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

RationalSeries RationalSeries::from_integers(const std::vector<Integer> &v) {
  if (v.empty())
    throw InvalidArgument("empty coefficient list");
  std::vector<Rational> c(v.begin(), v.end());
  return RationalSeries(static_cast<int>(v.size()) - 1, std::move(c));
}

void RationalSeries::require_same_order(const RationalSeries &r) const {
  if (c_.size() != r.c_.size())
    throw InvalidArgument("rational series order mismatch");
}

RationalSeries &RationalSeries::operator+=(const RationalSeries &r) {
  require_same_order(r);
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] += r.c_[i];
  return *this;
}

RationalSeries &RationalSeries::operator-=(const RationalSeries &r) {
  require_same_order(r);
  for (std::size_t i = 0; i < c_.size(); ++i)
    c_[i] -= r.c_[i];
  return *this;
}

RationalSeries operator*(const RationalSeries &a, const RationalSeries &b) {
  a.require_same_order(b);
  RationalSeries out(a.order());
  for (std::size_t n = 0; n < a.c_.size(); ++n) {
    Rational s = 0;
    for (std::size_t i = 0; i <= n; ++i)
      if (sgn(a.c_[i]) != 0 && sgn(b.c_[n - i]) != 0)
        s += a.c_[i] * b.c_[n - i];
    out.c_[n] = s;
  }
  return out;
}

RationalSeries operator*(const Rational &s, const RationalSeries &a) {
  RationalSeries out = a;
  for (auto &x : out.c_)
    x *= s;
  return out;
}

RationalSeries RationalSeries::inverse() const {
  if (sgn(c_[0]) == 0)
    throw InvalidArgument("series inverse needs a nonzero constant term");
  RationalSeries out(order());
  const Rational inv0 = 1 / c_[0];
  out.c_[0] = inv0;
  for (std::size_t n = 1; n < c_.size(); ++n) {
    Rational s = 0;
    for (std::size_t i = 1; i <= n; ++i)
      s += c_[i] * out.c_[n - i];
    out.c_[n] = -s * inv0;
  }
  return out;
}

RationalSeries RationalSeries::sqrt() const {
  if (c_[0] != 1)
    throw InvalidArgument("series square root needs constant term 1");
  // r^2 = f: 2 r_0 r_n = f_n - sum_{0<i<n} r_i r_{n-i}, r_0 = 1.
  RationalSeries r(order());
  r.c_[0] = 1;
  for (std::size_t n = 1; n < c_.size(); ++n) {
    Rational s = c_[n];
    for (std::size_t i = 1; i < n; ++i)
      s -= r.c_[i] * r.c_[n - i];
    r.c_[n] = s / 2;
  }
  return r;
}

RationalSeries RationalSeries::compose(const RationalSeries &u) const {
  require_same_order(u);
  if (sgn(u.c_[0]) != 0)
    throw InvalidArgument("inner series of a composition must vanish at 0");
  RationalSeries acc(order());
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * u;
    acc.c_[0] += c_[i];
  }
  return acc;
}

RationalSeries RationalSeries::shift(int k) const {
  RationalSeries out(order());
  const int n = static_cast<int>(c_.size());
  for (int i = 0; i < n; ++i) {
    const int j = i + k;
    if (j < 0) {
      if (sgn(c_[static_cast<std::size_t>(i)]) != 0)
        throw InvalidArgument("negative shift would drop nonzero terms");
      continue;
    }
    if (j < n)
      out.c_[static_cast<std::size_t>(j)] = c_[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<Integer> RationalSeries::to_integers() const {
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto &x : c_) {
    if (x.get_den() != 1)
      throw InvalidArgument("series has a non-integral coefficient");
    out.push_back(x.get_num());
  }
  return out;
}

namespace {

// a + b z^2 as a series of the given order.
RationalSeries quadratic(int order, const Rational &a, const Rational &b) {
  RationalSeries s(order);
  s[0] = a;
  if (order >= 2)
    s[2] = b;
  return s;
}

} // namespace

RationalSeries reduced_from_all(const RationalSeries &C, int p) {
  if (p < 1)
    throw InvalidArgument("generator count must be positive");
  if (C[0] != 1)
    throw InvalidArgument("cogrowth series must have constant term 1");
  const int order = C.order();
  const Rational k = 2 * p - 1;
  const RationalSeries inv = quadratic(order, 1, k).inverse();
  RationalSeries z(order);
  if (order >= 1)
    z[1] = 1;
  const RationalSeries inner = z * inv;
  return quadratic(order, 1, -1) * inv * C.compose(inner);
}

RationalSeries all_from_reduced(const RationalSeries &D, int p) {
  if (p < 1)
    throw InvalidArgument("generator count must be positive");
  if (D[0] != 1)
    throw InvalidArgument("reduced cogrowth series must have constant term 1");
  const int order = D.order();
  const Rational k = 2 * p - 1;
  // One extra degree so that dividing by z keeps the full order.
  const RationalSeries root = quadratic(order + 1, 1, -4 * k).sqrt();
  RationalSeries numer = RationalSeries(order + 1, {Rational(1)}) - root;
  numer = Rational(1) / (2 * k) * numer.shift(-1);
  RationalSeries inner(order, {numer.coeffs().begin(),
                               numer.coeffs().begin() + order + 1});

  RationalSeries root_trunc(order, {root.coeffs().begin(),
                                    root.coeffs().begin() + order + 1});
  const RationalSeries prefactor =
      (quadratic(order, 1 - p, 0) + Rational(p) * root_trunc) *
      quadratic(order, 1, -4 * p * p).inverse();
  return prefactor * D.compose(inner);
}

} // namespace cogrowth
