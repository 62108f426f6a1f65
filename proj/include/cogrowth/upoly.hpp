#pragma once

#include "cogrowth/error.hpp"
#include "cogrowth/laurent.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace cogrowth {

/// Dense univariate polynomial, coefficients stored low degree first with
/// no trailing zeros. T is Integer or Rational.
template <class T> class UPoly {
public:
  UPoly() = default;
  UPoly(T constant) {
    if (sgn(constant) != 0)
      c_.push_back(std::move(constant));
  }
  explicit UPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(T coeff, std::size_t degree) {
    std::vector<T> c(degree + 1);
    c[degree] = std::move(coeff);
    return UPoly(std::move(c));
  }
  static UPoly x() { return monomial(T(1), 1); }

  const std::vector<T> &coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T &lead() const { return c_.back(); }

  UPoly &operator+=(const UPoly &r) {
    if (r.c_.size() > c_.size())
      c_.resize(r.c_.size());
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      c_[i] += r.c_[i];
    trim();
    return *this;
  }
  UPoly &operator-=(const UPoly &r) {
    if (r.c_.size() > c_.size())
      c_.resize(r.c_.size());
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      c_[i] -= r.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
  UPoly operator-() const {
    UPoly p = *this;
    for (auto &x : p.c_)
      x = -x;
    return p;
  }
  friend UPoly operator*(const UPoly &a, const UPoly &b) {
    if (a.is_zero() || b.is_zero())
      return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0)
        continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  UPoly &operator*=(const UPoly &r) { return *this = *this * r; }
  friend UPoly operator*(const T &s, const UPoly &p) {
    if (sgn(s) == 0)
      return {};
    UPoly out = p;
    for (auto &x : out.c_)
      x *= s;
    return out;
  }
  friend bool operator==(const UPoly &a, const UPoly &b) { return a.c_ == b.c_; }

  UPoly derivative() const {
    if (c_.size() <= 1)
      return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = c_[i] * T(static_cast<long>(i));
    return UPoly(std::move(d));
  }

  template <class V> V eval(const V &x) const {
    V acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * x + V(*it);
    return acc;
  }

  std::string to_string(const std::string &var = "x") const {
    if (c_.empty())
      return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (sgn(c_[i]) == 0)
        continue;
      T mag = abs(c_[i]);
      if (s.empty())
        s += sgn(c_[i]) < 0 ? "-" : "";
      else
        s += sgn(c_[i]) < 0 ? " - " : " + ";
      if (i == 0 || mag != 1) {
        s += mag.get_str();
        if (i > 0)
          s += "*";
      }
      if (i >= 1)
        s += var;
      if (i >= 2)
        s += "^" + std::to_string(i);
    }
    return s;
  }

private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0)
      c_.pop_back();
  }
  std::vector<T> c_;
};

using ZPoly = UPoly<Integer>;
using QPoly = UPoly<Rational>;

/// Division by a monic (or unit-leading) integer polynomial, or any divisor
/// over the rationals. Returns (quotient, remainder).
template <class T>
std::pair<UPoly<T>, UPoly<T>> divrem(const UPoly<T> &a, const UPoly<T> &b) {
  if (b.is_zero())
    throw InvalidArgument("polynomial division by zero");
  std::vector<T> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db)
    return {UPoly<T>(), a};
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - db + 1));
  const T &lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    T q = rem[static_cast<std::size_t>(i)];
    if (sgn(q) == 0)
      continue;
    if constexpr (std::is_same_v<T, Integer>) {
      if (!mpz_divisible_p(q.get_mpz_t(), lb.get_mpz_t()))
        throw InvalidArgument("inexact integer polynomial division");
      q /= lb;
    } else {
      q /= lb;
    }
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -=
          q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly<T>(std::move(quo)), UPoly<T>(std::move(rem))};
}

QPoly to_rational(const ZPoly &p);
/// Scales by a positive rational so that the result has coprime integer
/// coefficients (sign of the leading coefficient is preserved).
ZPoly primitive_part(const QPoly &p);
ZPoly primitive_part(const ZPoly &p);
Integer content(const ZPoly &p);

QPoly gcd(QPoly a, QPoly b);
/// Product of the distinct irreducible factors, as a primitive integer
/// polynomial.
ZPoly square_free_part(const ZPoly &p);

/// Determinant of a square integer matrix (fraction-free Bareiss elimination).
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

/// Resultant in the main variable of two polynomials whose coefficients are
/// polynomials in z; computed as the Sylvester determinant evaluated at
/// enough integer points and interpolated exactly.
ZPoly resultant_over_z(const std::vector<ZPoly> &p, const std::vector<ZPoly> &q);

/// Resultant of integer polynomials (Sylvester determinant).
Integer resultant(const ZPoly &p, const ZPoly &q);

/// Sturm sequence of a square-free polynomial.
class SturmSequence {
public:
  explicit SturmSequence(const ZPoly &square_free);
  int sign_changes(const Rational &x) const;
  /// Number of distinct roots in the half-open interval (lo, hi].
  int count_roots(const Rational &lo, const Rational &hi) const;

private:
  std::vector<ZPoly> chain_;
};

struct RootInterval {
  Rational lo;
  Rational hi;
};

/// Isolates the real roots of a square-free polynomial in (lo, hi] and
/// refines each interval to width <= tolerance. Intervals are returned in
/// increasing order; an exact rational root is returned as [r, r].
std::vector<RootInterval> isolate_real_roots(const ZPoly &square_free,
                                             const Rational &lo,
                                             const Rational &hi,
                                             const Rational &tolerance);

} // namespace cogrowth
