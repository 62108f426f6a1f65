#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace cogrowth {

using Integer = mpz_class;
using Rational = mpq_class;

/// Sparse Laurent polynomial in q with arbitrary-precision exponents and
/// coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal iff their term lists are equal.
class LaurentPoly {
public:
  /// (exponent, coefficient)
  using Term = std::pair<Integer, Integer>;

  LaurentPoly() = default;
  LaurentPoly(const Integer &constant);
  LaurentPoly(long constant) : LaurentPoly(Integer(constant)) {}

  static LaurentPoly monomial(const Integer &coeff, const Integer &exponent);
  /// Accepts unsorted terms with repeated exponents; combines and purges.
  static LaurentPoly from_terms(std::vector<Term> terms);
  /// q + q^{-1}
  static LaurentPoly q_plus_q_inverse();

  const std::vector<Term> &terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Integer coeff(const Integer &exponent) const;
  /// Sum of coefficients, i.e. the value at q = 1.
  Integer eval_one() const;
  Rational eval(const Rational &q) const;

  /// p(q^{-1})
  LaurentPoly reflect() const;
  /// Multiply by q^shift.
  LaurentPoly shift(const Integer &shift) const;

  LaurentPoly &operator+=(const LaurentPoly &rhs);
  LaurentPoly &operator-=(const LaurentPoly &rhs);
  LaurentPoly &operator*=(const LaurentPoly &rhs);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b);
  friend LaurentPoly operator*(const Integer &c, const LaurentPoly &p);

  friend bool operator==(const LaurentPoly &a, const LaurentPoly &b) {
    return a.terms_ == b.terms_;
  }

  /// e.g. "3*q^-2 - 5*q^-1 + 2 + 7*q^3"; "0" for the zero polynomial.
  std::string to_string() const;

private:
  std::vector<Term> terms_;
};

LaurentPoly lp_add(const LaurentPoly &a, const LaurentPoly &b);
LaurentPoly lp_mul(const LaurentPoly &a, const LaurentPoly &b);

/// Phi_{d,e}: A q^k -> A q^{e j} when k = d j (j any integer), else 0.
LaurentPoly phi(long d, long e, const LaurentPoly &p);

} // namespace cogrowth
