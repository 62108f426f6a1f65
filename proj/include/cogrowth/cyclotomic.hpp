#pragma once

#include "cogrowth/upoly.hpp"

#include <memory>
#include <vector>

namespace cogrowth {

/// N-th cyclotomic polynomial, via (w^N - 1) / prod_{d | N, d < N} Phi_d.
ZPoly cyclotomic(long N);

/// Z[w] / Phi_N(w): w stands for a primitive N-th root of unity.
class CyclotomicRing {
public:
  explicit CyclotomicRing(long N);
  long order() const { return N_; }
  int degree() const { return modulus_.degree(); }
  const ZPoly &modulus() const { return modulus_; }

private:
  long N_;
  ZPoly modulus_;
};

/// Element of Z[w]/Phi_N(w), stored as coefficients of 1, w, ..., w^{deg-1}.
/// A default-constructed value is zero and adopts the ring of whatever it is
/// combined with.
class CycloInt {
public:
  CycloInt() = default;
  CycloInt(std::shared_ptr<const CyclotomicRing> ring, const Integer &value);
  CycloInt(long value) : rational_(value) {}
  CycloInt(const Integer &value) : rational_(value) {}

  /// w^j for any integer j (negative j uses w^N = 1).
  static CycloInt omega_power(std::shared_ptr<const CyclotomicRing> ring,
                              long j);

  /// Coefficient of w^i in the reduced representation.
  Integer component(int i) const;
  bool is_zero() const;
  /// True when all components beyond the constant vanish.
  bool is_rational() const;
  Integer rational_part() const { return component(0); }

  CycloInt &operator+=(const CycloInt &r);
  CycloInt &operator-=(const CycloInt &r);
  friend CycloInt operator+(CycloInt a, const CycloInt &b) { return a += b; }
  friend CycloInt operator-(CycloInt a, const CycloInt &b) { return a -= b; }
  friend CycloInt operator*(const CycloInt &a, const CycloInt &b);
  CycloInt &operator*=(const CycloInt &r) { return *this = *this * r; }
  CycloInt operator-() const;
  friend bool operator==(const CycloInt &a, const CycloInt &b);

private:
  void adopt(const CycloInt &other);
  static ZPoly reduce(const ZPoly &p, const CyclotomicRing &ring);

  std::shared_ptr<const CyclotomicRing> ring_;
  // Without a ring only the rational part is meaningful.
  Integer rational_ = 0;
  ZPoly poly_;
};

inline bool is_zero(const CycloInt &x) { return x.is_zero(); }
inline bool is_zero(const Integer &x) { return sgn(x) == 0; }

} // namespace cogrowth
