#include "cogrowth/cyclotomic.hpp"

#include <map>

namespace cogrowth {

ZPoly cyclotomic(long N) {
  if (N < 1)
    throw InvalidArgument("cyclotomic polynomial needs N >= 1");
  ZPoly p = ZPoly::monomial(Integer(1), static_cast<std::size_t>(N)) -
            ZPoly(Integer(1));
  for (long d = 1; d < N; ++d) {
    if (N % d != 0)
      continue;
    auto [q, r] = divrem(p, cyclotomic(d));
    if (!r.is_zero())
      throw InternalError("cyclotomic division left a remainder");
    p = std::move(q);
  }
  return p;
}

CyclotomicRing::CyclotomicRing(long N) : N_(N), modulus_(cyclotomic(N)) {}

ZPoly CycloInt::reduce(const ZPoly &p, const CyclotomicRing &ring) {
  return divrem(p, ring.modulus()).second;
}

CycloInt::CycloInt(std::shared_ptr<const CyclotomicRing> ring,
                   const Integer &value)
    : ring_(std::move(ring)), poly_(value) {}

CycloInt CycloInt::omega_power(std::shared_ptr<const CyclotomicRing> ring,
                               long j) {
  const long n = ring->order();
  const long e = ((j % n) + n) % n;
  CycloInt x;
  x.poly_ = reduce(ZPoly::monomial(Integer(1), static_cast<std::size_t>(e)),
                   *ring);
  x.ring_ = std::move(ring);
  return x;
}

void CycloInt::adopt(const CycloInt &other) {
  if (ring_ || !other.ring_)
    return;
  ring_ = other.ring_;
  poly_ = ZPoly(rational_);
  rational_ = 0;
}

Integer CycloInt::component(int i) const {
  if (!ring_)
    return i == 0 ? rational_ : Integer(0);
  return poly_[static_cast<std::size_t>(i)];
}

bool CycloInt::is_zero() const {
  return ring_ ? poly_.is_zero() : sgn(rational_) == 0;
}

bool CycloInt::is_rational() const { return !ring_ || poly_.degree() <= 0; }

CycloInt &CycloInt::operator+=(const CycloInt &r) {
  adopt(r);
  if (!ring_) {
    rational_ += r.rational_;
    return *this;
  }
  poly_ += r.ring_ ? r.poly_ : ZPoly(r.rational_);
  return *this;
}

CycloInt &CycloInt::operator-=(const CycloInt &r) {
  adopt(r);
  if (!ring_) {
    rational_ -= r.rational_;
    return *this;
  }
  poly_ -= r.ring_ ? r.poly_ : ZPoly(r.rational_);
  return *this;
}

CycloInt operator*(const CycloInt &a, const CycloInt &b) {
  if (!a.ring_ && !b.ring_)
    return CycloInt(Integer(a.rational_ * b.rational_));
  CycloInt out;
  out.ring_ = a.ring_ ? a.ring_ : b.ring_;
  const ZPoly pa = a.ring_ ? a.poly_ : ZPoly(a.rational_);
  const ZPoly pb = b.ring_ ? b.poly_ : ZPoly(b.rational_);
  out.poly_ = CycloInt::reduce(pa * pb, *out.ring_);
  return out;
}

CycloInt CycloInt::operator-() const {
  CycloInt out = *this;
  out.rational_ = -out.rational_;
  out.poly_ = -out.poly_;
  return out;
}

bool operator==(const CycloInt &a, const CycloInt &b) {
  const int deg = std::max(a.ring_ ? a.ring_->degree() : 1,
                           b.ring_ ? b.ring_->degree() : 1);
  for (int i = 0; i < deg; ++i)
    if (a.component(i) != b.component(i))
      return false;
  return true;
}

} // namespace cogrowth
