#include "cogrowth/laurent.hpp"

#include "cogrowth/error.hpp"

#include <algorithm>
#include <sstream>

namespace cogrowth {

namespace {

// Dense accumulation is used for products whose exponent span is at most
// this wide; otherwise we fall back to sort-and-merge.
constexpr long kDenseSpanLimit = 1L << 16;

void normalize(std::vector<LaurentPoly::Term> &terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto &x, const auto &y) { return x.first < y.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Integer sum = terms[i].second;
    while (j < terms.size() && terms[j].first == terms[i].first)
      sum += terms[j++].second;
    if (sgn(sum) != 0) {
      terms[out].first = terms[i].first;
      terms[out].second = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::vector<LaurentPoly::Term>
merge(const std::vector<LaurentPoly::Term> &a,
      const std::vector<LaurentPoly::Term> &b, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size())
      c = 1;
    else if (j == b.size())
      c = -1;
    else
      c = cmp(a[i].first, b[j].first);
    if (c < 0) {
      out.push_back(a[i++]);
    } else if (c > 0) {
      out.emplace_back(b[j].first,
                       subtract ? Integer(-b[j].second) : b[j].second);
      ++j;
    } else {
      Integer s = subtract ? Integer(a[i].second - b[j].second)
                           : Integer(a[i].second + b[j].second);
      if (sgn(s) != 0)
        out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

bool fits_long(const Integer &x) { return x.fits_slong_p(); }

} // namespace

LaurentPoly::LaurentPoly(const Integer &constant) {
  if (sgn(constant) != 0)
    terms_.emplace_back(Integer(0), constant);
}

LaurentPoly LaurentPoly::monomial(const Integer &coeff,
                                  const Integer &exponent) {
  LaurentPoly p;
  if (sgn(coeff) != 0)
    p.terms_.emplace_back(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  normalize(terms);
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly LaurentPoly::q_plus_q_inverse() {
  return from_terms({{Integer(-1), Integer(1)}, {Integer(1), Integer(1)}});
}

Integer LaurentPoly::coeff(const Integer &exponent) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exponent,
      [](const Term &t, const Integer &e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent)
    return it->second;
  return 0;
}

Integer LaurentPoly::eval_one() const {
  Integer s = 0;
  for (const auto &t : terms_)
    s += t.second;
  return s;
}

Rational LaurentPoly::eval(const Rational &q) const {
  if (sgn(q) == 0) {
    if (!terms_.empty() && sgn(terms_.front().first) < 0)
      throw InvalidArgument("Laurent polynomial with negative exponents "
                            "evaluated at q = 0");
    return Rational(coeff(0));
  }
  Rational s = 0;
  for (const auto &[e, c] : terms_) {
    if (!e.fits_slong_p())
      throw InvalidArgument("exponent too large for rational evaluation");
    long k = e.get_si();
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(),
               static_cast<unsigned long>(k < 0 ? -k : k));
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(),
               static_cast<unsigned long>(k < 0 ? -k : k));
    Rational power = k < 0 ? Rational(den, num) : Rational(num, den);
    power.canonicalize();
    s += c * power;
  }
  return s;
}

LaurentPoly LaurentPoly::reflect() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    p.terms_.emplace_back(Integer(-it->first), it->second);
  return p;
}

LaurentPoly LaurentPoly::shift(const Integer &s) const {
  LaurentPoly p = *this;
  for (auto &t : p.terms_)
    t.first += s;
  return p;
}

LaurentPoly &LaurentPoly::operator+=(const LaurentPoly &rhs) {
  if (rhs.terms_.empty())
    return *this;
  terms_ = merge(terms_, rhs.terms_, false);
  return *this;
}

LaurentPoly &LaurentPoly::operator-=(const LaurentPoly &rhs) {
  if (rhs.terms_.empty())
    return *this;
  terms_ = merge(terms_, rhs.terms_, true);
  return *this;
}

LaurentPoly &LaurentPoly::operator*=(const LaurentPoly &rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto &t : p.terms_)
    t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
  LaurentPoly out;
  if (a.terms_.empty() || b.terms_.empty())
    return out;

  const Integer &alo = a.terms_.front().first, &ahi = a.terms_.back().first;
  const Integer &blo = b.terms_.front().first, &bhi = b.terms_.back().first;
  if (fits_long(alo) && fits_long(ahi) && fits_long(blo) && fits_long(bhi)) {
    long lo = alo.get_si() + blo.get_si();
    long hi = ahi.get_si() + bhi.get_si();
    long span = hi - lo;
    if (span >= 0 && span < kDenseSpanLimit &&
        static_cast<double>(span) <
            4.0 * static_cast<double>(a.size()) * static_cast<double>(b.size())) {
      std::vector<Integer> acc(static_cast<std::size_t>(span + 1));
      std::vector<long> bexp;
      bexp.reserve(b.size());
      for (const auto &t : b.terms_)
        bexp.push_back(t.first.get_si());
      for (const auto &[ea, ca] : a.terms_) {
        long base = ea.get_si() - lo;
        for (std::size_t j = 0; j < b.terms_.size(); ++j) {
          mpz_addmul(acc[static_cast<std::size_t>(base + bexp[j])].get_mpz_t(),
                     ca.get_mpz_t(), b.terms_[j].second.get_mpz_t());
        }
      }
      for (long i = 0; i <= span; ++i) {
        auto &c = acc[static_cast<std::size_t>(i)];
        if (sgn(c) != 0)
          out.terms_.emplace_back(Integer(lo + i), std::move(c));
      }
      return out;
    }
  }

  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto &[ea, ca] : a.terms_)
    for (const auto &[eb, cb] : b.terms_)
      prod.emplace_back(Integer(ea + eb), Integer(ca * cb));
  normalize(prod);
  out.terms_ = std::move(prod);
  return out;
}

LaurentPoly operator*(const Integer &c, const LaurentPoly &p) {
  LaurentPoly out;
  if (sgn(c) == 0)
    return out;
  out = p;
  for (auto &t : out.terms_)
    t.second *= c;
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    Integer mag = abs(c);
    if (first) {
      if (sgn(c) < 0)
        os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (sgn(e) == 0) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag << "*";
    os << "q";
    if (e != 1)
      os << "^" << e;
  }
  return os.str();
}

LaurentPoly lp_add(const LaurentPoly &a, const LaurentPoly &b) { return a + b; }

LaurentPoly lp_mul(const LaurentPoly &a, const LaurentPoly &b) { return a * b; }

LaurentPoly phi(long d, long e, const LaurentPoly &p) {
  if (d < 1 || e < 1)
    throw InvalidArgument("phi requires d >= 1 and e >= 1");
  if (d == 1 && e == 1)
    return p;
  std::vector<LaurentPoly::Term> out;
  Integer j;
  for (const auto &[k, c] : p.terms()) {
    if (!mpz_divisible_ui_p(k.get_mpz_t(), static_cast<unsigned long>(d)))
      continue;
    mpz_divexact_ui(j.get_mpz_t(), k.get_mpz_t(),
                    static_cast<unsigned long>(d));
    out.emplace_back(Integer(j * e), c);
  }
  // Monotone map on exponents, so order is preserved and no collisions occur.
  return LaurentPoly::from_terms(std::move(out));
}

} // namespace cogrowth
