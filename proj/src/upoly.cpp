#include "cogrowth/upoly.hpp"

namespace cogrowth {

QPoly to_rational(const ZPoly &p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto &x : p.coeffs())
    c.emplace_back(x);
  return QPoly(std::move(c));
}

ZPoly primitive_part(const QPoly &p) {
  if (p.is_zero())
    return {};
  Integer den = 1;
  for (const auto &x : p.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> c;
  c.reserve(p.coeffs().size());
  for (const auto &x : p.coeffs())
    c.emplace_back(x.get_num() * (den / x.get_den()));
  return primitive_part(ZPoly(std::move(c)));
}

Integer content(const ZPoly &p) {
  Integer g = 0;
  for (const auto &x : p.coeffs())
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

ZPoly primitive_part(const ZPoly &p) {
  if (p.is_zero())
    return {};
  const Integer g = content(p);
  std::vector<Integer> c = p.coeffs();
  for (auto &x : c)
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(c));
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero())
    return a;
  const Rational lead = a.lead();
  return Rational(1) / lead * a;
}

ZPoly square_free_part(const ZPoly &p) {
  if (p.degree() <= 0)
    return primitive_part(p);
  const QPoly f = to_rational(p);
  const QPoly g = gcd(f, f.derivative());
  return primitive_part(divrem(f, g).first);
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0)
    return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(m[piv][k]) == 0)
        ++piv;
      if (piv == n)
        return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(v);
      }
    }
    prev = m[k][k];
  }
  Integer det = m[n - 1][n - 1];
  return sign < 0 ? Integer(-det) : det;
}

namespace {

std::vector<std::vector<Integer>> sylvester(const std::vector<Integer> &p,
                                            const std::vector<Integer> &q) {
  // p, q given low degree first with formal degrees p.size()-1, q.size()-1.
  const std::size_t m = p.size() - 1, n = q.size() - 1;
  const std::size_t size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j)
      s[i][i + j] = p[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j)
      s[n + i][i + j] = q[n - j];
  return s;
}

int max_degree(const std::vector<ZPoly> &v) {
  int d = 0;
  for (const auto &x : v)
    d = std::max(d, x.degree());
  return d;
}

// Newton interpolation through (0, y0), (1, y1), ...
QPoly interpolate_at_naturals(const std::vector<Integer> &ys) {
  const std::size_t n = ys.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
      if (i == level)
        break;
    }
  QPoly result;
  QPoly basis(Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    result += dd[i] * basis;
    basis *= QPoly(std::vector<Rational>{Rational(-static_cast<long>(i)),
                                         Rational(1)});
  }
  return result;
}

} // namespace

Integer resultant(const ZPoly &p, const ZPoly &q) {
  if (p.is_zero() || q.is_zero())
    return 0;
  return bareiss_determinant(sylvester(p.coeffs(), q.coeffs()));
}

ZPoly resultant_over_z(const std::vector<ZPoly> &p,
                       const std::vector<ZPoly> &q) {
  if (p.size() < 2 || q.size() < 1)
    throw InvalidArgument("resultant needs a polynomial of positive degree");
  const std::size_t m = p.size() - 1, n = q.size() - 1;
  const long bound = static_cast<long>(n) * max_degree(p) +
                     static_cast<long>(m) * max_degree(q);
  auto value_at = [&](long z) {
    const Integer zz = z;
    std::vector<Integer> pv, qv;
    for (const auto &c : p)
      pv.push_back(c.eval(zz));
    for (const auto &c : q)
      qv.push_back(c.eval(zz));
    return bareiss_determinant(sylvester(pv, qv));
  };
  std::vector<Integer> ys;
  for (long z = 0; z <= bound; ++z)
    ys.push_back(value_at(z));
  const QPoly interp = interpolate_at_naturals(ys);
  std::vector<Integer> coeffs;
  for (const auto &c : interp.coeffs()) {
    if (c.get_den() != 1)
      throw InternalError("interpolated resultant is not integral");
    coeffs.push_back(c.get_num());
  }
  ZPoly res(std::move(coeffs));
  const long check = bound + 1;
  if (res.eval(Integer(check)) != value_at(check))
    throw InternalError("resultant interpolation failed its extra-point check");
  return res;
}

SturmSequence::SturmSequence(const ZPoly &f) {
  if (f.is_zero())
    throw InvalidArgument("Sturm sequence of the zero polynomial");
  chain_.push_back(f);
  if (f.degree() == 0)
    return;
  chain_.push_back(primitive_part(f.derivative()));
  while (chain_.back().degree() > 0) {
    const auto r = divrem(to_rational(chain_[chain_.size() - 2]),
                          to_rational(chain_.back()))
                       .second;
    if (r.is_zero())
      break;
    // Positive rescaling keeps the Sturm property.
    chain_.push_back(-primitive_part(r));
  }
}

int SturmSequence::sign_changes(const Rational &x) const {
  int changes = 0, last = 0;
  for (const auto &p : chain_) {
    const int s = sgn(p.eval(x));
    if (s == 0)
      continue;
    if (last != 0 && s != last)
      ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count_roots(const Rational &lo, const Rational &hi) const {
  return sign_changes(lo) - sign_changes(hi);
}

namespace {

// Rational with the smallest denominator in the closed interval [a, b].
Rational simplest_between(Rational a, Rational b) {
  if (b < 0)
    return Rational(-simplest_between(-b, -a));
  if (a <= 0)
    return Rational(0);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
  if (Rational(fl) == a)
    return a;
  if (Rational(fl + 1) <= b)
    return Rational(fl + 1);
  const Rational inner = simplest_between(Rational(1 / (b - fl)),
                                          Rational(1 / (a - fl)));
  return Rational(fl + 1 / inner);
}

} // namespace

std::vector<RootInterval> isolate_real_roots(const ZPoly &f, const Rational &lo,
                                             const Rational &hi,
                                             const Rational &tolerance) {
  std::vector<RootInterval> out;
  if (f.degree() < 1 || !(lo < hi))
    return out;
  const SturmSequence sturm(f);

  std::vector<RootInterval> stack{{lo, hi}};
  std::vector<RootInterval> isolated;
  while (!stack.empty()) {
    RootInterval iv = stack.back();
    stack.pop_back();
    const int n = sturm.count_roots(iv.lo, iv.hi);
    if (n == 0)
      continue;
    if (n == 1) {
      isolated.push_back(iv);
      continue;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    stack.push_back({mid, iv.hi});
    stack.push_back({iv.lo, mid});
  }

  for (auto iv : isolated) {
    for (;;) {
      // Once the interval is narrow enough, a rational root is the unique
      // simplest rational inside it.
      const Rational r = simplest_between(iv.lo, iv.hi);
      if (r != iv.lo && sgn(f.eval(r)) == 0) {
        iv.lo = iv.hi = r;
        break;
      }
      if (iv.hi - iv.lo <= tolerance)
        break;
      const Rational mid = (iv.lo + iv.hi) / 2;
      if (sturm.count_roots(iv.lo, mid) == 1)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
    out.push_back(iv);
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval &a, const RootInterval &b) { return a.lo < b.lo; });
  return out;
}

} // namespace cogrowth
