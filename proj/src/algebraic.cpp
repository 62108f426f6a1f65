#include "cogrowth/algebraic.hpp"

#include <map>
#include <memory>
#include <utility>

namespace cogrowth {

namespace {

const std::vector<std::string> kL0Vars{"L0", "z", "q"};
const std::vector<std::string> kGVars{"G", "z", "Q"};

void check_construction_n(long N, bool allow_large) {
  if (N < 1)
    throw InvalidArgument("N must be at least 1");
  if (N > kDefaultMaxConstructionN && !allow_large)
    throw InvalidArgument("N = " + std::to_string(N) +
                          " exceeds the default construction cap of " +
                          std::to_string(kDefaultMaxConstructionN));
}

} // namespace

IntMultiPoly build_L0_poly(long N, bool allow_large) {
  check_construction_n(N, allow_large);
  auto ring = std::make_shared<const CyclotomicRing>(N);
  const auto vars = kL0Vars;
  const CycloMultiPoly one = CycloMultiPoly::constant(vars, CycloInt(1));
  const CycloMultiPoly L0 = CycloMultiPoly::variable(vars, 0);
  const CycloMultiPoly z = CycloMultiPoly::variable(vars, 1);
  const CycloMultiPoly q = CycloMultiPoly::variable(vars, 2);
  const CycloMultiPoly q_inv = CycloMultiPoly::variable(vars, 2, -1);
  const CycloMultiPoly z2L0 = z * z * L0;

  const auto n = static_cast<std::size_t>(N);
  std::vector<CycloMultiPoly> D;
  D.reserve(n);
  for (long j = 0; j < N; ++j) {
    const CycloInt wj = CycloInt::omega_power(ring, j);
    const CycloInt wmj = CycloInt::omega_power(ring, -j);
    D.push_back(one - z * (wj * q + wmj * q_inv) - CycloInt(2) * z2L0);
  }

  // prefix[j] = D_0 ... D_{j-1}, suffix[j] = D_j ... D_{N-1}
  std::vector<CycloMultiPoly> prefix(n + 1, one), suffix(n + 1, one);
  for (std::size_t j = 0; j < n; ++j)
    prefix[j + 1] = prefix[j] * D[j];
  for (std::size_t j = n; j-- > 0;)
    suffix[j] = D[j] * suffix[j + 1];

  CycloMultiPoly others(vars);
  for (std::size_t j = 0; j < n; ++j)
    others += prefix[j] * suffix[j + 1];

  const CycloMultiPoly full =
      CycloInt(Integer(N)) * (L0 * prefix[n]) - (one - z * z * L0 * L0) * others;

  IntMultiPoly out(vars);
  for (const auto &[e, c] : full.terms()) {
    if (!c.is_rational())
      throw InternalError("cyclotomic elimination left a w-component for N = " +
                          std::to_string(N));
    out.add_term(e, c.rational_part());
  }
  return out;
}

ZPoly symmetric_to_Q(const LaurentPoly &p) {
  // Peel the top term c q^m with c Q^m, which also accounts for c q^{-m}.
  std::vector<LaurentPoly> powers{LaurentPoly(1)};
  const LaurentPoly Q = LaurentPoly::q_plus_q_inverse();
  LaurentPoly rest = p;
  std::vector<Integer> out;
  while (!rest.is_zero()) {
    const auto &[top, c] = rest.terms().back();
    if (sgn(top) < 0 || !top.fits_slong_p())
      throw InternalError("coefficient is not symmetric under q -> 1/q: " +
                          p.to_string());
    const auto m = static_cast<std::size_t>(top.get_si());
    while (powers.size() <= m)
      powers.push_back(powers.back() * Q);
    if (out.size() <= m)
      out.resize(m + 1);
    out[m] += c;
    const Integer cc = c;
    rest -= cc * powers[m];
    if (!rest.is_zero() && rest.terms().back().first >= top)
      throw InternalError("coefficient is not symmetric under q -> 1/q: " +
                          p.to_string());
  }
  return ZPoly(std::move(out));
}

IntMultiPoly rewrite_in_Q(const IntMultiPoly &p, std::string_view qname) {
  const std::size_t qi = p.index_of(qname);
  std::vector<std::string> vars = p.variables();
  vars[qi] = "Q";

  std::map<std::vector<int>, std::vector<LaurentPoly::Term>> grouped;
  for (const auto &[e, c] : p.terms()) {
    auto key = e;
    key[qi] = 0;
    grouped[key].emplace_back(Integer(e[qi]), c);
  }
  IntMultiPoly out(vars);
  for (auto &[key, terms] : grouped) {
    const ZPoly inQ = symmetric_to_Q(LaurentPoly::from_terms(std::move(terms)));
    for (int m = 0; m <= inQ.degree(); ++m) {
      auto e = key;
      e[qi] = m;
      out.add_term(e, inQ[static_cast<std::size_t>(m)]);
    }
  }
  return out;
}

IntMultiPoly canonical_form(const IntMultiPoly &p) {
  if (p.is_zero())
    return p;
  const std::size_t nv = p.variables().size();
  std::vector<int> shift(nv);
  for (std::size_t i = 0; i < nv; ++i)
    shift[i] = p.min_degree(i);
  Integer g = 0;
  for (const auto &[e, c] : p.terms())
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());

  const std::vector<int> zero(nv, 0);
  std::vector<int> key;
  int sign = 0;
  for (const auto &[e, c] : p.terms()) {
    key = e;
    for (std::size_t i = 0; i < nv; ++i)
      key[i] -= shift[i];
    if (key == zero) {
      sign = sgn(c);
      break;
    }
  }
  if (sign == 0)
    sign = sgn(p.terms().begin()->second);
  if (sign < 0)
    g = -g;

  IntMultiPoly out(p.variables());
  for (const auto &[e, c] : p.terms()) {
    key = e;
    for (std::size_t i = 0; i < nv; ++i)
      key[i] -= shift[i];
    Integer v;
    mpz_divexact(v.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    out.add_term(key, v);
  }
  return out;
}

IntMultiPoly build_G_poly(long N, bool allow_large) {
  const IntMultiPoly inL0 = rewrite_in_Q(build_L0_poly(N, allow_large));
  const auto vars = kGVars;
  const IntMultiPoly one = IntMultiPoly::constant(vars, Integer(1));
  const IntMultiPoly G = IntMultiPoly::variable(vars, 0);
  const IntMultiPoly z = IntMultiPoly::variable(vars, 1);
  const IntMultiPoly Q = IntMultiPoly::variable(vars, 2);

  // L0 = (G (1 - zQ) - 1) / (2 z^2 G); multiply through by (2 z^2 G)^{N+1}.
  const IntMultiPoly numer = G * (one - z * Q) - one;
  const IntMultiPoly denom = Integer(2) * (z * z * G);
  const auto top = static_cast<std::size_t>(N + 1);
  std::vector<IntMultiPoly> numer_pow{one}, denom_pow{one};
  for (std::size_t i = 1; i <= top; ++i) {
    numer_pow.push_back(numer_pow.back() * numer);
    denom_pow.push_back(denom_pow.back() * denom);
  }

  IntMultiPoly out(vars);
  for (const auto &[e, c] : inL0.terms()) {
    const auto a = static_cast<std::size_t>(e[0]);
    if (e[0] < 0 || a > top || e[1] < 0)
      throw InternalError("unexpected monomial in the L0 equation");
    IntMultiPoly mono(vars);
    mono.add_term({0, e[1], e[2]}, c);
    out += mono * numer_pow[a] * denom_pow[top - a];
  }
  return canonical_form(out);
}

namespace {

bool is_zero_value(const LaurentPoly &x) { return x.is_zero(); }
bool is_zero_value(const Rational &x) { return sgn(x) == 0; }

template <class R>
std::vector<R> mul_trunc(const std::vector<R> &a, const std::vector<R> &b) {
  std::vector<R> out(a.size());
  for (std::size_t n = 0; n < a.size(); ++n)
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero_value(a[i]) || is_zero_value(b[n - i]))
        continue;
      out[n] += a[i] * b[n - i];
    }
  return out;
}

template <class R>
VerifyOutcome verify_in(const IntMultiPoly &poly, const std::vector<R> &S,
                        const R &Qval, int order) {
  const auto sz = static_cast<std::size_t>(order) + 1;
  const int degG = poly.degree(0);
  std::vector<std::vector<R>> by_power(static_cast<std::size_t>(degG) + 1,
                                       std::vector<R>(sz));
  std::vector<R> Qpow{R(1)};
  for (const auto &[e, c] : poly.terms()) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
      throw InvalidArgument("verify_series needs non-negative exponents");
    if (static_cast<std::size_t>(e[1]) >= sz)
      continue;
    while (Qpow.size() <= static_cast<std::size_t>(e[2]))
      Qpow.push_back(Qpow.back() * Qval);
    by_power[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] +=
        R(c) * Qpow[static_cast<std::size_t>(e[2])];
  }
  std::vector<R> acc = by_power.back();
  for (std::size_t a = by_power.size() - 1; a-- > 0;) {
    acc = mul_trunc(acc, S);
    for (std::size_t n = 0; n < sz; ++n)
      acc[n] += by_power[a][n];
  }
  for (std::size_t n = 0; n < sz; ++n)
    if (!is_zero_value(acc[n]))
      return {false, static_cast<int>(n)};
  return {true, -1};
}

} // namespace

VerifyOutcome verify_series(const IntMultiPoly &poly, const TruncatedSeries &S,
                            const QValue &q, int order) {
  if (poly.variables() != kGVars)
    throw InvalidArgument("verify_series expects a polynomial in G, z, Q");
  if (order < 0 || order > S.order())
    throw InvalidArgument("verification order exceeds the series order");
  const auto sz = static_cast<std::size_t>(order) + 1;
  if (std::holds_alternative<SymbolicQ>(q)) {
    std::vector<LaurentPoly> s(S.coeffs().begin(), S.coeffs().begin() + sz);
    return verify_in<LaurentPoly>(poly, s, LaurentPoly::q_plus_q_inverse(),
                                  order);
  }
  const Rational qv = std::get<Rational>(q);
  if (sgn(qv) == 0)
    throw InvalidArgument("q = 0 is not admissible");
  std::vector<Rational> s;
  s.reserve(sz);
  for (std::size_t n = 0; n < sz; ++n)
    s.push_back(S.coeffs()[n].eval(qv));
  return verify_in<Rational>(poly, s, Rational(qv + 1 / qv), order);
}

std::vector<ZPoly> specialize_Q(const IntMultiPoly &poly, const Integer &Q) {
  if (poly.variables() != kGVars)
    throw InvalidArgument("specialize_Q expects a polynomial in G, z, Q");
  std::vector<std::vector<Integer>> coeffs(
      static_cast<std::size_t>(poly.degree(0)) + 1);
  for (const auto &[e, c] : poly.terms()) {
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
      throw InvalidArgument("specialize_Q needs non-negative exponents");
    Integer qpow;
    mpz_pow_ui(qpow.get_mpz_t(), Q.get_mpz_t(), static_cast<unsigned long>(e[2]));
    auto &row = coeffs[static_cast<std::size_t>(e[0])];
    if (row.size() <= static_cast<std::size_t>(e[1]))
      row.resize(static_cast<std::size_t>(e[1]) + 1);
    row[static_cast<std::size_t>(e[1])] += c * qpow;
  }
  std::vector<ZPoly> out;
  out.reserve(coeffs.size());
  for (auto &row : coeffs)
    out.emplace_back(std::move(row));
  return out;
}

} // namespace cogrowth
