#include "cogrowth/solver.hpp"

#include "cogrowth/error.hpp"

namespace cogrowth {

GroupSpec::GroupSpec(long n, long m) : N(n), M(m) {
  if (n < 1 || m < 1)
    throw InvalidArgument("BS(N,M) requires N >= 1 and M >= 1");
}

std::string GroupSpec::to_string() const {
  return "BS(" + std::to_string(N) + "," + std::to_string(M) + ")";
}

namespace {

struct Iterate {
  TruncatedSeries L, K, G;
};

// One Jacobi sweep. Orientation follows the relation a^N b = b a^M:
// b u b^{-1} lies in <a> iff u = a^{jM}, and then equals a^{jN}, so the
// first-return factor for words starting with b is Phi_{M,N}(L); for b^{-1}
// it is Phi_{N,M}(K).
Iterate sweep(const GroupSpec &spec, const Iterate &cur) {
  const int order = cur.L.order();
  const LaurentPoly Q = LaurentPoly::q_plus_q_inverse();
  const TruncatedSeries one = TruncatedSeries::one(order);

  const TruncatedSeries from_b = series_phi(spec.M, spec.N, cur.L);
  const TruncatedSeries from_binv = series_phi(spec.N, spec.M, cur.K);
  const TruncatedSeries returns = from_b + from_binv;

  Iterate next{TruncatedSeries(order), TruncatedSeries(order),
               TruncatedSeries(order)};

  // Words of L ending in b must not split as u b^{-1} ... with u in <a^M>.
  next.L = one + (Q * cur.L).shift_z(1) +
           (cur.L * returns - from_binv * series_phi(spec.M, spec.M, cur.L))
               .shift_z(2);
  next.K = one + (Q * cur.K).shift_z(1) +
           (cur.K * returns - from_b * series_phi(spec.N, spec.N, cur.K))
               .shift_z(2);
  next.G = one + (Q * cur.G).shift_z(1) + (returns * cur.G).shift_z(2);
  return next;
}

} // namespace

SolveResult solve(GroupSpec spec, int order) {
  if (order < 0)
    throw InvalidArgument("order must be non-negative");
  Iterate cur{TruncatedSeries::one(order), TruncatedSeries::one(order),
              TruncatedSeries::one(order)};
  // Degree n is final after n + 1 sweeps, so order + 2 sweeps must contain
  // a fixed-point sweep.
  const int max_sweeps = order + 2;
  for (int s = 1; s <= max_sweeps; ++s) {
    Iterate next = sweep(spec, cur);
    const bool fixed = next.L == cur.L && next.K == cur.K && next.G == cur.G;
    cur = std::move(next);
    if (fixed)
      return SolveResult{std::move(cur.L), std::move(cur.K), std::move(cur.G),
                         spec, order, s};
  }
  throw InternalError("functional system did not stabilise within " +
                      std::to_string(max_sweeps) + " sweeps for " +
                      spec.to_string());
}

SolveResult solve_symmetric(long N, int order) {
  GroupSpec spec(N, N);
  if (order < 0)
    throw InvalidArgument("order must be non-negative");
  const LaurentPoly Q = LaurentPoly::q_plus_q_inverse();
  const auto sz = static_cast<std::size_t>(order) + 1;

  // L = 1 + zQL + 2z^2 L L0 - z^2 L0^2,  G = 1 + zQG + 2z^2 G L0,
  // with L0 = Phi_{N,N}(L). The z^n coefficient only needs lower degrees.
  std::vector<LaurentPoly> L(sz), L0(sz), G(sz);
  L[0] = G[0] = L0[0] = LaurentPoly(1);
  for (std::size_t n = 1; n < sz; ++n) {
    LaurentPoly l = Q * L[n - 1];
    LaurentPoly g = Q * G[n - 1];
    if (n >= 2) {
      LaurentPoly cross, square, gcross;
      for (std::size_t i = 0; i + 2 <= n; ++i) {
        const auto &r = L0[n - 2 - i];
        if (r.is_zero())
          continue;
        cross += L[i] * r;
        square += L0[i] * r;
        gcross += G[i] * r;
      }
      l += Integer(2) * cross - square;
      g += Integer(2) * gcross;
    }
    L[n] = std::move(l);
    G[n] = std::move(g);
    L0[n] = phi(N, N, L[n]);
  }
  TruncatedSeries Ls(order, std::move(L));
  TruncatedSeries Gs(order, std::move(G));
  return SolveResult{Ls, Ls, std::move(Gs), spec, order, 1};
}

std::vector<Integer> cogrowth_coeffs(GroupSpec spec, int order) {
  if (spec.symmetric())
    return diagonal_q0(solve_symmetric(spec.N, order).G);
  return diagonal_q0(solve(spec, order).G);
}

bool check_LK_q1(GroupSpec spec, int order) {
  SolveResult r = spec.symmetric() ? solve_symmetric(spec.N, order)
                                   : solve(spec, order);
  return eval_q1(r.L) == eval_q1(r.K);
}

SystemResiduals system_residuals(const GroupSpec &spec, const TruncatedSeries &L,
                                 const TruncatedSeries &K,
                                 const TruncatedSeries &G) {
  Iterate rhs = sweep(spec, Iterate{L, K, G});
  return SystemResiduals{rhs.L - L, rhs.K - K, rhs.G - G};
}

} // namespace cogrowth
