#pragma once

#include "cogrowth/multipoly.hpp"
#include "cogrowth/series.hpp"

#include <variant>
#include <vector>

namespace cogrowth {

/// Construction is cheap below this N; larger N needs allow_large = true.
inline constexpr long kDefaultMaxConstructionN = 8;

/// N L0 prod_j D_j - sum_j (1 - z^2 L0^2) prod_{l != j} D_l with
/// D_j = 1 - z (q w^j + q^{-1} w^{-j}) - 2 z^2 L0, expanded over
/// Z[w]/Phi_N(w). Variables {"L0", "z", "q"}; q exponents may be negative.
/// Throws InternalError if any coefficient keeps a w-component.
IntMultiPoly build_L0_poly(long N, bool allow_large = false);

/// Rewrites a polynomial whose coefficients are symmetric Laurent
/// polynomials in the variable `q` in terms of Q = q + 1/q. The variable is
/// renamed to "Q". Throws InternalError on asymmetric coefficients.
IntMultiPoly rewrite_in_Q(const IntMultiPoly &p, std::string_view q = "q");

/// Symmetric Laurent polynomial in q as a polynomial in Q = q + 1/q.
ZPoly symmetric_to_Q(const LaurentPoly &p);

/// Divides out the integer content and the largest monomial factor; fixes
/// the sign so the constant term (or, failing that, the first term) is
/// positive.
IntMultiPoly canonical_form(const IntMultiPoly &p);

/// Equation P(G, z, Q) = 0 satisfied by G(z;q) for BS(N,N), variables
/// {"G", "z", "Q"}, in canonical form.
IntMultiPoly build_G_poly(long N, bool allow_large = false);

struct SymbolicQ {};
/// Either keep q symbolic (Q = q + 1/q as a Laurent polynomial) or
/// substitute a rational value for q.
using QValue = std::variant<SymbolicQ, Rational>;

struct VerifyOutcome {
  bool ok = false;
  /// Smallest z-degree with a nonzero residual, -1 when ok.
  int first_failing_degree = -1;
};

/// Substitutes G -> S and Q -> q + 1/q (or its value) into a polynomial in
/// {"G", "z", "Q"} and checks the result vanishes through z^order.
VerifyOutcome verify_series(const IntMultiPoly &poly, const TruncatedSeries &S,
                            const QValue &q, int order);

/// Coefficients of G^0, G^1, ... as integer polynomials in z after setting Q
/// to the given value.
std::vector<ZPoly> specialize_Q(const IntMultiPoly &poly, const Integer &Q);

} // namespace cogrowth
