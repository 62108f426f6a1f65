#pragma once

#include "cogrowth/series.hpp"

#include <string>
#include <vector>

namespace cogrowth {

/// Parameters of BS(N,M) = < a, b | a^N b = b a^M >.
struct GroupSpec {
  long N = 1;
  long M = 1;

  GroupSpec() = default;
  GroupSpec(long n, long m);

  bool symmetric() const { return N == M; }
  std::string to_string() const;
  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

/// Generating functions of words in <a> (G) and of the subsets L and K.
struct SolveResult {
  TruncatedSeries L;
  TruncatedSeries K;
  TruncatedSeries G;
  GroupSpec spec;
  int order = 0;
  /// Number of full sweeps performed, including the final confirming one.
  int sweeps = 0;
};

/// Iterate the L/K/G system from L = K = G = 1 until a sweep is a fixed
/// point. Throws InternalError if that does not happen within order + 2
/// sweeps.
SolveResult solve(GroupSpec spec, int order);

/// N = M specialisation (L = K), computed degree by degree.
SolveResult solve_symmetric(long N, int order);

/// [q^0] G, the number of length-n words equal to the identity.
std::vector<Integer> cogrowth_coeffs(GroupSpec spec, int order);

/// L(z;1) == K(z;1) through the truncation order.
bool check_LK_q1(GroupSpec spec, int order);

/// Right-hand side minus left-hand side of each equation of the system.
struct SystemResiduals {
  TruncatedSeries L;
  TruncatedSeries K;
  TruncatedSeries G;
  bool all_zero() const { return L.is_zero() && K.is_zero() && G.is_zero(); }
};

SystemResiduals system_residuals(const GroupSpec &spec, const TruncatedSeries &L,
                                 const TruncatedSeries &K,
                                 const TruncatedSeries &G);

} // namespace cogrowth
