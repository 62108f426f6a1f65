#pragma once

#include <optional>
#include <string>

namespace cogrowth::reference {

/// Reference cogrowth rate mu and reduced rate lambda for BS(N,N).
struct TableRow {
  int N;
  double mu;
  double lambda;
};

/// Rows for N = 1..10; nullopt outside that range.
std::optional<TableRow> table_row(int N);

/// Cogrowth rate of the free group on two generators, sqrt(12).
constexpr double kFreeGroupMu = 3.464101615;

/// Reference polynomial equation for G(z;Q) in BS(N,N), N = 2..5, written
/// with explicit '*' so that parse_polynomial accepts it (variables G, z, Q).
std::optional<std::string> reference_G_equation(int N);

} // namespace cogrowth::reference
