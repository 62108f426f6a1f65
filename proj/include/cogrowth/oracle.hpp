#pragma once

#include "cogrowth/solver.hpp"

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cogrowth {

enum class Letter { a, a_inv, b, b_inv };

Letter inverse(Letter x);
/// "a", "A", "b", "B" (capital = inverse)
char letter_char(Letter x);

/// One prefix token a^power b^sign, with 0 <= power < N for sign = +1 and
/// 0 <= power < M for sign = -1.
struct Token {
  long power = 0;
  int sign = 1;
  friend bool operator==(const Token &, const Token &) = default;
  friend auto operator<=>(const Token &, const Token &) = default;
};

/// Britton normal form P a^k of an element of BS(N,M).
struct GroupElement {
  std::vector<Token> prefix;
  Integer exponent = 0;

  bool in_cyclic_subgroup() const { return prefix.empty(); }
  bool is_identity() const { return prefix.empty() && sgn(exponent) == 0; }
  std::string to_string() const;

  friend bool operator==(const GroupElement &x, const GroupElement &y) {
    return x.prefix == y.prefix && x.exponent == y.exponent;
  }
};

GroupElement mul_generator(const GroupElement &g, Letter x,
                           const GroupSpec &spec);

/// Parses words such as "a a^-1 b", "aAbB", "b a^2 b^-1 a^-2". Letters are
/// a, b (and A, B for inverses), optionally followed by ^<integer>.
/// Whitespace is ignored. Throws InvalidArgument on anything else.
std::vector<Letter> parse_word(std::string_view text);

GroupElement normal_form(std::span<const Letter> word, const GroupSpec &spec);
GroupElement normal_form(std::string_view word, const GroupSpec &spec);

enum class Family { g, l, k, d };
Family parse_family(std::string_view name);
std::string family_name(Family f);

/// Word counts by length and a-exponent.
///  g: words in <a>; l: those in L; k: those in K;
///  d: freely reduced words equal to the identity (a-exponent 0 only).
struct CountTable {
  GroupSpec spec;
  int nmax = 0;
  std::vector<std::map<Integer, Integer>> g, l, k;
  std::vector<Integer> d;

  Integer get(Family f, int n, const Integer &exponent) const;
  const std::map<Integer, Integer> &row(Family f, int n) const;
  /// g_n = sum_k g_{n,k}
  Integer total(int n) const;
};

/// Default cap on nmax; override with the COGROWTH_ORACLE_MAX_N environment
/// variable.
inline constexpr int kDefaultOracleMaxN = 14;
int oracle_max_n();

CountTable count_tables(const GroupSpec &spec, int nmax);

/// An exponent k* maximising g_{n,k}; ties go to the smallest |k|, then to
/// the non-negative one.
std::pair<Integer, Integer> most_popular(const CountTable &table, int n);

} // namespace cogrowth
