#include "cogrowth/oracle.hpp"

#include "cogrowth/error.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

namespace cogrowth {

Letter inverse(Letter x) {
  switch (x) {
  case Letter::a:
    return Letter::a_inv;
  case Letter::a_inv:
    return Letter::a;
  case Letter::b:
    return Letter::b_inv;
  case Letter::b_inv:
    return Letter::b;
  }
  return x;
}

char letter_char(Letter x) {
  switch (x) {
  case Letter::a:
    return 'a';
  case Letter::a_inv:
    return 'A';
  case Letter::b:
    return 'b';
  case Letter::b_inv:
    return 'B';
  }
  return '?';
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (i)
      os << " ";
    if (prefix[i].power == 1)
      os << "a";
    else if (prefix[i].power > 1)
      os << "a^" << prefix[i].power;
    os << (prefix[i].sign > 0 ? "b" : "b^-1");
  }
  os << "] a^" << exponent;
  return os.str();
}

GroupElement mul_generator(const GroupElement &g, Letter x,
                           const GroupSpec &spec) {
  GroupElement out = g;
  switch (x) {
  case Letter::a:
    out.exponent += 1;
    return out;
  case Letter::a_inv:
    out.exponent -= 1;
    return out;
  case Letter::b:
  case Letter::b_inv:
    break;
  }

  // a^k b = a^r a^{jN} b = a^r b a^{jM} with k = jN + r, 0 <= r < N;
  // symmetrically for b^{-1} with N and M exchanged.
  const bool forward = x == Letter::b;
  const long div = forward ? spec.N : spec.M;
  const long mul = forward ? spec.M : spec.N;
  const int cancel_sign = forward ? -1 : 1;

  Integer j;
  const unsigned long r = mpz_fdiv_q_ui(j.get_mpz_t(), g.exponent.get_mpz_t(),
                                        static_cast<unsigned long>(div));
  if (r == 0 && !out.prefix.empty() && out.prefix.back().sign == cancel_sign) {
    const long s = out.prefix.back().power;
    out.prefix.pop_back();
    out.exponent = s + j * mul;
  } else {
    out.prefix.push_back(Token{static_cast<long>(r), forward ? 1 : -1});
    out.exponent = j * mul;
  }
  return out;
}

std::vector<Letter> parse_word(std::string_view text) {
  std::vector<Letter> word;
  std::size_t i = 0;
  auto fail = [&](const std::string &why) {
    throw InvalidArgument("malformed word \"" + std::string(text) + "\" at " +
                          std::to_string(i) + ": " + why);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Letter base;
    switch (c) {
    case 'a':
      base = Letter::a;
      break;
    case 'A':
      base = Letter::a_inv;
      break;
    case 'b':
      base = Letter::b;
      break;
    case 'B':
      base = Letter::b_inv;
      break;
    default:
      fail(std::string("unexpected character '") + c + "'");
    }
    ++i;
    long power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      const char *begin = text.data() + i;
      const char *end = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(begin, end, power);
      if (ec != std::errc() || ptr == begin)
        fail("expected an integer exponent");
      i += static_cast<std::size_t>(ptr - begin);
    }
    const Letter letter = power < 0 ? inverse(base) : base;
    for (long p = 0; p < std::labs(power); ++p)
      word.push_back(letter);
  }
  return word;
}

GroupElement normal_form(std::span<const Letter> word, const GroupSpec &spec) {
  GroupElement e;
  for (Letter x : word)
    e = mul_generator(e, x, spec);
  return e;
}

GroupElement normal_form(std::string_view word, const GroupSpec &spec) {
  const auto letters = parse_word(word);
  return normal_form(std::span<const Letter>(letters), spec);
}

Family parse_family(std::string_view name) {
  if (name == "g")
    return Family::g;
  if (name == "l")
    return Family::l;
  if (name == "k")
    return Family::k;
  if (name == "d")
    return Family::d;
  throw InvalidArgument("unknown count family \"" + std::string(name) +
                        "\" (expected g, l, k or d)");
}

std::string family_name(Family f) {
  switch (f) {
  case Family::g:
    return "g";
  case Family::l:
    return "l";
  case Family::k:
    return "k";
  case Family::d:
    return "d";
  }
  return "?";
}

const std::map<Integer, Integer> &CountTable::row(Family f, int n) const {
  if (n < 0 || n > nmax)
    throw InvalidArgument("length outside count table");
  switch (f) {
  case Family::g:
    return g[static_cast<std::size_t>(n)];
  case Family::l:
    return l[static_cast<std::size_t>(n)];
  case Family::k:
    return k[static_cast<std::size_t>(n)];
  case Family::d:
    break;
  }
  throw InvalidArgument("family d has no exponent rows; use get()");
}

Integer CountTable::get(Family f, int n, const Integer &exponent) const {
  if (n < 0 || n > nmax)
    throw InvalidArgument("length outside count table");
  if (f == Family::d)
    return sgn(exponent) == 0 ? d[static_cast<std::size_t>(n)] : Integer(0);
  const auto &r = row(f, n);
  auto it = r.find(exponent);
  return it == r.end() ? Integer(0) : it->second;
}

Integer CountTable::total(int n) const {
  Integer s = 0;
  for (const auto &[e, c] : row(Family::g, n))
    s += c;
  return s;
}

int oracle_max_n() {
  if (const char *env = std::getenv("COGROWTH_ORACLE_MAX_N")) {
    int v = 0;
    std::string_view sv(env);
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc() || ptr != sv.data() + sv.size() || v < 0)
      throw InvalidArgument(
          "COGROWTH_ORACLE_MAX_N must be a non-negative integer");
    return v;
  }
  return kDefaultOracleMaxN;
}

namespace {

struct State {
  GroupElement element;
  int last = -1; // previous letter; only tracked for freely reduced words

  friend bool operator==(const State &x, const State &y) {
    return x.last == y.last && x.element == y.element;
  }
};

struct StateHash {
  std::size_t operator()(const State &s) const noexcept {
    std::size_t h = std::hash<int>{}(s.last);
    auto mix = [&h](std::size_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (const auto &t : s.element.prefix)
      mix(static_cast<std::size_t>(t.power * 2 + (t.sign > 0 ? 1 : 0)));
    const mpz_srcptr e = s.element.exponent.get_mpz_t();
    mix(static_cast<std::size_t>(mpz_getlimbn(e, 0)));
    mix(static_cast<std::size_t>(mpz_sgn(e) + 1));
    return h;
  }
};

using Layer = std::unordered_map<State, Integer, StateHash>;

constexpr Letter kLetters[] = {Letter::a, Letter::a_inv, Letter::b,
                               Letter::b_inv};

bool is_single_token(const GroupElement &e, int sign) {
  return e.prefix.size() == 1 && e.prefix[0].power == 0 &&
         e.prefix[0].sign == sign;
}

// Advances one letter. `forbidden_sign` = 0 keeps every state; otherwise
// states whose prefix is exactly a^0 b^{forbidden_sign} are dropped.
// States with more prefix tokens than remaining letters cannot return to <a>.
Layer advance(const Layer &cur, const GroupSpec &spec, std::size_t remaining,
              int forbidden_sign, bool freely_reduced) {
  Layer next;
  next.reserve(cur.size() * 3);
  for (const auto &[state, weight] : cur) {
    for (int li = 0; li < 4; ++li) {
      const Letter x = kLetters[li];
      if (freely_reduced && state.last >= 0 &&
          inverse(kLetters[state.last]) == x)
        continue;
      State s{mul_generator(state.element, x, spec),
              freely_reduced ? li : -1};
      if (s.element.prefix.size() > remaining)
        continue;
      if (forbidden_sign != 0 && is_single_token(s.element, forbidden_sign))
        continue;
      next[std::move(s)] += weight;
    }
  }
  return next;
}

void record(const Layer &layer, std::map<Integer, Integer> &row) {
  for (const auto &[state, weight] : layer)
    if (state.element.prefix.empty())
      row[state.element.exponent] += weight;
}

} // namespace

CountTable count_tables(const GroupSpec &spec, int nmax) {
  if (nmax < 0)
    throw InvalidArgument("nmax must be non-negative");
  const int guard = oracle_max_n();
  if (nmax > guard)
    throw InvalidArgument(
        "nmax = " + std::to_string(nmax) + " exceeds the oracle guard of " +
        std::to_string(guard) +
        "; the state space grows exponentially with word length (raise the "
        "limit with COGROWTH_ORACLE_MAX_N if you have the memory)");

  CountTable t;
  t.spec = spec;
  t.nmax = nmax;
  const auto sz = static_cast<std::size_t>(nmax) + 1;
  t.g.resize(sz);
  t.l.resize(sz);
  t.k.resize(sz);
  t.d.assign(sz, Integer(0));

  Layer all, in_l, in_k, reduced;
  const State start{};
  all[start] = 1;
  in_l[start] = 1;
  in_k[start] = 1;
  reduced[start] = 1;

  for (std::size_t n = 0; n < sz; ++n) {
    record(all, t.g[n]);
    record(in_l, t.l[n]);
    record(in_k, t.k[n]);
    for (const auto &[state, weight] : reduced)
      if (state.element.is_identity())
        t.d[n] += weight;
    if (n + 1 == sz)
      break;
    const std::size_t remaining = sz - 1 - (n + 1);
    all = advance(all, spec, remaining, 0, false);
    in_l = advance(in_l, spec, remaining, -1, false);
    in_k = advance(in_k, spec, remaining, +1, false);
    reduced = advance(reduced, spec, remaining, 0, true);
  }
  return t;
}

std::pair<Integer, Integer> most_popular(const CountTable &table, int n) {
  const auto &r = table.row(Family::g, n);
  Integer best_k = 0, best = -1;
  for (const auto &[k, c] : r) {
    bool better = c > best;
    if (!better && c == best) {
      const int by_abs = cmp(abs(k), abs(best_k));
      better = by_abs < 0 || (by_abs == 0 && sgn(k) >= 0 && sgn(best_k) < 0);
    }
    if (better) {
      best = c;
      best_k = k;
    }
  }
  if (sgn(best) < 0)
    return {Integer(0), Integer(0)};
  return {best_k, best};
}

} // namespace cogrowth
