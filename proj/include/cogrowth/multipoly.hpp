#pragma once

#include "cogrowth/cyclotomic.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace cogrowth {

/// Sparse multivariate (Laurent) polynomial over C in an explicit, ordered
/// list of named variables. Exponents may be negative.
template <class C> class MultiPoly {
public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables)
      : vars_(std::move(variables)) {}

  static MultiPoly constant(std::vector<std::string> variables, const C &c) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
  }
  static MultiPoly variable(std::vector<std::string> variables,
                            std::size_t index, int power = 1) {
    MultiPoly p(std::move(variables));
    Exponents e(p.vars_.size(), 0);
    e.at(index) = power;
    p.add_term(e, C(1));
    return p;
  }

  const std::vector<std::string> &variables() const { return vars_; }
  const std::map<Exponents, C> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name)
        return i;
    throw InvalidArgument("unknown variable " + std::string(name));
  }

  void add_term(const Exponents &e, const C &c) {
    if (e.size() != vars_.size())
      throw InvalidArgument("exponent vector has the wrong length");
    if (is_zero_coeff(c))
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (is_zero_coeff(it->second))
        terms_.erase(it);
    }
  }

  C coeff(const Exponents &e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Highest exponent of a variable (0 for the zero polynomial).
  int degree(std::size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto &[e, c] : terms_) {
      if (first || e[var] > d)
        d = e[var];
      first = false;
    }
    return d;
  }
  int min_degree(std::size_t var) const {
    int d = 0;
    bool first = true;
    for (const auto &[e, c] : terms_) {
      if (first || e[var] < d)
        d = e[var];
      first = false;
    }
    return d;
  }

  MultiPoly &operator+=(const MultiPoly &r) {
    check_vars(r);
    for (const auto &[e, c] : r.terms_)
      add_term(e, c);
    return *this;
  }
  MultiPoly &operator-=(const MultiPoly &r) {
    check_vars(r);
    for (const auto &[e, c] : r.terms_)
      add_term(e, -c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
  MultiPoly operator-() const {
    MultiPoly out(vars_);
    for (const auto &[e, c] : terms_)
      out.terms_.emplace(e, -c);
    return out;
  }
  friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
    a.check_vars(b);
    MultiPoly out(a.vars_.empty() ? b.vars_ : a.vars_);
    Exponents e(out.vars_.size());
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  MultiPoly &operator*=(const MultiPoly &r) { return *this = *this * r; }
  friend MultiPoly operator*(const C &s, const MultiPoly &p) {
    MultiPoly out(p.vars_);
    for (const auto &[e, c] : p.terms_)
      out.add_term(e, s * c);
    return out;
  }
  friend bool operator==(const MultiPoly &a, const MultiPoly &b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned k) const {
    MultiPoly out = constant(vars_, C(1));
    for (unsigned i = 0; i < k; ++i)
      out *= *this;
    return out;
  }

private:
  static bool is_zero_coeff(const C &c) { return cogrowth::is_zero(c); }
  void check_vars(const MultiPoly &r) const {
    if (!vars_.empty() && !r.vars_.empty() && vars_ != r.vars_)
      throw InvalidArgument("polynomials over different variable lists");
  }

  std::vector<std::string> vars_;
  std::map<Exponents, C> terms_;
};

using IntMultiPoly = MultiPoly<Integer>;
using CycloMultiPoly = MultiPoly<CycloInt>;

/// Canonical text: terms in increasing lexicographic order of the exponent
/// vector, each written as <coeff>[*var[^e]]... with the integer coefficient
/// always explicit, joined by " + " / " - ". The zero polynomial is "0".
std::string to_canonical_text(const IntMultiPoly &p);

/// Parses an integer polynomial expression over the given variables:
/// integers, variable names, + - *, ^ with integer exponents, parentheses.
/// Juxtaposition such as "3zQG" is not accepted; write "3*z*Q*G".
IntMultiPoly parse_polynomial(std::string_view text,
                              const std::vector<std::string> &variables);

} // namespace cogrowth
