#include "cogrowth/multipoly.hpp"

#include <cctype>
#include <sstream>

namespace cogrowth {

std::string to_canonical_text(const IntMultiPoly &p) {
  if (p.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : p.terms()) {
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    os << abs(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      os << "*" << p.variables()[i];
      if (e[i] != 1)
        os << "^" << e[i];
    }
  }
  return os.str();
}

namespace {

class Parser {
public:
  Parser(std::string_view text, const std::vector<std::string> &vars)
      : text_(text), vars_(vars) {}

  IntMultiPoly parse() {
    IntMultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string &why) const {
    throw InvalidArgument("polynomial parse error at offset " +
                          std::to_string(pos_) + ": " + why);
  }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  IntMultiPoly expr() {
    IntMultiPoly acc = term();
    for (;;) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  IntMultiPoly term() {
    IntMultiPoly acc = unary();
    while (accept('*'))
      acc *= unary();
    return acc;
  }

  IntMultiPoly unary() {
    if (accept('-'))
      return -unary();
    if (accept('+'))
      return unary();
    return power();
  }

  long integer_exponent() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer exponent");
    const long v = std::stol(std::string(text_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }

  IntMultiPoly power() {
    skip_ws();
    const std::size_t start = pos_;
    bool is_var = false;
    std::size_t var = 0;
    IntMultiPoly base = atom(is_var, var);
    if (!accept('^'))
      return base;
    const long k = integer_exponent();
    if (is_var)
      return IntMultiPoly::variable(vars_, var, static_cast<int>(k));
    if (k < 0) {
      pos_ = start;
      fail("negative powers are only allowed on variables");
    }
    return base.pow(static_cast<unsigned>(k));
  }

  IntMultiPoly atom(bool &is_var, std::size_t &var) {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IntMultiPoly inner = expr();
      if (!accept(')'))
        fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return IntMultiPoly::constant(
          vars_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) {
          is_var = true;
          var = i;
          return IntMultiPoly::variable(vars_, i);
        }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  const std::vector<std::string> &vars_;
  std::size_t pos_ = 0;
};

} // namespace

IntMultiPoly parse_polynomial(std::string_view text,
                              const std::vector<std::string> &variables) {
  return Parser(text, variables).parse();
}

} // namespace cogrowth
