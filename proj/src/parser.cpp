#include "polyharm/parser.hpp"

#include <cctype>
#include <sstream>

namespace polyharm {

namespace {

class Parser {
public:
  Parser(const std::string& text, int dim) : text_(text), dim_(dim) {}

  MPoly parse() {
    MPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  MPoly expr() {
    MPoly p = term();
    for (;;) {
      skip_ws();
      if (eat('+')) {
        p += term();
      } else if (eat('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  MPoly term() {
    MPoly p = factor();
    for (;;) {
      skip_ws();
      if (!eat('*')) return p;
      p = p * factor();
    }
  }

  MPoly factor() {
    skip_ws();
    bool negative = false;
    while (peek() == '+' || peek() == '-') {
      if (get() == '-') negative = !negative;
      skip_ws();
    }
    MPoly p = atom();
    skip_ws();
    if (eat('^')) {
      skip_ws();
      p = p.pow(parse_nat("exponent"));
    }
    if (negative) p *= Rational(-1);
    return p;
  }

  MPoly atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly p = expr();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == 'x') {
      ++pos_;
      if (!std::isdigit((unsigned char)peek())) fail("expected variable index after 'x'");
      unsigned idx = parse_nat("variable index");
      if (idx == 0) fail("variables are numbered from x1");
      if ((int)idx > dim_)
        fail("variable x" + std::to_string(idx) + " exceeds dimension " +
             std::to_string(dim_));
      return MPoly::variable(dim_, (int)idx);
    }
    if (std::isdigit(c)) {
      const std::size_t start = pos_;
      std::string num = digits("number");
      std::string lit = num;
      if (skip_ws(), eat('/')) {
        skip_ws();
        lit += "/" + digits("denominator");
      }
      try {
        return MPoly::constant(dim_, Rational::from_string(lit));
      } catch (const Error& e) {
        throw ParseError(e.what(), start);
      }
    }
    fail(pos_ == text_.size() ? "unexpected end of input"
                              : std::string("unexpected character '") + c + "'");
  }

  std::string digits(const char* what) {
    if (!std::isdigit((unsigned char)peek())) fail(std::string("expected ") + what);
    std::string s;
    while (std::isdigit((unsigned char)peek())) s += get();
    return s;
  }

  unsigned parse_nat(const char* what) {
    std::string s = digits(what);
    if (s.size() > 6) fail(std::string(what) + " out of range");
    return (unsigned)std::stoul(s);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  const std::string& text_;
  int dim_;
  std::size_t pos_ = 0;
};

void print_monomial(std::ostringstream& os, const Monomial& m, bool lead_star) {
  bool first = !lead_star;
  for (int i = 0; i < m.dim(); ++i) {
    int e = m[i];
    if (e == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (e > 1) os << '^' << e;
  }
}

}  // namespace

MPoly parse_poly(const std::string& text, int dim) {
  if (dim < 2) throw Error("dimension must be at least 2");
  return Parser(text, dim).parse();
}

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending graded-lex: highest-degree, x1-heaviest terms first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = c.abs();
    if (m.is_constant()) {
      os << a.str();
    } else if (a == Rational(1)) {
      print_monomial(os, m, false);
    } else {
      os << a.str();
      print_monomial(os, m, true);
    }
  }
  return os.str();
}

}  // namespace polyharm
