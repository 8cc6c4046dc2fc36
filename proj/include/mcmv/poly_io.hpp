#pragma once

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polynomial.hpp"

namespace mcmv {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, std::size_t offset)
      : ParseError("unknown variable '" + name + "'", offset), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

namespace detail {

// Recursive-descent parser for
//   expr    := product (('+' | '-') product)*
//   product := factor ('*' factor)*
//   factor  := ('+' | '-') factor | power
//   power   := primary ('^' digits)?
//   primary := digits | name | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  IntPoly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    IntPoly r = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return r;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  IntPoly expr() {
    IntPoly acc = product();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      IntPoly rhs = product();
      if (c == '+') acc += rhs;
      else acc -= rhs;
    }
  }

  IntPoly product() {
    IntPoly acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') {
        if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '('))
          throw ParseError("implicit multiplication is not allowed", pos_);
        return acc;
      }
      ++pos_;
      acc *= factor();
    }
  }

  IntPoly factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    if (peek() == '+') {
      ++pos_;
      return factor();
    }
    return power();
  }

  IntPoly power() {
    IntPoly base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 4) throw ParseError("exponent too large", start);
    return base.pow(static_cast<unsigned>(std::stoul(std::string(digits))));
  }

  IntPoly primary() {
    skip_ws();
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    const char c = peek();
    const std::size_t n = vars_.size();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return IntPoly::constant(n, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < n; ++i)
        if (vars_[i] == name) return IntPoly::variable(n, i);
      throw UnknownVariable(name, start);
    }
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline IntPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
  if (vars.size() > kMaxVars) throw std::invalid_argument("too many variables");
  return detail::PolyParser(text, vars).parse();
}

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

/// Canonical rendering in the input grammar, terms in decreasing degrevlex order.
template <class Ring>
std::string to_string(const Polynomial<Ring>& f, const std::vector<std::string>& vars) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    std::string c = f.ring().to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    if (negative) os << '-';
    else if (!first) os << '+';
    first = false;
    const std::string mono = monomial_to_string(t.mon, vars);
    if (mono.empty()) {
      os << c;
    } else {
      if (c != "1") os << c << '*';
      os << mono;
    }
  }
  return os.str();
}

/// Default names X1..Xn.
inline std::vector<std::string> default_var_names(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("X" + std::to_string(i + 1));
  return v;
}

}  // namespace mcmv
