#include <algorithm>
#include <cctype>
#include <utility>

#include "toric/polynomial.hpp"

namespace toric {

namespace {

struct RawTerm {
  Rational coefficient;
  std::vector<std::pair<std::string, Integer>> factors;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> terms;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    terms.push_back(term(negative));
    for (;;) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(c == '-'));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string msg = what + " at position " + std::to_string(pos_);
    if (at_end()) {
      msg += " (end of input)";
    } else {
      msg += " ('" + std::string(1, text_[pos_]) + "')";
    }
    throw ParseError(msg, pos_);
  }

  Integer digits() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    Integer v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (text_[pos_++] - '0');
    return v;
  }

  bool next_is_letter() {
    skip_space();
    return std::isalpha(static_cast<unsigned char>(peek()));
  }

  RawTerm term(bool negative) {
    RawTerm t{negative ? Rational(-1) : Rational(1), {}};
    skip_space();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num = digits();
      Integer den = 1;
      skip_space();
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        den = digits();
        if (den == 0) throw ParseError("zero denominator at position " + std::to_string(at), at);
      }
      t.coefficient *= Rational(num, den);
      skip_space();
      if (peek() != '*') return t;
      ++pos_;
      if (!next_is_letter()) fail("expected a variable after '*'");
    } else if (!next_is_letter()) {
      fail(at_end() ? "unexpected end of input" : "unexpected character");
    }
    factors(t);
    return t;
  }

  void factors(RawTerm& t) {
    for (;;) {
      t.factors.push_back(factor());
      skip_space();
      if (peek() != '*') return;
      ++pos_;
      if (!next_is_letter()) fail("expected a variable after '*'");
    }
  }

  std::pair<std::string, Integer> factor() {
    skip_space();
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      name += text_[pos_++];
    Integer e = 1;
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      e = digits();
      if (neg) e = -e;
    }
    return {std::move(name), e};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text,
                                   const std::optional<std::vector<std::string>>& variable_order) {
  const std::vector<RawTerm> raw = Parser(text).parse();
  std::vector<std::string> vars;
  if (variable_order) {
    vars = *variable_order;
    for (std::size_t i = 0; i < vars.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (vars[i] == vars[j]) throw ParseError("duplicate variable '" + vars[i] + "' in order");
    for (const auto& t : raw)
      for (const auto& [name, e] : t.factors)
        if (std::find(vars.begin(), vars.end(), name) == vars.end())
          throw ParseError("variable '" + name + "' is not in the declared variable list");
  } else {
    for (const auto& t : raw)
      for (const auto& [name, e] : t.factors)
        if (std::find(vars.begin(), vars.end(), name) == vars.end()) vars.push_back(name);
  }
  LaurentPolynomial f(vars);
  for (const auto& t : raw) {
    LatticeVector a(vars.size());
    for (const auto& [name, e] : t.factors)
      a[static_cast<std::size_t>(std::find(vars.begin(), vars.end(), name) - vars.begin())] += e;
    f.add_term(a, t.coefficient);
  }
  return f;
}

}  // namespace toric
