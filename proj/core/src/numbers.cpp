#include "toric/numbers.hpp"

#include <cctype>

namespace toric {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("division by zero");
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) { return a - b * floor_div(a, b); }

Integer abs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

Integer floor(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& r) {
  const Integer den = denominator(r);
  if (den == 1) return numerator(r).str();
  return numerator(r).str() + "/" + den.str();
}

namespace {

Integer parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  Integer v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer num = parse_digits(s.substr(0, slash), text);
    Integer den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    value = Rational(num, den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    Integer whole = dot == 0 ? Integer(0) : parse_digits(s.substr(0, dot), text);
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer part = frac.empty() ? Integer(0) : parse_digits(frac, text);
    value = Rational(whole * scale + part, scale);
  } else {
    value = Rational(parse_digits(s, text));
  }
  return negative ? Rational(-value) : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace toric
