#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

using Integer = boost::multiprecision::cpp_int;
// Always normalized: denominator > 0, gcd(|num|, den) = 1.
using Rational = boost::multiprecision::cpp_rational;

/// Malformed textual or file input. `position` is a 0-based offset into the
/// offending text when one is known.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(what), position_(position) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A well-formed input that violates an operation's precondition
/// (non-pointed cone, non-square matrix, zero polynomial, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);

Integer numerator(const Rational& r);
Integer denominator(const Rational& r);
Integer floor(const Rational& r);
bool is_integer(const Rational& r);

/// "p/q", or "p" when q = 1.
std::string to_string(const Integer& v);
std::string to_string(const Rational& r);

/// Accepts "p", "-p", "p/q" (q > 0) and finite decimals such as "0.25".
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace toric
