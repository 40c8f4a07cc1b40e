#ifndef MOTZKIN_RATIONAL_HPP
#define MOTZKIN_RATIONAL_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace motzkin {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an operation is applied outside its mathematical domain
/// (non-Motzkin input to a statistics query, division by a non-unit, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by text/JSON readers; the message names the offending location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const BigInt& v) { return v.str(); }

/// "p/q" with the "/q" omitted for integers.
inline std::string to_string(const Rational& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) {
    s += '/';
    s += denominator(v).str();
  }
  return s;
}

inline Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ParseError("not a rational: \"" + s + "\"");
  }
}

}  // namespace motzkin

#endif
