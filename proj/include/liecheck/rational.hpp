#ifndef LIECHECK_RATIONAL_HPP
#define LIECHECK_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "liecheck/errors.hpp"

namespace liecheck {

/// Exact scalar field.  mpq_class keeps the canonical form invariant
/// (denominator > 0, gcd(|num|, den) = 1) after every operation.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p/q" or "p/q" (whitespace-free).  Throws ParseError on
/// malformed input or q = 0.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(text);
      return Rational(n);
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: " + text);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal: " + text);
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace liecheck

#endif
