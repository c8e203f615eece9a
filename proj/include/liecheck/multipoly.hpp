#ifndef LIECHECK_MULTIPOLY_HPP
#define LIECHECK_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "liecheck/matrix.hpp"
#include "liecheck/rational.hpp"

namespace liecheck {

/// Multivariate polynomial over the rationals.  Terms are kept in a
/// canonical order (lexicographic on exponent vectors) and zero
/// coefficients are never stored, so is_zero() is an exact verdict.
class MultiPoly {
public:
  using Exponents = std::vector<int>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Rational& c);
  static MultiPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& s);
  /// Zero polynomials compare equal regardless of variable count, so a
  /// default-constructed MultiPoly is a universal zero.
  bool operator==(const MultiPoly& o) const {
    if (terms_.empty() && o.terms_.empty()) return true;
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  Rational eval(const std::vector<Rational>& point) const;

  /// Human-readable form using the supplied variable names (or x0,x1,...).
  std::string to_string(const std::vector<std::string>& names = {}) const;

  /// Re-keys a 0-variable (constant) polynomial into nvars variables.
  MultiPoly promoted(std::size_t nvars) const;

private:
  void add_term(const Exponents& e, const Rational& c);

  std::size_t nvars_ = 0;
  std::map<Exponents, Rational> terms_;
};

using MatrixP = Matrix<MultiPoly>;

} // namespace liecheck

#endif
