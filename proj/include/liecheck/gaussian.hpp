#ifndef LIECHECK_GAUSSIAN_HPP
#define LIECHECK_GAUSSIAN_HPP

#include <string>

#include "liecheck/rational.hpp"

namespace liecheck {

/// Gaussian rational a + b i with exact arithmetic, i^2 = -1.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Conjugation; realizes the map sigma (im -> -im).
  GaussianRational conj() const { return {re, -im}; }

  bool is_zero() const { return re == 0 && im == 0; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }

  GaussianRational inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw SingularMap("division by zero Gaussian rational");
    return {re / n, -im / n};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
};

inline std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return z.re.get_str();
  if (z.re == 0) return z.im.get_str() + "i";
  std::string s = z.re.get_str();
  if (z.im > 0) s += "+";
  return s + z.im.get_str() + "i";
}

} // namespace liecheck

#endif
