#include "liecheck/param_family.hpp"

#include <functional>

#include "liecheck/errors.hpp"

namespace liecheck {

MatrixQ MatFamily::member(const VectorQ& coeffs) const {
  if (coeffs.size() != basis.size())
    throw DimensionMismatch("family coefficient count");
  MatrixQ m = base;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    MatrixQ t = basis[k];
    t *= coeffs[k];
    m += t;
  }
  return m;
}

MatrixP MatFamily::symbolic() const {
  std::size_t nv = basis.size();
  MatrixP p(base.rows(), base.cols());
  for (std::size_t i = 0; i < base.rows(); ++i)
    for (std::size_t j = 0; j < base.cols(); ++j) {
      MultiPoly e = MultiPoly::constant(nv, base(i, j));
      for (std::size_t k = 0; k < nv; ++k) {
        if (basis[k](i, j) == 0) continue;
        MultiPoly v = MultiPoly::variable(nv, k);
        v *= basis[k](i, j);
        e += v;
      }
      p(i, j) = std::move(e);
    }
  return p;
}

MatFamily family_from_kernel(std::size_t rows, std::size_t cols,
                             const std::vector<VectorQ>& kernel,
                             const std::string& param_prefix) {
  MatFamily f;
  f.base = MatrixQ(rows, cols);
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    if (kernel[k].size() != rows * cols)
      throw DimensionMismatch("kernel vector does not flatten to requested shape");
    MatrixQ m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = kernel[k][i * cols + j];
    f.basis.push_back(std::move(m));
    f.params.push_back(param_prefix + std::to_string(k));
  }
  return f;
}

namespace {

// Enumerates sign patterns / magnitude splits for a fixed grade in a
// deterministic order: magnitudes lexicographically largest-first per
// position, positive sign before negative.
bool enumerate_grade(std::size_t pos, int remaining, VectorQ& current,
                     const std::function<bool(const VectorQ&)>& fn) {
  if (pos == current.size()) {
    if (remaining != 0) return false;
    return fn(current);
  }
  if (pos + 1 == current.size()) {
    if (remaining == 0) {
      current[pos] = 0;
      return fn(current);
    }
    current[pos] = remaining;
    if (fn(current)) return true;
    current[pos] = -remaining;
    return fn(current);
  }
  for (int mag = 0; mag <= remaining; ++mag) {
    if (mag == 0) {
      current[pos] = 0;
      if (enumerate_grade(pos + 1, remaining, current, fn)) return true;
      continue;
    }
    current[pos] = mag;
    if (enumerate_grade(pos + 1, remaining - mag, current, fn)) return true;
    current[pos] = -mag;
    if (enumerate_grade(pos + 1, remaining - mag, current, fn)) return true;
  }
  return false;
}

} // namespace

std::optional<VectorQ> graded_search(std::size_t arity, int max_grade,
                                     const std::function<bool(const VectorQ&)>& fn) {
  VectorQ current(arity, Rational(0));
  std::optional<VectorQ> found;
  auto probe = [&](const VectorQ& v) {
    if (fn(v)) {
      found = v;
      return true;
    }
    return false;
  };
  for (int grade = 0; grade <= max_grade; ++grade)
    if (enumerate_grade(0, grade, current, probe)) return found;
  return std::nullopt;
}

NonsingularWitness nonsingular_witness(const MatFamily& family, int max_grade) {
  NonsingularWitness out;
  if (family.rows() != family.cols())
    throw DimensionMismatch("nonsingular witness requires a square family");
  out.det_poly = det(family.symbolic());
  if (is_identically_zero(out.det_poly, ZeroMethod::symbolic).identically_zero) {
    out.identically_singular = true;
    return out;
  }
  auto coeffs = graded_search(family.dim(), max_grade, [&](const VectorQ& c) {
    return out.det_poly.eval(c) != 0;
  });
  if (!coeffs)
    throw InvalidStructure("witness enumeration exhausted without finding one");
  out.coefficients = *coeffs;
  out.witness = family.member(*coeffs);
  return out;
}

} // namespace liecheck
