#ifndef LIECHECK_PARAM_FAMILY_HPP
#define LIECHECK_PARAM_FAMILY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "liecheck/linalg.hpp"
#include "liecheck/matrix.hpp"
#include "liecheck/multipoly.hpp"

namespace liecheck {

/// A finite-dimensional affine space of matrices: base point plus a
/// basis of directions.  Every linear solver in the library returns one
/// of these; determinant / Pfaffian queries are answered exactly as
/// polynomials in the family coordinates.
struct MatFamily {
  MatrixQ base;                 // usually zero
  std::vector<MatrixQ> basis;   // directions, echelon order from the solver
  std::vector<std::string> params;

  std::size_t dim() const { return basis.size(); }
  std::size_t rows() const { return base.rows(); }
  std::size_t cols() const { return base.cols(); }

  MatrixQ member(const VectorQ& coeffs) const;

  /// Matrix with entries in Q[c0..c_{k-1}] describing the family.
  MatrixP symbolic() const;
};

/// Assembles a family from a kernel basis whose vectors are flattened
/// row-major matrices.
MatFamily family_from_kernel(std::size_t rows, std::size_t cols,
                             const std::vector<VectorQ>& kernel,
                             const std::string& param_prefix = "c");

struct NonsingularWitness {
  bool identically_singular = false;
  MultiPoly det_poly;                 // det of the symbolic family
  std::optional<VectorQ> coefficients;
  std::optional<MatrixQ> witness;     // validated invertible
};

/// Symbolic determinant over the family; if it is not identically zero,
/// returns the first invertible member in the graded coefficient
/// enumeration 0, 1, -1, 2, -2, ... (grade = sum of absolute values).
NonsingularWitness nonsingular_witness(const MatFamily& family, int max_grade = 24);

/// Runs fn on coefficient vectors in the shared graded enumeration order
/// until it returns true; gives back the accepted vector.
std::optional<VectorQ> graded_search(std::size_t arity, int max_grade,
                                     const std::function<bool(const VectorQ&)>& fn);

} // namespace liecheck

#endif
