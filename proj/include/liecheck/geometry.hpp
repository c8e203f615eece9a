#ifndef LIECHECK_GEOMETRY_HPP
#define LIECHECK_GEOMETRY_HPP

#include <vector>

#include "liecheck/complex_structure.hpp"
#include "liecheck/forms.hpp"
#include "liecheck/lie_algebra.hpp"

namespace liecheck {

/// Left-invariant affine connection: gamma(i) is the matrix of the
/// endomorphism nabla_{e_i}, column j = nabla_{e_i} e_j.
class Connection {
public:
  Connection(LieAlgebra parent, std::vector<MatrixQ> gamma);

  const LieAlgebra& parent() const { return parent_; }
  const MatrixQ& gamma(std::size_t i) const { return gamma_[i]; }
  /// nabla_x as a matrix, linear in x.
  MatrixQ covariant(const VectorQ& x) const;
  VectorQ derivative(const VectorQ& x, const VectorQ& y) const;

  bool is_torsion_free() const;
  bool is_metric_compatible(const Metric& g) const;

private:
  LieAlgebra parent_;
  std::vector<MatrixQ> gamma_;
};

/// Unique torsion-free metric connection from the Koszul formula
/// 2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>.  Both defining
/// identities are asserted after construction.
Connection levi_civita(const LieAlgebra& g, const Metric& metric);

struct CurvatureReport {
  /// R(e_i, e_j) for i < j, indexed by the strict upper triangle in
  /// row-major order; R(x,y) = [nabla_x, nabla_y] - nabla_{[x,y]}.
  std::vector<MatrixQ> operators;
  bool flat = false;
  /// Ricci convention: r(x, y) = trace of v -> R(x, v) y.
  MatrixQ ricci;
  bool ricci_flat = false;

  const MatrixQ& op(std::size_t i, std::size_t j, std::size_t dim) const;
};

CurvatureReport curvature_report(const Connection& c);

/// nabla J = 0: each nabla_{e_i} commutes with J.
bool is_parallel(const Connection& c, const AlmostComplexStructure& J);

/// nabla_x y stays in S for x, y in S; S must be a subalgebra.
bool is_totally_geodesic(const Connection& c, const Subspace& s);

} // namespace liecheck

#endif
