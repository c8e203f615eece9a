#ifndef LIECHECK_REPRESENTATION_HPP
#define LIECHECK_REPRESENTATION_HPP

#include <vector>

#include "liecheck/lie_algebra.hpp"

namespace liecheck {

/// Finite-dimensional representation of h: one action matrix per basis
/// element.  Construction validates the homomorphism property
/// pi([x,y]) = pi(x)pi(y) - pi(y)pi(x) on all basis pairs.
class Representation {
public:
  Representation(LieAlgebra source, std::vector<MatrixQ> action);

  const LieAlgebra& source() const { return source_; }
  std::size_t space_dim() const { return space_dim_; }
  const MatrixQ& action(std::size_t i) const { return action_[i]; }
  const std::vector<MatrixQ>& actions() const { return action_; }

  MatrixQ act(const VectorQ& x) const; // pi(x) = sum x_i pi(e_i)

private:
  LieAlgebra source_;
  std::size_t space_dim_;
  std::vector<MatrixQ> action_;
};

Representation adjoint_rep(const LieAlgebra& h);
Representation coadjoint_rep(const LieAlgebra& h); // action = -ad(e_i)^T
Representation zero_rep(const LieAlgebra& h, std::size_t space_dim);
Representation dual_representation(const Representation& rho);

enum class SemidirectKind { generic, tangent, cotangent };

/// Semidirect product h x_pi V with V abelian; basis is h-part first
/// (indices 0..n-1) then V-part (n..n+m-1).
struct SemidirectAlgebra {
  LieAlgebra total;
  std::size_t h_dim;
  std::size_t v_dim;
  SemidirectKind kind = SemidirectKind::generic;

  Subspace h_part() const;
  Subspace v_part() const;
};

SemidirectAlgebra semidirect(const LieAlgebra& h, const Representation& rho);
SemidirectAlgebra tangent(const LieAlgebra& h);
SemidirectAlgebra cotangent(const LieAlgebra& h);

} // namespace liecheck

#endif
