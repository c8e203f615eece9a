#ifndef LIECHECK_COMPLEX_STRUCTURE_HPP
#define LIECHECK_COMPLEX_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "liecheck/gaussian.hpp"
#include "liecheck/lie_algebra.hpp"
#include "liecheck/param_family.hpp"
#include "liecheck/representation.hpp"

namespace liecheck {

/// Endomorphism J with J^2 = -I on an even-dimensional algebra.
/// Construction validates both conditions.
class AlmostComplexStructure {
public:
  AlmostComplexStructure(LieAlgebra parent, MatrixQ matrix);

  const LieAlgebra& parent() const { return parent_; }
  const MatrixQ& matrix() const { return j_; }
  VectorQ apply(const VectorQ& x) const { return j_.apply(x); }

private:
  LieAlgebra parent_;
  MatrixQ j_;
};

/// N_J(x,y) = [Jx,Jy] - [x,y] - J[Jx,y] - J[x,Jy].
VectorQ nijenhuis(const AlmostComplexStructure& J, const VectorQ& x, const VectorQ& y);

struct IntegrabilityReport {
  bool integrable = false;
  std::optional<std::pair<std::size_t, std::size_t>> violating_pair; // 0-based
  VectorQ violation_value;
};

IntegrabilityReport is_integrable(const AlmostComplexStructure& J);

/// c2) [Jx,Jy] = [x,y] on all basis pairs.
bool is_abelian(const AlmostComplexStructure& J);
/// c1) J[x,y] = [x,Jy] on all ordered basis pairs.
bool is_bi_invariant(const AlmostComplexStructure& J);
/// J(h-part) equals the V-part of the given splitting.
bool is_totally_real(const AlmostComplexStructure& J, const SemidirectAlgebra& split);

struct ClassifyReport {
  bool abelian = false;
  bool bi_invariant = false;
  std::optional<bool> totally_real; // set when a splitting was supplied
};

ClassifyReport classify(const AlmostComplexStructure& J,
                        const std::optional<SemidirectAlgebra>& split = std::nullopt);

struct AscendingSeries {
  std::vector<Subspace> terms; // a_0 = 0, ..., up to stabilization
  bool nilpotent = false;
  std::size_t step = 0; // first l with a_l = g, meaningful when nilpotent
};

AscendingSeries ascending_series(const AlmostComplexStructure& J);

/// First l with a_l = g, or nullopt when the series stabilizes early.
std::optional<std::size_t> nilpotency_step(const AlmostComplexStructure& J);

/// Basis (rows) of the i-eigenspace m = {x - iJx} inside the
/// complexification, echelon-normalized over the Gaussian rationals.
MatrixQi complex_eigenspace(const AlmostComplexStructure& J);

std::vector<GaussianRational> complex_bracket(const LieAlgebra& g,
                                              const std::vector<GaussianRational>& u,
                                              const std::vector<GaussianRational>& v);

bool complex_span_contains(const MatrixQi& echelon_rows,
                           const std::vector<GaussianRational>& v);

/// True iff [m, m] is contained in m.  Must agree with is_integrable.
bool eigenspace_closure(const AlmostComplexStructure& J);

/// Solutions j of  j[x,y] = pi(x) j y - pi(y) j x  (linear form of the
/// totally-real integrability condition).  Members need not be
/// invertible; invertibility is the nonsingular-witness query.
MatFamily totally_real_space(const LieAlgebra& h, const Representation& rho);

/// Block structure J(x,v) = (-j^{-1} v, j x) on a semidirect product
/// with dim V = dim h.  Throws SingularMap when j is not invertible.
AlmostComplexStructure totally_real_acs(const SemidirectAlgebra& split, const MatrixQ& j);

/// Tangent-algebra structure attached to a nonsingular derivation.
AlmostComplexStructure derivation_to_totally_real(const LieAlgebra& h, const MatrixQ& d);

struct AbelianObstruction {
  std::size_t center_dim = 0;
  bool center_dim_odd = false;
  bool commutator_abelian = true;
  bool obstructed = false; // some abelian complex structure is excluded
};

AbelianObstruction abelian_obstruction(const LieAlgebra& g);

} // namespace liecheck

#endif
