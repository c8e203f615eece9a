#ifndef LIECHECK_FORMS_HPP
#define LIECHECK_FORMS_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "liecheck/complex_structure.hpp"
#include "liecheck/lie_algebra.hpp"
#include "liecheck/param_family.hpp"
#include "liecheck/representation.hpp"

namespace liecheck {

/// Antisymmetric bilinear form, omega_{ij} = omega(e_i, e_j).
class TwoForm {
public:
  TwoForm(LieAlgebra parent, MatrixQ matrix);
  const LieAlgebra& parent() const { return parent_; }
  const MatrixQ& matrix() const { return m_; }
  Rational eval(const VectorQ& x, const VectorQ& y) const;

private:
  LieAlgebra parent_;
  MatrixQ m_;
};

/// Nondegenerate symmetric bilinear form.
class Metric {
public:
  Metric(LieAlgebra parent, MatrixQ matrix);
  const LieAlgebra& parent() const { return parent_; }
  const MatrixQ& matrix() const { return m_; }
  Rational eval(const VectorQ& x, const VectorQ& y) const;

private:
  LieAlgebra parent_;
  MatrixQ m_;
};

struct ClosednessReport {
  bool closed = false;
  std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> violating_triple;
  Rational violation_value;
};

/// Cyclic condition omega([x,y],z) + omega([y,z],x) + omega([z,x],y) = 0
/// over all basis triples i<j<k.
ClosednessReport is_closed(const TwoForm& omega);

/// Nondegeneracy via Pfaffian != 0; throws OddDimension.
bool is_nondegenerate(const TwoForm& omega);

/// Linear family of two-forms on a fixed algebra.
struct FormFamily {
  LieAlgebra parent;
  std::vector<MatrixQ> directions; // antisymmetric matrices
  std::vector<std::string> params;

  std::size_t dim() const { return directions.size(); }
  TwoForm member(const VectorQ& coeffs) const;
  MatrixQ member_matrix(const VectorQ& coeffs) const;
  MatrixP symbolic() const;
  /// Echelon-normalized row space of the flattened strict upper
  /// triangles; two families are the same space iff these agree.
  Subspace coefficient_space() const;
};

FormFamily closed_form_space(const LieAlgebra& g);
FormFamily compatible_closed_space(const LieAlgebra& g, const AlmostComplexStructure& J);

/// Family of all forms compatible with J (no closedness imposed).
FormFamily compatible_space(const LieAlgebra& g, const AlmostComplexStructure& J);

struct SymplecticWitness {
  bool none_exists = false;
  MultiPoly pfaffian_poly;
  std::optional<VectorQ> coefficients;
  std::optional<MatrixQ> witness; // closed and nondegenerate
};

SymplecticWitness symplectic_witness(const FormFamily& family, int max_grade = 24);

/// omega(Jx, y); requires compatibility and nondegeneracy.
Metric kahler_metric(const TwoForm& omega, const AlmostComplexStructure& J);

/// <(x,phi),(x',phi')> = phi'(x) + phi(x') on a cotangent algebra.
Metric canonical_cotangent_metric(const SemidirectAlgebra& ct);

/// <[x,y],z> + <y,[x,z]> = 0 on all basis triples.
bool is_ad_invariant(const LieAlgebra& g, const Metric& metric);

bool hermitian_check(const AlmostComplexStructure& J, const Metric& metric);

enum class GeneralizedType { complex_type, symplectic_type, hermitian_only, not_hermitian };

/// Classifies J on the cotangent algebra of h against the canonical
/// neutral metric.  J must be integrable.
GeneralizedType generalized_cs_check(const SemidirectAlgebra& ct,
                                     const AlmostComplexStructure& J);

enum class IsotropyType { nondegenerate, isotropic, totally_isotropic, mixed };

IsotropyType isotropy_type(const Subspace& s, const MatrixQ& form);

/// omega_J(x+u, y+v) = v(Jx) - u(Jy) on the dual semidirect product,
/// for J totally real and integrable on the given product.
std::pair<SemidirectAlgebra, TwoForm> lagrangian_form(const LieAlgebra& h,
                                                      const Representation& rho,
                                                      const AlmostComplexStructure& J);

struct SkewDerivationResult {
  bool none_exists = false;
  MultiPoly det_poly;
  std::optional<MatrixQ> witness;
};

/// Nonsingular derivations that are skew for the given ad-invariant
/// metric; throws MetricNotAdInvariant.
SkewDerivationResult skew_nonsingular_derivation(const LieAlgebra& h, const Metric& adinv);

} // namespace liecheck

#endif
