#ifndef LIECHECK_LIE_ALGEBRA_HPP
#define LIECHECK_LIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "liecheck/linalg.hpp"
#include "liecheck/matrix.hpp"
#include "liecheck/param_family.hpp"

namespace liecheck {

/// One structure-constant entry: [e_i, e_j] has coefficient c on e_k,
/// stored for i < j only (antisymmetry is implicit).  Indices 0-based.
struct BracketEntry {
  std::size_t i, j, k;
  Rational c;
};

/// Subspace of a coordinate space, kept in reduced row echelon form so
/// that set-level equality is matrix equality.
class Subspace {
public:
  Subspace() = default;
  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  static Subspace span(std::size_t ambient, const std::vector<VectorQ>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const MatrixQ& basis() const { return basis_; }
  VectorQ basis_vector(std::size_t k) const { return basis_.row(k); }

  bool contains(const VectorQ& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }
  Subspace sum(const Subspace& other) const;

private:
  std::size_t ambient_ = 0;
  MatrixQ basis_; // rows form the RREF basis

  friend Subspace make_subspace_unchecked(std::size_t, MatrixQ);
};

/// Lie algebra given by rational structure constants on a fixed basis.
/// Construction validates the Jacobi identity on all basis triples.
class LieAlgebra {
public:
  static constexpr std::size_t kMaxDim = 16; // all catalog objects are <= 6

  LieAlgebra(std::size_t dim, std::vector<std::string> labels,
             std::vector<BracketEntry> table);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<BracketEntry>& table() const { return table_; }

  /// Matrix of ad(e_i) (columns are [e_i, e_j]).
  const MatrixQ& ad(std::size_t i) const { return ad_[i]; }

  VectorQ bracket(const VectorQ& x, const VectorQ& y) const;
  VectorQ bracket_basis(std::size_t i, std::size_t j) const;

  VectorQ basis_vector(std::size_t i) const {
    VectorQ v(dim_, Rational(0));
    v[i] = 1;
    return v;
  }

  bool same_table(const LieAlgebra& other) const;

private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<BracketEntry> table_;
  std::vector<MatrixQ> ad_;
};

/// Convenience constructor used by the catalog and the tests.
LieAlgebra make_lie_algebra(std::size_t dim, std::vector<std::string> labels,
                            std::vector<BracketEntry> table);

struct CharacteristicReport {
  Subspace center;
  Subspace commutator;
  std::vector<Subspace> lower_central_series; // g = C^0 ⊇ C^1 ⊇ ...
  std::vector<Subspace> derived_series;
  bool is_nilpotent = false;
  bool is_solvable = false;
  bool is_unimodular = false;
};

CharacteristicReport characteristic_report(const LieAlgebra& g);

/// d[x,y] = [dx,y] + [x,dy] on all basis pairs.
bool is_derivation(const LieAlgebra& g, const MatrixQ& d);

/// Basis of the space of derivations, via the kernel of the dim^3
/// linear condition system.  Deterministic echelon-normalized output.
MatFamily derivation_space(const LieAlgebra& g);

} // namespace liecheck

#endif
