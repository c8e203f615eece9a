#ifndef LIECHECK_LINALG_HPP
#define LIECHECK_LINALG_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "liecheck/matrix.hpp"
#include "liecheck/multipoly.hpp"

namespace liecheck {

/// Row-reduces m in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(MatrixQ& m);
std::vector<std::size_t> rref(MatrixQi& m);

std::size_t rank(MatrixQ m);

/// Echelon-normalized basis of {v : m v = 0}.  Deterministic: the k-th
/// vector has a 1 in the k-th free column and zeros in the other free
/// columns.  Empty kernel -> empty list.
std::vector<VectorQ> kernel_basis(const MatrixQ& m);
std::vector<std::vector<GaussianRational>> kernel_basis(const MatrixQi& m);

/// Exact determinant via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rational det(const MatrixQ& m);

/// Pfaffian of an antisymmetric even-dimensional matrix, normalized so
/// that the block-diagonal matrix with blocks [[0,1],[-1,0]] has
/// Pfaffian +1.  Throws PfaffianOnOddDim / PfaffianOnNonAntisymmetric.
Rational pfaffian(const MatrixQ& m);

/// Determinant / Pfaffian with polynomial entries (family queries).
MultiPoly det(const MatrixP& m);
MultiPoly pfaffian(const MatrixP& m);

enum class ZeroMethod { symbolic, sampled };

struct ZeroVerdict {
  bool identically_zero = false;
  ZeroMethod method = ZeroMethod::symbolic;
  /// For sampled mode: the seed used and an upper bound on the error
  /// probability, as a string "(<deg>/<set size>)^<samples>".
  std::uint64_t seed = 0;
  std::string error_bound;
};

/// Exact (symbolic) zero test by term inspection, or a seeded
/// probabilistic test by evaluation at random rational points.
ZeroVerdict is_identically_zero(const MultiPoly& p, ZeroMethod method,
                                std::uint64_t seed = 0, int samples = 16);

/// Picks symbolic when nvars <= 8 and degree <= 6, else sampled.
ZeroVerdict is_identically_zero_auto(const MultiPoly& p, std::uint64_t seed = 0);

MatrixQ inverse(const MatrixQ& m); // throws SingularMap
MatrixQi inverse(const MatrixQi& m);

/// Solves m x = b exactly; std::nullopt when inconsistent.
std::optional<VectorQ> solve(const MatrixQ& m, const VectorQ& b);

/// Signature (positives, negatives) of a nondegenerate symmetric matrix,
/// by exact congruence diagonalization.
std::pair<int, int> signature(const MatrixQ& m);

/// Deterministic pseudo-random stream (splitmix64) for sampled verdicts
/// and the property suites.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform integer in [lo, hi].
  long next_int(long lo, long hi);
  /// Small random rational with numerator in [-bound, bound] and
  /// denominator in [1, den_bound].
  Rational next_rational(long bound = 6, long den_bound = 3);

private:
  std::uint64_t state_;
};

} // namespace liecheck

#endif
