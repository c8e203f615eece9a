#include "liecheck/transport.hpp"

#include <sstream>

#include "liecheck/errors.hpp"

namespace liecheck {

void require_isomorphism(const LieAlgebra& source, const LieAlgebra& target,
                         const MatrixQ& phi) {
  std::size_t n = source.dim();
  if (target.dim() != n || phi.rows() != n || phi.cols() != n)
    throw DimensionMismatch("isomorphism shape");
  try {
    (void)inverse(phi);
  } catch (const SingularMap&) {
    throw NotAnIsomorphism("map is singular");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      VectorQ lhs = phi.apply(source.bracket_basis(i, j));
      VectorQ rhs = target.bracket(phi.col(i), phi.col(j));
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "bracket not preserved on pair (" << i + 1 << "," << j + 1 << ")";
        throw NotAnIsomorphism(os.str());
      }
    }
}

MatrixQ transport_endomorphism(const LieAlgebra& source, const LieAlgebra& target,
                               const MatrixQ& phi, const MatrixQ& structure) {
  require_isomorphism(source, target, phi);
  return phi * structure * inverse(phi);
}

MatrixQ transport_form(const LieAlgebra& source, const LieAlgebra& target,
                       const MatrixQ& phi, const MatrixQ& form) {
  require_isomorphism(source, target, phi);
  MatrixQ inv = inverse(phi);
  return inv.transpose() * form * inv;
}

MatrixQ pullback_form(const MatrixQ& phi, const MatrixQ& form) {
  return phi.transpose() * form * phi;
}

} // namespace liecheck
