#ifndef LIECHECK_TRANSPORT_HPP
#define LIECHECK_TRANSPORT_HPP

#include "liecheck/lie_algebra.hpp"

namespace liecheck {

/// Verifies that phi is a Lie algebra isomorphism source -> target:
/// phi [x,y]_s = [phi x, phi y]_t on all basis pairs, phi invertible.
/// Throws NotAnIsomorphism naming the first failing pair.
void require_isomorphism(const LieAlgebra& source, const LieAlgebra& target,
                         const MatrixQ& phi);

/// Endomorphism transport along phi: source structure J becomes
/// phi J phi^{-1} on the target.
MatrixQ transport_endomorphism(const LieAlgebra& source, const LieAlgebra& target,
                               const MatrixQ& phi, const MatrixQ& structure);

/// Bilinear-form transport along phi: omega on the source becomes
/// omega(phi^{-1} x, phi^{-1} y) on the target, so that phi is a
/// structure-preserving map.  Equivalently the pullback along phi^{-1}.
MatrixQ transport_form(const LieAlgebra& source, const LieAlgebra& target,
                       const MatrixQ& phi, const MatrixQ& form);

/// Pullback of a target form along phi: (phi^* omega)(x,y) = omega(phi x, phi y).
MatrixQ pullback_form(const MatrixQ& phi, const MatrixQ& form);

} // namespace liecheck

#endif
