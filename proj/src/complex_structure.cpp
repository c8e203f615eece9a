#include "liecheck/complex_structure.hpp"

#include "liecheck/errors.hpp"

namespace liecheck {

AlmostComplexStructure::AlmostComplexStructure(LieAlgebra parent, MatrixQ matrix)
    : parent_(std::move(parent)), j_(std::move(matrix)) {
  std::size_t n = parent_.dim();
  if (n % 2 != 0) throw OddDimension("almost complex structure needs even dimension");
  if (j_.rows() != n || j_.cols() != n)
    throw DimensionMismatch("almost complex structure shape");
  MatrixQ sq = j_ * j_;
  if (!(sq == -MatrixQ::identity(n)))
    throw InvalidStructure("J^2 != -I");
}

VectorQ nijenhuis(const AlmostComplexStructure& J, const VectorQ& x, const VectorQ& y) {
  const LieAlgebra& g = J.parent();
  VectorQ jx = J.apply(x), jy = J.apply(y);
  VectorQ n = g.bracket(jx, jy);
  n -= g.bracket(x, y);
  n -= J.apply(g.bracket(jx, y));
  n -= J.apply(g.bracket(x, jy));
  return n;
}

IntegrabilityReport is_integrable(const AlmostComplexStructure& J) {
  const LieAlgebra& g = J.parent();
  IntegrabilityReport rep;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      VectorQ n = nijenhuis(J, g.basis_vector(i), g.basis_vector(j));
      if (!is_zero(n)) {
        rep.integrable = false;
        rep.violating_pair = {i, j};
        rep.violation_value = n;
        return rep;
      }
    }
  rep.integrable = true;
  return rep;
}

bool is_abelian(const AlmostComplexStructure& J) {
  const LieAlgebra& g = J.parent();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      VectorQ lhs = g.bracket(J.apply(g.basis_vector(i)), J.apply(g.basis_vector(j)));
      if (!(lhs == g.bracket_basis(i, j))) return false;
    }
  return true;
}

bool is_bi_invariant(const AlmostComplexStructure& J) {
  const LieAlgebra& g = J.parent();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (i == j) continue;
      VectorQ lhs = J.apply(g.bracket_basis(i, j));
      VectorQ rhs = g.bracket(g.basis_vector(i), J.apply(g.basis_vector(j)));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

bool is_totally_real(const AlmostComplexStructure& J, const SemidirectAlgebra& split) {
  if (!J.parent().same_table(split.total))
    throw DimensionMismatch("structure does not live on the given splitting");
  std::vector<VectorQ> images;
  for (std::size_t i = 0; i < split.h_dim; ++i)
    images.push_back(J.apply(split.total.basis_vector(i)));
  return Subspace::span(split.total.dim(), images) == split.v_part();
}

namespace {

/// Rows that test membership in S: v in S iff rows * v = 0.
MatrixQ membership_rows(const Subspace& s) {
  // row space ^ perp = null space, so v in rowspace(B) iff w . v = 0 for
  // every kernel vector w of B.
  std::vector<VectorQ> perp = kernel_basis(s.basis());
  MatrixQ rows(perp.size(), s.ambient());
  for (std::size_t i = 0; i < perp.size(); ++i)
    for (std::size_t j = 0; j < s.ambient(); ++j) rows(i, j) = perp[i][j];
  return rows;
}

} // namespace

AscendingSeries ascending_series(const AlmostComplexStructure& J) {
  const LieAlgebra& g = J.parent();
  std::size_t n = g.dim();
  AscendingSeries out;
  out.terms.push_back(Subspace::zero(n));

  while (true) {
    const Subspace& prev = out.terms.back();
    MatrixQ K = membership_rows(prev);
    // conditions: K [X, e_j] = 0 and K [JX, e_j] = 0 for all j, where
    // [X, e_j] = -ad(e_j) X.
    MatrixQ sys(2 * n * K.rows(), n);
    std::size_t r0 = 0;
    for (std::size_t j = 0; j < n; ++j) {
      MatrixQ a = K * g.ad(j);
      MatrixQ b = a * J.matrix();
      for (std::size_t r = 0; r < a.rows(); ++r, ++r0)
        for (std::size_t c = 0; c < n; ++c) sys(r0, c) = a(r, c);
      for (std::size_t r = 0; r < b.rows(); ++r, ++r0)
        for (std::size_t c = 0; c < n; ++c) sys(r0, c) = b(r, c);
    }
    Subspace next = Subspace::span(n, kernel_basis(sys));
    if (next == prev) break;
    out.terms.push_back(next);
    if (next.dim() == n) break;
    if (out.terms.size() > n + 1) break; // cannot happen: dims strictly increase
  }
  out.nilpotent = out.terms.back().dim() == n;
  out.step = out.nilpotent ? out.terms.size() - 1 : 0;
  return out;
}

ClassifyReport classify(const AlmostComplexStructure& J,
                        const std::optional<SemidirectAlgebra>& split) {
  ClassifyReport rep;
  rep.abelian = is_abelian(J);
  rep.bi_invariant = is_bi_invariant(J);
  if (split) rep.totally_real = is_totally_real(J, *split);
  return rep;
}

std::optional<std::size_t> nilpotency_step(const AlmostComplexStructure& J) {
  AscendingSeries s = ascending_series(J);
  if (!s.nilpotent) return std::nullopt;
  return s.step;
}

MatrixQi complex_eigenspace(const AlmostComplexStructure& J) {
  const LieAlgebra& g = J.parent();
  std::size_t n = g.dim();
  // generators x_k - i J x_k, stacked as rows, echelonized over Q(i)
  MatrixQi rows(n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < n; ++c) {
      GaussianRational v(Rational(k == c ? 1 : 0), Rational(0));
      v -= GaussianRational(Rational(0), J.matrix()(c, k));
      rows(k, c) = v;
    }
  std::size_t r = rref(rows).size();
  MatrixQi basis(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < n; ++c) basis(i, c) = rows(i, c);
  return basis;
}

std::vector<GaussianRational> complex_bracket(const LieAlgebra& g,
                                              const std::vector<GaussianRational>& u,
                                              const std::vector<GaussianRational>& v) {
  std::size_t n = g.dim();
  if (u.size() != n || v.size() != n) throw DimensionMismatch("complex bracket size");
  std::vector<GaussianRational> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero() || i == j) continue;
      VectorQ b = g.bracket_basis(i, j);
      GaussianRational c = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k)
        if (b[k] != 0) r[k] += c * GaussianRational(b[k]);
    }
  }
  return r;
}

bool complex_span_contains(const MatrixQi& rows, const std::vector<GaussianRational>& v) {
  std::vector<GaussianRational> w = v;
  std::size_t n = rows.cols();
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    std::size_t lead = 0;
    while (lead < n && rows(r, lead) == GaussianRational{}) ++lead;
    if (lead == n) continue;
    if (!(w[lead] == GaussianRational{})) {
      GaussianRational f = w[lead] / rows(r, lead);
      for (std::size_t c = 0; c < n; ++c) w[c] -= f * rows(r, c);
    }
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool eigenspace_closure(const AlmostComplexStructure& J) {
  MatrixQi m = complex_eigenspace(J);
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = a + 1; b < m.rows(); ++b) {
      auto br = complex_bracket(J.parent(), m.row(a), m.row(b));
      if (!complex_span_contains(m, br)) return false;
    }
  return true;
}

MatFamily totally_real_space(const LieAlgebra& h, const Representation& rho) {
  if (!rho.source().same_table(h))
    throw RepresentationInvalid("representation source differs from h");
  std::size_t n = h.dim();
  std::size_t m = rho.space_dim();
  if (m != n) throw DimensionMismatch("totally real requires dim V = dim h");

  // Unknowns j(k, c) flattened row-major; conditions per pair a<b and
  // output coordinate k:
  //   (j [e_a,e_b])_k - (pi(e_a) j e_b)_k + (pi(e_b) j e_a)_k = 0.
  std::size_t pairs = n * (n - 1) / 2;
  MatrixQ sys(pairs * n, n * n);
  std::size_t row0 = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      VectorQ bab = h.bracket_basis(a, b);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t c = 0; c < n; ++c)
          if (bab[c] != 0) sys(row0 + k, k * n + c) += bab[c];
        for (std::size_t r = 0; r < n; ++r) {
          Rational pa = rho.action(a)(k, r);
          if (pa != 0) sys(row0 + k, r * n + b) -= pa;
          Rational pb = rho.action(b)(k, r);
          if (pb != 0) sys(row0 + k, r * n + a) += pb;
        }
      }
      row0 += n;
    }
  return family_from_kernel(n, n, kernel_basis(sys), "j");
}

AlmostComplexStructure totally_real_acs(const SemidirectAlgebra& split, const MatrixQ& j) {
  std::size_t n = split.h_dim;
  if (split.v_dim != n) throw DimensionMismatch("totally real requires dim V = dim h");
  if (j.rows() != n || j.cols() != n) throw DimensionMismatch("map shape");
  MatrixQ jinv;
  try {
    jinv = inverse(j);
  } catch (const SingularMap&) {
    throw SingularMap("totally real map must be invertible");
  }
  MatrixQ J(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      J(n + r, c) = j(r, c);        // J x = j x in the V-part
      J(r, n + c) = -jinv(r, c);    // J v = -j^{-1} v in the h-part
    }
  return AlmostComplexStructure(split.total, std::move(J));
}

AlmostComplexStructure derivation_to_totally_real(const LieAlgebra& h, const MatrixQ& d) {
  if (!is_derivation(h, d)) throw NotADerivation("map fails the Leibniz identity");
  try {
    (void)inverse(d);
  } catch (const SingularMap&) {
    throw SingularMap("derivation must be nonsingular");
  }
  return totally_real_acs(tangent(h), d);
}

AbelianObstruction abelian_obstruction(const LieAlgebra& g) {
  AbelianObstruction out;
  CharacteristicReport rep = characteristic_report(g);
  out.center_dim = rep.center.dim();
  out.center_dim_odd = out.center_dim % 2 == 1;

  out.commutator_abelian = true;
  for (std::size_t a = 0; a < rep.commutator.dim() && out.commutator_abelian; ++a)
    for (std::size_t b = a + 1; b < rep.commutator.dim(); ++b) {
      VectorQ br = g.bracket(rep.commutator.basis_vector(a), rep.commutator.basis_vector(b));
      if (!is_zero(br)) {
        out.commutator_abelian = false;
        break;
      }
    }
  out.obstructed = out.center_dim_odd || !out.commutator_abelian;
  return out;
}

} // namespace liecheck
