#include "liecheck/forms.hpp"

#include "liecheck/errors.hpp"

namespace liecheck {

TwoForm::TwoForm(LieAlgebra parent, MatrixQ matrix)
    : parent_(std::move(parent)), m_(std::move(matrix)) {
  if (m_.rows() != parent_.dim() || m_.cols() != parent_.dim())
    throw DimensionMismatch("two-form shape");
  if (!m_.is_antisymmetric()) throw InvalidStructure("two-form must be antisymmetric");
}

Rational TwoForm::eval(const VectorQ& x, const VectorQ& y) const {
  VectorQ my = m_.apply(y);
  Rational r(0);
  for (std::size_t i = 0; i < x.size(); ++i) r += x[i] * my[i];
  return r;
}

Metric::Metric(LieAlgebra parent, MatrixQ matrix)
    : parent_(std::move(parent)), m_(std::move(matrix)) {
  if (m_.rows() != parent_.dim() || m_.cols() != parent_.dim())
    throw DimensionMismatch("metric shape");
  if (!m_.is_symmetric()) throw InvalidStructure("metric must be symmetric");
  if (det(m_) == 0) throw DegenerateMetric("metric must be nondegenerate");
}

Rational Metric::eval(const VectorQ& x, const VectorQ& y) const {
  VectorQ my = m_.apply(y);
  Rational r(0);
  for (std::size_t i = 0; i < x.size(); ++i) r += x[i] * my[i];
  return r;
}

ClosednessReport is_closed(const TwoForm& omega) {
  const LieAlgebra& g = omega.parent();
  ClosednessReport rep;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      for (std::size_t k = j + 1; k < g.dim(); ++k) {
        Rational s = omega.eval(g.bracket_basis(i, j), g.basis_vector(k));
        s += omega.eval(g.bracket_basis(j, k), g.basis_vector(i));
        s += omega.eval(g.bracket_basis(k, i), g.basis_vector(j));
        if (s != 0) {
          rep.closed = false;
          rep.violating_triple = {i, j, k};
          rep.violation_value = s;
          return rep;
        }
      }
  rep.closed = true;
  return rep;
}

bool is_nondegenerate(const TwoForm& omega) {
  if (omega.parent().dim() % 2 != 0)
    throw OddDimension("nondegeneracy of a two-form needs even dimension");
  return pfaffian(omega.matrix()) != 0;
}

TwoForm FormFamily::member(const VectorQ& coeffs) const {
  return TwoForm(parent, member_matrix(coeffs));
}

MatrixQ FormFamily::member_matrix(const VectorQ& coeffs) const {
  if (coeffs.size() != directions.size())
    throw DimensionMismatch("family coefficient count");
  MatrixQ m(parent.dim(), parent.dim());
  for (std::size_t k = 0; k < directions.size(); ++k) {
    if (coeffs[k] == 0) continue;
    MatrixQ t = directions[k];
    t *= coeffs[k];
    m += t;
  }
  return m;
}

MatrixP FormFamily::symbolic() const {
  std::size_t n = parent.dim();
  std::size_t nv = directions.size();
  MatrixP p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly e(nv);
      for (std::size_t k = 0; k < nv; ++k) {
        if (directions[k](i, j) == 0) continue;
        MultiPoly v = MultiPoly::variable(nv, k);
        v *= directions[k](i, j);
        e += v;
      }
      p(i, j) = std::move(e);
    }
  return p;
}

Subspace FormFamily::coefficient_space() const {
  std::size_t n = parent.dim();
  std::size_t m = n * (n - 1) / 2;
  std::vector<VectorQ> rows;
  for (const auto& d : directions) {
    VectorQ v(m, Rational(0));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) v[idx++] = d(i, j);
    rows.push_back(std::move(v));
  }
  return Subspace::span(m, rows);
}

namespace {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  // index of (i, j), i < j, in the row-major strict upper triangle
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

FormFamily family_from_coeff_kernel(const LieAlgebra& g,
                                    const std::vector<VectorQ>& kernel) {
  std::size_t n = g.dim();
  FormFamily f{g, {}, {}};
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    MatrixQ m(n, n);
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = kernel[k][idx];
        m(j, i) = -kernel[k][idx];
        ++idx;
      }
    f.directions.push_back(std::move(m));
    f.params.push_back("a" + std::to_string(k));
  }
  return f;
}

// Rows of the closedness system in the strict-upper-triangle unknowns.
std::vector<VectorQ> closedness_rows(const LieAlgebra& g) {
  std::size_t n = g.dim();
  std::size_t m = n * (n - 1) / 2;
  std::vector<VectorQ> rows;
  auto add_eval = [&](VectorQ& row, const VectorQ& x, const VectorQ& y) {
    // coefficient of omega_{ij} (i<j) in omega(x, y) is x_i y_j - x_j y_i
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        row[pair_index(n, i, j)] += x[i] * y[j] - x[j] * y[i];
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        VectorQ row(m, Rational(0));
        add_eval(row, g.bracket_basis(i, j), g.basis_vector(k));
        add_eval(row, g.bracket_basis(j, k), g.basis_vector(i));
        add_eval(row, g.bracket_basis(k, i), g.basis_vector(j));
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
  return rows;
}

std::vector<VectorQ> compatibility_rows(const LieAlgebra& g, const MatrixQ& J) {
  std::size_t n = g.dim();
  std::size_t m = n * (n - 1) / 2;
  std::vector<VectorQ> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      // omega(J e_a, J e_b) - omega(e_a, e_b) = 0
      VectorQ row(m, Rational(0));
      VectorQ ja = J.col(a), jb = J.col(b);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          row[pair_index(n, i, j)] += ja[i] * jb[j] - ja[j] * jb[i];
      row[pair_index(n, a, b)] -= 1;
      if (!is_zero(row)) rows.push_back(std::move(row));
    }
  return rows;
}

FormFamily solve_form_family(const LieAlgebra& g, const std::vector<VectorQ>& rows) {
  std::size_t m = g.dim() * (g.dim() - 1) / 2;
  MatrixQ sys(rows.size(), m);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m; ++c) sys(r, c) = rows[r][c];
  return family_from_coeff_kernel(g, kernel_basis(sys));
}

} // namespace

FormFamily closed_form_space(const LieAlgebra& g) {
  return solve_form_family(g, closedness_rows(g));
}

FormFamily compatible_closed_space(const LieAlgebra& g, const AlmostComplexStructure& J) {
  auto rows = closedness_rows(g);
  auto compat = compatibility_rows(g, J.matrix());
  rows.insert(rows.end(), compat.begin(), compat.end());
  return solve_form_family(g, rows);
}

FormFamily compatible_space(const LieAlgebra& g, const AlmostComplexStructure& J) {
  return solve_form_family(g, compatibility_rows(g, J.matrix()));
}

SymplecticWitness symplectic_witness(const FormFamily& family, int max_grade) {
  SymplecticWitness out;
  if (family.parent.dim() % 2 != 0)
    throw OddDimension("symplectic forms require even dimension");
  out.pfaffian_poly = pfaffian(family.symbolic());
  if (out.pfaffian_poly.is_zero()) {
    out.none_exists = true;
    return out;
  }
  auto coeffs = graded_search(family.dim(), max_grade, [&](const VectorQ& c) {
    return out.pfaffian_poly.eval(c) != 0;
  });
  if (!coeffs)
    throw InvalidStructure("witness enumeration exhausted without finding one");
  out.coefficients = *coeffs;
  out.witness = family.member_matrix(*coeffs);
  return out;
}

Metric kahler_metric(const TwoForm& omega, const AlmostComplexStructure& J) {
  const LieAlgebra& g = omega.parent();
  if (!g.same_table(J.parent()))
    throw DimensionMismatch("form and structure live on different algebras");
  MatrixQ JtO = J.matrix().transpose() * omega.matrix();
  if (!JtO.is_symmetric())
    throw NotCompatible("omega(J.,.) is not symmetric; pair is not compatible");
  // full compatibility: omega(Jx, Jy) = omega(x, y)
  MatrixQ pulled = J.matrix().transpose() * omega.matrix() * J.matrix();
  if (!(pulled == omega.matrix()))
    throw NotCompatible("omega(Jx,Jy) != omega(x,y)");
  if (pfaffian(omega.matrix()) == 0) throw Degenerate("omega is degenerate");
  return Metric(g, JtO);
}

Metric canonical_cotangent_metric(const SemidirectAlgebra& ct) {
  if (ct.kind != SemidirectKind::cotangent)
    throw NotACotangent("canonical metric requires a cotangent algebra");
  std::size_t n = ct.h_dim;
  MatrixQ m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, n + i) = 1;
    m(n + i, i) = 1;
  }
  return Metric(ct.total, std::move(m));
}

bool is_ad_invariant(const LieAlgebra& g, const Metric& metric) {
  const MatrixQ& m = metric.matrix();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    MatrixQ t = g.ad(i).transpose() * m + m * g.ad(i);
    if (!t.is_zero()) return false;
  }
  return true;
}

bool hermitian_check(const AlmostComplexStructure& J, const Metric& metric) {
  MatrixQ t = J.matrix().transpose() * metric.matrix() * J.matrix();
  return t == metric.matrix();
}

GeneralizedType generalized_cs_check(const SemidirectAlgebra& ct,
                                     const AlmostComplexStructure& J) {
  if (!is_integrable(J).integrable)
    throw NotIntegrable("generalized check requires an integrable structure");
  Metric canonical = canonical_cotangent_metric(ct);
  if (!hermitian_check(J, canonical)) return GeneralizedType::not_hermitian;
  std::vector<VectorQ> images;
  for (std::size_t i = 0; i < ct.h_dim; ++i)
    images.push_back(J.apply(ct.total.basis_vector(i)));
  Subspace jh = Subspace::span(ct.total.dim(), images);
  if (jh == ct.h_part()) return GeneralizedType::complex_type;
  if (jh == ct.v_part()) return GeneralizedType::symplectic_type;
  return GeneralizedType::hermitian_only;
}

IsotropyType isotropy_type(const Subspace& s, const MatrixQ& form) {
  if (form.rows() != s.ambient() || form.cols() != s.ambient())
    throw DimensionMismatch("form shape");
  // S^perp = kernel of (basis * form): y with B(x, y) = 0 for all x in S
  MatrixQ rows = s.basis() * form;
  Subspace perp = Subspace::span(s.ambient(), kernel_basis(rows));
  if (s == perp) return IsotropyType::totally_isotropic;
  if (perp.contains(s)) return IsotropyType::isotropic;
  // dim(S cap S^perp) = dim S + dim perp - dim(S + perp)
  std::size_t inter = s.dim() + perp.dim() - s.sum(perp).dim();
  if (inter == 0) return IsotropyType::nondegenerate;
  return IsotropyType::mixed;
}

std::pair<SemidirectAlgebra, TwoForm> lagrangian_form(const LieAlgebra& h,
                                                      const Representation& rho,
                                                      const AlmostComplexStructure& J) {
  SemidirectAlgebra product = semidirect(h, rho);
  if (!J.parent().same_table(product.total))
    throw DimensionMismatch("structure does not live on the semidirect product");
  if (!is_totally_real(J, product))
    throw NotTotallyReal("lagrangian form requires a totally real structure");
  if (!is_integrable(J).integrable)
    throw NotIntegrable("lagrangian form requires an integrable structure");

  SemidirectAlgebra dual = semidirect(h, dual_representation(rho));
  std::size_t n = h.dim();
  MatrixQ omega(2 * n, 2 * n);
  // omega(x + u, y + v) = v(Jx) - u(Jy): on basis, omega(e_a, e_{n+b}) =
  // (J e_a)_{n+b}, h-h and V*-V* blocks vanish.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Rational c = J.matrix()(n + b, a);
      omega(a, n + b) = c;
      omega(n + b, a) = -c;
    }
  return {dual, TwoForm(dual.total, std::move(omega))};
}

SkewDerivationResult skew_nonsingular_derivation(const LieAlgebra& h, const Metric& adinv) {
  if (!is_ad_invariant(h, adinv))
    throw MetricNotAdInvariant("metric must be ad-invariant");
  std::size_t n = h.dim();

  // derivation conditions plus skew condition g d + d^T g = 0, solved in
  // one kernel computation over the n^2 unknowns d(r, c)
  MatFamily ders = derivation_space(h);
  const MatrixQ& g = adinv.matrix();

  std::vector<VectorQ> rows;
  // d must lie in the derivation space: membership conditions
  {
    std::vector<VectorQ> flat;
    for (const auto& b : ders.basis) {
      VectorQ v(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i * n + j] = b(i, j);
      flat.push_back(std::move(v));
    }
    Subspace der_space = Subspace::span(n * n, flat);
    std::vector<VectorQ> perp = kernel_basis(der_space.basis());
    rows.insert(rows.end(), perp.begin(), perp.end());
  }
  // skew condition, entrywise
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      VectorQ row(n * n, Rational(0));
      for (std::size_t r = 0; r < n; ++r) {
        row[r * n + b] += g(a, r); // (g d)(a, b)
        row[r * n + a] += g(r, b); // (d^T g)(a, b)
      }
      if (!is_zero(row)) rows.push_back(std::move(row));
    }

  MatrixQ sys(rows.size(), n * n);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < n * n; ++c) sys(r, c) = rows[r][c];
  MatFamily skew = family_from_kernel(n, n, kernel_basis(sys), "s");

  SkewDerivationResult out;
  if (skew.dim() == 0) {
    out.none_exists = true;
    out.det_poly = MultiPoly::constant(0, 0);
    return out;
  }
  NonsingularWitness w = nonsingular_witness(skew);
  out.det_poly = w.det_poly;
  if (w.identically_singular) {
    out.none_exists = true;
    return out;
  }
  out.witness = w.witness;
  return out;
}

} // namespace liecheck
