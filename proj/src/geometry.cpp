#include "liecheck/geometry.hpp"

#include "liecheck/errors.hpp"

namespace liecheck {

Connection::Connection(LieAlgebra parent, std::vector<MatrixQ> gamma)
    : parent_(std::move(parent)), gamma_(std::move(gamma)) {
  if (gamma_.size() != parent_.dim())
    throw DimensionMismatch("one gamma matrix per basis element required");
  for (const auto& m : gamma_)
    if (m.rows() != parent_.dim() || m.cols() != parent_.dim())
      throw DimensionMismatch("gamma matrix shape");
}

MatrixQ Connection::covariant(const VectorQ& x) const {
  if (x.size() != parent_.dim()) throw DimensionMismatch("vector size");
  MatrixQ m(parent_.dim(), parent_.dim());
  for (std::size_t i = 0; i < gamma_.size(); ++i) {
    if (x[i] == 0) continue;
    MatrixQ t = gamma_[i];
    t *= x[i];
    m += t;
  }
  return m;
}

VectorQ Connection::derivative(const VectorQ& x, const VectorQ& y) const {
  return covariant(x).apply(y);
}

bool Connection::is_torsion_free() const {
  for (std::size_t i = 0; i < parent_.dim(); ++i)
    for (std::size_t j = i + 1; j < parent_.dim(); ++j) {
      VectorQ t = gamma_[i].col(j);
      t -= gamma_[j].col(i);
      t -= parent_.bracket_basis(i, j);
      if (!is_zero(t)) return false;
    }
  return true;
}

bool Connection::is_metric_compatible(const Metric& g) const {
  // <nabla_x y, z> + <y, nabla_x z> = 0 for left-invariant fields:
  // gamma_i^T G + G gamma_i = 0.
  const MatrixQ& G = g.matrix();
  for (const auto& gm : gamma_) {
    MatrixQ t = gm.transpose() * G + G * gm;
    if (!t.is_zero()) return false;
  }
  return true;
}

Connection levi_civita(const LieAlgebra& g, const Metric& metric) {
  if (!g.same_table(metric.parent()))
    throw DimensionMismatch("metric lives on a different algebra");
  std::size_t n = g.dim();
  MatrixQ ginv = inverse(metric.matrix());

  std::vector<MatrixQ> gamma(n, MatrixQ(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      VectorQ k(n, Rational(0));
      for (std::size_t z = 0; z < n; ++z) {
        Rational v = metric.eval(g.bracket_basis(i, j), g.basis_vector(z));
        v -= metric.eval(g.bracket_basis(j, z), g.basis_vector(i));
        v += metric.eval(g.bracket_basis(z, i), g.basis_vector(j));
        k[z] = v / 2;
      }
      VectorQ col = ginv.apply(k);
      for (std::size_t r = 0; r < n; ++r) gamma[i](r, j) = col[r];
    }

  Connection c(g, std::move(gamma));
  if (!c.is_torsion_free())
    throw InvalidStructure("Koszul solution failed the torsion-free identity");
  if (!c.is_metric_compatible(metric))
    throw InvalidStructure("Koszul solution failed metric compatibility");
  return c;
}

const MatrixQ& CurvatureReport::op(std::size_t i, std::size_t j, std::size_t dim) const {
  if (i >= j) throw DimensionMismatch("curvature operator index requires i < j");
  return operators[i * dim - i * (i + 1) / 2 + (j - i - 1)];
}

CurvatureReport curvature_report(const Connection& c) {
  const LieAlgebra& g = c.parent();
  std::size_t n = g.dim();
  CurvatureReport rep;
  rep.flat = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      MatrixQ r = c.gamma(i) * c.gamma(j) - c.gamma(j) * c.gamma(i);
      r -= c.covariant(g.bracket_basis(i, j));
      if (!r.is_zero()) rep.flat = false;
      rep.operators.push_back(std::move(r));
    }

  // r(x, y) = trace of v -> R(x, v) y
  rep.ricci = MatrixQ(n, n);
  auto R = [&](std::size_t a, std::size_t b) -> MatrixQ {
    if (a == b) return MatrixQ(n, n);
    if (a < b) return rep.op(a, b, n);
    return -rep.op(b, a, n);
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Rational tr(0);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == a) continue;
        tr += R(a, k)(k, b);
      }
      rep.ricci(a, b) = tr;
    }
  rep.ricci_flat = rep.ricci.is_zero();
  return rep;
}

bool is_parallel(const Connection& c, const AlmostComplexStructure& J) {
  for (std::size_t i = 0; i < c.parent().dim(); ++i) {
    MatrixQ t = c.gamma(i) * J.matrix() - J.matrix() * c.gamma(i);
    if (!t.is_zero()) return false;
  }
  return true;
}

bool is_totally_geodesic(const Connection& c, const Subspace& s) {
  const LieAlgebra& g = c.parent();
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = a + 1; b < s.dim(); ++b)
      if (!s.contains(g.bracket(s.basis_vector(a), s.basis_vector(b))))
        throw NotASubalgebra("subspace is not closed under the bracket");
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b)
      if (!s.contains(c.derivative(s.basis_vector(a), s.basis_vector(b))))
        return false;
  return true;
}

} // namespace liecheck
