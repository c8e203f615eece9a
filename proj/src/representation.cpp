#include "liecheck/representation.hpp"

#include <sstream>

#include "liecheck/errors.hpp"

namespace liecheck {

Representation::Representation(LieAlgebra source, std::vector<MatrixQ> action)
    : source_(std::move(source)), action_(std::move(action)) {
  if (action_.size() != source_.dim())
    throw RepresentationInvalid("one action matrix per basis element required");
  space_dim_ = action_.empty() ? 0 : action_[0].rows();
  for (const auto& a : action_)
    if (!a.is_square() || a.rows() != space_dim_)
      throw RepresentationInvalid("action matrices must be square of equal size");

  for (std::size_t i = 0; i < source_.dim(); ++i)
    for (std::size_t j = i + 1; j < source_.dim(); ++j) {
      MatrixQ lhs = act(source_.bracket_basis(i, j));
      MatrixQ rhs = action_[i] * action_[j] - action_[j] * action_[i];
      if (!(lhs == rhs)) {
        std::ostringstream os;
        os << "homomorphism check fails on pair (" << i + 1 << "," << j + 1 << ")";
        throw RepresentationInvalid(os.str());
      }
    }
}

MatrixQ Representation::act(const VectorQ& x) const {
  if (x.size() != source_.dim()) throw DimensionMismatch("representation argument");
  MatrixQ m(space_dim_, space_dim_);
  for (std::size_t i = 0; i < action_.size(); ++i) {
    if (x[i] == 0) continue;
    MatrixQ t = action_[i];
    t *= x[i];
    m += t;
  }
  return m;
}

Representation adjoint_rep(const LieAlgebra& h) {
  std::vector<MatrixQ> action;
  for (std::size_t i = 0; i < h.dim(); ++i) action.push_back(h.ad(i));
  return Representation(h, std::move(action));
}

Representation coadjoint_rep(const LieAlgebra& h) {
  std::vector<MatrixQ> action;
  for (std::size_t i = 0; i < h.dim(); ++i) action.push_back(-h.ad(i).transpose());
  return Representation(h, std::move(action));
}

Representation zero_rep(const LieAlgebra& h, std::size_t space_dim) {
  return Representation(h, std::vector<MatrixQ>(h.dim(), MatrixQ(space_dim, space_dim)));
}

Representation dual_representation(const Representation& rho) {
  std::vector<MatrixQ> action;
  for (std::size_t i = 0; i < rho.source().dim(); ++i)
    action.push_back(-rho.action(i).transpose());
  return Representation(rho.source(), std::move(action));
}

Subspace SemidirectAlgebra::h_part() const {
  std::vector<VectorQ> vs;
  for (std::size_t i = 0; i < h_dim; ++i) vs.push_back(total.basis_vector(i));
  return Subspace::span(total.dim(), vs);
}

Subspace SemidirectAlgebra::v_part() const {
  std::vector<VectorQ> vs;
  for (std::size_t i = 0; i < v_dim; ++i) vs.push_back(total.basis_vector(h_dim + i));
  return Subspace::span(total.dim(), vs);
}

SemidirectAlgebra semidirect(const LieAlgebra& h, const Representation& rho) {
  if (!rho.source().same_table(h))
    throw RepresentationInvalid("representation source differs from h");
  std::size_t n = h.dim();
  std::size_t m = rho.space_dim();

  std::vector<BracketEntry> table;
  for (const auto& t : h.table()) table.push_back(t);
  // [e_i, e_{n+a}] = pi(e_i) applied to the a-th V basis vector
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        Rational c = rho.action(i)(b, a);
        if (c != 0) table.push_back({i, n + a, n + b, c});
      }

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n + m; ++i) labels.push_back("e" + std::to_string(i + 1));

  SemidirectAlgebra s{LieAlgebra(n + m, std::move(labels), std::move(table)), n, m};
  return s;
}

SemidirectAlgebra tangent(const LieAlgebra& h) {
  SemidirectAlgebra s = semidirect(h, adjoint_rep(h));
  s.kind = SemidirectKind::tangent;
  return s;
}

SemidirectAlgebra cotangent(const LieAlgebra& h) {
  SemidirectAlgebra s = semidirect(h, coadjoint_rep(h));
  s.kind = SemidirectKind::cotangent;
  return s;
}

} // namespace liecheck
