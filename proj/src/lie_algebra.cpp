#include "liecheck/lie_algebra.hpp"

#include <sstream>

#include "liecheck/errors.hpp"

namespace liecheck {

Subspace make_subspace_unchecked(std::size_t ambient, MatrixQ basis) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::zero(std::size_t ambient) {
  return make_subspace_unchecked(ambient, MatrixQ(0, ambient));
}

Subspace Subspace::full(std::size_t ambient) {
  return make_subspace_unchecked(ambient, MatrixQ::identity(ambient));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<VectorQ>& vectors) {
  MatrixQ m(vectors.size(), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw DimensionMismatch("span vector size");
    for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
  }
  std::size_t r = rref(m).size();
  MatrixQ basis(r, ambient);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < ambient; ++j) basis(i, j) = m(i, j);
  return make_subspace_unchecked(ambient, std::move(basis));
}

bool Subspace::contains(const VectorQ& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector size");
  // reduce v against the echelon basis
  VectorQ w = v;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t lead = 0;
    while (lead < ambient_ && basis_(r, lead) == 0) ++lead;
    if (lead == ambient_) continue;
    if (w[lead] != 0) {
      Rational f = w[lead] / basis_(r, lead);
      for (std::size_t j = 0; j < ambient_; ++j) w[j] -= f * basis_(r, j);
    }
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspace ambient");
  std::vector<VectorQ> vs;
  for (std::size_t r = 0; r < basis_.rows(); ++r) vs.push_back(basis_.row(r));
  for (std::size_t r = 0; r < other.basis_.rows(); ++r) vs.push_back(other.basis_.row(r));
  return span(ambient_, vs);
}

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> labels,
                       std::vector<BracketEntry> table)
    : dim_(dim), labels_(std::move(labels)), table_(std::move(table)) {
  if (dim_ == 0 || dim_ > kMaxDim)
    throw InvalidStructure("algebra dimension must be between 1 and 16");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("e" + std::to_string(i + 1));
  }
  if (labels_.size() != dim_) throw InvalidStructure("label count != dimension");

  ad_.assign(dim_, MatrixQ(dim_, dim_));
  for (const auto& t : table_) {
    if (t.i >= dim_ || t.j >= dim_ || t.k >= dim_)
      throw DimensionMismatch("structure constant index out of range");
    if (t.i >= t.j) throw InvalidStructure("structure constants must be stored with i < j");
    ad_[t.i](t.k, t.j) += t.c; // [e_i, e_j] += c e_k
    ad_[t.j](t.k, t.i) -= t.c; // [e_j, e_i] -= c e_k
  }

  // Jacobi identity on all basis triples.
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        VectorQ r = bracket(bracket_basis(i, j), basis_vector(k));
        r += bracket(bracket_basis(j, k), basis_vector(i));
        r += bracket(bracket_basis(k, i), basis_vector(j));
        if (!is_zero(r)) {
          std::ostringstream os;
          os << "triple (" << i + 1 << "," << j + 1 << "," << k + 1 << "), residual [";
          for (std::size_t a = 0; a < dim_; ++a)
            os << r[a].get_str() << (a + 1 < dim_ ? ", " : "]");
          throw JacobiViolation(os.str());
        }
      }
}

VectorQ LieAlgebra::bracket(const VectorQ& x, const VectorQ& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw DimensionMismatch("bracket operand size");
  VectorQ r(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    VectorQ t = ad_[i].apply(y);
    for (std::size_t k = 0; k < dim_; ++k) r[k] += x[i] * t[k];
  }
  return r;
}

VectorQ LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  return ad_[i].col(j);
}

bool LieAlgebra::same_table(const LieAlgebra& other) const {
  if (dim_ != other.dim_) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!(ad_[i] == other.ad_[i])) return false;
  return true;
}

LieAlgebra make_lie_algebra(std::size_t dim, std::vector<std::string> labels,
                            std::vector<BracketEntry> table) {
  return LieAlgebra(dim, std::move(labels), std::move(table));
}

namespace {

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<VectorQ> vals;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t s = 0; s < b.dim(); ++s)
      vals.push_back(g.bracket(a.basis_vector(r), b.basis_vector(s)));
  return Subspace::span(g.dim(), vals);
}

} // namespace

CharacteristicReport characteristic_report(const LieAlgebra& g) {
  CharacteristicReport rep;
  std::size_t n = g.dim();

  // center = kernel of the stacked ad(e_j)
  MatrixQ stacked(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(j * n + r, c) = g.ad(j)(r, c) * Rational(-1);
  rep.center = Subspace::span(n, kernel_basis(stacked));

  Subspace full = Subspace::full(n);
  rep.commutator = bracket_span(g, full, full);

  rep.lower_central_series.push_back(full);
  for (std::size_t step = 0; step <= n; ++step) {
    Subspace next = bracket_span(g, full, rep.lower_central_series.back());
    if (next == rep.lower_central_series.back()) break;
    rep.lower_central_series.push_back(next);
    if (next.dim() == 0) break;
  }
  rep.is_nilpotent = rep.lower_central_series.back().dim() == 0;

  rep.derived_series.push_back(full);
  for (std::size_t step = 0; step <= n; ++step) {
    const Subspace& prev = rep.derived_series.back();
    Subspace next = bracket_span(g, prev, prev);
    if (next == prev) break;
    rep.derived_series.push_back(next);
    if (next.dim() == 0) break;
  }
  rep.is_solvable = rep.derived_series.back().dim() == 0;

  rep.is_unimodular = true;
  for (std::size_t i = 0; i < n && rep.is_unimodular; ++i) {
    Rational tr(0);
    for (std::size_t k = 0; k < n; ++k) tr += g.ad(i)(k, k);
    if (tr != 0) rep.is_unimodular = false;
  }
  return rep;
}

bool is_derivation(const LieAlgebra& g, const MatrixQ& d) {
  if (d.rows() != g.dim() || d.cols() != g.dim())
    throw DimensionMismatch("endomorphism shape");
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      VectorQ lhs = d.apply(g.bracket_basis(i, j));
      VectorQ rhs = g.bracket(d.col(i), g.basis_vector(j));
      rhs += g.bracket(g.basis_vector(i), d.col(j));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

MatFamily derivation_space(const LieAlgebra& g) {
  std::size_t n = g.dim();
  // Unknowns: d(r, c), flattened row-major.  For each pair i<j and each
  // output coordinate k one linear condition:
  //   (d [e_i,e_j])_k - ([d e_i, e_j] + [e_i, d e_j])_k = 0.
  std::size_t pairs = n * (n - 1) / 2;
  MatrixQ sys(pairs * n, n * n);
  std::size_t row0 = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      VectorQ bij = g.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        // d[e_i,e_j] = sum_m bij_m d(:, m): coefficient on d(k, m) is bij_m
        for (std::size_t m = 0; m < n; ++m)
          if (bij[m] != 0) sys(row0 + k, k * n + m) += bij[m];
        // [d e_i, e_j] = sum_r d(r, i) [e_r, e_j]; [e_r,e_j]_k = ad(r)(k,j)
        for (std::size_t r = 0; r < n; ++r) {
          Rational coef = g.ad(r)(k, j);
          if (coef != 0) sys(row0 + k, r * n + i) -= coef;
        }
        // [e_i, d e_j] = sum_r d(r, j) [e_i, e_r]; [e_i,e_r]_k = ad(i)(k,r)
        for (std::size_t r = 0; r < n; ++r) {
          Rational coef = g.ad(i)(k, r);
          if (coef != 0) sys(row0 + k, r * n + j) -= coef;
        }
      }
      row0 += n;
    }
  return family_from_kernel(n, n, kernel_basis(sys), "d");
}

} // namespace liecheck
