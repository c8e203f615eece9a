#ifndef LIECHECK_TESTS_FIXTURES_HPP
#define LIECHECK_TESTS_FIXTURES_HPP

// Reference fixtures shared by the unit suites and the acceptance
// checklist: the catalog algebras, the explicit complex structures, the
// named two-forms and metrics.  Indices in comments are 1-based to match
// the usual e_1..e_6 notation.

#include <map>
#include <vector>

#include "liecheck/catalog.hpp"
#include "liecheck/complex_structure.hpp"
#include "liecheck/forms.hpp"
#include "liecheck/representation.hpp"

namespace liecheck::fixtures {

inline LieAlgebra cat(CatalogName n, std::optional<Rational> param = std::nullopt) {
  return catalog({n, param}).algebra;
}

inline LieAlgebra h1() { return cat(CatalogName::h1); }
inline LieAlgebra r3() { return cat(CatalogName::r3); }
inline LieAlgebra r3_lambda(const Rational& l) { return cat(CatalogName::r3_lambda, l); }
inline LieAlgebra r3p_eta(const Rational& e) { return cat(CatalogName::r3p_eta, e); }
inline LieAlgebra sl2() { return cat(CatalogName::sl2); }
inline LieAlgebra so3() { return cat(CatalogName::so3); }

/// Builds J from its images on selected basis vectors (0-based index ->
/// coordinate vector), filling the rest by J^2 = -I: every unspecified
/// e_i must appear in the span of the given images.
inline MatrixQ acs_matrix(std::size_t dim,
                          const std::map<std::size_t, VectorQ>& images) {
  MatrixQ j(dim, dim);
  std::vector<bool> have(dim, false);
  for (const auto& [i, v] : images) {
    j.set_col(i, v);
    have[i] = true;
  }
  // close under J(J e_i) = -e_i: if J e_i = sum c_k e_k is known and all
  // the e_k columns except one are known, solve for the missing one.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < dim; ++i) {
      if (!have[i]) continue;
      VectorQ v = j.col(i);
      // target: sum_k v_k J(e_k) = -e_i
      std::size_t missing = dim;
      int missing_count = 0;
      for (std::size_t k = 0; k < dim; ++k) {
        if (v[k] == 0) continue;
        if (!have[k]) {
          missing = k;
          ++missing_count;
        }
      }
      if (missing_count != 1) continue;
      VectorQ target(dim, Rational(0));
      target[i] = -1;
      for (std::size_t k = 0; k < dim; ++k) {
        if (v[k] == 0 || k == missing) continue;
        VectorQ jk = j.col(k);
        for (std::size_t r = 0; r < dim; ++r) target[r] -= v[k] * jk[r];
      }
      VectorQ col(dim);
      for (std::size_t r = 0; r < dim; ++r) col[r] = target[r] / v[missing];
      j.set_col(missing, col);
      have[missing] = true;
      progress = true;
    }
  }
  for (std::size_t i = 0; i < dim; ++i)
    if (!have[i]) throw InvalidStructure("acs fixture underdetermined");
  return j;
}

inline VectorQ vec(std::size_t dim, std::map<std::size_t, Rational> entries) {
  VectorQ v(dim, Rational(0));
  for (auto& [i, c] : entries) v[i] = c;
  return v;
}

// ---- tangent / cotangent hosts -----------------------------------------

inline SemidirectAlgebra Th1() { return tangent(h1()); }
inline SemidirectAlgebra Tsh1() { return cotangent(h1()); }
inline SemidirectAlgebra Tr30() { return tangent(r3_lambda(0)); }
inline SemidirectAlgebra Tsr3l(const Rational& l) { return cotangent(r3_lambda(l)); }
inline SemidirectAlgebra Tsr3p(const Rational& e) { return cotangent(r3p_eta(e)); }
inline SemidirectAlgebra Tsl2() { return tangent(sl2()); }

/// T so(3) table as displayed in the six-dimensional bracket list; it is
/// the semidirect product for the equivalent twisted representation
/// x -> S ad(x) S^{-1} with S = diag(1,-1,1), not tangent(so3) itself.
inline LieAlgebra Tso3_displayed() {
  return LieAlgebra(6, {},
                    {{0, 1, 2, 1},  // [e1,e2]=e3
                     {0, 2, 1, -1}, // [e1,e3]=-e2
                     {1, 2, 0, 1},  // [e2,e3]=e1
                     {0, 4, 5, -1}, // [e1,e5]=-e6
                     {0, 5, 4, 1},  // [e1,e6]=e5
                     {1, 3, 5, -1}, // [e2,e4]=-e6
                     {1, 5, 3, 1},  // [e2,e6]=e4
                     {2, 3, 4, -1}, // [e3,e4]=-e5
                     {2, 4, 3, 1}}); // [e3,e5]=e4
}

// ---- explicit complex structures ----------------------------------------
// Each builder returns the validated structure on its host algebra.

/// Abelian structure on T h1: Je1=e2, Je6=e3, Je4=e5.
inline AlmostComplexStructure J_h1abe() {
  auto a = Th1();
  return {a.total, acs_matrix(6, {{0, vec(6, {{1, 1}})},
                                  {5, vec(6, {{2, 1}})},
                                  {3, vec(6, {{4, 1}})}})};
}

/// Totally real family on T h1: Js e1=e4, Js e2=-s e4+e5, Js e3=2e6.
inline AlmostComplexStructure J_h1tr(const Rational& s) {
  auto a = Th1();
  return {a.total, acs_matrix(6, {{0, vec(6, {{3, 1}})},
                                  {1, vec(6, {{3, -s}, {4, 1}})},
                                  {2, vec(6, {{5, 2}})}})};
}

/// Non-totally-real family on T h1, nu != 0:
///   J e1 = e2 + (1-nu) e4 + ((1-nu)/nu) e5,
///   J e2 = -nu e1 + (1-nu) e4,  J e3 = e6,
/// completed by continuity in nu:
///   J e4 = -e2 + nu e4 + e5,
///   J e5 = -nu e1 + nu e2 - nu(1+nu) e4 - nu e5.
inline AlmostComplexStructure J_h1ntr(const Rational& nu) {
  auto a = Th1();
  Rational one(1);
  MatrixQ j(6, 6);
  j.set_col(0, vec(6, {{1, 1}, {3, one - nu}, {4, (one - nu) / nu}}));
  j.set_col(1, vec(6, {{0, -nu}, {3, one - nu}}));
  j.set_col(2, vec(6, {{5, 1}}));
  j.set_col(3, vec(6, {{1, -1}, {3, nu}, {4, 1}}));
  j.set_col(4, vec(6, {{0, -nu}, {1, nu}, {3, -nu * (one + nu)}, {4, -nu}}));
  j.set_col(5, vec(6, {{2, -1}}));
  return {a.total, j};
}

/// Totally real structure on T h1 behind the Kaehler pairs:
/// Je1=2e4, Je2=-e5, Je3=e6.
inline AlmostComplexStructure J_h1ka() {
  auto a = Th1();
  return {a.total, acs_matrix(6, {{0, vec(6, {{3, 2}})},
                                  {1, vec(6, {{4, -1}})},
                                  {2, vec(6, {{5, 1}})}})};
}

/// Structure on T*h1: Je1=e4, Je2=e6, Je5=e3 (3-step nilpotent).
inline AlmostComplexStructure J_h1cs() {
  auto a = Tsh1();
  return {a.total, acs_matrix(6, {{0, vec(6, {{3, 1}})},
                                  {1, vec(6, {{5, 1}})},
                                  {4, vec(6, {{2, 1}})}})};
}

/// Non-totally-real structure on T*h1, sign-corrected so that it is
/// integrable: Je1=e2-e4, Je2=e6, Je5=e3-e4.  (The variant with
/// Je5=e3+e4 fails N_J on (e1,e2); see the acceptance notes.)
inline AlmostComplexStructure J_h1notr() {
  auto a = Tsh1();
  return {a.total, acs_matrix(6, {{0, vec(6, {{1, 1}, {3, -1}})},
                                  {1, vec(6, {{5, 1}})},
                                  {4, vec(6, {{2, 1}, {3, -1}})}})};
}

/// The same map with the displayed sign Je5 = e3 + e4 (not integrable).
inline AlmostComplexStructure J_h1notr_displayed() {
  auto a = Tsh1();
  return {a.total, acs_matrix(6, {{0, vec(6, {{1, 1}, {3, -1}})},
                                  {1, vec(6, {{5, 1}})},
                                  {4, vec(6, {{2, 1}, {3, 1}})}})};
}

/// Abelian structure on T r_{3,0}: Je1=e2, Je3=-e6, Je4=e5.
inline AlmostComplexStructure J_abaffr() {
  auto a = Tr30();
  return {a.total, acs_matrix(6, {{0, vec(6, {{1, 1}})},
                                  {2, vec(6, {{5, -1}})},
                                  {3, vec(6, {{4, 1}})}})};
}

/// Totally real on T*r_{3,0}: Je1=e5, Je2=-e4, Je3=e6.
inline AlmostComplexStructure J_cl0tr() {
  auto a = Tsr3l(0);
  return {a.total, acs_matrix(6, {{0, vec(6, {{4, 1}})},
                                  {1, vec(6, {{3, -1}})},
                                  {2, vec(6, {{5, 1}})}})};
}

/// Not totally real on T*r_{3,0}: Je1=e2, Je4=e5, Je3=e6.
inline AlmostComplexStructure J_cl0notr() {
  auto a = Tsr3l(0);
  return {a.total, acs_matrix(6, {{0, vec(6, {{1, 1}})},
                                  {3, vec(6, {{4, 1}})},
                                  {2, vec(6, {{5, 1}})}})};
}

/// Totally real on T*r_{3,-1}: Je1=e4, Je2=e6, Je3=-e5.
inline AlmostComplexStructure J_cl_1tr() {
  auto a = Tsr3l(-1);
  return {a.total, acs_matrix(6, {{0, vec(6, {{3, 1}})},
                                  {1, vec(6, {{5, 1}})},
                                  {2, vec(6, {{4, -1}})}})};
}

/// Not totally real on T*r_{3,-1}:
/// Je3=-(e1+e6), Je5=e3-e4, Je6=-(e2+e4).
inline AlmostComplexStructure J_cl_1notr() {
  auto a = Tsr3l(-1);
  return {a.total, acs_matrix(6, {{2, vec(6, {{0, -1}, {5, -1}})},
                                  {4, vec(6, {{2, 1}, {3, -1}})},
                                  {5, vec(6, {{1, -1}, {3, -1}})}})};
}

/// Structure on T*r_{3,1}: Je1=e4, Je2=e3, Je5=e6.
inline AlmostComplexStructure J_cl1() {
  auto a = Tsr3l(1);
  return {a.total, acs_matrix(6, {{0, vec(6, {{3, 1}})},
                                  {1, vec(6, {{2, 1}})},
                                  {4, vec(6, {{5, 1}})}})};
}

/// Structure on T*r'_{3,eta}: Je1=+-e4, Je2=e3, Je5=e6.
inline AlmostComplexStructure J_cseta(const Rational& eta, int sign) {
  auto a = Tsr3p(eta);
  return {a.total, acs_matrix(6, {{0, vec(6, {{3, sign}})},
                                  {1, vec(6, {{2, 1}})},
                                  {4, vec(6, {{5, 1}})}})};
}

/// Totally real on T*r'_{3,0}: Je1=+-e4, Je2=e6, Je3=-e5.
inline AlmostComplexStructure J_csetatr(int sign) {
  auto a = Tsr3p(0);
  return {a.total, acs_matrix(6, {{0, vec(6, {{3, sign}})},
                                  {1, vec(6, {{5, 1}})},
                                  {2, vec(6, {{4, -1}})}})};
}

/// The displayed simple-case pattern Je3=e6, Je2=e1, Je4=e5 on a given
/// six-dimensional algebra.
inline AlmostComplexStructure J_simple_pattern(const LieAlgebra& host) {
  return {host, acs_matrix(6, {{2, vec(6, {{5, 1}})},
                               {1, vec(6, {{0, 1}})},
                               {3, vec(6, {{4, 1}})}})};
}

/// A verified complex structure on T sl(2), built from a Borel-type
/// complex subalgebra of the complexification:
///   Je1 = (-e3-e4+e5)/2, Je2 = (-e3+e4-e5)/2, Je3 = e1+e2,
///   Je4 = (e1-e2-e6)/2,  Je5 = (-e1+e2-e6)/2, Je6 = e4+e5.
inline AlmostComplexStructure J_tsl2() {
  auto a = Tsl2();
  Rational h(1, 2);
  MatrixQ j(6, 6);
  j.set_col(0, vec(6, {{2, -h}, {3, -h}, {4, h}}));
  j.set_col(1, vec(6, {{2, -h}, {3, h}, {4, -h}}));
  j.set_col(2, vec(6, {{0, 1}, {1, 1}}));
  j.set_col(3, vec(6, {{0, h}, {1, -h}, {5, -h}}));
  j.set_col(4, vec(6, {{0, -h}, {1, h}, {5, -h}}));
  j.set_col(5, vec(6, {{3, 1}, {4, 1}}));
  return {a.total, j};
}

/// Multiplication by i on the realification of the complex Heisenberg
/// algebra (bi-invariant).
inline AlmostComplexStructure J_biinvariant() {
  LieAlgebra g = cat(CatalogName::h1_complexified_real);
  return {g, acs_matrix(6, {{0, vec(6, {{3, 1}})},
                            {1, vec(6, {{4, 1}})},
                            {2, vec(6, {{5, 1}})}})};
}

// ---- named two-forms and metrics ----------------------------------------

inline MatrixQ form_matrix(std::size_t dim,
                           std::map<std::pair<std::size_t, std::size_t>, Rational> upper) {
  MatrixQ m(dim, dim);
  for (auto& [ij, c] : upper) {
    m(ij.first, ij.second) = c;
    m(ij.second, ij.first) = -c;
  }
  return m;
}

inline MatrixQ sym_matrix(std::size_t dim,
                          std::map<std::pair<std::size_t, std::size_t>, Rational> entries) {
  MatrixQ m(dim, dim);
  for (auto& [ij, c] : entries) {
    m(ij.first, ij.second) = c;
    m(ij.second, ij.first) = c;
  }
  return m;
}

/// ka1 = e45 - 2 e12 + mu e36 on T h1 (as displayed; not closed).
inline TwoForm ka1(const Rational& mu) {
  auto a = Th1();
  return {a.total, form_matrix(6, {{{3, 4}, 1}, {{0, 1}, -2}, {{2, 5}, mu}})};
}

/// ka2 = e14 + nu (e26 - e35) on T h1 (closed, symplectic for nu != 0).
inline TwoForm ka2(const Rational& nu) {
  auto a = Th1();
  return {a.total, form_matrix(6, {{{0, 3}, 1}, {{1, 5}, nu}, {{2, 4}, -nu}})};
}

/// omega_{alpha,beta,gamma} = alpha e12 + beta (e15 - e24) + gamma e36
/// on T r_{3,0} (symplectic iff beta gamma != 0).
inline TwoForm oabg(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  auto a = Tr30();
  return {a.total, form_matrix(6, {{{0, 1}, alpha},
                                   {{0, 4}, beta},
                                   {{1, 3}, -beta},
                                   {{2, 5}, gamma}})};
}

/// Member of the closed J-compatible family on T*h1 at coefficients
/// (a, b, c, d, e, f):
///   a (e12+e46) + b (2 e14 - e25 + e36) + c (e16+e24) + d (e23+e56)
///   + e. e26 + f. e35  (the f direction is compatible but not closed).
inline TwoForm tsh1_family(const Rational& a, const Rational& b, const Rational& c,
                           const Rational& d, const Rational& e, const Rational& f) {
  auto alg = Tsh1();
  return {alg.total, form_matrix(6, {{{0, 1}, a},   {{3, 5}, a},
                                     {{0, 3}, 2 * b}, {{1, 4}, -b}, {{2, 5}, b},
                                     {{0, 5}, c},   {{1, 3}, c},
                                     {{1, 2}, d},   {{4, 5}, d},
                                     {{1, 5}, e},
                                     {{2, 4}, f}})};
}

/// g_mu = 2 e1.e5 + e2.e4 + mu (e3.e3 + e6.e6) on T h1.
inline Metric g_mu(const Rational& mu) {
  auto a = Th1();
  return {a.total, sym_matrix(6, {{{0, 4}, 2}, {{1, 3}, 1}, {{2, 2}, mu}, {{5, 5}, mu}})};
}

/// g_nu = 2 e1.e1 + 1/2 e4.e4 + nu (e2.e3 + e5.e6) on T h1.
inline Metric g_nu(const Rational& nu) {
  auto a = Th1();
  return {a.total, sym_matrix(6, {{{0, 0}, 2},
                                  {{3, 3}, Rational(1, 2)},
                                  {{1, 2}, nu},
                                  {{4, 5}, nu}})};
}

/// 2 e1.e1 + e2.e3 + 2 e4.e4 - e5.e6 on T*h1.
inline Metric tsh1_metric() {
  auto a = Tsh1();
  return {a.total, sym_matrix(6, {{{0, 0}, 2}, {{1, 2}, 1}, {{3, 3}, 2}, {{4, 5}, -1}})};
}

/// alpha (e1.e1+e2.e2) + beta (e1.e4+e2.e5) + gamma (e3.e3+e6.e6)
/// on T r_{3,0} (the G3 family), beta gamma != 0.
inline Metric g3_metric(const Rational& alpha, const Rational& beta, const Rational& gamma) {
  auto a = Tr30();
  return {a.total, sym_matrix(6, {{{0, 0}, alpha}, {{1, 1}, alpha},
                                  {{0, 3}, beta},  {{1, 4}, beta},
                                  {{2, 2}, gamma}, {{5, 5}, gamma}})};
}

} // namespace liecheck::fixtures

#endif
