#include <doctest.h>

#include "liecheck/catalog.hpp"
#include "liecheck/representation.hpp"
#include "liecheck/transport.hpp"

#include "fixtures.hpp"

using namespace liecheck;
namespace fx = liecheck::fixtures;

namespace {

LieAlgebra six(std::vector<BracketEntry> t) { return LieAlgebra(6, {}, std::move(t)); }

} // namespace

TEST_CASE("catalog tables match the three-dimensional classification") {
  CHECK(fx::h1().bracket_basis(0, 1) == fx::vec(3, {{2, 1}}));

  LieAlgebra r3m1 = fx::r3_lambda(-1);
  CHECK(r3m1.bracket_basis(0, 2) == fx::vec(3, {{2, -1}})); // [e1,e3] = -e3

  LieAlgebra so3 = fx::so3();
  CHECK(so3.bracket(so3.basis_vector(2), so3.basis_vector(1)) ==
        fx::vec(3, {{0, -1}})); // [e3,e2] = -e1

  // eta = 0: rigid motions of the Euclidean 2-space
  LieAlgebra r3p0 = fx::r3p_eta(0);
  CHECK(r3p0.bracket_basis(0, 1) == fx::vec(3, {{2, -1}}));
  CHECK(r3p0.bracket_basis(0, 2) == fx::vec(3, {{1, 1}}));

  CHECK_THROWS_AS(catalog({CatalogName::r3_lambda, std::nullopt}), MissingParameter);
  CHECK(catalog({CatalogName::r3_lambda, Rational(2)}).warning.has_value());
  CHECK_FALSE(catalog({CatalogName::r3_lambda, Rational(1)}).warning.has_value());
}

TEST_CASE("tangent tables reproduce the six-dimensional bracket lists") {
  // T h1: [e1,e2]=e3, [e1,e5]=e6, [e2,e4]=-e6
  CHECK(fx::Th1().total.same_table(
      six({{0, 1, 2, 1}, {0, 4, 5, 1}, {1, 3, 5, -1}})));

  // T r3: [e1,e2]=e2, [e1,e3]=e2+e3, [e1,e5]=e5, [e1,e6]=e5+e6,
  //       [e2,e4]=-e5, [e3,e4]=-e5-e6
  CHECK(tangent(fx::r3()).total.same_table(
      six({{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 2, 2, 1},
           {0, 4, 4, 1}, {0, 5, 4, 1}, {0, 5, 5, 1},
           {1, 3, 4, -1}, {2, 3, 4, -1}, {2, 3, 5, -1}})));

  // T r3_lambda rows, lambda in {0, 1/2, -1, 1}
  for (Rational l : {Rational(0), Rational(1, 2), Rational(-1), Rational(1)}) {
    std::vector<BracketEntry> t = {{0, 1, 1, 1}, {0, 4, 4, 1}, {1, 3, 4, -1}};
    if (l != 0) {
      t.push_back({0, 2, 2, l});
      t.push_back({0, 5, 5, l});
      t.push_back({2, 3, 5, -l});
    }
    CHECK(tangent(fx::r3_lambda(l)).total.same_table(six(std::move(t))));
  }

  // T r3p_eta rows at eta in {0, 1}
  for (Rational e : {Rational(0), Rational(1)}) {
    std::vector<BracketEntry> t = {{0, 1, 2, -1}, {0, 2, 1, 1},
                                   {0, 4, 5, -1}, {0, 5, 4, 1},
                                   {1, 3, 5, 1},  {2, 3, 4, -1}};
    if (e != 0) {
      t.push_back({0, 1, 1, e});
      t.push_back({0, 2, 2, e});
      t.push_back({0, 4, 4, e});
      t.push_back({0, 5, 5, e});
      t.push_back({1, 3, 4, -e});
      t.push_back({2, 3, 5, -e});
    }
    CHECK(tangent(fx::r3p_eta(e)).total.same_table(six(std::move(t))));
  }

  // T sl(2): the displayed simple-case table
  CHECK(fx::Tsl2().total.same_table(
      six({{0, 1, 2, 1}, {0, 2, 0, -2}, {1, 2, 1, 2},
           {0, 4, 5, 1}, {0, 5, 3, -2}, {1, 3, 5, -1},
           {1, 5, 4, 2}, {2, 3, 3, 2}, {2, 4, 4, -2}})));
}

TEST_CASE("cotangent tables reproduce the six-dimensional bracket lists") {
  // T*h1: [e1,e2]=e3, [e1,e6]=-e5, [e2,e6]=e4
  CHECK(fx::Tsh1().total.same_table(
      six({{0, 1, 2, 1}, {0, 5, 4, -1}, {1, 5, 3, 1}})));

  // T*r3: [e1,e2]=e2, [e1,e3]=e2+e3, [e1,e5]=-e5-e6, [e1,e6]=-e6,
  //       [e2,e5]=e4, [e3,e5]=e4, [e3,e6]=e4
  CHECK(cotangent(fx::r3()).total.same_table(
      six({{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 2, 2, 1},
           {0, 4, 4, -1}, {0, 4, 5, -1}, {0, 5, 5, -1},
           {1, 4, 3, 1}, {2, 4, 3, 1}, {2, 5, 3, 1}})));

  // T*r3_lambda at eta... lambda in {0, 1/2, -1, 1}:
  // [e1,e5]=-e5, [e1,e6]=-lambda e6, [e2,e5]=e4, [e3,e6]=lambda e4
  for (Rational l : {Rational(0), Rational(1, 2), Rational(-1), Rational(1)}) {
    std::vector<BracketEntry> t = {{0, 1, 1, 1}, {0, 4, 4, -1}, {1, 4, 3, 1}};
    if (l != 0) {
      t.push_back({0, 2, 2, l});
      t.push_back({0, 5, 5, -l});
      t.push_back({2, 5, 3, l});
    }
    CHECK(cotangent(fx::r3_lambda(l)).total.same_table(six(std::move(t))));
  }

  // T*r3p_eta at eta in {0, 1, 3/2}: [e1,e5]=-eta e5-e6, [e1,e6]=e5-eta e6,
  // [e2,e5]=eta e4, [e2,e6]=-e4, [e3,e5]=e4, [e3,e6]=eta e4
  for (Rational e : {Rational(0), Rational(1), Rational(3, 2)}) {
    std::vector<BracketEntry> t = {{0, 1, 2, -1}, {0, 2, 1, 1},
                                   {0, 4, 5, -1}, {0, 5, 4, 1},
                                   {1, 5, 3, -1}, {2, 4, 3, 1}};
    if (e != 0) {
      t.push_back({0, 1, 1, e});
      t.push_back({0, 2, 2, e});
      t.push_back({0, 4, 4, -e});
      t.push_back({0, 5, 5, -e});
      t.push_back({1, 4, 3, e});
      t.push_back({2, 5, 3, e});
    }
    CHECK(cotangent(fx::r3p_eta(e)).total.same_table(six(std::move(t))));
  }
}

TEST_CASE("semidirect product validates and marks the splitting") {
  SemidirectAlgebra t = fx::Th1();
  CHECK(t.h_dim == 3);
  CHECK(t.v_dim == 3);

  // v-part is an abelian ideal
  Subspace v = t.v_part();
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK(is_zero(t.total.bracket(v.basis_vector(a), v.basis_vector(b))));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t a = 0; a < 3; ++a)
      CHECK(v.contains(t.total.bracket(t.total.basis_vector(i), v.basis_vector(a))));

  // abelian h with zero rep gives the abelian algebra of doubled dim
  LieAlgebra ab(3, {}, {});
  SemidirectAlgebra dz = semidirect(ab, zero_rep(ab, 3));
  CHECK(dz.total.same_table(LieAlgebra(6, {}, {})));

  // invalid representation is rejected
  LieAlgebra h = fx::h1();
  std::vector<MatrixQ> bad(3, MatrixQ::identity(3));
  CHECK_THROWS_AS(Representation(h, bad), RepresentationInvalid);
}

TEST_CASE("v-part of every catalog semidirect product is an abelian ideal") {
  for (auto name : {CatalogName::h1, CatalogName::r3, CatalogName::sl2,
                    CatalogName::so3}) {
    LieAlgebra h = fx::cat(name);
    for (bool coad : {false, true}) {
      SemidirectAlgebra s = coad ? cotangent(h) : tangent(h);
      Subspace v = s.v_part();
      for (std::size_t a = 0; a < v.dim(); ++a)
        for (std::size_t b = a + 1; b < v.dim(); ++b)
          CHECK(is_zero(s.total.bracket(v.basis_vector(a), v.basis_vector(b))));
      for (std::size_t i = 0; i < s.total.dim(); ++i)
        for (std::size_t a = 0; a < v.dim(); ++a)
          CHECK(v.contains(s.total.bracket(s.total.basis_vector(i), v.basis_vector(a))));
    }
  }
}

TEST_CASE("dual representation is an involution and dual(ad) = coad") {
  LieAlgebra h = fx::h1();
  Representation ad = adjoint_rep(h);
  Representation coad = coadjoint_rep(h);
  Representation dual_ad = dual_representation(ad);
  for (std::size_t i = 0; i < 3; ++i) CHECK(dual_ad.action(i) == coad.action(i));

  Representation r = adjoint_rep(fx::r3());
  Representation rdd = dual_representation(dual_representation(r));
  for (std::size_t i = 0; i < 3; ++i) CHECK(rdd.action(i) == r.action(i));

  Representation z = zero_rep(h, 3);
  Representation zd = dual_representation(z);
  for (std::size_t i = 0; i < 3; ++i) CHECK(zd.action(i).is_zero());
}

TEST_CASE("transport: identity, rep equivalence, permutation conjugation") {
  SemidirectAlgebra t = fx::Th1();
  AlmostComplexStructure J = fx::J_h1abe();
  MatrixQ id = MatrixQ::identity(6);
  CHECK(transport_endomorphism(t.total, t.total, id, J.matrix()) == J.matrix());

  // psi + T with psi = id and T = diag(1,-1,1) carries tangent(so3) to
  // the displayed T so(3) table
  LieAlgebra genuine = tangent(fx::so3()).total;
  LieAlgebra displayed = fx::Tso3_displayed();
  MatrixQ phi = MatrixQ::identity(6);
  phi(4, 4) = -1;
  CHECK_NOTHROW(require_isomorphism(genuine, displayed, phi));

  // a non-isomorphism is rejected with a witness pair
  MatrixQ bad = MatrixQ::identity(6);
  bad(2, 2) = 7;
  CHECK_THROWS_AS(require_isomorphism(genuine, displayed, bad), NotAnIsomorphism);

  // the Killing form of sl2 intertwines adjoint and coadjoint, so
  // psi + T with psi = id and T = Killing matrix is an isomorphism
  // T sl2 -> T* sl2; it carries the verified structure across
  LieAlgebra tsl2 = fx::Tsl2().total;
  LieAlgebra tssl2 = cotangent(fx::sl2()).total;
  MatrixQ killing{{Rational(0), Rational(4), Rational(0)},
                  {Rational(4), Rational(0), Rational(0)},
                  {Rational(0), Rational(0), Rational(8)}};
  MatrixQ phi_k(6, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    phi_k(i, i) = 1;
    for (std::size_t j = 0; j < 3; ++j) phi_k(3 + i, 3 + j) = killing(i, j);
  }
  MatrixQ moved_sl2 =
      transport_endomorphism(tsl2, tssl2, phi_k, fx::J_tsl2().matrix());
  AlmostComplexStructure Jct(tssl2, moved_sl2);
  CHECK(is_integrable(Jct).integrable);
  CHECK(eigenspace_closure(Jct));

  // basis permutation on abelian R^6 conjugates J
  LieAlgebra ab(6, {}, {});
  MatrixQ perm(6, 6);
  std::size_t cycle[6] = {1, 2, 3, 4, 5, 0};
  for (std::size_t i = 0; i < 6; ++i) perm(cycle[i], i) = 1;
  MatrixQ j0(6, 6);
  for (std::size_t k = 0; k < 3; ++k) {
    j0(2 * k, 2 * k + 1) = -1;
    j0(2 * k + 1, 2 * k) = 1;
  }
  AlmostComplexStructure base(ab, j0);
  MatrixQ moved = transport_endomorphism(ab, ab, perm, j0);
  AlmostComplexStructure conj(ab, moved);
  CHECK(is_integrable(conj).integrable); // abelian algebra: N vanishes
  CHECK(ascending_series(conj).step == ascending_series(base).step);
}
