#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace relpca;

TEST_CASE("is_derivation") {
  CHECK(check_derivation(fx::a3_dot(), fx::a3_P()).all());
  CHECK(check_derivation(fx::a3_dot(), Mat(3, 3)).all());
  // P(e3) = 2e3 instead of 3e3: e1.e1 = 2e3 forces P(e3) = 3e3
  Mat P = fx::a3_P();
  P(2, 2) = 2;
  Conditions c = check_derivation(fx::a3_dot(), P);
  REQUIRE(!c.all());
  const Witness& w = *c.find("derivation")->witness;
  CHECK(w.indices == std::vector<int>{0, 0});
  Vec expect = zero_vec(3);
  expect[2] = 2;  // P(e1).e1 + e1.P(e1) - P(e1.e1) = 6e3 - 4e3
  CHECK(w.residual == expect);
}

TEST_CASE("is_rel_poisson") {
  CHECK(check_rel_poisson(witt_rel_poisson(fx::a3_dot(), fx::a3_P())).all());
  CHECK(check_rel_poisson({BinOp(2), BinOp(2), Mat(2, 2)}).all());
  CHECK(check_rel_poisson(fx::d6()).all());
  // perturbing the double bracket breaks the relative Leibniz rule family
  RelPoisson bad = fx::d6();
  bad.bracket.at(0, 5, 3) = -8;
  bad.bracket.at(5, 0, 3) = 8;
  CHECK(!check_rel_poisson(bad).all());
}

TEST_CASE("witt_bracket and witt_rel_poisson") {
  CHECK(witt_bracket(fx::a3_dot(), fx::a3_P()) == fx::a3_bracket());
  CHECK(witt_bracket(fx::a3_dot(), Mat(3, 3)).is_zero());
  // precondition violation: P not a derivation
  Mat P = fx::a3_P();
  P(2, 2) = 1;
  CHECK_THROWS_AS(witt_rel_poisson(fx::a3_dot(), P), PreconditionError);
}

TEST_CASE("is_adm_comm_diff") {
  CHECK(check_adm_comm_diff(fx::a3_acd()).all());
  CHECK(check_adm_comm_diff({BinOp(2), Mat(2, 2), Mat(2, 2)}).all());
  // Q = +P fails rps1 at (e1, e1) with residual -6e3
  Conditions c = check_adm_comm_diff({fx::a3_dot(), fx::a3_P(), fx::a3_P()});
  REQUIRE(!c.all());
  const CheckReport* r = c.find("rps1");
  REQUIRE(!r->passed);
  CHECK(r->witness->indices == std::vector<int>{0, 0});
  Vec expect = zero_vec(3);
  expect[2] = -6;
  CHECK(r->witness->residual == expect);
}

TEST_CASE("circ_from_admissible") {
  RelPCA s = circ_from_admissible(fx::a3_acd());
  CHECK(s.circ == fx::a3_circ());
  CHECK(check_rel_pca(s).all());
  CHECK(commutator(s.circ) == witt_bracket(fx::a3_dot(), fx::a3_P()));
  // P = Q = 0 gives the zero operation
  CHECK(circ_from_admissible({fx::a3_dot(), Mat(3, 3), Mat(3, 3)}).circ.is_zero());
  CHECK_THROWS_AS(circ_from_admissible({fx::a3_dot(), fx::a3_P(), fx::a3_P()}),
                  PreconditionError);
}

TEST_CASE("is_rel_pca") {
  CHECK(check_rel_pca(fx::a3_rel_pca()).all());
  CHECK(check_rel_pca(fx::d6pre()).all());
  // zero operations tolerate arbitrary operators
  fx::Rng rng(11);
  Mat P(3, 3), Q(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      P(i, j) = rng.rat();
      Q(i, j) = rng.rat();
    }
  CHECK(check_rel_pca({BinOp(3), BinOp(3), P, Q}).all());
  // single-coefficient mutation fails rps2
  RelPCA bad = fx::a3_rel_pca();
  bad.circ.at(0, 1, 2) = -3;
  Conditions c = check_rel_pca(bad);
  CHECK(!c.all());
  CHECK(!c.find("rps2")->passed);
}

TEST_CASE("is_rel_pre_poisson") {
  BinOp diamond = sub_adjacent_pre_lie(fx::pp3_succ(), fx::pp3_prec());
  CHECK(check_rel_pre_poisson(fx::z3_star(), diamond, fx::a3_P()).all());
  CHECK(check_rel_pre_poisson(BinOp(2), BinOp(2), Mat(2, 2)).all());
  Mat P = fx::a3_P();
  P(2, 2) = 2;
  Conditions c = check_rel_pre_poisson(fx::z3_star(), diamond, P);
  CHECK(!c.all());
  CHECK(!c.find("GPPA1")->passed);
}

TEST_CASE("is_adm_diff_zinbiel and is_rel_pre_pca") {
  CHECK(check_adm_diff_zinbiel(fx::z3_star(), fx::a3_P(), fx::a3_Q()).all());
  CHECK(check_rel_pre_pca(fx::pp3()).all());
  CHECK(check_rel_pre_pca({BinOp(3), BinOp(3), BinOp(3), Mat(3, 3), Mat(3, 3)}).all());
  // Q = +P breaks pre-sys6
  Conditions c = check_adm_diff_zinbiel(fx::z3_star(), fx::a3_P(), fx::a3_P());
  CHECK(!c.all());
}

TEST_CASE("pre_pca_from_adm_zinbiel") {
  RelPrePCA s = pre_pca_from_adm_zinbiel(fx::z3_star(), fx::a3_P(), fx::a3_Q());
  CHECK(s.succ == fx::pp3_succ());
  CHECK(s.prec == fx::pp3_prec());
  CHECK(check_rel_pre_pca(s).all());
  // P = Q = 0 gives zero operations
  RelPrePCA z = pre_pca_from_adm_zinbiel(fx::z3_star(), Mat(3, 3), Mat(3, 3));
  CHECK(z.succ.is_zero());
  CHECK(z.prec.is_zero());
  // one-dimensional zero star with P = id, Q = -id
  BinOp star1(1);
  RelPrePCA o = pre_pca_from_adm_zinbiel(star1, Mat::identity(1), -Mat::identity(1));
  CHECK(o.succ.is_zero());
  CHECK(o.prec.is_zero());
  CHECK_THROWS_AS(pre_pca_from_adm_zinbiel(fx::z3_star(), fx::a3_P(), fx::a3_P()),
                  PreconditionError);
}

TEST_CASE("sub_adjacent_rel_pca") {
  RelPCA s = sub_adjacent_rel_pca(fx::pp3());
  CHECK(s.dot == fx::a3_dot());
  CHECK(s.circ == fx::a3_circ());
  CHECK(check_rel_pca(s).all());
  RelPCA z = sub_adjacent_rel_pca({BinOp(2), BinOp(2), BinOp(2), Mat(2, 2), Mat(2, 2)});
  CHECK(z.dot.is_zero());
  CHECK(z.circ.is_zero());
}

TEST_CASE("coadjoint representation and semidirect double of a relative PCA algebra") {
  for (const RelPCA& s : {fx::a3_rel_pca(), fx::d6pre()}) {
    RelPoissonRep dual = coadjoint_rel_poisson_rep(s);
    CHECK(check_rel_poisson_rep(dual).all());
    CHECK(check_rel_poisson(semidirect_rel_poisson(dual)).all());
  }
}

TEST_CASE("construction diagram: pre-PCA route equals admissible route") {
  RelPCA via_pre = sub_adjacent_rel_pca(pre_pca_from_adm_zinbiel(fx::z3_star(), fx::a3_P(), fx::a3_Q()));
  RelPCA via_adm = circ_from_admissible({descendent_comm(fx::z3_star()), fx::a3_P(), fx::a3_Q()});
  CHECK(via_pre.dot == via_adm.dot);
  CHECK(via_pre.circ == via_adm.circ);
}

TEST_CASE("unital fixtures: bracket is the Witt bracket of ad(unit)") {
  // dim-2 unital commutative algebra e1 = 1, e2^2 = 0, with derivation
  // P(e2) = e2 and the compatible Q from the rps1 linear system
  BinOp dot(2);
  dot.at(0, 0, 0) = 1;
  dot.at(0, 1, 1) = 1;
  dot.at(1, 0, 1) = 1;
  Mat P(2, 2);
  P(1, 1) = 1;
  Mat Q(2, 2);
  Q(0, 0) = 1;  // Q(e1) = e1, Q(e2) = 0 solves rps1
  AdmCommDiff acd{dot, P, Q};
  REQUIRE(check_adm_comm_diff(acd).all());
  RelPCA s = circ_from_admissible(acd);
  REQUIRE(check_rel_pca(s).all());
  BinOp br = commutator(s.circ);
  Conditions jc = check_jacobi(s.dot, br);
  CHECK(jc.all());
  auto unit = find_unit(s.dot);
  REQUIRE(unit.has_value());
  // ad(1) as a matrix
  Mat ad1(2, 2);
  for (int j = 0; j < 2; ++j) {
    Vec v = br.apply(*unit, unit_vec(2, j));
    for (int i = 0; i < 2; ++i) ad1(i, j) = v[static_cast<size_t>(i)];
  }
  CHECK(br == witt_bracket(s.dot, ad1));
  CHECK(ad1 == s.P);
}
