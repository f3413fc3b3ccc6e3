#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// Cross-module pipeline over a second, structurally different fixture: the
// truncated polynomial algebra t K[t]/(t^5) with the Euler derivation. Its
// products do not land in an annihilator, so every identity does real work.

#include "fixtures.hpp"
#include "relpca/ybe.hpp"

using namespace relpca;

namespace {

AdmCommDiff poly4() {
  BinOp dot(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i + j + 2 <= 4) dot.at(i, j, i + j + 1) = 1;
  Mat P(4, 4), Q(4, 4);
  for (int i = 0; i < 4; ++i) {
    P(i, i) = i + 1;   // t d/dt
    Q(i, i) = -i;      // solves the admissibility equation for this P
  }
  return {dot, P, Q};
}

}  // namespace

TEST_CASE("the truncated polynomial algebra is admissible") {
  AdmCommDiff a = poly4();
  CHECK(check_adm_comm_diff(a).all());
  // its Witt bracket is nonzero, unlike the annihilator-style fixtures
  CHECK(!witt_bracket(a.dot, a.P).is_zero());
}

TEST_CASE("induced relative PCA structure and its representations") {
  AdmCommDiff a = poly4();
  RelPCA s = circ_from_admissible(a);
  CHECK(check_rel_pca(s).all());
  CHECK(commutator(s.circ) == witt_bracket(a.dot, a.P));
  CHECK(check_rel_pca_rep(adjoint_rep(s)).all());
  CHECK(check_rel_pca_rep(dual_adjoint_rep(s)).all());
  CHECK(check_rel_poisson_rep(coadjoint_rel_poisson_rep(s)).all());
}

TEST_CASE("doubles, Manin triple and the induced form structure") {
  RelPCA s = circ_from_admissible(poly4());
  RelPCA astar{BinOp(4), BinOp(4), s.Q.transpose(), s.P.transpose()};
  ManinTriple t = build_manin_triple(s, astar);
  CHECK(check_manin_triple(t).all());
  RelPCA dbl = semidirect_rel_pca(dual_adjoint_rep(s));
  CHECK(check_rel_pca(dbl).all());
  // the form-induced structure on the double restricts to s
  RelPCA induced = rpca_from_form(t.dbl, t.form);
  CHECK(check_rel_pca(induced).all());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec v = induced.circ.basis_product(i, j);
      for (int k = 0; k < 4; ++k) CHECK(v[static_cast<size_t>(k)] == s.circ.at(i, j, k));
    }
  CHECK(induced.circ == dbl.circ);
  // both matched-pair engines pass and agree
  Conditions mp = check_matched_pair_rel_pca(dual_matched_pair_rel_pca(s, astar));
  CHECK(mp.all());
}

TEST_CASE("coboundary engines agree over the second fixture") {
  RelPCA s = circ_from_admissible(poly4());
  fx::Rng rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    Tensor2 r(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        Rat c = rng.rat(-1, 1);
        r(i, j) = c;
        r(j, i) = -c;
      }
    Conditions suite = cob_condition_suite(s, r);
    CHECK(suite.find("aggregate")->passed == suite.find("definitional")->passed);
    Conditions of = o_operator_form_check(s, r);
    CHECK(of.find("agrees-ybe")->passed);
    CHECK(t_tensor_expansion_check(poly4(), rng.tensor2(4)).all());
  }
  // here the admissibility conditions force r = 0: the operator spectra
  // (q_i - p_j) never vanish, so the only antisymmetric solution is trivial
  std::vector<Tensor2> sols = enumerate_ybe_solutions(s, {Rat(-1), Rat(0), Rat(1)});
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].is_zero());
}

TEST_CASE("unit detection stays negative on the nilpotent fixture") {
  AdmCommDiff a = poly4();
  CHECK(!find_unit(a.dot).has_value());
}
