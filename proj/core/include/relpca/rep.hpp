#pragma once

#include "relpca/relative.hpp"

namespace relpca {

// Representations are stored as action tables: one dimV x dimV matrix per
// basis vector of A, so every axiom becomes a finite matrix identity.

struct RelPoissonRep {
  RelPoisson base;
  int dimV{0};
  std::vector<Mat> mu, rho;
  Mat alpha;
};

struct RelPCARep {
  RelPCA base;
  int dimV{0};
  std::vector<Mat> mu, lc, rc;
  Mat alpha, beta;
};

struct OOperator {
  RelPCARep rep;
  Mat T;  // V -> A, i.e. dimA x dimV
};

// Linear extension of an action table.
Mat act(const std::vector<Mat>& table, const Vec& x);

// The three displayed axioms of an anti-pre-Lie representation; also used
// inside check_rel_pca_rep.
Conditions check_apl_rep(const BinOp& circ, const std::vector<Mat>& lc, const std::vector<Mat>& rc,
                         int dimV);

Conditions check_rel_poisson_rep(const RelPoissonRep& r);
Conditions check_rel_pca_rep(const RelPCARep& r);

// (-mu^*, rho^*, -alpha^*) and (-mu^*, rc^*-lc^*, rc^*, beta^*, alpha^*).
RelPoissonRep dual_rel_poisson_rep(const RelPoissonRep& r);
RelPCARep dual_rel_pca_rep(const RelPCARep& r);

RelPoissonRep adjoint_rep(const RelPoisson& s);
RelPCARep adjoint_rep(const RelPCA& s);
// (L_star, L_succ, R_prec, P, Q) over the sub-adjacent relative PCA algebra.
RelPCARep pre_rep(const RelPrePCA& s);
// Prop-2.5 representation (-L.^*, -Lo^*, Q^*) of the associated relative
// Poisson algebra of a relative PCA algebra.
RelPoissonRep coadjoint_rel_poisson_rep(const RelPCA& s);
// (-L.^*, -ad^*, Rc^*, Q^*, P^*): the dual of the adjoint representation.
RelPCARep dual_adjoint_rep(const RelPCA& s);

RelPoisson semidirect_rel_poisson(const RelPoissonRep& r);
RelPCA semidirect_rel_pca(const RelPCARep& r);

Conditions check_o_operator(const OOperator& o);

// u <> v = rho(T(u)) v for an O-operator of a Lie algebra.
BinOp pre_lie_from_lie_o_operator(const BinOp& bracket, const std::vector<Mat>& rho, const Mat& T);

}  // namespace relpca
