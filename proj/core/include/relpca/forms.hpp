#pragma once

#include "relpca/rep.hpp"

namespace relpca {

// Bilinear forms are dim x dim matrices, B(i,j) = B(e_i, e_j). Symmetry and
// nondegeneracy are reported, never assumed.

// Labels: sym, nondeg, inv-dot, inv-bracket, 2-coc, invariant-c2c.
Conditions form_checks(const BinOp& dot, const BinOp& bracket, const Mat& B);

// Unique solution of B(adj(x), y) = B(x, P(y)); requires B nondegenerate.
Mat adjoint_map(const Mat& B, const Mat& P);

// Anti-pre-Lie operation defined by B(x o y, z) = B(y, [x,z]); requires B a
// nondegenerate symmetric commutative 2-cocycle on a Lie bracket.
BinOp apl_from_c2c(const BinOp& bracket, const Mat& B);

// (dot, apl_from_c2c, P, adjoint_map(B,P)) from a relative Poisson algebra
// carrying an invariant-c2c form.
RelPCA rpca_from_form(const RelPoisson& s, const Mat& B);

struct MatchedPairRelPoisson {
  RelPoisson a1, a2;
  std::vector<Mat> mu1, rho1;  // actions of A1 on A2
  std::vector<Mat> mu2, rho2;  // actions of A2 on A1
};

struct MatchedPairRelPCA {
  RelPCA a1, a2;
  std::vector<Mat> mu1, l1, r1;
  std::vector<Mat> mu2, l2, r2;
};

// The direct-sum structures the matched-pair definitions quantify over.
BinOp matched_sum_op(const BinOp& op1, const BinOp& op2, const std::vector<Mat>& l1,
                     const std::vector<Mat>& r1, const std::vector<Mat>& l2,
                     const std::vector<Mat>& r2);
RelPoisson matched_sum(const MatchedPairRelPoisson& m);
RelPCA matched_sum(const MatchedPairRelPCA& m);

// Primary verdict: the assembled direct sum passes the structure check.
// Secondary verdict: the itemized condition lists; agreement of the two is
// reported whenever the components themselves are valid.
Conditions check_matched_pair_rel_poisson(const MatchedPairRelPoisson& m);
Conditions check_matched_pair_rel_pca(const MatchedPairRelPCA& m);

struct ManinTriple {
  RelPoisson dbl;  // structure on A + A*, basis ordered (e_1..e_n, e_1*..e_n*)
  int n{0};        // dim A
  Mat form;        // the standard pairing B_d
};

// The standard pairing: B_d[i][n+i] = B_d[n+i][i] = 1.
Mat standard_pairing(int n);

// Assembles the 2n-dimensional relative Poisson double of a relative PCA
// algebra and the dual structure on A*; astar must carry operators
// (Q^T, P^T) dual to a's (P, Q).
ManinTriple build_manin_triple(const RelPCA& a, const RelPCA& astar);
Conditions check_manin_triple(const ManinTriple& t);

// Dual-action matched pairs of the equivalence theorem: the relative PCA
// pair uses (-L.*, -ad*, Rc*) on both sides, the relative Poisson pair
// uses (-L.*, -Lc*).
MatchedPairRelPCA dual_matched_pair_rel_pca(const RelPCA& a, const RelPCA& astar);
MatchedPairRelPoisson dual_matched_pair_rel_poisson(const RelPCA& a, const RelPCA& astar);

// Double construction of a commutative differential Frobenius algebra:
// comm-assoc on 2n, both halves subalgebras, B_d invariant, op a derivation.
Conditions check_double_construction_frobenius(const BinOp& dot, const Mat& op, int n);

}  // namespace relpca
