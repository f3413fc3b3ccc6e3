#pragma once

#include "relpca/algebra.hpp"

namespace relpca {

// Derivation-decorated structures and the constructions between them.

struct RelPoisson {
  BinOp dot, bracket;
  Mat P;
};

struct RelPCA {
  BinOp dot, circ;
  Mat P, Q;
};

struct AdmCommDiff {
  BinOp dot;
  Mat P, Q;
};

struct RelPrePCA {
  BinOp star, succ, prec;
  Mat P, Q;
};

// Residual convention: P(e_i)*e_j + e_i*P(e_j) - P(e_i*e_j).
Conditions check_derivation(const BinOp& op, const Mat& P, const std::string& label = "derivation");

Conditions check_rel_poisson(const RelPoisson& s);
Conditions check_adm_comm_diff(const AdmCommDiff& a);
Conditions check_rel_pca(const RelPCA& s);
Conditions check_rel_pre_poisson(const BinOp& star, const BinOp& diamond, const Mat& P);
Conditions check_adm_diff_zinbiel(const BinOp& star, const Mat& P, const Mat& Q);
Conditions check_rel_pre_pca(const RelPrePCA& s);

// [x,y] = x.P(y) - P(x).y.
BinOp witt_bracket(const BinOp& dot, const Mat& P);
RelPoisson witt_rel_poisson(const BinOp& dot, const Mat& P);

// x o y = Q(x.y) - P(x).y over an admissible commutative differential algebra.
RelPCA circ_from_admissible(const AdmCommDiff& a);

// x>y = Q(x*y) - P(x)*y, x<y = Q(y*x) - y*P(x) over an admissible
// differential Zinbiel algebra.
RelPrePCA pre_pca_from_adm_zinbiel(const BinOp& star, const Mat& P, const Mat& Q);

RelPCA sub_adjacent_rel_pca(const RelPrePCA& s);

inline RelPoisson associated_rel_poisson(const RelPCA& s) {
  return {s.dot, commutator(s.circ), s.P};
}

}  // namespace relpca
