#pragma once

#include "relpca/relative.hpp"

namespace relpca {

// Linear map A -> A ⊗ A stored as one Tensor2 per basis vector.
struct Coproduct {
  int dim{0};
  std::vector<Tensor2> delta;

  static Coproduct zero(int n) {
    Coproduct c;
    c.dim = n;
    c.delta.assign(static_cast<size_t>(n), Tensor2(n, n));
    return c;
  }
  bool is_zero() const {
    for (const Tensor2& t : delta)
      if (!t.is_zero()) return false;
    return true;
  }
  bool operator==(const Coproduct& o) const { return dim == o.dim && delta == o.delta; }
};

Tensor2 co_apply(const Coproduct& c, const Vec& x);
// Expands one factor of a Tensor2 through the coproduct.
Tensor3 co_slot(const Coproduct& c, const Tensor2& t, int slot);

// Mutually inverse index transpositions between a coproduct and the binary
// operation on the dual: op(a,b,k) = Delta(e_k)(a,b).
BinOp dualize(const Coproduct& c);
Coproduct dualize(const BinOp& op);

struct RelPCABialgebra {
  RelPCA alg;
  Coproduct Delta, theta;
};

Conditions check_cocomm_coassoc(const Coproduct& Delta);
Conditions check_apl_coalgebra(const Coproduct& theta);
// cos1..cos7 plus the dualized relative PCA cross-check.
Conditions check_rel_pca_coalgebra(const Coproduct& Delta, const Coproduct& theta, const Mat& Q,
                                   const Mat& P);
Conditions check_asi_bialgebra(const BinOp& dot, const Coproduct& Delta);
Conditions check_apl_bialgebra(const BinOp& circ, const Coproduct& theta);
Conditions check_rel_pca_bialgebra(const RelPCABialgebra& b);
Conditions check_diff_asi_bialgebra(const BinOp& dot, const Coproduct& Delta, const Mat& P,
                                    const Mat& Q);
// circ by x o y = Q(x.y) - P(x).y, theta by theta(x) = Delta(P x) - (Q ⊗ id) Delta(x).
RelPCABialgebra bialgebra_from_diff_asi(const BinOp& dot, const Coproduct& Delta, const Mat& P,
                                        const Mat& Q);

}  // namespace relpca
