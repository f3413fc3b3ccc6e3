#pragma once

#include "relpca/coalg.hpp"
#include "relpca/rep.hpp"

namespace relpca {

// Coboundary coproducts from an r-matrix:
//   Delta_r(x) = (id ⊗ L.(x) - L.(x) ⊗ id) r
//   theta_r(x) = (Lo(x) ⊗ id - id ⊗ ad(x)) r
Coproduct cobound_delta(const BinOp& dot, const Tensor2& r);
Coproduct cobound_theta(const BinOp& circ, const Tensor2& r);

// A(r) = r12.r13 - r23.r12 + r13.r23 and T(r) = r12 o r13 + r12 o r23 - [r13, r23].
Tensor3 aybe_tensor(const BinOp& dot, const Tensor2& r);
Tensor3 tybe_tensor(const BinOp& circ, const Tensor2& r);

// Labels: aybe, tybe, d2, d2p; plus antisym-d2-equiv for antisymmetric r.
Conditions check_rpca_ybe(const RelPCA& s, const Tensor2& r);

// Requires an antisymmetric solution; the result passes the bialgebra check.
RelPCABialgebra bialgebra_from_ybe(const RelPCA& s, const Tensor2& r);

// Everything check_rel_pca_bialgebra verifies beyond the algebra itself;
// full bialgebra check = check_rel_pca(s) + these.
Conditions rel_pca_bialgebra_axioms(const RelPCA& s, const Coproduct& Delta,
                                    const Coproduct& theta);

// The fifteen displayed r-conditions of the coboundary theorem, evaluated
// literally, plus "aggregate" and "definitional" verdicts. Raises
// std::logic_error when the two engines disagree on a valid input algebra.
Conditions cob_condition_suite(const RelPCA& s, const Tensor2& r);

// A(r) = 0 together with both P/Q admissibility conditions on r.
Conditions check_q_admissible_aybe(const AdmCommDiff& a, const Tensor2& r);
// Exact identity expressing T(r) through A(r) and the admissibility defects,
// valid for every r over an admissible commutative differential algebra.
Conditions t_tensor_expansion_check(const AdmCommDiff& a, const Tensor2& r);

// r as a linear map A* -> A in dual coordinates.
Mat tensor_to_map(const Tensor2& r);
// Operator form of the RPCA-YBE: of1-of3 against the dual adjoint
// representation; agreement with check_rpca_ybe is reported for
// antisymmetric r.
Conditions o_operator_form_check(const RelPCA& s, const Tensor2& r);

// Lifts an O-operator to the semidirect product through the dual
// representation and embeds T - tau(T) as an r-matrix there.
std::pair<RelPCA, Tensor2> lift_o_operator(const OOperator& o);

// Exhaustive antisymmetric search with the strictly-upper-triangle entries
// drawn from coeffs; solutions in lexicographic candidate order.
std::vector<Tensor2> enumerate_ybe_solutions(const RelPCA& s, const std::vector<Rat>& coeffs);

}  // namespace relpca
