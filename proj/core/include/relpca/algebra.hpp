#pragma once

#include "relpca/binop.hpp"
#include "relpca/report.hpp"

namespace relpca {

// Decision procedures for the plain (operator-free) algebra classes.
// Every checker scans all basis tuples; multilinearity makes that a
// complete proof for the given structure constants.

Conditions check_comm_assoc(const BinOp& op);
Conditions check_lie(const BinOp& op);
Conditions check_anti_pre_lie(const BinOp& op);
Conditions check_pre_lie(const BinOp& op);
Conditions check_zinbiel(const BinOp& op);
Conditions check_pre_apl(const BinOp& succ, const BinOp& prec);
// Commutative associative + Lie + Leibniz rule.
Conditions check_poisson(const BinOp& dot, const BinOp& bracket);
Conditions check_pca(const BinOp& dot, const BinOp& circ);
Conditions check_jacobi(const BinOp& dot, const BinOp& bracket);

// Solves 1*e_i = e_i; nullopt when the algebra is non-unital.
std::optional<Vec> find_unit(const BinOp& dot);

// x*y + y*x of a Zinbiel operation.
BinOp descendent_comm(const BinOp& star);
// x>y + x<y and x>y - y<x of a pre-APL pair.
BinOp sub_adjacent_apl(const BinOp& succ, const BinOp& prec);
BinOp sub_adjacent_pre_lie(const BinOp& succ, const BinOp& prec);

}  // namespace relpca
