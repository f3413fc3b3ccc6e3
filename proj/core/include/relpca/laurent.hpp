#pragma once

#include <map>

#include "relpca/report.hpp"

namespace relpca {

// The Laurent-polynomial family: infinite-dimensional, so elements are
// sparse exponent -> coefficient maps and identity checks are sampled over
// a caller-supplied monomial window. Arithmetic itself is closed, results
// may leave the window.
namespace laurent {

using Elem = std::map<long long, Rat>;

Elem monomial(long long n, const Rat& c = 1);
Elem add(const Elem& a, const Elem& b);
Elem sub(const Elem& a, const Elem& b);
bool is_zero(const Elem& a);

// t^m . t^n = t^{m+n}
Elem mul(const Elem& a, const Elem& b);
// P(t^n) = n t^{n-1}
Elem deriv(const Elem& a);
// adjoint of P for the pairing B_a: t^n -> (a+1-n) t^{n-1}
Elem phat(long long a, const Elem& x);
// [x, y] = x.P(y) - P(x).y
Elem bracket(const Elem& x, const Elem& y);
// x o y = phat_a(x.y) - P(x).y
Elem circ(long long a, const Elem& x, const Elem& y);
// B_a(t^m, t^n) = delta_{m+n,a}
Rat form(long long a, const Elem& x, const Elem& y);

// Named evaluation on monomials: dot/bracket/circ take two exponents,
// P/phat take one (the second is ignored).
Elem eval_op(const std::string& kind, long long a, long long m, long long n);

struct Window {
  long long lo{-8}, hi{8};
  int size() const { return static_cast<int>(hi - lo + 1); }
};

// Identity names: comm, assoc, deriv-P, GLR, jacobi, antisym, inv-dot,
// 2-coc, phat-adjoint, circ-formula, apl1, apl2, rps1..rps4, unit, JA.
// Each is evaluated exactly on every monomial tuple from the window.
CheckReport sampled_check(const std::string& identity, long long a, const Window& w);

// The full battery for one parameter value.
Conditions sampled_suite(long long a, const Window& w);

}  // namespace laurent
}  // namespace relpca
