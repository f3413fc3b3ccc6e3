#pragma once

// Worked-example fixtures, entered coefficient by coefficient so the tests
// compare construction output against independently typed tables.

#include <random>

#include "relpca/forms.hpp"
#include "relpca/ybe.hpp"

namespace fx {

using namespace relpca;

inline BinOp op3(std::initializer_list<std::tuple<int, int, int, Rat>> entries) {
  BinOp op(3);
  for (const auto& [i, j, k, c] : entries) op.at(i, j, k) = c;
  return op;
}

// e1.e1 = 2e3, e1.e2 = e2.e1 = e3
inline BinOp a3_dot() { return op3({{0, 0, 2, 2}, {0, 1, 2, 1}, {1, 0, 2, 1}}); }

// P(e1) = e1 + e2, P(e2) = 2e2, P(e3) = 3e3
inline Mat a3_P() {
  Mat p(3, 3);
  p(0, 0) = 1;
  p(1, 0) = 1;
  p(1, 1) = 2;
  p(2, 2) = 3;
  return p;
}

inline Mat a3_Q() { return -a3_P(); }

// e1 o e1 = -9e3, e1 o e2 = -4e3, e2 o e1 = -5e3
inline BinOp a3_circ() { return op3({{0, 0, 2, -9}, {0, 1, 2, -4}, {1, 0, 2, -5}}); }

inline AdmCommDiff a3_acd() { return {a3_dot(), a3_P(), a3_Q()}; }
inline RelPCA a3_rel_pca() { return {a3_dot(), a3_circ(), a3_P(), a3_Q()}; }

// [e1,e2] = e3
inline BinOp a3_bracket() { return op3({{0, 1, 2, 1}, {1, 0, 2, -1}}); }
inline RelPoisson a3_rel_poisson() { return {a3_dot(), a3_bracket(), a3_P()}; }

// e1*e1 = e1*e2 = e3
inline BinOp z3_star() { return op3({{0, 0, 2, 1}, {0, 1, 2, 1}}); }

// e1>e1 = e1>e2 = -4e3, e1<e1 = e2<e1 = -5e3
inline BinOp pp3_succ() { return op3({{0, 0, 2, -4}, {0, 1, 2, -4}}); }
inline BinOp pp3_prec() { return op3({{0, 0, 2, -5}, {1, 0, 2, -5}}); }
inline RelPrePCA pp3() { return {z3_star(), pp3_succ(), pp3_prec(), a3_P(), a3_Q()}; }

inline Mat block_ops(const Mat& a, const Mat& b) {
  Mat m(a.rows + b.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) m(a.rows + i, a.cols + j) = b(i, j);
  return m;
}

// The 6-dimensional relative Poisson double of the a3 fixture, with its
// dual-space products entered directly; basis (e1,e2,e3,f1,f2,f3).
inline RelPoisson d6() {
  BinOp dot(6);
  dot.at(0, 0, 2) = 2;
  dot.at(0, 1, 2) = 1;
  dot.at(1, 0, 2) = 1;
  dot.at(0, 5, 3) = 2;  // e1.f3 = 2f1 + f2
  dot.at(0, 5, 4) = 1;
  dot.at(5, 0, 3) = 2;
  dot.at(5, 0, 4) = 1;
  dot.at(1, 5, 3) = 1;  // e2.f3 = f1
  dot.at(5, 1, 3) = 1;
  BinOp br(6);
  br.at(0, 1, 2) = 1;  // [e1,e2] = e3
  br.at(1, 0, 2) = -1;
  br.at(0, 5, 3) = -9;  // [e1,f3] = -9f1 - 4f2
  br.at(0, 5, 4) = -4;
  br.at(5, 0, 3) = 9;
  br.at(5, 0, 4) = 4;
  br.at(1, 5, 3) = -5;  // [e2,f3] = -5f1
  br.at(5, 1, 3) = 5;
  Mat P6 = block_ops(a3_P(), -a3_P().transpose());
  return {dot, br, P6};
}

// The 6-dimensional relative PCA double built through the Zinbiel splitting.
inline RelPCA d6pre() {
  BinOp dot(6);
  dot.at(0, 0, 2) = 2;
  dot.at(0, 1, 2) = 1;
  dot.at(1, 0, 2) = 1;
  dot.at(0, 5, 3) = 1;  // e1.f3 = f1 + f2
  dot.at(0, 5, 4) = 1;
  dot.at(5, 0, 3) = 1;
  dot.at(5, 0, 4) = 1;
  BinOp circ(6);
  circ.at(0, 0, 2) = -9;
  circ.at(0, 1, 2) = -4;
  circ.at(1, 0, 2) = -5;
  circ.at(0, 5, 3) = 1;  // e1 o f3 = f1 + f2
  circ.at(0, 5, 4) = 1;
  circ.at(5, 0, 3) = 5;  // f3 o e1 = 5f1 + 5f2
  circ.at(5, 0, 4) = 5;
  Mat P6 = block_ops(a3_P(), -a3_P().transpose());
  Mat Q6 = block_ops(-a3_P(), a3_P().transpose());
  return {dot, circ, P6, Q6};
}

// r = sum_i (f_i ⊗ e_i - e_i ⊗ f_i)
inline Tensor2 r6() {
  Tensor2 r(6, 6);
  for (int i = 0; i < 3; ++i) {
    r(3 + i, i) = 1;
    r(i, 3 + i) = -1;
  }
  return r;
}

// The coproduct tables of the coboundary bialgebra on the six-dimensional
// double. ASI compatibility pins Delta(e1) to f1 ⊗ e3 + e3 ⊗ f1.
inline Coproduct b6_delta() {
  Coproduct c = Coproduct::zero(6);
  c.delta[0](3, 2) = 1;
  c.delta[0](2, 3) = 1;
  c.delta[1] = c.delta[0];
  c.delta[5](3, 3) = 2;
  c.delta[5](3, 4) = 1;
  c.delta[5](4, 3) = 1;
  return c;
}

inline Coproduct b6_theta() {
  Coproduct c = Coproduct::zero(6);
  c.delta[0](2, 3) = 5;
  c.delta[0](3, 2) = 1;
  c.delta[1] = c.delta[0];
  c.delta[5](3, 3) = -9;
  c.delta[5](3, 4) = -4;
  c.delta[5](4, 3) = -5;
  return c;
}

// Deterministic small rationals for property tests.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long long seed) : gen(seed) {}
  Rat rat(int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 3);
    return Rat(num(gen), den(gen));
  }
  Tensor2 tensor2(int n) {
    Tensor2 t(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(i, j) = rat();
    return t;
  }
  Vec vec(int n) {
    Vec v(static_cast<size_t>(n));
    for (auto& x : v) x = rat();
    return v;
  }
};

}  // namespace fx
