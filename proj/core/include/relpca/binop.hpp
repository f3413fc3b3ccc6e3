#pragma once

#include "relpca/linalg.hpp"

namespace relpca {

// Binary operation on an n-dimensional space given by structure constants:
// e_i * e_j = sum_k c[i][j][k] e_k.
struct BinOp {
  int dim{0};
  std::vector<Rat> c;

  BinOp() = default;
  explicit BinOp(int n) : dim(n), c(static_cast<size_t>(n) * n * n) {}

  Rat& at(int i, int j, int k) { return c[(static_cast<size_t>(i) * dim + j) * dim + k]; }
  const Rat& at(int i, int j, int k) const {
    return c[(static_cast<size_t>(i) * dim + j) * dim + k];
  }

  Vec basis_product(int i, int j) const {
    Vec v(static_cast<size_t>(dim));
    for (int k = 0; k < dim; ++k) v[static_cast<size_t>(k)] = at(i, j, k);
    return v;
  }

  Vec apply(const Vec& x, const Vec& y) const;

  // Matrix of left multiplication L(e_i): column j = e_i * e_j.
  Mat lmat(int i) const;
  // Matrix of right multiplication R(e_i): column j = e_j * e_i.
  Mat rmat(int i) const;
  Mat lof(const Vec& x) const;
  Mat rof(const Vec& x) const;

  BinOp opposite() const;
  BinOp operator+(const BinOp& o) const;
  BinOp operator-(const BinOp& o) const;
  BinOp operator-() const;
  bool operator==(const BinOp& o) const { return dim == o.dim && c == o.c; }
  bool is_zero() const;
};

// x*y - y*x and x*y + y*x.
BinOp commutator(const BinOp& op);
BinOp anticommutator(const BinOp& op);

// Contraction kernel behind the Yang-Baxter tensors: multiplies one factor
// of x with one factor of y via op and scatters product and spare factors
// into the slots of an order-3 tensor. x_side/y_side pick the factor that
// enters the product (0 = left, 1 = right); y_first swaps the operand
// order; the remaining two factors land in x_slot and y_slot.
Tensor3 pair_product(const BinOp& op, const Tensor2& x, const Tensor2& y, int x_side, int y_side,
                     bool y_first, int mul_slot, int x_slot, int y_slot);

// The named contraction patterns of the Yang-Baxter tensors, for
// r = sum_i a_i ⊗ b_i,
// s = sum_j c_j ⊗ d_j:
//   prod_12_13 = sum a_i*c_j ⊗ b_i ⊗ d_j     prod_23_12 = sum a_i ⊗ c_j*b_i ⊗ d_j
//   prod_13_23 = sum a_i ⊗ c_j ⊗ b_i*d_j     prod_12_23 = sum a_i ⊗ b_i*c_j ⊗ d_j
//   prod_21_31 = sum b_i*d_j ⊗ a_i ⊗ c_j     prod_21_13 = sum b_i*c_j ⊗ a_i ⊗ d_j
//   prod_23_21 = sum d_j ⊗ a_i*c_j ⊗ b_i     prod_23_12r = sum c_j ⊗ a_i*d_j ⊗ b_i
Tensor3 prod_12_13(const BinOp& op, const Tensor2& r, const Tensor2& s);
Tensor3 prod_23_12(const BinOp& op, const Tensor2& r, const Tensor2& s);
Tensor3 prod_13_23(const BinOp& op, const Tensor2& r, const Tensor2& s);
Tensor3 prod_12_23(const BinOp& op, const Tensor2& r, const Tensor2& s);
Tensor3 prod_21_31(const BinOp& op, const Tensor2& r, const Tensor2& s);
Tensor3 prod_21_13(const BinOp& op, const Tensor2& r, const Tensor2& s);
Tensor3 prod_23_21(const BinOp& op, const Tensor2& r, const Tensor2& s);
Tensor3 prod_23_12r(const BinOp& op, const Tensor2& r, const Tensor2& s);

}  // namespace relpca
