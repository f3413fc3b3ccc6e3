#include "relpca/binop.hpp"

#include <algorithm>

namespace relpca {

Vec BinOp::apply(const Vec& x, const Vec& y) const {
  if (static_cast<int>(x.size()) != dim || static_cast<int>(y.size()) != dim)
    throw ShapeError("binop apply: size mismatch");
  Vec r(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[static_cast<size_t>(j)] == 0) continue;
      Rat f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
      for (int k = 0; k < dim; ++k) r[static_cast<size_t>(k)] += f * at(i, j, k);
    }
  }
  return r;
}

Mat BinOp::lmat(int i) const {
  Mat m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m(k, j) = at(i, j, k);
  return m;
}

Mat BinOp::rmat(int i) const {
  Mat m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int k = 0; k < dim; ++k) m(k, j) = at(j, i, k);
  return m;
}

Mat BinOp::lof(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim) throw ShapeError("lof: size mismatch");
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) m(k, j) += x[static_cast<size_t>(i)] * at(i, j, k);
  }
  return m;
}

Mat BinOp::rof(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim) throw ShapeError("rof: size mismatch");
  Mat m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (x[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) m(k, j) += x[static_cast<size_t>(i)] * at(j, i, k);
  }
  return m;
}

BinOp BinOp::opposite() const {
  BinOp o(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) o.at(i, j, k) = at(j, i, k);
  return o;
}

BinOp BinOp::operator+(const BinOp& o) const {
  if (dim != o.dim) throw ShapeError("binop add: dim mismatch");
  BinOp r(dim);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

BinOp BinOp::operator-(const BinOp& o) const {
  if (dim != o.dim) throw ShapeError("binop sub: dim mismatch");
  BinOp r(dim);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

BinOp BinOp::operator-() const {
  BinOp r(dim);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] = -c[i];
  return r;
}

bool BinOp::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& x) { return x == 0; });
}

BinOp commutator(const BinOp& op) { return op - op.opposite(); }

BinOp anticommutator(const BinOp& op) { return op + op.opposite(); }

Tensor3 pair_product(const BinOp& op, const Tensor2& x, const Tensor2& y, int x_side, int y_side,
                     bool y_first, int mul_slot, int x_slot, int y_slot) {
  int n = op.dim;
  if (x.dl != n || x.dr != n || y.dl != n || y.dr != n)
    throw ShapeError("pair_product: tensor dims disagree with op");
  Tensor3 r(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Rat& cx = x(i, k);
      if (cx == 0) continue;
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          const Rat& cy = y(j, l);
          if (cy == 0) continue;
          Rat f = cx * cy;
          int u = x_side == 0 ? i : k;
          int v = y_side == 0 ? j : l;
          int spare_x = x_side == 0 ? k : i;
          int spare_y = y_side == 0 ? l : j;
          int lhs = y_first ? v : u, rhs = y_first ? u : v;
          int out[3];
          out[x_slot] = spare_x;
          out[y_slot] = spare_y;
          for (int m = 0; m < n; ++m) {
            const Rat& p = op.at(lhs, rhs, m);
            if (p == 0) continue;
            out[mul_slot] = m;
            r(out[0], out[1], out[2]) += f * p;
          }
        }
    }
  return r;
}

Tensor3 prod_12_13(const BinOp& op, const Tensor2& r, const Tensor2& s) {
  return pair_product(op, r, s, 0, 0, false, 0, 1, 2);
}
Tensor3 prod_23_12(const BinOp& op, const Tensor2& r, const Tensor2& s) {
  return pair_product(op, r, s, 1, 0, true, 1, 0, 2);
}
Tensor3 prod_13_23(const BinOp& op, const Tensor2& r, const Tensor2& s) {
  return pair_product(op, r, s, 1, 1, false, 2, 0, 1);
}
Tensor3 prod_12_23(const BinOp& op, const Tensor2& r, const Tensor2& s) {
  return pair_product(op, r, s, 1, 0, false, 1, 0, 2);
}
Tensor3 prod_21_31(const BinOp& op, const Tensor2& r, const Tensor2& s) {
  return pair_product(op, r, s, 1, 1, false, 0, 1, 2);
}
Tensor3 prod_21_13(const BinOp& op, const Tensor2& r, const Tensor2& s) {
  return pair_product(op, r, s, 1, 0, false, 0, 1, 2);
}
Tensor3 prod_23_21(const BinOp& op, const Tensor2& r, const Tensor2& s) {
  return pair_product(op, r, s, 0, 0, false, 1, 2, 0);
}
Tensor3 prod_23_12r(const BinOp& op, const Tensor2& r, const Tensor2& s) {
  return pair_product(op, r, s, 0, 1, false, 1, 2, 0);
}

}  // namespace relpca
