#include "relpca/algebra.hpp"

namespace relpca {

namespace {

Vec op3(const BinOp& a, const BinOp& b, int i, int j, int k, bool left_nested) {
  // left_nested: (e_i a e_j) b e_k, otherwise e_i a (e_j b e_k).
  if (left_nested) return b.apply(a.basis_product(i, j), unit_vec(a.dim, k));
  return a.apply(unit_vec(a.dim, i), b.basis_product(j, k));
}

}  // namespace

Conditions check_comm_assoc(const BinOp& op) {
  int n = op.dim;
  Conditions out;
  out.add("comm", scan2("comm", n, n, [&](int i, int j) {
            return sub(op.basis_product(i, j), op.basis_product(j, i));
          }));
  out.add("assoc", scan3("assoc", n, n, n, [&](int i, int j, int k) {
            return sub(op3(op, op, i, j, k, true), op3(op, op, i, j, k, false));
          }));
  return out;
}

Conditions check_lie(const BinOp& op) {
  int n = op.dim;
  Conditions out;
  out.add("antisym", scan2("antisym", n, n, [&](int i, int j) {
            return add(op.basis_product(i, j), op.basis_product(j, i));
          }));
  out.add("jacobi", scan3("jacobi", n, n, n, [&](int i, int j, int k) {
            Vec s = op.apply(op.basis_product(i, j), unit_vec(n, k));
            s = add(s, op.apply(op.basis_product(j, k), unit_vec(n, i)));
            s = add(s, op.apply(op.basis_product(k, i), unit_vec(n, j)));
            return s;
          }));
  return out;
}

Conditions check_anti_pre_lie(const BinOp& op) {
  int n = op.dim;
  BinOp br = commutator(op);
  Conditions out;
  out.add("apl1", scan3("apl1", n, n, n, [&](int x, int y, int z) {
            // x o (y o z) - y o (x o z) = [y,x] o z
            Vec s = op3(op, op, x, y, z, false);
            s = sub(s, op3(op, op, y, x, z, false));
            s = sub(s, op.apply(br.basis_product(y, x), unit_vec(n, z)));
            return s;
          }));
  out.add("apl2", scan3("apl2", n, n, n, [&](int x, int y, int z) {
            // [x,y] o z + [y,z] o x + [z,x] o y = 0
            Vec s = op.apply(br.basis_product(x, y), unit_vec(n, z));
            s = add(s, op.apply(br.basis_product(y, z), unit_vec(n, x)));
            s = add(s, op.apply(br.basis_product(z, x), unit_vec(n, y)));
            return s;
          }));
  return out;
}

Conditions check_pre_lie(const BinOp& op) {
  int n = op.dim;
  Conditions out;
  out.add("pre-lie", scan3("pre-lie", n, n, n, [&](int x, int y, int z) {
            // (x<>y)<>z - x<>(y<>z) = (y<>x)<>z - y<>(x<>z)
            Vec s = op3(op, op, x, y, z, true);
            s = sub(s, op3(op, op, x, y, z, false));
            s = sub(s, op3(op, op, y, x, z, true));
            s = add(s, op3(op, op, y, x, z, false));
            return s;
          }));
  return out;
}

Conditions check_zinbiel(const BinOp& op) {
  int n = op.dim;
  Conditions out;
  out.add("zinbiel", scan3("zinbiel", n, n, n, [&](int x, int y, int z) {
            // x*(y*z) = (y*x)*z + (x*y)*z
            Vec s = op3(op, op, x, y, z, false);
            s = sub(s, op3(op, op, y, x, z, true));
            s = sub(s, op3(op, op, x, y, z, true));
            return s;
          }));
  return out;
}

Conditions check_pre_apl(const BinOp& succ, const BinOp& prec) {
  if (succ.dim != prec.dim) throw ShapeError("pre-apl: dims disagree");
  int n = succ.dim;
  auto e = [&](int i) { return unit_vec(n, i); };
  Conditions out;
  out.add("quasi1", scan3("quasi1", n, n, n, [&](int x, int y, int z) {
            Vec s = op3(succ, succ, x, y, z, false);
            s = sub(s, op3(succ, succ, y, x, z, false));
            Vec w = add(succ.basis_product(y, x), prec.basis_product(y, x));
            w = sub(w, add(succ.basis_product(x, y), prec.basis_product(x, y)));
            s = sub(s, succ.apply(w, e(z)));
            return s;
          }));
  out.add("quasi2", scan3("quasi2", n, n, n, [&](int x, int y, int z) {
            Vec w = add(succ.basis_product(x, y), prec.basis_product(x, y));
            Vec s = prec.apply(e(z), w);
            s = sub(s, succ.apply(e(x), prec.basis_product(z, y)));
            s = sub(s, prec.apply(succ.basis_product(x, z), e(y)));
            s = add(s, prec.apply(prec.basis_product(z, x), e(y)));
            return s;
          }));
  out.add("quasi3", scan3("quasi3", n, n, n, [&](int x, int y, int z) {
            Vec s = op3(succ, succ, x, y, z, false);
            s = sub(s, op3(succ, succ, y, x, z, false));
            s = sub(s, prec.apply(succ.basis_product(y, z), e(x)));
            s = add(s, prec.apply(succ.basis_product(x, z), e(y)));
            s = add(s, prec.apply(prec.basis_product(z, y), e(x)));
            s = sub(s, prec.apply(prec.basis_product(z, x), e(y)));
            return s;
          }));
  return out;
}

Conditions check_poisson(const BinOp& dot, const BinOp& bracket) {
  if (dot.dim != bracket.dim) throw ShapeError("poisson: dims disagree");
  int n = dot.dim;
  Conditions out;
  out.add_all(check_comm_assoc(dot));
  out.add_all(check_lie(bracket));
  out.add("leibniz", scan3("leibniz", n, n, n, [&](int z, int x, int y) {
            // [z, x.y] = [z,x].y + x.[z,y]
            Vec s = bracket.apply(unit_vec(n, z), dot.basis_product(x, y));
            s = sub(s, dot.apply(bracket.basis_product(z, x), unit_vec(n, y)));
            s = sub(s, dot.apply(unit_vec(n, x), bracket.basis_product(z, y)));
            return s;
          }));
  return out;
}

Conditions check_pca(const BinOp& dot, const BinOp& circ) {
  if (dot.dim != circ.dim) throw ShapeError("pca: dims disagree");
  int n = dot.dim;
  auto e = [&](int i) { return unit_vec(n, i); };
  Conditions out;
  out.add_all(check_comm_assoc(dot));
  out.add_all(check_anti_pre_lie(circ));
  BinOp br = commutator(circ);
  out.add_all(check_poisson(dot, br));
  out.add("PCA1", scan3("PCA1", n, n, n, [&](int x, int y, int z) {
            // (x.y) o z = x.(y o z) + y.(x o z)
            Vec s = circ.apply(dot.basis_product(x, y), e(z));
            s = sub(s, dot.apply(e(x), circ.basis_product(y, z)));
            s = sub(s, dot.apply(e(y), circ.basis_product(x, z)));
            return s;
          }));
  out.add("PCA2", scan3("PCA2", n, n, n, [&](int x, int y, int z) {
            // (x o y - y o x).z = y.(x o z) - x o (y.z)
            Vec s = dot.apply(br.basis_product(x, y), e(z));
            s = sub(s, dot.apply(e(y), circ.basis_product(x, z)));
            s = add(s, circ.apply(e(x), dot.basis_product(y, z)));
            return s;
          }));
  return out;
}

std::optional<Vec> find_unit(const BinOp& dot) {
  int n = dot.dim;
  Mat A(2 * n * n, n);
  Vec b(static_cast<size_t>(2 * n * n));
  int row = 0;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) A(row, i) = dot.at(i, j, k);
      b[static_cast<size_t>(row)] = j == k ? 1 : 0;
      ++row;
      for (int i = 0; i < n; ++i) A(row, i) = dot.at(j, i, k);
      b[static_cast<size_t>(row)] = j == k ? 1 : 0;
      ++row;
    }
  return solve(A, b);
}

BinOp descendent_comm(const BinOp& star) { return anticommutator(star); }

BinOp sub_adjacent_apl(const BinOp& succ, const BinOp& prec) {
  if (succ.dim != prec.dim) throw ShapeError("sub_adjacent_apl: dims disagree");
  return succ + prec;
}

BinOp sub_adjacent_pre_lie(const BinOp& succ, const BinOp& prec) {
  if (succ.dim != prec.dim) throw ShapeError("sub_adjacent_pre_lie: dims disagree");
  return succ - prec.opposite();
}

}  // namespace relpca
