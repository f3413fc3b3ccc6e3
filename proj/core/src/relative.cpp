#include "relpca/relative.hpp"

namespace relpca {

Conditions check_derivation(const BinOp& op, const Mat& P, const std::string& label) {
  if (P.rows != op.dim || P.cols != op.dim) throw ShapeError("derivation: shape mismatch");
  int n = op.dim;
  Conditions out;
  out.add(label, scan2(label, n, n, [&](int i, int j) {
            Vec s = op.apply(P.col(i), unit_vec(n, j));
            s = add(s, op.apply(unit_vec(n, i), P.col(j)));
            s = sub(s, P.apply(op.basis_product(i, j)));
            return s;
          }));
  return out;
}

Conditions check_rel_poisson(const RelPoisson& s) {
  int n = s.dot.dim;
  if (s.bracket.dim != n || s.P.rows != n || s.P.cols != n)
    throw ShapeError("rel_poisson: shape mismatch");
  auto e = [&](int i) { return unit_vec(n, i); };
  Conditions out;
  out.add_all(check_comm_assoc(s.dot));
  out.add_all(check_lie(s.bracket));
  out.add_all(check_derivation(s.dot, s.P, "deriv-dot"));
  out.add_all(check_derivation(s.bracket, s.P, "deriv-bracket"));
  out.add("GLR", scan3("GLR", n, n, n, [&](int z, int x, int y) {
            // [z, x.y] = [z,x].y + x.[z,y] + x.y.P(z)
            Vec t = s.bracket.apply(e(z), s.dot.basis_product(x, y));
            t = sub(t, s.dot.apply(s.bracket.basis_product(z, x), e(y)));
            t = sub(t, s.dot.apply(e(x), s.bracket.basis_product(z, y)));
            t = sub(t, s.dot.apply(s.dot.basis_product(x, y), s.P.col(z)));
            return t;
          }));
  return out;
}

namespace {

// rps1 with arbitrary operations: x*Q(y) - P(x)*y - Q(x*y).
CheckReport rps1_like(const std::string& label, const BinOp& op, const Mat& P, const Mat& Q) {
  int n = op.dim;
  return scan2(label, n, n, [&](int i, int j) {
    Vec s = op.apply(unit_vec(n, i), Q.col(j));
    s = sub(s, op.apply(P.col(i), unit_vec(n, j)));
    s = sub(s, Q.apply(op.basis_product(i, j)));
    return s;
  });
}

}  // namespace

Conditions check_adm_comm_diff(const AdmCommDiff& a) {
  int n = a.dot.dim;
  if (a.P.rows != n || a.P.cols != n || a.Q.rows != n || a.Q.cols != n)
    throw ShapeError("adm_comm_diff: shape mismatch");
  Conditions out;
  out.add_all(check_comm_assoc(a.dot));
  out.add_all(check_derivation(a.dot, a.P, "deriv-dot"));
  out.add("rps1", rps1_like("rps1", a.dot, a.P, a.Q));
  return out;
}

Conditions check_rel_pca(const RelPCA& s) {
  int n = s.dot.dim;
  if (s.circ.dim != n || s.P.rows != n || s.P.cols != n || s.Q.rows != n || s.Q.cols != n)
    throw ShapeError("rel_pca: shape mismatch");
  auto e = [&](int i) { return unit_vec(n, i); };
  BinOp br = commutator(s.circ);
  Conditions out;
  out.add_all(check_anti_pre_lie(s.circ));
  out.add_all(check_rel_poisson({s.dot, br, s.P}));
  out.add("rps1", rps1_like("rps1", s.dot, s.P, s.Q));
  out.add("rps2", rps1_like("rps2", s.circ, s.P, s.Q));
  out.add("rps3", scan3("rps3", n, n, n, [&](int x, int y, int z) {
            // x.(y o z) - y o (x.z) + [x,y].z - x.P(y).z
            Vec t = s.dot.apply(e(x), s.circ.basis_product(y, z));
            t = sub(t, s.circ.apply(e(y), s.dot.basis_product(x, z)));
            t = add(t, s.dot.apply(br.basis_product(x, y), e(z)));
            t = sub(t, s.dot.apply(s.dot.apply(e(x), s.P.col(y)), e(z)));
            return t;
          }));
  out.add("rps4", scan3("rps4", n, n, n, [&](int x, int y, int z) {
            // (x.y) o z - y o (x.z) - x o (y.z) + Q(x.y.z)
            Vec t = s.circ.apply(s.dot.basis_product(x, y), e(z));
            t = sub(t, s.circ.apply(e(y), s.dot.basis_product(x, z)));
            t = sub(t, s.circ.apply(e(x), s.dot.basis_product(y, z)));
            t = add(t, s.Q.apply(s.dot.apply(s.dot.basis_product(x, y), e(z))));
            return t;
          }));
  return out;
}

BinOp witt_bracket(const BinOp& dot, const Mat& P) {
  int n = dot.dim;
  BinOp br(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec v = sub(dot.apply(unit_vec(n, i), P.col(j)), dot.apply(P.col(i), unit_vec(n, j)));
      for (int k = 0; k < n; ++k) br.at(i, j, k) = v[static_cast<size_t>(k)];
    }
  return br;
}

RelPoisson witt_rel_poisson(const BinOp& dot, const Mat& P) {
  Conditions pre;
  pre.add_all(check_comm_assoc(dot));
  pre.add_all(check_derivation(dot, P, "deriv-dot"));
  require(pre, "witt_rel_poisson: input is not a commutative differential algebra");
  return {dot, witt_bracket(dot, P), P};
}

RelPCA circ_from_admissible(const AdmCommDiff& a) {
  Conditions pre = check_adm_comm_diff(a);
  require(pre, "circ_from_admissible: input is not admissible");
  int n = a.dot.dim;
  BinOp circ(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec v = sub(a.Q.apply(a.dot.basis_product(i, j)),
                  a.dot.apply(a.P.col(i), unit_vec(n, j)));
      for (int k = 0; k < n; ++k) circ.at(i, j, k) = v[static_cast<size_t>(k)];
    }
  return {a.dot, circ, a.P, a.Q};
}

Conditions check_rel_pre_poisson(const BinOp& star, const BinOp& diamond, const Mat& P) {
  if (star.dim != diamond.dim) throw ShapeError("rel_pre_poisson: dims disagree");
  int n = star.dim;
  auto e = [&](int i) { return unit_vec(n, i); };
  BinOp dot = anticommutator(star);
  Conditions out;
  out.add_all(check_zinbiel(star));
  out.add_all(check_pre_lie(diamond));
  out.add_all(check_derivation(star, P, "GPPA1"));
  out.add_all(check_derivation(diamond, P, "GPPA2"));
  out.add("GPPA4", scan3("GPPA4", n, n, n, [&](int x, int y, int z) {
            // y<>(x*z) - x*(y<>z) + (x<>y - y<>x)*z - (x*P(y) + P(y)*x)*z
            Vec t = diamond.apply(e(y), star.basis_product(x, z));
            t = sub(t, star.apply(e(x), diamond.basis_product(y, z)));
            Vec w = sub(diamond.basis_product(x, y), diamond.basis_product(y, x));
            t = add(t, star.apply(w, e(z)));
            t = sub(t, star.apply(dot.apply(e(x), P.col(y)), e(z)));
            return t;
          }));
  out.add("GPPA3", scan3("GPPA3", n, n, n, [&](int x, int y, int z) {
            // (x*y + y*x)<>z - x*(y<>z) - y*(x<>z) + (x*y + y*x)*P(z)
            Vec xy = dot.basis_product(x, y);
            Vec t = diamond.apply(xy, e(z));
            t = sub(t, star.apply(e(x), diamond.basis_product(y, z)));
            t = sub(t, star.apply(e(y), diamond.basis_product(x, z)));
            t = add(t, star.apply(xy, P.col(z)));
            return t;
          }));
  return out;
}

Conditions check_adm_diff_zinbiel(const BinOp& star, const Mat& P, const Mat& Q) {
  int n = star.dim;
  if (P.rows != n || P.cols != n || Q.rows != n || Q.cols != n)
    throw ShapeError("adm_diff_zinbiel: shape mismatch");
  Conditions out;
  out.add_all(check_zinbiel(star));
  out.add_all(check_derivation(star, P, "pre-sys3"));
  out.add("pre-sys5", scan2("pre-sys5", n, n, [&](int x, int y) {
            // Q(x)*y - x*P(y) - Q(x*y)
            Vec t = star.apply(Q.col(x), unit_vec(n, y));
            t = sub(t, star.apply(unit_vec(n, x), P.col(y)));
            t = sub(t, Q.apply(star.basis_product(x, y)));
            return t;
          }));
  out.add("pre-sys6", rps1_like("pre-sys6", star, P, Q));
  return out;
}

Conditions check_rel_pre_pca(const RelPrePCA& s) {
  int n = s.star.dim;
  if (s.succ.dim != n || s.prec.dim != n) throw ShapeError("rel_pre_pca: dims disagree");
  auto e = [&](int i) { return unit_vec(n, i); };
  BinOp dot = anticommutator(s.star);
  BinOp circ = sub_adjacent_apl(s.succ, s.prec);
  BinOp diamond = sub_adjacent_pre_lie(s.succ, s.prec);
  BinOp br = commutator(circ);
  Conditions out;
  out.add_all(check_pre_apl(s.succ, s.prec));
  out.add_all(check_rel_pre_poisson(s.star, diamond, s.P));
  out.add_all(check_adm_diff_zinbiel(s.star, s.P, s.Q));
  out.add("pre-sys7", scan2("pre-sys7", n, n, [&](int x, int y) {
            // y<Q(x) - P(y)<x - Q(y<x)
            Vec t = s.prec.apply(e(y), s.Q.col(x));
            t = sub(t, s.prec.apply(s.P.col(y), e(x)));
            t = sub(t, s.Q.apply(s.prec.basis_product(y, x)));
            return t;
          }));
  out.add("pre-sys8", rps1_like("pre-sys8", s.succ, s.P, s.Q));
  out.add("pre-sys9", scan3("pre-sys9", n, n, n, [&](int x, int y, int z) {
            // (y o x)*z - y>(x*z) - x*(y<>z) - (x.P(y))*z
            Vec t = s.star.apply(circ.basis_product(y, x), e(z));
            t = sub(t, s.succ.apply(e(y), s.star.basis_product(x, z)));
            t = sub(t, s.star.apply(e(x), diamond.basis_product(y, z)));
            t = sub(t, s.star.apply(dot.apply(e(x), s.P.col(y)), e(z)));
            return t;
          }));
  out.add("pre-sys10", scan3("pre-sys10", n, n, n, [&](int x, int y, int z) {
            // x*(z<y) - z<(x.y) + y*(x<>z) - (x.y)*P(z)
            Vec t = s.star.apply(e(x), s.prec.basis_product(z, y));
            t = sub(t, s.prec.apply(e(z), dot.basis_product(x, y)));
            t = add(t, s.star.apply(e(y), diamond.basis_product(x, z)));
            t = sub(t, s.star.apply(dot.basis_product(x, y), s.P.col(z)));
            return t;
          }));
  out.add("pre-sys11", scan3("pre-sys11", n, n, n, [&](int x, int y, int z) {
            // x*(y>z) - y>(x*z) + [x,y]*z - (x.P(y))*z
            Vec t = s.star.apply(e(x), s.succ.basis_product(y, z));
            t = sub(t, s.succ.apply(e(y), s.star.basis_product(x, z)));
            t = add(t, s.star.apply(br.basis_product(x, y), e(z)));
            t = sub(t, s.star.apply(dot.apply(e(x), s.P.col(y)), e(z)));
            return t;
          }));
  out.add("pre-sys12", scan3("pre-sys12", n, n, n, [&](int x, int y, int z) {
            // (y*z)<x - y>(x*z) - z<(x.y) + Q((x.y)*z)
            Vec t = s.prec.apply(s.star.basis_product(y, z), e(x));
            t = sub(t, s.succ.apply(e(y), s.star.basis_product(x, z)));
            t = sub(t, s.prec.apply(e(z), dot.basis_product(x, y)));
            t = add(t, s.Q.apply(s.star.apply(dot.basis_product(x, y), e(z))));
            return t;
          }));
  out.add("pre-sys13", scan3("pre-sys13", n, n, n, [&](int x, int y, int z) {
            // (x.y)>z - y>(x*z) - x>(y*z) + Q((x.y)*z)
            Vec t = s.succ.apply(dot.basis_product(x, y), e(z));
            t = sub(t, s.succ.apply(e(y), s.star.basis_product(x, z)));
            t = sub(t, s.succ.apply(e(x), s.star.basis_product(y, z)));
            t = add(t, s.Q.apply(s.star.apply(dot.basis_product(x, y), e(z))));
            return t;
          }));
  return out;
}

RelPrePCA pre_pca_from_adm_zinbiel(const BinOp& star, const Mat& P, const Mat& Q) {
  Conditions pre = check_adm_diff_zinbiel(star, P, Q);
  require(pre, "pre_pca_from_adm_zinbiel: input is not an admissible differential Zinbiel algebra");
  int n = star.dim;
  BinOp succ(n), prec(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec vs = sub(Q.apply(star.basis_product(i, j)), star.apply(P.col(i), unit_vec(n, j)));
      Vec vp = sub(Q.apply(star.basis_product(j, i)), star.apply(unit_vec(n, j), P.col(i)));
      for (int k = 0; k < n; ++k) {
        succ.at(i, j, k) = vs[static_cast<size_t>(k)];
        prec.at(i, j, k) = vp[static_cast<size_t>(k)];
      }
    }
  return {star, succ, prec, P, Q};
}

RelPCA sub_adjacent_rel_pca(const RelPrePCA& s) {
  Conditions pre = check_rel_pre_pca(s);
  require(pre, "sub_adjacent_rel_pca: input is not a relative pre-PCA algebra");
  return {descendent_comm(s.star), sub_adjacent_apl(s.succ, s.prec), s.P, s.Q};
}

Conditions check_jacobi(const BinOp& dot, const BinOp& bracket) {
  if (dot.dim != bracket.dim) throw ShapeError("jacobi: dims disagree");
  int n = dot.dim;
  Conditions out;
  out.add_all(check_comm_assoc(dot));
  out.add_all(check_lie(bracket));
  std::optional<Vec> unit = find_unit(dot);
  out.add_bool("unit", unit.has_value());
  if (!unit) return out;
  auto e = [&](int i) { return unit_vec(n, i); };
  out.add("JA", scan3("JA", n, n, n, [&](int z, int x, int y) {
            // [z,x.y] = [z,x].y + x.[z,y] + x.y.[1,z]
            Vec t = bracket.apply(e(z), dot.basis_product(x, y));
            t = sub(t, dot.apply(bracket.basis_product(z, x), e(y)));
            t = sub(t, dot.apply(e(x), bracket.basis_product(z, y)));
            t = sub(t, dot.apply(dot.basis_product(x, y), bracket.apply(*unit, e(z))));
            return t;
          }));
  // ad(1) must turn the pair into a relative Poisson algebra.
  Mat P(n, n);
  for (int j = 0; j < n; ++j) {
    Vec v = bracket.apply(*unit, e(j));
    for (int i = 0; i < n; ++i) P(i, j) = v[static_cast<size_t>(i)];
  }
  out.add_bool("rel-poisson-ad-unit", check_rel_poisson({dot, bracket, P}).all());
  return out;
}

}  // namespace relpca
