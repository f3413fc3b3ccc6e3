#include "relpca/coalg.hpp"

namespace relpca {

Tensor2 co_apply(const Coproduct& c, const Vec& x) {
  if (static_cast<int>(x.size()) != c.dim) throw ShapeError("co_apply: size mismatch");
  Tensor2 t(c.dim, c.dim);
  for (size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    t = t + x[k] * c.delta[k];
  }
  return t;
}

Tensor3 co_slot(const Coproduct& c, const Tensor2& t, int slot) {
  int n = c.dim;
  if (t.dl != n || t.dr != n) throw ShapeError("co_slot: shape mismatch");
  Tensor3 r(n, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& w = t(i, j);
      if (w == 0) continue;
      const Tensor2& d = c.delta[static_cast<size_t>(slot == 0 ? i : j)];
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          const Rat& v = d(a, b);
          if (v == 0) continue;
          if (slot == 0)
            r(a, b, j) += w * v;
          else
            r(i, a, b) += w * v;
        }
    }
  return r;
}

BinOp dualize(const Coproduct& c) {
  BinOp op(c.dim);
  for (int k = 0; k < c.dim; ++k)
    for (int a = 0; a < c.dim; ++a)
      for (int b = 0; b < c.dim; ++b) op.at(a, b, k) = c.delta[static_cast<size_t>(k)](a, b);
  return op;
}

Coproduct dualize(const BinOp& op) {
  Coproduct c = Coproduct::zero(op.dim);
  for (int k = 0; k < op.dim; ++k)
    for (int a = 0; a < op.dim; ++a)
      for (int b = 0; b < op.dim; ++b) c.delta[static_cast<size_t>(k)](a, b) = op.at(a, b, k);
  return c;
}

namespace {

Coproduct lie_codelta(const Coproduct& theta) {
  Coproduct d = Coproduct::zero(theta.dim);
  for (int k = 0; k < theta.dim; ++k)
    d.delta[static_cast<size_t>(k)] =
        theta.delta[static_cast<size_t>(k)] - tau(theta.delta[static_cast<size_t>(k)]);
  return d;
}

}  // namespace

Conditions check_cocomm_coassoc(const Coproduct& Delta) {
  int n = Delta.dim;
  Conditions out;
  out.add("cocomm", scan1("cocomm", n, [&](int k) {
            return flatten(tau(Delta.delta[static_cast<size_t>(k)]) -
                           Delta.delta[static_cast<size_t>(k)]);
          }));
  out.add("coassoc", scan1("coassoc", n, [&](int k) {
            const Tensor2& d = Delta.delta[static_cast<size_t>(k)];
            return flatten(co_slot(Delta, d, 1) - co_slot(Delta, d, 0));
          }));
  return out;
}

Conditions check_apl_coalgebra(const Coproduct& theta) {
  int n = theta.dim;
  Conditions out;
  out.add("apl-co1", scan1("apl-co1", n, [&](int k) {
            const Tensor2& t = theta.delta[static_cast<size_t>(k)];
            Tensor3 lhs_arg = co_slot(theta, t, 1);
            Tensor3 lhs = lhs_arg - tau01(lhs_arg);
            Tensor3 rhs_arg = co_slot(theta, t, 0);
            Tensor3 rhs = tau01(rhs_arg) - rhs_arg;
            return flatten(lhs - rhs);
          }));
  out.add("apl-co2", scan1("apl-co2", n, [&](int k) {
            const Tensor2& t = theta.delta[static_cast<size_t>(k)];
            Tensor3 arg = co_slot(theta, t, 0);
            Tensor3 u = tau01(arg) - arg;
            Tensor3 s = u + xi(u) + xi2(u);
            return flatten(s);
          }));
  return out;
}

Conditions check_rel_pca_coalgebra(const Coproduct& Delta, const Coproduct& theta, const Mat& Q,
                                   const Mat& P) {
  int n = Delta.dim;
  if (theta.dim != n || Q.rows != n || Q.cols != n || P.rows != n || P.cols != n)
    throw ShapeError("rel_pca_coalgebra: shape mismatch");
  Coproduct delta = lie_codelta(theta);
  Conditions out;
  out.add_all(check_cocomm_coassoc(Delta));
  out.add_all(check_apl_coalgebra(theta));
  auto D = [&](int k) { return Delta.delta[static_cast<size_t>(k)]; };
  auto Th = [&](int k) { return theta.delta[static_cast<size_t>(k)]; };
  auto dl = [&](int k) { return delta.delta[static_cast<size_t>(k)]; };
  out.add("cos1", scan1("cos1", n, [&](int k) {
            Tensor2 lhs = co_apply(Delta, Q.col(k));
            Tensor2 rhs = apply_slot(Q, D(k), 0) + apply_slot(Q, D(k), 1);
            return flatten(lhs - rhs);
          }));
  out.add("cos2", scan1("cos2", n, [&](int k) {
            Tensor2 lhs = co_apply(delta, Q.col(k));
            Tensor2 rhs = apply_slot(Q, dl(k), 0) + apply_slot(Q, dl(k), 1);
            return flatten(lhs - rhs);
          }));
  out.add("cos3", scan1("cos3", n, [&](int k) {
            Tensor3 t = co_slot(Delta, dl(k), 1);
            t = t - co_slot(delta, D(k), 0);
            t = t - tau01(co_slot(delta, D(k), 1));
            t = t - apply_slot(Q, co_slot(Delta, D(k), 0), 0);
            return flatten(t);
          }));
  out.add("cos4", scan1("cos4", n, [&](int k) {
            Tensor2 lhs = co_apply(Delta, P.col(k));
            Tensor2 rhs = apply_slot(P, D(k), 1) - apply_slot(Q, D(k), 0);
            return flatten(lhs - rhs);
          }));
  out.add("cos5", scan1("cos5", n, [&](int k) {
            Tensor2 lhs = co_apply(theta, P.col(k));
            Tensor2 rhs = apply_slot(P, Th(k), 1) - apply_slot(Q, Th(k), 0);
            return flatten(lhs - rhs);
          }));
  out.add("cos6", scan1("cos6", n, [&](int k) {
            Tensor3 t = co_slot(theta, D(k), 1);
            t = t - tau01(co_slot(Delta, Th(k), 1));
            t = t + co_slot(delta, D(k), 0);
            t = t - apply_slot(Q, co_slot(Delta, D(k), 0), 1);
            return flatten(t);
          }));
  out.add("cos7", scan1("cos7", n, [&](int k) {
            Tensor3 lhs = co_slot(Delta, Th(k), 0);
            Tensor3 rhs = tau01(co_slot(Delta, Th(k), 1)) + co_slot(Delta, Th(k), 1) -
                          co_slot(Delta, co_apply(Delta, P.col(k)), 0);
            return flatten(lhs - rhs);
          }));
  // Duality cross-check: the dualized structure is a relative PCA algebra.
  RelPCA dual{dualize(Delta), dualize(theta), Q.transpose(), P.transpose()};
  out.add_bool("dual-rel-pca", check_rel_pca(dual).all());
  return out;
}

Conditions check_asi_bialgebra(const BinOp& dot, const Coproduct& Delta) {
  int n = dot.dim;
  if (Delta.dim != n) throw ShapeError("asi_bialgebra: dims disagree");
  Conditions out;
  out.add_all(check_comm_assoc(dot));
  out.add_all(check_cocomm_coassoc(Delta));
  out.add("AssoBia", scan2("AssoBia", n, n, [&](int x, int y) {
            Tensor2 lhs = co_apply(Delta, dot.basis_product(x, y));
            Tensor2 rhs = apply_slot(dot.lmat(x), Delta.delta[static_cast<size_t>(y)], 0) +
                          apply_slot(dot.lmat(y), Delta.delta[static_cast<size_t>(x)], 1);
            return flatten(lhs - rhs);
          }));
  return out;
}

Conditions check_apl_bialgebra(const BinOp& circ, const Coproduct& theta) {
  int n = circ.dim;
  if (theta.dim != n) throw ShapeError("apl_bialgebra: dims disagree");
  BinOp br = commutator(circ);
  Conditions out;
  out.add_all(check_anti_pre_lie(circ));
  out.add_all(check_apl_coalgebra(theta));
  out.add("aplBia1", scan2("aplBia1", n, n, [&](int x, int y) {
            Tensor2 t = co_apply(theta, circ.basis_product(x, y));
            t = t - apply_slot(circ.lmat(x), theta.delta[static_cast<size_t>(y)], 0);
            t = t - apply_slot(circ.lmat(x), theta.delta[static_cast<size_t>(y)], 1);
            t = t + apply_slot(circ.rmat(y), theta.delta[static_cast<size_t>(x)], 1);
            return flatten(t - tau(t));
          }));
  out.add("aplBia2", scan2("aplBia2", n, n, [&](int x, int y) {
            Tensor2 lhs = co_apply(theta, br.basis_product(x, y));
            Tensor2 rhs = apply_slot(br.lmat(x), theta.delta[static_cast<size_t>(y)], 1) -
                          apply_slot(circ.lmat(x), theta.delta[static_cast<size_t>(y)], 0);
            rhs = rhs - (apply_slot(br.lmat(y), theta.delta[static_cast<size_t>(x)], 1) -
                         apply_slot(circ.lmat(y), theta.delta[static_cast<size_t>(x)], 0));
            return flatten(lhs - rhs);
          }));
  return out;
}

Conditions check_rel_pca_bialgebra(const RelPCABialgebra& b) {
  const RelPCA& s = b.alg;
  int n = s.dot.dim;
  if (b.Delta.dim != n || b.theta.dim != n) throw ShapeError("rel_pca_bialgebra: dims disagree");
  BinOp br = commutator(s.circ);
  Coproduct delta = lie_codelta(b.theta);
  Conditions out;
  out.add_all(check_rel_pca(s));
  out.add_all(check_rel_pca_coalgebra(b.Delta, b.theta, s.Q, s.P));
  out.add("AssoBia", *check_asi_bialgebra(s.dot, b.Delta).find("AssoBia"));
  Conditions apl = check_apl_bialgebra(s.circ, b.theta);
  out.add("aplBia1", *apl.find("aplBia1"));
  out.add("aplBia2", *apl.find("aplBia2"));
  auto D = [&](int k) { return b.Delta.delta[static_cast<size_t>(k)]; };
  auto Th = [&](int k) { return b.theta.delta[static_cast<size_t>(k)]; };
  auto dl = [&](int k) { return delta.delta[static_cast<size_t>(k)]; };
  out.add("b1", scan2("b1", n, n, [&](int x, int y) {
            Vec xy = s.dot.basis_product(x, y);
            Tensor2 t = co_apply(b.theta, xy);
            t = t + apply_slot(s.circ.lmat(y), D(x), 0);
            t = t - apply_slot(s.dot.lmat(x), Th(y), 1);
            t = t + apply_slot(s.circ.lmat(x), D(y), 0);
            t = t - apply_slot(s.dot.lmat(y), Th(x), 1);
            t = t - apply_slot(s.Q, co_apply(b.Delta, xy), 0);
            return flatten(t);
          }));
  out.add("b2", scan2("b2", n, n, [&](int x, int y) {
            Tensor2 t = co_apply(b.Delta, s.circ.basis_product(x, y));
            Tensor2 u = apply_slot(s.dot.lmat(y), Th(x), 1);
            t = t + tau(u) + u;
            t = t - apply_slot(s.circ.lmat(x), D(y), 1);
            t = t - apply_slot(s.circ.lmat(x), D(y), 0);
            t = t - co_apply(b.Delta, s.dot.apply(s.P.col(x), unit_vec(n, y)));
            return flatten(t);
          }));
  out.add("b3", scan2("b3", n, n, [&](int x, int y) {
            Tensor2 t = apply_slot(s.dot.lmat(x), Th(y), 0) - apply_slot(s.dot.lmat(x), Th(y), 1);
            t = t + apply_slot(s.circ.lmat(y), D(x), 0) - apply_slot(br.lmat(y), D(x), 1);
            t = t - co_apply(b.Delta, br.basis_product(x, y));
            t = t + co_apply(b.Delta, s.dot.apply(unit_vec(n, x), s.P.col(y)));
            return flatten(t);
          }));
  out.add("b4", scan2("b4", n, n, [&](int x, int y) {
            Vec xy = s.dot.basis_product(x, y);
            Tensor2 t = apply_slot(s.circ.rmat(y), D(x), 1);
            t = t + apply_slot(s.dot.lmat(x), dl(y), 0);
            t = t - apply_slot(s.circ.lmat(x), D(y), 1);
            t = t + tau(apply_slot(s.dot.lmat(y), Th(x), 1));
            t = t - co_apply(delta, xy);
            t = t + apply_slot(s.Q, co_apply(b.Delta, xy), 1);
            return flatten(t);
          }));
  return out;
}

Conditions check_diff_asi_bialgebra(const BinOp& dot, const Coproduct& Delta, const Mat& P,
                                    const Mat& Q) {
  Conditions out;
  out.add_all(check_asi_bialgebra(dot, Delta));
  out.add_all(check_adm_comm_diff({dot, P, Q}));
  // Admissible cocommutative differential coalgebra: cos1 for Q, cos4 for P.
  int n = dot.dim;
  out.add("cos1", scan1("cos1", n, [&](int k) {
            Tensor2 lhs = co_apply(Delta, Q.col(k));
            Tensor2 rhs = apply_slot(Q, Delta.delta[static_cast<size_t>(k)], 0) +
                          apply_slot(Q, Delta.delta[static_cast<size_t>(k)], 1);
            return flatten(lhs - rhs);
          }));
  out.add("cos4", scan1("cos4", n, [&](int k) {
            Tensor2 lhs = co_apply(Delta, P.col(k));
            Tensor2 rhs = apply_slot(P, Delta.delta[static_cast<size_t>(k)], 1) -
                          apply_slot(Q, Delta.delta[static_cast<size_t>(k)], 0);
            return flatten(lhs - rhs);
          }));
  return out;
}

RelPCABialgebra bialgebra_from_diff_asi(const BinOp& dot, const Coproduct& Delta, const Mat& P,
                                        const Mat& Q) {
  Conditions pre = check_diff_asi_bialgebra(dot, Delta, P, Q);
  require(pre, "bialgebra_from_diff_asi: input is not a differential ASI bialgebra");
  RelPCA alg = circ_from_admissible({dot, P, Q});
  int n = dot.dim;
  Coproduct theta = Coproduct::zero(n);
  for (int k = 0; k < n; ++k)
    theta.delta[static_cast<size_t>(k)] =
        co_apply(Delta, P.col(k)) - apply_slot(Q, Delta.delta[static_cast<size_t>(k)], 0);
  return {alg, Delta, theta};
}

}  // namespace relpca
