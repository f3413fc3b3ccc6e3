#include "relpca/ybe.hpp"

namespace relpca {

Coproduct cobound_delta(const BinOp& dot, const Tensor2& r) {
  int n = dot.dim;
  if (r.dl != n || r.dr != n) throw ShapeError("cobound_delta: shape mismatch");
  Coproduct c = Coproduct::zero(n);
  for (int x = 0; x < n; ++x) {
    Mat L = dot.lmat(x);
    c.delta[static_cast<size_t>(x)] = apply_slot(L, r, 1) - apply_slot(L, r, 0);
  }
  return c;
}

Coproduct cobound_theta(const BinOp& circ, const Tensor2& r) {
  int n = circ.dim;
  if (r.dl != n || r.dr != n) throw ShapeError("cobound_theta: shape mismatch");
  BinOp br = commutator(circ);
  Coproduct c = Coproduct::zero(n);
  for (int x = 0; x < n; ++x)
    c.delta[static_cast<size_t>(x)] =
        apply_slot(circ.lmat(x), r, 0) - apply_slot(br.lmat(x), r, 1);
  return c;
}

Tensor3 aybe_tensor(const BinOp& dot, const Tensor2& r) {
  return prod_12_13(dot, r, r) - prod_23_12(dot, r, r) + prod_13_23(dot, r, r);
}

Tensor3 tybe_tensor(const BinOp& circ, const Tensor2& r) {
  BinOp br = commutator(circ);
  return prod_12_13(circ, r, r) + prod_12_23(circ, r, r) - prod_13_23(br, r, r);
}

namespace {

Tensor2 d2_tensor(const Mat& P, const Mat& Q, const Tensor2& r) {
  // (Q ⊗ id - id ⊗ P) r
  return apply_slot(Q, r, 0) - apply_slot(P, r, 1);
}

Tensor2 d2p_tensor(const Mat& P, const Mat& Q, const Tensor2& r) {
  // (P ⊗ id - id ⊗ Q) r
  return apply_slot(P, r, 0) - apply_slot(Q, r, 1);
}

CheckReport tensor_condition(const std::string& label, const Tensor2& t) {
  if (t.is_zero()) return CheckReport::ok();
  return CheckReport::fail({label, {}, flatten(t)});
}

CheckReport tensor_condition(const std::string& label, const Tensor3& t) {
  if (t.is_zero()) return CheckReport::ok();
  return CheckReport::fail({label, {}, flatten(t)});
}

}  // namespace

Conditions check_rpca_ybe(const RelPCA& s, const Tensor2& r) {
  int n = s.dot.dim;
  if (r.dl != n || r.dr != n) throw ShapeError("rpca_ybe: shape mismatch");
  Conditions out;
  CheckReport a = tensor_condition("aybe", aybe_tensor(s.dot, r));
  CheckReport t = tensor_condition("tybe", tybe_tensor(s.circ, r));
  CheckReport d2 = tensor_condition("d2", d2_tensor(s.P, s.Q, r));
  CheckReport d2p = tensor_condition("d2p", d2p_tensor(s.P, s.Q, r));
  bool equiv_ok = true;
  if (is_antisymmetric(r)) equiv_ok = d2.passed == d2p.passed;
  out.add("aybe", std::move(a));
  out.add("tybe", std::move(t));
  out.add("d2", std::move(d2));
  out.add("d2p", std::move(d2p));
  if (is_antisymmetric(r)) out.add_bool("antisym-d2-equiv", equiv_ok);
  return out;
}

Conditions rel_pca_bialgebra_axioms(const RelPCA& s, const Coproduct& Delta,
                                    const Coproduct& theta) {
  RelPCABialgebra b{s, Delta, theta};
  Conditions full = check_rel_pca_bialgebra(b);
  Conditions alg = check_rel_pca(s);
  Conditions out;
  // The bialgebra bundle lists the algebra conditions first; keep the rest.
  out.items.assign(full.items.begin() + static_cast<long>(alg.items.size()), full.items.end());
  return out;
}

RelPCABialgebra bialgebra_from_ybe(const RelPCA& s, const Tensor2& r) {
  Conditions pre;
  pre.add_bool("antisym", is_antisymmetric(r));
  pre.add_all(check_rpca_ybe(s, r));
  require(pre, "bialgebra_from_ybe: r is not an antisymmetric solution of the RPCA-YBE");
  return {s, cobound_delta(s.dot, r), cobound_theta(s.circ, r)};
}

Conditions cob_condition_suite(const RelPCA& s, const Tensor2& r) {
  int n = s.dot.dim;
  if (r.dl != n || r.dr != n) throw ShapeError("cob_condition_suite: shape mismatch");
  const BinOp& dot = s.dot;
  const BinOp& circ = s.circ;
  BinOp br = commutator(circ);
  const Mat& P = s.P;
  const Mat& Q = s.Q;
  Tensor2 rs = r + tau(r);
  Tensor3 A = aybe_tensor(dot, r);
  Tensor3 T = tybe_tensor(circ, r);
  Tensor2 qp = d2_tensor(P, Q, r);    // (Q ⊗ id - id ⊗ P) r
  Tensor2 pq = d2p_tensor(P, Q, r);   // (P ⊗ id - id ⊗ Q) r
  auto e = [&](int i) { return unit_vec(n, i); };
  auto row_of = [&](int j) {
    Vec v(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) v[static_cast<size_t>(k)] = r(j, k);
    return v;
  };

  Conditions out;
  out.add("ASI1", scan1("ASI1", n, [&](int x) {
            Mat L = dot.lmat(x);
            return flatten(apply_slot(L, rs, 1) - apply_slot(L, rs, 0));
          }));
  out.add("ASI2", scan1("ASI2", n, [&](int x) {
            Mat L = dot.lmat(x);
            return flatten(apply_slot(L, A, 2) - apply_slot(L, A, 0));
          }));
  out.add("Apl1", scan1("Apl1", n, [&](int x) {
            Mat Lx = circ.lmat(x), adx = br.lmat(x);
            Tensor3 head = apply_slot(Lx, T, 0);
            Tensor3 t = head - tau01(head) - apply_slot(adx, T, 2);
            for (int j = 0; j < n; ++j) {
              Tensor3 arg = t2_vec(rs, row_of(j));
              Tensor3 u = apply_slot(adx, arg, 2);
              t = t + apply_slot(circ.lmat(j), u, 1) - apply_slot(br.lmat(j), u, 0);
              Mat M = circ.lof(circ.basis_product(x, j)) - Lx * circ.rmat(j);
              Tensor3 v = apply_slot(M, arg, 0);
              t = t + v - tau01(v);
            }
            return flatten(t);
          }));
  out.add("Apl2", scan1("Apl2", n, [&](int x) {
            Mat Lx = circ.lmat(x);
            Tensor3 t = -apply_slot(Lx, T, 2);
            for (int j = 0; j < n; ++j) {
              Vec bj = row_of(j);
              Tensor3 a_rs = vec_t2(e(j), rs);
              t = t + apply_slot(circ.lof(br.apply(e(x), bj)), a_rs - tau01(a_rs), 2);
              Tensor3 u = apply_slot(Lx, a_rs, 2);
              t = t + apply_slot(br.lof(bj), u, 1);
              Tensor3 b_rs = vec_t2(bj, rs);
              Tensor3 w = apply_slot(Lx, b_rs, 2);
              t = t + apply_slot(br.lmat(j), w, 1);
              t = t + apply_slot(circ.lmat(j), apply_slot(Lx, tau01(b_rs), 2), 0);
              Tensor3 rs_a = t2_vec(rs, Vec(e(j)));
              t = t + apply_slot(br.lof(bj), apply_slot(Lx, rs_a, 2), 0);
            }
            return flatten(t + xi(t) + xi2(t));
          }));
  out.add("Apl3", scan2("Apl3", n, n, [&](int x, int y) {
            Mat Lxy = circ.lof(circ.basis_product(x, y));
            Mat LxLy = circ.lmat(x) * circ.lmat(y);
            Tensor2 t = apply_slot(Lxy, rs, 1) - apply_slot(LxLy, rs, 1);
            t = t + apply_slot(LxLy, rs, 0) - apply_slot(Lxy, rs, 0);
            t = t + apply_slot(circ.lmat(y), apply_slot(circ.lmat(x), rs, 1), 0);
            t = t - apply_slot(circ.lmat(x), apply_slot(circ.lmat(y), rs, 1), 0);
            return flatten(t);
          }));
  out.add("cob-cos1", scan1("cob-cos1", n, [&](int x) {
            Mat L = dot.lmat(x);
            return flatten(apply_slot(L, -qp, 1) + apply_slot(L, -pq, 0));
          }));
  out.add("cob-cos2", scan1("cob-cos2", n, [&](int x) {
            Mat Mpq = circ.lof(Vec(add(P.col(x), Q.col(x))));
            Tensor2 t = apply_slot(Mpq, rs, 0);
            t = t - apply_slot(Mat(circ.lmat(x) * Q), rs, 0);
            t = t - apply_slot(circ.lmat(x), apply_slot(Q, rs, 1), 0);
            t = t + apply_slot(circ.rmat(x), tau(qp), 0);
            return flatten(t - tau(t));
          }));
  out.add("cob-cos3", scan1("cob-cos3", n, [&](int x) {
            Mat Lx = dot.lmat(x), Cx = circ.lmat(x), adx = br.lmat(x);
            Tensor3 t = apply_slot(Cx, A, 0);
            t = t + apply_slot(Q, apply_slot(Lx, A, 2), 0);
            t = t - apply_slot(adx, xi2(A), 0);
            t = t - apply_slot(Lx, T + xi2(T), 1);
            t = t - apply_slot(Lx, T, 2);
            t = t + apply_slot(Mat(P * Lx), prod_21_31(dot, r, r) - prod_12_13(dot, r, r), 0);
            Tensor3 mix = prod_21_13(circ, r, r) + prod_12_13(circ, r, r) +
                          prod_23_21(circ, r, r) + prod_23_12r(circ, r, r);
            t = t + apply_slot(Lx, mix, 1);
            for (int j = 0; j < n; ++j) {
              Vec bj = row_of(j);
              Tensor3 rs_a = t2_vec(rs, Vec(e(j)));
              t = t - apply_slot(Mat(br.lof(bj) * Lx), tau12(rs_a), 0);
              Tensor3 a_rs = vec_t2(e(j), rs);
              Mat M2 = circ.lof(dot.apply(e(x), bj)) - dot.lof(bj) * Cx;
              t = t + apply_slot(M2, tau01(a_rs), 2);
              Tensor3 a_qp = vec_t2(e(j), qp);
              t = t - tau01(apply_slot(dot.lof(dot.apply(e(x), bj)), a_qp, 2));
              t = t + apply_slot(dot.lof(dot.basis_product(x, j)), t2_vec(qp, bj), 1);
              Tensor3 rs_b = t2_vec(rs, bj);
              Tensor3 u = apply_slot(Lx, rs_b, 2);
              t = t + apply_slot(circ.lmat(j), u, 1) - apply_slot(br.lmat(j), u, 0);
              t = t - apply_slot(Mat(circ.rmat(j) * Lx), rs_b, 0);
              Mat M6 = dot.lmat(j) * Cx - circ.lof(dot.basis_product(x, j));
              t = t + apply_slot(M6, rs_b, 1);
            }
            return flatten(t);
          }));
  out.add("cob-cos4", scan1("cob-cos4", n, [&](int x) {
            Mat L = dot.lmat(x);
            Tensor2 u = -pq;  // (id ⊗ Q - P ⊗ id) r
            return flatten(apply_slot(L, u, 1) - apply_slot(L, u, 0));
          }));
  out.add("cob-cos5", scan1("cob-cos5", n, [&](int x) {
            return flatten(apply_slot(circ.lmat(x), qp, 0) - apply_slot(br.lmat(x), qp, 1));
          }));
  out.add("cob-cos6", scan1("cob-cos6", n, [&](int x) {
            Mat Lx = dot.lmat(x), Cx = circ.lmat(x);
            Tensor3 t = apply_slot(Q, apply_slot(Lx, A, 2), 1);
            t = t - apply_slot(Cx, tau01(A), 1);
            t = t + apply_slot(Lx, T, 2) - apply_slot(Lx, T, 0);
            for (int j = 0; j < n; ++j) {
              Vec bj = row_of(j);
              Vec xaj = dot.basis_product(x, j);
              Tensor3 rs_b = t2_vec(rs, bj);
              Mat Ma = dot.lmat(j) * br.lmat(x) + br.lof(xaj);
              t = t - apply_slot(Ma, rs_b, 0);
              Mat Mb = Cx * dot.lmat(j) + circ.lof(xaj);
              t = t + apply_slot(Mb, rs_b, 1);
              Tensor3 u = apply_slot(Lx, rs_b, 2);
              t = t + apply_slot(br.lmat(j), u, 0) - apply_slot(circ.lmat(j), u, 1);
              t = t - apply_slot(dot.lof(xaj), t2_vec(Tensor2(-pq), bj), 0);
              Tensor3 a_mqp = vec_t2(e(j), Tensor2(-qp));
              t = t + apply_slot(dot.lof(dot.apply(e(x), bj)), a_mqp, 2);
            }
            return flatten(t);
          }));
  out.add("cob-cos7", scan1("cob-cos7", n, [&](int x) {
            Mat Cx = circ.lmat(x);
            Tensor3 t = apply_slot(br.lmat(x), A, 2);
            t = t - apply_slot(dot.lof(P.col(x)), A, 2);
            t = t - apply_slot(Cx, A, 0);
            t = t - apply_slot(Cx, tau01(A), 1);
            for (int j = 0; j < n; ++j) {
              Tensor3 rs_b = t2_vec(rs, row_of(j));
              t = t + apply_slot(Mat(Cx * dot.lmat(j)), rs_b, 1);
              t = t - apply_slot(Mat(dot.lmat(j) * br.lmat(x)), rs_b, 0);
            }
            return flatten(t);
          }));
  out.add("cob-mp1", scan2("cob-mp1", n, n, [&](int x, int y) {
            return flatten(apply_slot(dot.lof(dot.basis_product(x, y)), Tensor2(-qp), 1));
          }));
  out.add("cob-mp2", scan2("cob-mp2", n, n, [&](int x, int y) {
            Tensor2 t = apply_slot(dot.lmat(y), apply_slot(circ.lmat(x), rs, 1), 0);
            t = t - apply_slot(Mat(dot.lmat(y) * br.lmat(x)), rs, 0);
            return flatten(t);
          }));
  out.add("cob-mp4", scan2("cob-mp4", n, n, [&](int x, int y) {
            Vec xy = dot.basis_product(x, y);
            Mat M = dot.lmat(x) * br.lmat(y) - dot.lmat(y) * br.lmat(x) - br.lof(xy);
            Tensor2 t = apply_slot(M, rs, 0);
            t = t - apply_slot(dot.lmat(x), apply_slot(circ.lmat(y), rs, 1), 0);
            t = t + apply_slot(dot.lmat(y), apply_slot(circ.lmat(x), rs, 1), 0);
            t = t + apply_slot(circ.lof(xy), rs, 1);
            t = t + apply_slot(dot.lof(xy), pq, 0);
            return flatten(t);
          }));
  bool aggregate = out.all();
  out.add_bool("aggregate", aggregate);
  Coproduct Delta = cobound_delta(dot, r);
  Coproduct theta = cobound_theta(circ, r);
  bool definitional = rel_pca_bialgebra_axioms(s, Delta, theta).all();
  out.add_bool("definitional", definitional);
  if (check_rel_pca(s).all() && aggregate != definitional)
    throw std::logic_error(
        "cob_condition_suite: literal r-conditions disagree with the definitional bialgebra "
        "check; one of the two engines is mistranscribed");
  return out;
}

Conditions check_q_admissible_aybe(const AdmCommDiff& a, const Tensor2& r) {
  Conditions out;
  out.add_all(check_adm_comm_diff(a));
  out.add("aybe", tensor_condition("aybe", aybe_tensor(a.dot, r)));
  out.add("d2", tensor_condition("d2", d2_tensor(a.P, a.Q, r)));
  out.add("d2p", tensor_condition("d2p", d2p_tensor(a.P, a.Q, r)));
  return out;
}

Conditions t_tensor_expansion_check(const AdmCommDiff& a, const Tensor2& r) {
  RelPCA s = circ_from_admissible(a);
  int n = a.dot.dim;
  Tensor3 lhs = tybe_tensor(s.circ, r);
  Tensor3 A = aybe_tensor(a.dot, r);
  Tensor2 qp = d2_tensor(a.P, a.Q, r);
  Tensor2 pq = d2p_tensor(a.P, a.Q, r);
  Tensor3 rhs = apply_slot(a.Q, A, 0) - apply_slot(a.Q, A, 1);
  for (int j = 0; j < n; ++j) {
    Vec bj(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) bj[static_cast<size_t>(k)] = r(j, k);
    Vec aj = unit_vec(n, j);
    rhs = rhs + apply_slot(a.dot.lmat(j), t2_vec(qp, bj), 1);
    Tensor3 a_qp = vec_t2(aj, qp);
    rhs = rhs - apply_slot(a.dot.lof(bj), tau01(a_qp), 2);
    rhs = rhs + apply_slot(a.dot.lmat(j), t2_vec(Tensor2(-pq), bj), 0);
    rhs = rhs + apply_slot(a.dot.lof(bj), a_qp, 2);
  }
  Conditions out;
  out.add("t-expansion", tensor_condition("t-expansion", lhs - rhs));
  return out;
}

Mat tensor_to_map(const Tensor2& r) {
  Mat m(r.dr, r.dl);
  for (int i = 0; i < r.dl; ++i)
    for (int j = 0; j < r.dr; ++j) m(j, i) = r(i, j);
  return m;
}

Conditions o_operator_form_check(const RelPCA& s, const Tensor2& r) {
  int n = s.dot.dim;
  if (r.dl != n || r.dr != n) throw ShapeError("o_operator_form_check: shape mismatch");
  Mat R = tensor_to_map(r);
  BinOp br = commutator(s.circ);
  Conditions out;
  bool antisym = is_antisymmetric(r);
  out.add_bool("antisym", antisym);
  out.add("of1", scan2("of1", n, n, [&](int a, int b) {
            Vec ra = R.col(a), rb = R.col(b);
            Vec inner = add(s.dot.lof(ra).transpose().col(b), s.dot.lof(rb).transpose().col(a));
            return sub(s.dot.apply(ra, rb), R.apply(inner));
          }));
  out.add("of2", scan2("of2", n, n, [&](int a, int b) {
            Vec ra = R.col(a), rb = R.col(b);
            Vec inner = sub(br.lof(ra).transpose().col(b), s.circ.rof(rb).transpose().col(a));
            return sub(s.circ.apply(ra, rb), R.apply(inner));
          }));
  Mat d3 = s.P * R - R * s.Q.transpose();
  out.add("of3", d3.is_zero() ? CheckReport::ok() : CheckReport::fail({"of3", {}, d3.a}));
  if (antisym) {
    bool of_verdict = out.find("of1")->passed && out.find("of2")->passed && out.find("of3")->passed;
    out.add_bool("agrees-ybe", of_verdict == check_rpca_ybe(s, r).all());
  }
  return out;
}

std::pair<RelPCA, Tensor2> lift_o_operator(const OOperator& o) {
  Conditions pre = check_rel_pca_rep(o.rep);
  require(pre, "lift_o_operator: rep does not pass its check");
  RelPCARep dual = dual_rel_pca_rep(o.rep);
  RelPCA dbl = semidirect_rel_pca(dual);
  int n = o.rep.base.dot.dim, m = o.rep.dimV;
  Tensor2 r(n + m, n + m);
  for (int a = 0; a < m; ++a)
    for (int j = 0; j < n; ++j) {
      r(n + a, j) = o.T(j, a);
      r(j, n + a) = -o.T(j, a);
    }
  return {dbl, r};
}

std::vector<Tensor2> enumerate_ybe_solutions(const RelPCA& s, const std::vector<Rat>& coeffs) {
  int n = s.dot.dim;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  size_t k = slots.size();
  std::vector<size_t> odo(k, 0);
  std::vector<Tensor2> found;
  while (true) {
    Tensor2 r(n, n);
    for (size_t p = 0; p < k; ++p) {
      const Rat& c = coeffs[odo[p]];
      r(slots[p].first, slots[p].second) = c;
      r(slots[p].second, slots[p].first) = -c;
    }
    if (check_rpca_ybe(s, r).all()) found.push_back(r);
    size_t p = k;
    while (p > 0) {
      --p;
      if (++odo[p] < coeffs.size()) break;
      odo[p] = 0;
      if (p == 0) return found;
    }
    if (k == 0) return found;
  }
}

}  // namespace relpca
