#include "relpca/rep.hpp"

namespace relpca {

Mat act(const std::vector<Mat>& table, const Vec& x) {
  if (table.empty()) throw ShapeError("act: empty table");
  Mat m(table[0].rows, table[0].cols);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    m = m + x[i] * table[i];
  }
  return m;
}

namespace {

std::vector<Mat> transpose_all(const std::vector<Mat>& t, bool negate) {
  std::vector<Mat> r;
  r.reserve(t.size());
  for (const Mat& m : t) r.push_back(negate ? Mat(-m.transpose()) : m.transpose());
  return r;
}

}  // namespace

Conditions check_apl_rep(const BinOp& circ, const std::vector<Mat>& lc, const std::vector<Mat>& rc,
                         int dimV) {
  int n = circ.dim;
  if (static_cast<int>(lc.size()) != n || static_cast<int>(rc.size()) != n)
    throw ShapeError("apl_rep: table size mismatch");
  auto L = [&](const Vec& x) { return act(lc, x); };
  auto R = [&](const Vec& x) { return act(rc, x); };
  (void)dimV;
  Conditions out;
  out.add("apl-rep1", scan2("apl-rep1", n, n, [&](int x, int y) {
            Mat m = L(circ.basis_product(y, x)) - L(circ.basis_product(x, y)) -
                    (lc[x] * lc[y] - lc[y] * lc[x]);
            return m.a;
          }));
  out.add("apl-rep2", scan2("apl-rep2", n, n, [&](int x, int y) {
            Mat m = R(circ.basis_product(x, y)) -
                    (lc[x] * rc[y] + rc[y] * lc[x] - rc[y] * rc[x]);
            return m.a;
          }));
  out.add("apl-rep3", scan2("apl-rep3", n, n, [&](int x, int y) {
            Mat m = L(circ.basis_product(y, x)) - L(circ.basis_product(x, y)) -
                    (rc[x] * lc[y] - rc[y] * lc[x] - rc[x] * rc[y] + rc[y] * rc[x]);
            return m.a;
          }));
  return out;
}

namespace {

Vec flat(const Mat& m) { return m.a; }

}  // namespace

Conditions check_rel_poisson_rep(const RelPoissonRep& r) {
  const RelPoisson& s = r.base;
  int n = s.dot.dim;
  if (static_cast<int>(r.mu.size()) != n || static_cast<int>(r.rho.size()) != n)
    throw ShapeError("rel_poisson_rep: table size mismatch");
  auto MU = [&](const Vec& x) { return act(r.mu, x); };
  auto RHO = [&](const Vec& x) { return act(r.rho, x); };
  auto e = [&](int i) { return unit_vec(n, i); };
  Conditions out;
  out.add("mu-assoc", scan2("mu-assoc", n, n, [&](int x, int y) {
            return flat(MU(s.dot.basis_product(x, y)) - r.mu[x] * r.mu[y]);
          }));
  out.add("rho-lie", scan2("rho-lie", n, n, [&](int x, int y) {
            return flat(RHO(s.bracket.basis_product(x, y)) -
                        (r.rho[x] * r.rho[y] - r.rho[y] * r.rho[x]));
          }));
  out.add("repRPA1", scan1("repRPA1", n, [&](int x) {
            return flat(r.alpha * r.mu[x] - MU(s.P.col(x)) - r.mu[x] * r.alpha);
          }));
  out.add("repRPA2", scan1("repRPA2", n, [&](int x) {
            return flat(r.alpha * r.rho[x] - RHO(s.P.col(x)) - r.rho[x] * r.alpha);
          }));
  out.add("repRPA3", scan2("repRPA3", n, n, [&](int x, int y) {
            Mat m = r.rho[y] * r.mu[x] - r.mu[x] * r.rho[y] + MU(s.bracket.basis_product(x, y)) -
                    MU(s.dot.apply(e(x), s.P.col(y)));
            return flat(m);
          }));
  out.add("repRPA4", scan2("repRPA4", n, n, [&](int x, int y) {
            Mat m = RHO(s.dot.basis_product(x, y)) - r.mu[x] * r.rho[y] - r.mu[y] * r.rho[x] +
                    MU(s.dot.basis_product(x, y)) * r.alpha;
            return flat(m);
          }));
  return out;
}

Conditions check_rel_pca_rep(const RelPCARep& r) {
  const RelPCA& s = r.base;
  int n = s.dot.dim;
  if (static_cast<int>(r.mu.size()) != n || static_cast<int>(r.lc.size()) != n ||
      static_cast<int>(r.rc.size()) != n)
    throw ShapeError("rel_pca_rep: table size mismatch");
  BinOp br = commutator(s.circ);
  auto MU = [&](const Vec& x) { return act(r.mu, x); };
  auto L = [&](const Vec& x) { return act(r.lc, x); };
  auto R = [&](const Vec& x) { return act(r.rc, x); };
  auto e = [&](int i) { return unit_vec(n, i); };
  auto lr = [&](int x) { return Mat(r.lc[static_cast<size_t>(x)] - r.rc[static_cast<size_t>(x)]); };
  Conditions out;
  out.add("mu-assoc", scan2("mu-assoc", n, n, [&](int x, int y) {
            return flat(MU(s.dot.basis_product(x, y)) - r.mu[x] * r.mu[y]);
          }));
  out.add_all(check_apl_rep(s.circ, r.lc, r.rc, r.dimV));
  out.add("rep1", scan2("rep1", n, n, [&](int x, int y) {
            Mat m = r.mu[x] * lr(y) - MU(br.basis_product(x, y)) - lr(y) * r.mu[x] +
                    MU(s.dot.apply(e(x), s.P.col(y)));
            return flat(m);
          }));
  out.add("rep2", scan2("rep2", n, n, [&](int x, int y) {
            Mat m = act(r.lc, s.dot.basis_product(x, y)) - act(r.rc, s.dot.basis_product(x, y)) -
                    r.mu[x] * lr(y) - r.mu[y] * lr(x) + MU(s.dot.basis_product(x, y)) * r.alpha;
            return flat(m);
          }));
  out.add("rep3", scan1("rep3", n, [&](int x) {
            return flat(r.alpha * r.mu[x] - MU(s.P.col(x)) - r.mu[x] * r.alpha);
          }));
  out.add("rep4", scan1("rep4", n, [&](int x) {
            Mat m = r.alpha * lr(x) - (L(s.P.col(x)) - R(s.P.col(x))) - lr(x) * r.alpha;
            return flat(m);
          }));
  out.add("rep5", scan1("rep5", n, [&](int x) {
            return flat(MU(s.Q.col(x)) - r.mu[x] * r.alpha - r.beta * r.mu[x]);
          }));
  out.add("rep6", scan1("rep6", n, [&](int x) {
            return flat(r.mu[x] * r.beta - MU(s.P.col(x)) - r.beta * r.mu[x]);
          }));
  out.add("rep7", scan1("rep7", n, [&](int x) {
            return flat(R(s.Q.col(x)) - r.rc[x] * r.alpha - r.beta * r.rc[x]);
          }));
  out.add("rep8", scan1("rep8", n, [&](int x) {
            return flat(r.lc[x] * r.beta - L(s.P.col(x)) - r.beta * r.lc[x]);
          }));
  out.add("rep9", scan2("rep9", n, n, [&](int x, int y) {
            Mat m = MU(s.circ.basis_product(y, x)) - r.lc[y] * r.mu[x] + r.mu[x] * r.rc[y] -
                    r.mu[x] * r.lc[y] - MU(s.dot.apply(e(x), s.P.col(y)));
            return flat(m);
          }));
  out.add("rep10", scan2("rep10", n, n, [&](int x, int y) {
            Mat m = r.mu[x] * r.rc[y] - R(s.dot.basis_product(x, y)) + r.mu[y] * r.lc[x] -
                    r.mu[y] * r.rc[x] - MU(s.dot.basis_product(x, y)) * r.alpha;
            return flat(m);
          }));
  out.add("rep11", scan2("rep11", n, n, [&](int x, int y) {
            Mat m = r.mu[x] * r.lc[y] - r.lc[y] * r.mu[x] + MU(br.basis_product(x, y)) -
                    MU(s.dot.apply(e(x), s.P.col(y)));
            return flat(m);
          }));
  out.add("rep12", scan2("rep12", n, n, [&](int x, int y) {
            Mat m = r.rc[x] * r.mu[y] - r.lc[y] * r.mu[x] - R(s.dot.basis_product(x, y)) +
                    r.beta * MU(s.dot.basis_product(x, y));
            return flat(m);
          }));
  out.add("rep13", scan2("rep13", n, n, [&](int x, int y) {
            Mat m = L(s.dot.basis_product(x, y)) - r.lc[y] * r.mu[x] - r.lc[x] * r.mu[y] +
                    r.beta * MU(s.dot.basis_product(x, y));
            return flat(m);
          }));
  return out;
}

RelPoissonRep dual_rel_poisson_rep(const RelPoissonRep& r) {
  Conditions pre = check_rel_poisson_rep(r);
  require(pre, "dual_rel_poisson_rep: input is not a representation");
  return {r.base, r.dimV, transpose_all(r.mu, false), transpose_all(r.rho, true),
          -r.alpha.transpose()};
}

RelPCARep dual_rel_pca_rep(const RelPCARep& r) {
  Conditions pre = check_rel_pca_rep(r);
  require(pre, "dual_rel_pca_rep: input is not a representation");
  std::vector<Mat> lc2, rc2;
  lc2.reserve(r.lc.size());
  rc2.reserve(r.rc.size());
  for (size_t i = 0; i < r.lc.size(); ++i) {
    lc2.push_back(Mat(r.lc[i] - r.rc[i]).transpose());
    rc2.push_back(-r.rc[i].transpose());
  }
  return {r.base, r.dimV, transpose_all(r.mu, false), lc2, rc2, r.beta.transpose(),
          r.alpha.transpose()};
}

RelPoissonRep adjoint_rep(const RelPoisson& s) {
  int n = s.dot.dim;
  std::vector<Mat> mu, rho;
  for (int i = 0; i < n; ++i) {
    mu.push_back(s.dot.lmat(i));
    rho.push_back(s.bracket.lmat(i));
  }
  return {s, n, mu, rho, s.P};
}

RelPCARep adjoint_rep(const RelPCA& s) {
  int n = s.dot.dim;
  std::vector<Mat> mu, lc, rc;
  for (int i = 0; i < n; ++i) {
    mu.push_back(s.dot.lmat(i));
    lc.push_back(s.circ.lmat(i));
    rc.push_back(s.circ.rmat(i));
  }
  return {s, n, mu, lc, rc, s.P, s.Q};
}

RelPCARep pre_rep(const RelPrePCA& s) {
  int n = s.star.dim;
  RelPCA base{descendent_comm(s.star), sub_adjacent_apl(s.succ, s.prec), s.P, s.Q};
  std::vector<Mat> mu, lc, rc;
  for (int i = 0; i < n; ++i) {
    mu.push_back(s.star.lmat(i));
    lc.push_back(s.succ.lmat(i));
    rc.push_back(s.prec.rmat(i));
  }
  return {base, n, mu, lc, rc, s.P, s.Q};
}

RelPoissonRep coadjoint_rel_poisson_rep(const RelPCA& s) {
  int n = s.dot.dim;
  std::vector<Mat> mu, rho;
  for (int i = 0; i < n; ++i) {
    mu.push_back(s.dot.lmat(i).transpose());
    rho.push_back(s.circ.lmat(i).transpose());
  }
  return {associated_rel_poisson(s), n, mu, rho, s.Q.transpose()};
}

RelPCARep dual_adjoint_rep(const RelPCA& s) {
  int n = s.dot.dim;
  BinOp br = commutator(s.circ);
  std::vector<Mat> mu, lc, rc;
  for (int i = 0; i < n; ++i) {
    mu.push_back(s.dot.lmat(i).transpose());
    lc.push_back(br.lmat(i).transpose());
    rc.push_back(-s.circ.rmat(i).transpose());
  }
  return {s, n, mu, lc, rc, s.Q.transpose(), s.P.transpose()};
}

namespace {

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows + b.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) m(a.rows + i, a.cols + j) = b(i, j);
  return m;
}

void put(BinOp& op, int i, int j, const Vec& v, int offset) {
  for (size_t k = 0; k < v.size(); ++k) op.at(i, j, offset + static_cast<int>(k)) = v[k];
}

// Direct sum product from an A-product plus left/right action tables on V:
// (x+u)*(y+v) = x*y + l(x)v + r(y)u.
BinOp semidirect_op(const BinOp& opA, const std::vector<Mat>& l, const std::vector<Mat>& r,
                    int dimV) {
  int n = opA.dim;
  BinOp op(n + dimV);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) put(op, i, j, opA.basis_product(i, j), 0);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < dimV; ++a) {
      put(op, i, n + a, l[static_cast<size_t>(i)].col(a), n);
      put(op, n + a, i, r[static_cast<size_t>(i)].col(a), n);
    }
  return op;
}

}  // namespace

RelPoisson semidirect_rel_poisson(const RelPoissonRep& rep) {
  Conditions pre = check_rel_poisson_rep(rep);
  require(pre, "semidirect_rel_poisson: input is not a representation");
  std::vector<Mat> neg_rho;
  for (const Mat& m : rep.rho) neg_rho.push_back(-m);
  BinOp dot = semidirect_op(rep.base.dot, rep.mu, rep.mu, rep.dimV);
  BinOp bracket = semidirect_op(rep.base.bracket, rep.rho, neg_rho, rep.dimV);
  return {dot, bracket, block_diag(rep.base.P, rep.alpha)};
}

RelPCA semidirect_rel_pca(const RelPCARep& rep) {
  Conditions pre = check_rel_pca_rep(rep);
  require(pre, "semidirect_rel_pca: input is not a representation");
  BinOp dot = semidirect_op(rep.base.dot, rep.mu, rep.mu, rep.dimV);
  BinOp circ = semidirect_op(rep.base.circ, rep.lc, rep.rc, rep.dimV);
  return {dot, circ, block_diag(rep.base.P, rep.alpha), block_diag(rep.base.Q, rep.beta)};
}

Conditions check_o_operator(const OOperator& o) {
  const RelPCARep& r = o.rep;
  const RelPCA& s = r.base;
  int n = s.dot.dim, m = r.dimV;
  if (o.T.rows != n || o.T.cols != m) throw ShapeError("o_operator: T shape mismatch");
  auto e = [&](int a) { return unit_vec(m, a); };
  Conditions out;
  out.add("oop1", scan2("oop1", m, m, [&](int a, int b) {
            Vec Tu = o.T.col(a), Tv = o.T.col(b);
            Vec lhs = s.dot.apply(Tu, Tv);
            Vec inner = add(act(r.mu, Tu).apply(e(b)), act(r.mu, Tv).apply(e(a)));
            return sub(lhs, o.T.apply(inner));
          }));
  out.add("oop2", scan2("oop2", m, m, [&](int a, int b) {
            Vec Tu = o.T.col(a), Tv = o.T.col(b);
            Vec lhs = s.circ.apply(Tu, Tv);
            Vec inner = add(act(r.lc, Tu).apply(e(b)), act(r.rc, Tv).apply(e(a)));
            return sub(lhs, o.T.apply(inner));
          }));
  Mat d3 = s.P * o.T - o.T * r.alpha;
  out.add("oop3", d3.is_zero() ? CheckReport::ok()
                               : CheckReport::fail({"oop3", {}, d3.a}));
  Mat d4 = s.Q * o.T - o.T * r.beta;
  out.add("oop4", d4.is_zero() ? CheckReport::ok()
                               : CheckReport::fail({"oop4", {}, d4.a}));
  return out;
}

BinOp pre_lie_from_lie_o_operator(const BinOp& bracket, const std::vector<Mat>& rho,
                                  const Mat& T) {
  int n = bracket.dim, m = T.cols;
  if (T.rows != n || static_cast<int>(rho.size()) != n)
    throw ShapeError("pre_lie_from_lie_o_operator: shape mismatch");
  Conditions pre;
  pre.add("lie-oop", scan2("lie-oop", m, m, [&](int a, int b) {
            Vec Tu = T.col(a), Tv = T.col(b);
            Vec lhs = bracket.apply(Tu, Tv);
            Vec inner = sub(act(rho, Tu).apply(unit_vec(m, b)), act(rho, Tv).apply(unit_vec(m, a)));
            return sub(lhs, T.apply(inner));
          }));
  require(pre, "pre_lie_from_lie_o_operator: T is not an O-operator of the Lie algebra");
  BinOp d(m);
  for (int a = 0; a < m; ++a) {
    Mat r = act(rho, T.col(a));
    for (int b = 0; b < m; ++b) put(d, a, b, r.col(b), 0);
  }
  return d;
}

}  // namespace relpca
