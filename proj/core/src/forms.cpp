#include "relpca/forms.hpp"

namespace relpca {

namespace {

Rat bform(const Mat& B, const Vec& u, const Vec& v) {
  Rat s = 0;
  for (int i = 0; i < B.rows; ++i) {
    if (u[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < B.cols; ++j) s += u[static_cast<size_t>(i)] * B(i, j) * v[static_cast<size_t>(j)];
  }
  return s;
}

Vec scalar_residual(const Rat& s) { return Vec{s}; }

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows + b.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) m(a.rows + i, a.cols + j) = b(i, j);
  return m;
}

std::vector<Mat> lmats_t(const BinOp& op) {
  std::vector<Mat> v;
  for (int i = 0; i < op.dim; ++i) v.push_back(op.lmat(i).transpose());
  return v;
}

std::vector<Mat> neg_rmats_t(const BinOp& op) {
  std::vector<Mat> v;
  for (int i = 0; i < op.dim; ++i) v.push_back(-op.rmat(i).transpose());
  return v;
}

std::vector<Mat> negate_all(const std::vector<Mat>& t) {
  std::vector<Mat> v;
  for (const Mat& m : t) v.push_back(-m);
  return v;
}

std::vector<Mat> diff_all(const std::vector<Mat>& a, const std::vector<Mat>& b) {
  std::vector<Mat> v;
  for (size_t i = 0; i < a.size(); ++i) v.push_back(a[i] - b[i]);
  return v;
}

}  // namespace

Conditions form_checks(const BinOp& dot, const BinOp& bracket, const Mat& B) {
  int n = dot.dim;
  if (bracket.dim != n || B.rows != n || B.cols != n) throw ShapeError("form_checks: shape mismatch");
  auto e = [&](int i) { return unit_vec(n, i); };
  Conditions out;
  out.add("sym", scan2("sym", n, n, [&](int i, int j) {
            return scalar_residual(B(i, j) - B(j, i));
          }));
  bool nondeg = rank(B) == n;
  out.add_bool("nondeg", nondeg);
  out.add("inv-dot", scan3("inv-dot", n, n, n, [&](int x, int y, int z) {
            return scalar_residual(bform(B, dot.basis_product(x, y), e(z)) -
                                   bform(B, e(x), dot.basis_product(y, z)));
          }));
  out.add("inv-bracket", scan3("inv-bracket", n, n, n, [&](int x, int y, int z) {
            return scalar_residual(bform(B, bracket.basis_product(x, y), e(z)) -
                                   bform(B, e(x), bracket.basis_product(y, z)));
          }));
  out.add("2-coc", scan3("2-coc", n, n, n, [&](int x, int y, int z) {
            Rat s = bform(B, bracket.basis_product(x, y), e(z));
            s += bform(B, bracket.basis_product(y, z), e(x));
            s += bform(B, bracket.basis_product(z, x), e(y));
            return scalar_residual(s);
          }));
  bool ic2c = out.find("sym")->passed && nondeg && out.find("inv-dot")->passed &&
              out.find("2-coc")->passed;
  out.add_bool("invariant-c2c", ic2c);
  return out;
}

Mat adjoint_map(const Mat& B, const Mat& P) {
  if (B.rows != B.cols || !B.same_shape(P)) throw ShapeError("adjoint_map: shape mismatch");
  // B(adj x, y) = B(x, Py)  <=>  B^T adj = P^T B^T.
  std::optional<Mat> inv = inverse(B.transpose());
  if (!inv) {
    Conditions c;
    c.add_bool("nondeg", false);
    throw PreconditionError("adjoint_map: form is degenerate", c);
  }
  return *inv * (P.transpose() * B.transpose());
}

BinOp apl_from_c2c(const BinOp& bracket, const Mat& B) {
  int n = bracket.dim;
  Conditions pre;
  Conditions fc = form_checks(BinOp(n), bracket, B);
  pre.add("sym", *fc.find("sym"));
  pre.add("nondeg", *fc.find("nondeg"));
  pre.add("2-coc", *fc.find("2-coc"));
  pre.add_all(check_lie(bracket));
  require(pre, "apl_from_c2c: form is not a nondegenerate symmetric 2-cocycle on a Lie bracket");
  std::optional<Mat> inv = inverse(B);
  BinOp circ(n);
  auto e = [&](int i) { return unit_vec(n, i); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // B(e_i o e_j, z) = B(e_j, [e_i, z])
      Vec rhs(static_cast<size_t>(n));
      for (int k = 0; k < n; ++k) rhs[static_cast<size_t>(k)] = bform(B, e(j), bracket.basis_product(i, k));
      Vec w = inv->apply(rhs);
      for (int k = 0; k < n; ++k) circ.at(i, j, k) = w[static_cast<size_t>(k)];
    }
  return circ;
}

RelPCA rpca_from_form(const RelPoisson& s, const Mat& B) {
  Conditions pre;
  pre.add_all(check_rel_poisson(s));
  Conditions fc = form_checks(s.dot, s.bracket, B);
  pre.add("invariant-c2c", *fc.find("invariant-c2c"));
  require(pre, "rpca_from_form: not a relative Poisson algebra with an invariant-c2c form");
  return {s.dot, apl_from_c2c(s.bracket, B), s.P, adjoint_map(B, s.P)};
}

BinOp matched_sum_op(const BinOp& op1, const BinOp& op2, const std::vector<Mat>& l1,
                     const std::vector<Mat>& r1, const std::vector<Mat>& l2,
                     const std::vector<Mat>& r2) {
  int n1 = op1.dim, n2 = op2.dim;
  BinOp op(n1 + n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j)
      for (int k = 0; k < n1; ++k) op.at(i, j, k) = op1.at(i, j, k);
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b)
      for (int c = 0; c < n2; ++c) op.at(n1 + a, n1 + b, n1 + c) = op2.at(a, b, c);
  for (int i = 0; i < n1; ++i)
    for (int b = 0; b < n2; ++b) {
      // e_i * u_b = r2(u_b) e_i + l1(e_i) u_b
      for (int k = 0; k < n1; ++k) op.at(i, n1 + b, k) = r2[static_cast<size_t>(b)](k, i);
      for (int c = 0; c < n2; ++c) op.at(i, n1 + b, n1 + c) = l1[static_cast<size_t>(i)](c, b);
      // u_b * e_i = l2(u_b) e_i + r1(e_i) u_b
      for (int k = 0; k < n1; ++k) op.at(n1 + b, i, k) = l2[static_cast<size_t>(b)](k, i);
      for (int c = 0; c < n2; ++c) op.at(n1 + b, i, n1 + c) = r1[static_cast<size_t>(i)](c, b);
    }
  return op;
}

RelPoisson matched_sum(const MatchedPairRelPoisson& m) {
  BinOp dot = matched_sum_op(m.a1.dot, m.a2.dot, m.mu1, m.mu1, m.mu2, m.mu2);
  BinOp bracket = matched_sum_op(m.a1.bracket, m.a2.bracket, m.rho1, negate_all(m.rho1), m.rho2,
                                 negate_all(m.rho2));
  return {dot, bracket, block_diag(m.a1.P, m.a2.P)};
}

RelPCA matched_sum(const MatchedPairRelPCA& m) {
  BinOp dot = matched_sum_op(m.a1.dot, m.a2.dot, m.mu1, m.mu1, m.mu2, m.mu2);
  BinOp circ = matched_sum_op(m.a1.circ, m.a2.circ, m.l1, m.r1, m.l2, m.r2);
  return {dot, circ, block_diag(m.a1.P, m.a2.P), block_diag(m.a1.Q, m.a2.Q)};
}

namespace {

// The four displayed compatibility equations of a matched pair of relative
// Poisson algebras; side=1 gives MP1/MP3, side=2 the mirrored MP2/MP4.
void add_mp_conditions(Conditions& out, const RelPoisson& A1, const RelPoisson& A2,
                       const std::vector<Mat>& mu1, const std::vector<Mat>& rho1,
                       const std::vector<Mat>& mu2, const std::vector<Mat>& rho2,
                       const std::string& lab1, const std::string& lab3) {
  int n1 = A1.dot.dim, n2 = A2.dot.dim;
  auto e1 = [&](int i) { return unit_vec(n1, i); };
  out.add(lab1, scan3(lab1, n1, n1, n2, [&](int x, int y, int a) {
            Vec xy = A1.dot.basis_product(x, y);
            Vec t = rho2[static_cast<size_t>(a)].apply(xy);
            t = add(t, act(mu2, rho1[static_cast<size_t>(y)].apply(unit_vec(n2, a))).apply(e1(x)));
            t = sub(t, A1.dot.apply(e1(x), rho2[static_cast<size_t>(a)].apply(e1(y))));
            t = add(t, act(mu2, rho1[static_cast<size_t>(x)].apply(unit_vec(n2, a))).apply(e1(y)));
            t = sub(t, A1.dot.apply(e1(y), rho2[static_cast<size_t>(a)].apply(e1(x))));
            t = sub(t, act(mu2, A2.P.col(a)).apply(xy));
            return t;
          }));
  out.add(lab3, scan3(lab3, n1, n1, n2, [&](int x, int y, int a) {
            Vec ua = unit_vec(n2, a);
            Vec t = act(rho2, mu1[static_cast<size_t>(x)].apply(ua)).apply(e1(y));
            t = add(t, A1.bracket.apply(mu2[static_cast<size_t>(a)].apply(e1(x)), e1(y)));
            t = sub(t, A1.dot.apply(e1(x), rho2[static_cast<size_t>(a)].apply(e1(y))));
            t = add(t, act(mu2, rho1[static_cast<size_t>(y)].apply(ua)).apply(e1(x)));
            t = sub(t, mu2[static_cast<size_t>(a)].apply(A1.bracket.basis_product(x, y)));
            t = add(t, mu2[static_cast<size_t>(a)].apply(A1.dot.apply(e1(x), A1.P.col(y))));
            return t;
          }));
}

}  // namespace

Conditions check_matched_pair_rel_poisson(const MatchedPairRelPoisson& m) {
  int n1 = m.a1.dot.dim, n2 = m.a2.dot.dim;
  if (static_cast<int>(m.mu1.size()) != n1 || static_cast<int>(m.rho1.size()) != n1 ||
      static_cast<int>(m.mu2.size()) != n2 || static_cast<int>(m.rho2.size()) != n2)
    throw ShapeError("matched_pair_rel_poisson: table size mismatch");
  Conditions out;
  Conditions c1 = check_rel_poisson(m.a1), c2 = check_rel_poisson(m.a2);
  out.add_all(c1, "left-");
  out.add_all(c2, "right-");
  Conditions primary = check_rel_poisson(matched_sum(m));
  out.add_all(primary, "sum-");
  Conditions secondary;
  secondary.add_bool("rep-left", check_rel_poisson_rep({m.a1, n2, m.mu1, m.rho1, m.a2.P}).all());
  secondary.add_bool("rep-right", check_rel_poisson_rep({m.a2, n1, m.mu2, m.rho2, m.a1.P}).all());
  secondary.add_bool("mp-comm-assoc",
                     check_comm_assoc(matched_sum_op(m.a1.dot, m.a2.dot, m.mu1, m.mu1, m.mu2, m.mu2))
                         .all());
  secondary.add_bool("mp-lie",
                     check_lie(matched_sum_op(m.a1.bracket, m.a2.bracket, m.rho1,
                                              negate_all(m.rho1), m.rho2, negate_all(m.rho2)))
                         .all());
  add_mp_conditions(secondary, m.a1, m.a2, m.mu1, m.rho1, m.mu2, m.rho2, "MP1", "MP3");
  add_mp_conditions(secondary, m.a2, m.a1, m.mu2, m.rho2, m.mu1, m.rho1, "MP2", "MP4");
  out.add_all(secondary);
  if (c1.all() && c2.all())
    out.add_bool("engines-agree", primary.all() == secondary.all());
  return out;
}

namespace {

// Five of the ten displayed equations of a matched pair of relative PCA
// algebras; called once per side.
void add_mp_pca_conditions(Conditions& out, const RelPCA& A1, const RelPCA& A2,
                           const std::vector<Mat>& mu1, const std::vector<Mat>& l1,
                           const std::vector<Mat>& r1, const std::vector<Mat>& mu2,
                           const std::vector<Mat>& l2, const std::vector<Mat>& r2,
                           int label_base) {
  int n1 = A1.dot.dim, n2 = A2.dot.dim;
  BinOp br1 = commutator(A1.circ);
  auto e1 = [&](int i) { return unit_vec(n1, i); };
  auto lab = [&](int k) { return "mp-pca-" + std::to_string(label_base + k); };
  out.add(lab(1), scan3(lab(1), n1, n1, n2, [&](int x, int y, int a) {
            Vec ua = unit_vec(n2, a);
            Vec t = A1.dot.apply(e1(x), r2[static_cast<size_t>(a)].apply(e1(y)));
            t = add(t, act(mu2, l1[static_cast<size_t>(y)].apply(ua)).apply(e1(x)));
            t = sub(t, A1.circ.apply(e1(y), mu2[static_cast<size_t>(a)].apply(e1(x))));
            t = sub(t, act(r2, mu1[static_cast<size_t>(x)].apply(ua)).apply(e1(y)));
            t = add(t, mu2[static_cast<size_t>(a)].apply(br1.basis_product(x, y)));
            t = sub(t, mu2[static_cast<size_t>(a)].apply(A1.dot.apply(e1(x), A1.P.col(y))));
            return t;
          }));
  out.add(lab(2), scan3(lab(2), n1, n1, n2, [&](int x, int y, int a) {
            Vec ua = unit_vec(n2, a);
            Vec xy = A1.dot.basis_product(x, y);
            Vec t = A1.dot.apply(e1(x), l2[static_cast<size_t>(a)].apply(e1(y)));
            t = add(t, act(mu2, r1[static_cast<size_t>(y)].apply(ua)).apply(e1(x)));
            t = sub(t, l2[static_cast<size_t>(a)].apply(xy));
            Vec lr_x_a = sub(l1[static_cast<size_t>(x)].apply(ua), r1[static_cast<size_t>(x)].apply(ua));
            t = add(t, act(mu2, lr_x_a).apply(e1(y)));
            Vec rl_a_x = sub(r2[static_cast<size_t>(a)].apply(e1(x)), l2[static_cast<size_t>(a)].apply(e1(x)));
            t = add(t, A1.dot.apply(rl_a_x, e1(y)));
            t = sub(t, act(mu2, A2.P.col(a)).apply(xy));
            return t;
          }));
  out.add(lab(3), scan3(lab(3), n1, n1, n2, [&](int x, int y, int a) {
            Vec ua = unit_vec(n2, a);
            Vec t = mu2[static_cast<size_t>(a)].apply(A1.circ.basis_product(x, y));
            t = sub(t, A1.circ.apply(e1(x), mu2[static_cast<size_t>(a)].apply(e1(y))));
            t = sub(t, act(r2, mu1[static_cast<size_t>(y)].apply(ua)).apply(e1(x)));
            Vec lr_a_x = sub(l2[static_cast<size_t>(a)].apply(e1(x)), r2[static_cast<size_t>(a)].apply(e1(x)));
            t = add(t, A1.dot.apply(lr_a_x, e1(y)));
            Vec rl_x_a = sub(r1[static_cast<size_t>(x)].apply(ua), l1[static_cast<size_t>(x)].apply(ua));
            t = add(t, act(mu2, rl_x_a).apply(e1(y)));
            t = sub(t, mu2[static_cast<size_t>(a)].apply(A1.dot.apply(A1.P.col(x), e1(y))));
            return t;
          }));
  out.add(lab(4), scan3(lab(4), n1, n1, n2, [&](int x, int y, int a) {
            Vec ua = unit_vec(n2, a);
            Vec xy = A1.dot.basis_product(x, y);
            Vec t = r2[static_cast<size_t>(a)].apply(xy);
            t = sub(t, A1.circ.apply(e1(y), mu2[static_cast<size_t>(a)].apply(e1(x))));
            t = sub(t, act(r2, mu1[static_cast<size_t>(x)].apply(ua)).apply(e1(y)));
            t = sub(t, A1.circ.apply(e1(x), mu2[static_cast<size_t>(a)].apply(e1(y))));
            t = sub(t, act(r2, mu1[static_cast<size_t>(y)].apply(ua)).apply(e1(x)));
            t = add(t, A1.Q.apply(mu2[static_cast<size_t>(a)].apply(xy)));
            return t;
          }));
  out.add(lab(5), scan3(lab(5), n1, n1, n2, [&](int x, int y, int a) {
            Vec ua = unit_vec(n2, a);
            Vec xy = A1.dot.basis_product(x, y);
            Vec t = act(l2, mu1[static_cast<size_t>(x)].apply(ua)).apply(e1(y));
            t = add(t, A1.circ.apply(mu2[static_cast<size_t>(a)].apply(e1(x)), e1(y)));
            t = sub(t, l2[static_cast<size_t>(a)].apply(xy));
            t = sub(t, A1.circ.apply(e1(x), mu2[static_cast<size_t>(a)].apply(e1(y))));
            t = sub(t, act(r2, mu1[static_cast<size_t>(y)].apply(ua)).apply(e1(x)));
            t = add(t, A1.Q.apply(mu2[static_cast<size_t>(a)].apply(xy)));
            return t;
          }));
}

}  // namespace

Conditions check_matched_pair_rel_pca(const MatchedPairRelPCA& m) {
  int n1 = m.a1.dot.dim, n2 = m.a2.dot.dim;
  if (static_cast<int>(m.mu1.size()) != n1 || static_cast<int>(m.l1.size()) != n1 ||
      static_cast<int>(m.r1.size()) != n1 || static_cast<int>(m.mu2.size()) != n2 ||
      static_cast<int>(m.l2.size()) != n2 || static_cast<int>(m.r2.size()) != n2)
    throw ShapeError("matched_pair_rel_pca: table size mismatch");
  Conditions out;
  Conditions c1 = check_rel_pca(m.a1), c2 = check_rel_pca(m.a2);
  out.add_all(c1, "left-");
  out.add_all(c2, "right-");
  Conditions primary = check_rel_pca(matched_sum(m));
  out.add_all(primary, "sum-");
  Conditions secondary;
  secondary.add_bool("rep-left",
                     check_rel_pca_rep({m.a1, n2, m.mu1, m.l1, m.r1, m.a2.P, m.a2.Q}).all());
  secondary.add_bool("rep-right",
                     check_rel_pca_rep({m.a2, n1, m.mu2, m.l2, m.r2, m.a1.P, m.a1.Q}).all());
  MatchedPairRelPoisson mrp{associated_rel_poisson(m.a1), associated_rel_poisson(m.a2),
                            m.mu1, diff_all(m.l1, m.r1), m.mu2, diff_all(m.l2, m.r2)};
  secondary.add_bool("mp-rel-poisson", check_matched_pair_rel_poisson(mrp).all());
  secondary.add_bool("mp-apl",
                     check_anti_pre_lie(
                         matched_sum_op(m.a1.circ, m.a2.circ, m.l1, m.r1, m.l2, m.r2))
                         .all());
  add_mp_pca_conditions(secondary, m.a1, m.a2, m.mu1, m.l1, m.r1, m.mu2, m.l2, m.r2, 0);
  add_mp_pca_conditions(secondary, m.a2, m.a1, m.mu2, m.l2, m.r2, m.mu1, m.l1, m.r1, 5);
  out.add_all(secondary);
  if (c1.all() && c2.all())
    out.add_bool("engines-agree", primary.all() == secondary.all());
  return out;
}

Mat standard_pairing(int n) {
  Mat B(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    B(i, n + i) = 1;
    B(n + i, i) = 1;
  }
  return B;
}

MatchedPairRelPCA dual_matched_pair_rel_pca(const RelPCA& a, const RelPCA& astar) {
  BinOp br1 = commutator(a.circ), br2 = commutator(astar.circ);
  return {a, astar, lmats_t(a.dot), lmats_t(br1), neg_rmats_t(a.circ),
          lmats_t(astar.dot), lmats_t(br2), neg_rmats_t(astar.circ)};
}

MatchedPairRelPoisson dual_matched_pair_rel_poisson(const RelPCA& a, const RelPCA& astar) {
  return {associated_rel_poisson(a), associated_rel_poisson(astar),
          lmats_t(a.dot), lmats_t(a.circ), lmats_t(astar.dot), lmats_t(astar.circ)};
}

ManinTriple build_manin_triple(const RelPCA& a, const RelPCA& astar) {
  int n = a.dot.dim;
  if (astar.dot.dim != n) throw ShapeError("build_manin_triple: dims disagree");
  Conditions pre;
  pre.add_bool("dual-operators",
               astar.P == a.Q.transpose() && astar.Q == a.P.transpose());
  pre.add_all(check_rel_pca(a), "left-");
  pre.add_all(check_rel_pca(astar), "right-");
  require(pre, "build_manin_triple: inputs are not dual relative PCA algebras");
  MatchedPairRelPoisson mp = dual_matched_pair_rel_poisson(a, astar);
  return {matched_sum(mp), n, standard_pairing(n)};
}

namespace {

// Residual carrying the coordinates of a product that escape the block
// [lo, lo+len).
Vec off_block(const Vec& v, int lo, int len) {
  Vec r = v;
  for (int k = lo; k < lo + len; ++k) r[static_cast<size_t>(k)] = 0;
  return r;
}

CheckReport closure_check(const std::string& label, const BinOp& op, int lo, int len) {
  return scan2(label, len, len, [&](int i, int j) {
    return off_block(op.basis_product(lo + i, lo + j), lo, len);
  });
}

CheckReport map_block_check(const std::string& label, const Mat& M, int lo, int len) {
  return scan1(label, len, [&](int j) { return off_block(M.col(lo + j), lo, len); });
}

}  // namespace

Conditions check_manin_triple(const ManinTriple& t) {
  int n = t.n;
  if (t.dbl.dot.dim != 2 * n) throw ShapeError("manin_triple: dims disagree");
  Conditions out;
  out.add("sub-A-dot", closure_check("sub-A-dot", t.dbl.dot, 0, n));
  out.add("sub-A-bracket", closure_check("sub-A-bracket", t.dbl.bracket, 0, n));
  out.add("sub-A-op", map_block_check("sub-A-op", t.dbl.P, 0, n));
  out.add("sub-Astar-dot", closure_check("sub-Astar-dot", t.dbl.dot, n, n));
  out.add("sub-Astar-bracket", closure_check("sub-Astar-bracket", t.dbl.bracket, n, n));
  out.add("sub-Astar-op", map_block_check("sub-Astar-op", t.dbl.P, n, n));
  out.add_all(check_rel_poisson(t.dbl));
  // Only the invariant-c2c requirements; B_d is never invariant on a
  // nonabelian bracket.
  Conditions fc = form_checks(t.dbl.dot, t.dbl.bracket, t.form);
  for (const char* label : {"sym", "nondeg", "inv-dot", "2-coc", "invariant-c2c"})
    out.add(std::string("Bd-") + label, *fc.find(label));
  return out;
}

Conditions check_double_construction_frobenius(const BinOp& dot, const Mat& op, int n) {
  if (dot.dim != 2 * n) throw ShapeError("double_construction: dims disagree");
  Conditions out;
  out.add_all(check_comm_assoc(dot));
  out.add("sub-A-dot", closure_check("sub-A-dot", dot, 0, n));
  out.add("sub-Astar-dot", closure_check("sub-Astar-dot", dot, n, n));
  Mat B = standard_pairing(n);
  int N = 2 * n;
  auto e = [&](int i) { return unit_vec(N, i); };
  out.add("Bd-inv-dot", scan3("Bd-inv-dot", N, N, N, [&](int x, int y, int z) {
            Rat s = bform(B, dot.basis_product(x, y), e(z)) -
                    bform(B, e(x), dot.basis_product(y, z));
            return Vec{s};
          }));
  out.add_all(check_derivation(dot, op, "deriv"));
  return out;
}

}  // namespace relpca
