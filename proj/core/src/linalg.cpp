#include "relpca/linalg.hpp"

#include <algorithm>

namespace relpca {

Vec zero_vec(int n) { return Vec(static_cast<size_t>(n)); }

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& c) { return c == 0; });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw ShapeError("vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rat& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

Vec unit_vec(int n, int i) {
  Vec r(static_cast<size_t>(n));
  r[static_cast<size_t>(i)] = 1;
  return r;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Mat::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c == 0; });
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols) throw ShapeError("matrix apply: size mismatch");
  Vec r(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    Rat s = 0;
    for (int j = 0; j < cols; ++j) s += (*this)(i, j) * v[static_cast<size_t>(j)];
    r[static_cast<size_t>(i)] = s;
  }
  return r;
}

Vec Mat::col(int j) const {
  Vec r(static_cast<size_t>(rows));
  for (int i = 0; i < rows; ++i) r[static_cast<size_t>(i)] = (*this)(i, j);
  return r;
}

Mat Mat::transpose() const {
  Mat m(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (!same_shape(o)) throw ShapeError("matrix add: shape mismatch");
  Mat m(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (!same_shape(o)) throw ShapeError("matrix sub: shape mismatch");
  Mat m(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] - o.a[i];
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols != o.rows) throw ShapeError("matrix mul: inner dims disagree");
  Mat m(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Rat& c = (*this)(i, k);
      if (c == 0) continue;
      for (int j = 0; j < o.cols; ++j) m(i, j) += c * o(k, j);
    }
  return m;
}

Mat Mat::operator-() const {
  Mat m(rows, cols);
  for (size_t i = 0; i < a.size(); ++i) m.a[i] = -a[i];
  return m;
}

Mat operator*(const Rat& c, const Mat& m) {
  Mat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = c * m.a[i];
  return r;
}

int rank(const Mat& m) {
  // Clear denominators row by row, then run Bareiss elimination over the
  // integers; divisions below are exact.
  int nr = m.rows, nc = m.cols;
  std::vector<std::vector<Int>> w(static_cast<size_t>(nr), std::vector<Int>(static_cast<size_t>(nc)));
  for (int i = 0; i < nr; ++i) {
    Int l = 1;
    for (int j = 0; j < nc; ++j) l = lcm(l, denominator(m(i, j)));
    for (int j = 0; j < nc; ++j) {
      Rat s = m(i, j) * Rat(l);
      w[static_cast<size_t>(i)][static_cast<size_t>(j)] = numerator(s);
    }
  }
  int rk = 0;
  Int prev = 1;
  for (int col = 0; col < nc && rk < nr; ++col) {
    int piv = -1;
    for (int i = rk; i < nr; ++i)
      if (w[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(w[static_cast<size_t>(piv)], w[static_cast<size_t>(rk)]);
    for (int i = rk + 1; i < nr; ++i) {
      for (int j = col + 1; j < nc; ++j) {
        Int t = w[static_cast<size_t>(rk)][static_cast<size_t>(col)] * w[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                w[static_cast<size_t>(i)][static_cast<size_t>(col)] * w[static_cast<size_t>(rk)][static_cast<size_t>(j)];
        w[static_cast<size_t>(i)][static_cast<size_t>(j)] = t / prev;
      }
      w[static_cast<size_t>(i)][static_cast<size_t>(col)] = 0;
    }
    prev = w[static_cast<size_t>(rk)][static_cast<size_t>(col)];
    ++rk;
  }
  return rk;
}

namespace {

// Row-reduces [A | B]; returns reduced pair and pivot column list.
struct Reduced {
  Mat A, B;
  std::vector<int> pivot_col;
};

Reduced gauss(Mat A, Mat B) {
  int nr = A.rows, nc = A.cols;
  int row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < nc && row < nr; ++col) {
    int piv = -1;
    for (int i = row; i < nr; ++i)
      if (A(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < nc; ++j) std::swap(A(piv, j), A(row, j));
    if (piv != row)
      for (int j = 0; j < B.cols; ++j) std::swap(B(piv, j), B(row, j));
    Rat inv = Rat(1) / A(row, col);
    for (int j = 0; j < nc; ++j) A(row, j) *= inv;
    for (int j = 0; j < B.cols; ++j) B(row, j) *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == row) continue;
      Rat f = A(i, col);
      if (f == 0) continue;
      for (int j = 0; j < nc; ++j) A(i, j) -= f * A(row, j);
      for (int j = 0; j < B.cols; ++j) B(i, j) -= f * B(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(A), std::move(B), std::move(pivots)};
}

}  // namespace

std::optional<Vec> solve(const Mat& A, const Vec& b) {
  if (static_cast<int>(b.size()) != A.rows) throw ShapeError("solve: rhs size mismatch");
  Mat B(A.rows, 1);
  for (int i = 0; i < A.rows; ++i) B(i, 0) = b[static_cast<size_t>(i)];
  Reduced red = gauss(A, B);
  int nrank = static_cast<int>(red.pivot_col.size());
  for (int i = nrank; i < A.rows; ++i)
    if (red.B(i, 0) != 0) return std::nullopt;
  Vec x(static_cast<size_t>(A.cols));
  for (int r = 0; r < nrank; ++r) x[static_cast<size_t>(red.pivot_col[static_cast<size_t>(r)])] = red.B(r, 0);
  return x;
}

std::optional<Mat> inverse(const Mat& A) {
  if (A.rows != A.cols) throw ShapeError("inverse: not square");
  Reduced red = gauss(A, Mat::identity(A.rows));
  if (static_cast<int>(red.pivot_col.size()) != A.rows) return std::nullopt;
  return red.B;
}

bool Tensor2::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c == 0; });
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
  if (dl != o.dl || dr != o.dr) throw ShapeError("tensor2 add: shape mismatch");
  Tensor2 t(dl, dr);
  for (size_t i = 0; i < a.size(); ++i) t.a[i] = a[i] + o.a[i];
  return t;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
  if (dl != o.dl || dr != o.dr) throw ShapeError("tensor2 sub: shape mismatch");
  Tensor2 t(dl, dr);
  for (size_t i = 0; i < a.size(); ++i) t.a[i] = a[i] - o.a[i];
  return t;
}

Tensor2 Tensor2::operator-() const {
  Tensor2 t(dl, dr);
  for (size_t i = 0; i < a.size(); ++i) t.a[i] = -a[i];
  return t;
}

Tensor2 operator*(const Rat& c, const Tensor2& t) {
  Tensor2 r(t.dl, t.dr);
  for (size_t i = 0; i < t.a.size(); ++i) r.a[i] = c * t.a[i];
  return r;
}

Tensor2 tau(const Tensor2& t) {
  if (t.dl != t.dr) throw ShapeError("tau: factors have different dimensions");
  Tensor2 r(t.dr, t.dl);
  for (int i = 0; i < t.dl; ++i)
    for (int j = 0; j < t.dr; ++j) r(j, i) = t(i, j);
  return r;
}

bool is_antisymmetric(const Tensor2& t) {
  if (t.dl != t.dr) return false;
  for (int i = 0; i < t.dl; ++i)
    for (int j = 0; j <= i; ++j)
      if (t(i, j) != -t(j, i)) return false;
  return true;
}

bool is_symmetric(const Tensor2& t) {
  if (t.dl != t.dr) return false;
  for (int i = 0; i < t.dl; ++i)
    for (int j = 0; j < i; ++j)
      if (t(i, j) != t(j, i)) return false;
  return true;
}

Tensor2 outer(const Vec& x, const Vec& y) {
  Tensor2 t(static_cast<int>(x.size()), static_cast<int>(y.size()));
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) t(static_cast<int>(i), static_cast<int>(j)) = x[i] * y[j];
  }
  return t;
}

Tensor2 apply_slot(const Mat& m, const Tensor2& t, int slot) {
  if (slot == 0) {
    if (m.cols != t.dl) throw ShapeError("apply_slot 0: dim mismatch");
    Tensor2 r(m.rows, t.dr);
    for (int i = 0; i < m.rows; ++i)
      for (int k = 0; k < t.dl; ++k) {
        const Rat& c = m(i, k);
        if (c == 0) continue;
        for (int j = 0; j < t.dr; ++j) r(i, j) += c * t(k, j);
      }
    return r;
  }
  if (slot == 1) {
    if (m.cols != t.dr) throw ShapeError("apply_slot 1: dim mismatch");
    Tensor2 r(t.dl, m.rows);
    for (int j = 0; j < m.rows; ++j)
      for (int k = 0; k < t.dr; ++k) {
        const Rat& c = m(j, k);
        if (c == 0) continue;
        for (int i = 0; i < t.dl; ++i) r(i, j) += c * t(i, k);
      }
    return r;
  }
  throw ShapeError("apply_slot: slot out of range");
}

Vec flatten(const Tensor2& t) { return t.a; }

bool Tensor3::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rat& c) { return c == 0; });
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
  if (d0 != o.d0 || d1 != o.d1 || d2 != o.d2) throw ShapeError("tensor3 add: shape mismatch");
  Tensor3 t(d0, d1, d2);
  for (size_t i = 0; i < a.size(); ++i) t.a[i] = a[i] + o.a[i];
  return t;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
  if (d0 != o.d0 || d1 != o.d1 || d2 != o.d2) throw ShapeError("tensor3 sub: shape mismatch");
  Tensor3 t(d0, d1, d2);
  for (size_t i = 0; i < a.size(); ++i) t.a[i] = a[i] - o.a[i];
  return t;
}

Tensor3 Tensor3::operator-() const {
  Tensor3 t(d0, d1, d2);
  for (size_t i = 0; i < a.size(); ++i) t.a[i] = -a[i];
  return t;
}

Tensor3 xi(const Tensor3& t) {
  if (t.d0 != t.d1 || t.d1 != t.d2) throw ShapeError("xi: factors have different dimensions");
  Tensor3 r(t.d0, t.d1, t.d2);
  // xi sends x ⊗ y ⊗ z to y ⊗ z ⊗ x, i.e. entry (a,b,c) comes from (c,a,b).
  for (int i = 0; i < t.d0; ++i)
    for (int j = 0; j < t.d1; ++j)
      for (int k = 0; k < t.d2; ++k) r(i, j, k) = t(k, i, j);
  return r;
}

Tensor3 xi2(const Tensor3& t) { return xi(xi(t)); }

Tensor3 tau01(const Tensor3& t) {
  if (t.d0 != t.d1) throw ShapeError("tau01: dims disagree");
  Tensor3 r(t.d1, t.d0, t.d2);
  for (int i = 0; i < r.d0; ++i)
    for (int j = 0; j < r.d1; ++j)
      for (int k = 0; k < r.d2; ++k) r(i, j, k) = t(j, i, k);
  return r;
}

Tensor3 tau12(const Tensor3& t) {
  if (t.d1 != t.d2) throw ShapeError("tau12: dims disagree");
  Tensor3 r(t.d0, t.d2, t.d1);
  for (int i = 0; i < r.d0; ++i)
    for (int j = 0; j < r.d1; ++j)
      for (int k = 0; k < r.d2; ++k) r(i, j, k) = t(i, k, j);
  return r;
}

Tensor3 apply_slot(const Mat& m, const Tensor3& t, int slot) {
  int dims[3] = {t.d0, t.d1, t.d2};
  if (slot < 0 || slot > 2) throw ShapeError("apply_slot: slot out of range");
  if (m.cols != dims[slot]) throw ShapeError("apply_slot: dim mismatch");
  dims[slot] = m.rows;
  Tensor3 r(dims[0], dims[1], dims[2]);
  for (int i = 0; i < t.d0; ++i)
    for (int j = 0; j < t.d1; ++j)
      for (int k = 0; k < t.d2; ++k) {
        const Rat& c = t(i, j, k);
        if (c == 0) continue;
        int idx[3] = {i, j, k};
        for (int p = 0; p < m.rows; ++p) {
          const Rat& w = m(p, idx[slot]);
          if (w == 0) continue;
          int out[3] = {i, j, k};
          out[slot] = p;
          r(out[0], out[1], out[2]) += w * c;
        }
      }
  return r;
}

Tensor3 t2_vec(const Tensor2& t, const Vec& v) {
  Tensor3 r(t.dl, t.dr, static_cast<int>(v.size()));
  for (int i = 0; i < t.dl; ++i)
    for (int j = 0; j < t.dr; ++j) {
      const Rat& c = t(i, j);
      if (c == 0) continue;
      for (size_t k = 0; k < v.size(); ++k) r(i, j, static_cast<int>(k)) = c * v[k];
    }
  return r;
}

Tensor3 vec_t2(const Vec& v, const Tensor2& t) {
  Tensor3 r(static_cast<int>(v.size()), t.dl, t.dr);
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < t.dl; ++j)
      for (int k = 0; k < t.dr; ++k) r(static_cast<int>(i), j, k) = v[i] * t(j, k);
  }
  return r;
}

Vec flatten(const Tensor3& t) { return t.a; }

}  // namespace relpca
