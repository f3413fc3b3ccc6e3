#pragma once

#include <optional>
#include <vector>

#include "relpca/rational.hpp"

namespace relpca {

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

using Vec = std::vector<Rat>;

Vec zero_vec(int n);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& v);
Vec unit_vec(int n, int i);

// Dense exact matrix. Column j is the image of basis vector j, so a
// LinMap is just a Mat applied on the left.
struct Mat {
  int rows{0}, cols{0};
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  static Mat identity(int n);

  Rat& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool is_zero() const;
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

  Vec apply(const Vec& v) const;
  Vec col(int j) const;
  Mat transpose() const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  friend Mat operator*(const Rat& c, const Mat& m);
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

// Exact rank by fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
int rank(const Mat& m);

// Exact Gaussian elimination. nullopt when the system is inconsistent;
// if the solution is not unique an arbitrary consistent one is returned.
std::optional<Vec> solve(const Mat& A, const Vec& b);
std::optional<Mat> inverse(const Mat& A);

// Element of a tensor product U ⊗ W with chosen bases; coeffs(i,j) is the
// coefficient of u_i ⊗ w_j.
struct Tensor2 {
  int dl{0}, dr{0};
  std::vector<Rat> a;

  Tensor2() = default;
  Tensor2(int l, int r) : dl(l), dr(r), a(static_cast<size_t>(l) * r) {}

  Rat& operator()(int i, int j) { return a[static_cast<size_t>(i) * dr + j]; }
  const Rat& operator()(int i, int j) const { return a[static_cast<size_t>(i) * dr + j]; }

  bool is_zero() const;
  Tensor2 operator+(const Tensor2& o) const;
  Tensor2 operator-(const Tensor2& o) const;
  Tensor2 operator-() const;
  friend Tensor2 operator*(const Rat& c, const Tensor2& t);
  bool operator==(const Tensor2& o) const { return dl == o.dl && dr == o.dr && a == o.a; }
};

// tau(x ⊗ y) = y ⊗ x.
Tensor2 tau(const Tensor2& t);
bool is_antisymmetric(const Tensor2& t);
bool is_symmetric(const Tensor2& t);
Tensor2 outer(const Vec& x, const Vec& y);
// Applies a linear map to one tensor factor (slot 0 or 1).
Tensor2 apply_slot(const Mat& m, const Tensor2& t, int slot);
Vec flatten(const Tensor2& t);

struct Tensor3 {
  int d0{0}, d1{0}, d2{0};
  std::vector<Rat> a;

  Tensor3() = default;
  Tensor3(int n0, int n1, int n2)
      : d0(n0), d1(n1), d2(n2), a(static_cast<size_t>(n0) * n1 * n2) {}

  Rat& operator()(int i, int j, int k) {
    return a[(static_cast<size_t>(i) * d1 + j) * d2 + k];
  }
  const Rat& operator()(int i, int j, int k) const {
    return a[(static_cast<size_t>(i) * d1 + j) * d2 + k];
  }

  bool is_zero() const;
  Tensor3 operator+(const Tensor3& o) const;
  Tensor3 operator-(const Tensor3& o) const;
  Tensor3 operator-() const;
  bool operator==(const Tensor3& o) const {
    return d0 == o.d0 && d1 == o.d1 && d2 == o.d2 && a == o.a;
  }
};

// xi(x ⊗ y ⊗ z) = y ⊗ z ⊗ x; xi^3 = id.
Tensor3 xi(const Tensor3& t);
Tensor3 xi2(const Tensor3& t);
// tau ⊗ id and id ⊗ tau.
Tensor3 tau01(const Tensor3& t);
Tensor3 tau12(const Tensor3& t);
Tensor3 apply_slot(const Mat& m, const Tensor3& t, int slot);
// t ⊗ v and v ⊗ t as order-3 tensors.
Tensor3 t2_vec(const Tensor2& t, const Vec& v);
Tensor3 vec_t2(const Vec& v, const Tensor2& t);
Vec flatten(const Tensor3& t);

}  // namespace relpca
