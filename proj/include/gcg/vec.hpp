#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <initializer_list>

namespace gcg {

// Highest ambient dimension the catalog supports. Tolerances throughout the
// library are calibrated for double precision up to this dimension.
inline constexpr int kMaxDim = 8;

// Fixed-capacity Euclidean vector. The dimension is set at construction and
// never changes; storage is inline so vectors of points stay contiguous.
class Vec {
 public:
  Vec() = default;
  explicit Vec(int n) : n_(n) { assert(n >= 0 && n <= kMaxDim); }
  Vec(std::initializer_list<double> xs) : n_(static_cast<int>(xs.size())) {
    assert(n_ <= kMaxDim);
    std::copy(xs.begin(), xs.end(), c_.begin());
  }

  int dim() const { return n_; }
  double& operator[](int i) { assert(i >= 0 && i < n_); return c_[i]; }
  double operator[](int i) const { assert(i >= 0 && i < n_); return c_[i]; }

  Vec& operator+=(const Vec& o) {
    assert(n_ == o.n_);
    for (int i = 0; i < n_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    assert(n_ == o.n_);
    for (int i = 0; i < n_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < n_; ++i) c_[i] *= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator-(Vec a) { return a *= -1.0; }

  friend bool operator==(const Vec& a, const Vec& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
      if (a.c_[i] != b.c_[i]) return false;
    return true;
  }

 private:
  std::array<double, kMaxDim> c_{};
  int n_ = 0;
};

inline double dot(const Vec& a, const Vec& b) {
  assert(a.dim() == b.dim());
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline double dist2(const Vec& a, const Vec& b) {
  assert(a.dim() == b.dim());
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

inline double dist(const Vec& a, const Vec& b) { return std::sqrt(dist2(a, b)); }

// Unit basis vector e_i in dimension n.
inline Vec axis_vec(int n, int i) {
  Vec v(n);
  v[i] = 1.0;
  return v;
}

inline Vec normalized(const Vec& a) {
  const double len = norm(a);
  assert(len > 0.0);
  return a * (1.0 / len);
}

}  // namespace gcg
