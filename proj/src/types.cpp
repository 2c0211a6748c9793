#include "ghz/types.hpp"

#include <algorithm>
#include <cmath>

namespace ghz {

Mat2 identity2() { return Mat2{{1.0, 0.0, 0.0, 1.0}}; }
Mat2 pauli_x() { return Mat2{{0.0, 1.0, 1.0, 0.0}}; }
Mat2 pauli_y() { return Mat2{{0.0, -kI, kI, 0.0}}; }
Mat2 pauli_z() { return Mat2{{1.0, 0.0, 0.0, -1.0}}; }

Mat2 hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return Mat2{{h, h, h, -h}};
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Mat2 operator+(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.m[k] = a.m[k] + b.m[k];
  return r;
}

Mat2 operator-(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.m[k] = a.m[k] - b.m[k];
  return r;
}

Mat2 operator*(cplx s, const Mat2& a) {
  Mat2 r;
  for (std::size_t k = 0; k < 4; ++k) r.m[k] = s * a.m[k];
  return r;
}

Spinor operator*(const Mat2& a, const Spinor& v) {
  return {a(0, 0) * v[0] + a(0, 1) * v[1], a(1, 0) * v[0] + a(1, 1) * v[1]};
}

Mat2 adjoint(const Mat2& a) {
  Mat2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < 4; ++k) d = std::max(d, std::abs(a.m[k] - b.m[k]));
  return d;
}

bool is_unitary(const Mat2& a, double tol) {
  return max_abs_diff(adjoint(a) * a, identity2()) <= tol;
}

bool is_hermitian(const Mat2& a, double tol) { return max_abs_diff(adjoint(a), a) <= tol; }

Mat4 identity4() {
  Mat4 r;
  for (int k = 0; k < 4; ++k) r(k, k) = 1.0;
  return r;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx s = 0.0;
      for (int k = 0; k < 4; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (std::size_t k = 0; k < 16; ++k) r.m[k] = a.m[k] + b.m[k];
  return r;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 r;
  for (std::size_t k = 0; k < 16; ++k) r.m[k] = a.m[k] - b.m[k];
  return r;
}

Mat4 operator*(cplx s, const Mat4& a) {
  Mat4 r;
  for (std::size_t k = 0; k < 16; ++k) r.m[k] = s * a.m[k];
  return r;
}

Mat4 adjoint(const Mat4& a) {
  Mat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = std::conj(a(j, i));
  return r;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < 16; ++k) d = std::max(d, std::abs(a.m[k] - b.m[k]));
  return d;
}

bool is_unitary(const Mat4& a, double tol) {
  return max_abs_diff(adjoint(a) * a, identity4()) <= tol;
}

bool is_hermitian(const Mat4& a, double tol) { return max_abs_diff(adjoint(a), a) <= tol; }

Mat4 kron(const Mat2& high, const Mat2& low) {
  Mat4 r;
  for (int hr = 0; hr < 2; ++hr)
    for (int lr = 0; lr < 2; ++lr)
      for (int hc = 0; hc < 2; ++hc)
        for (int lc = 0; lc < 2; ++lc) r(2 * hr + lr, 2 * hc + lc) = high(hr, hc) * low(lr, lc);
  return r;
}

cplx dot(const Spinor& a, const Spinor& b) { return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]; }

}  // namespace ghz
