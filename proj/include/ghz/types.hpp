// Basic numeric types shared by every module: complex amplitudes, single-qubit
// spinors, and small dense operators.
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <numbers>

namespace ghz {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

/// Single-qubit pure state (amplitude of |0>, amplitude of |1>).
using Spinor = std::array<cplx, 2>;

/// 2x2 operator, row-major. Used for Paulis, rotations and basis changes.
struct Mat2 {
  std::array<cplx, 4> m{};

  cplx& operator()(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
  const cplx& operator()(int r, int c) const {
    return m[static_cast<std::size_t>(2 * r + c)];
  }
};

/// 4x4 operator on an ordered qubit pair (i, j), row-major, with basis index
/// b_i + 2*b_j (the first qubit of the pair is the low bit).
struct Mat4 {
  std::array<cplx, 16> m{};

  cplx& operator()(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
  const cplx& operator()(int r, int c) const {
    return m[static_cast<std::size_t>(4 * r + c)];
  }
};

Mat2 identity2();
Mat2 pauli_x();
/// sigma_y = [[0, -i], [i, 0]].
Mat2 pauli_y();
Mat2 pauli_z();
Mat2 hadamard();

Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(cplx s, const Mat2& a);
Spinor operator*(const Mat2& a, const Spinor& v);
Mat2 adjoint(const Mat2& a);
double max_abs_diff(const Mat2& a, const Mat2& b);
bool is_unitary(const Mat2& a, double tol = 1e-12);
bool is_hermitian(const Mat2& a, double tol = 1e-12);

Mat4 identity4();
Mat4 operator*(const Mat4& a, const Mat4& b);
Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Mat4 operator*(cplx s, const Mat4& a);
Mat4 adjoint(const Mat4& a);
double max_abs_diff(const Mat4& a, const Mat4& b);
bool is_unitary(const Mat4& a, double tol = 1e-12);
bool is_hermitian(const Mat4& a, double tol = 1e-12);

/// Operator on the pair (low, high): high (x) low in the Mat4 index convention.
Mat4 kron(const Mat2& high, const Mat2& low);

cplx dot(const Spinor& a, const Spinor& b);  // <a|b>

}  // namespace ghz
