// Test-only oracles: dense 2^N x 2^N operators assembled from Kronecker products
// (no use of the library's index kernels), random inputs, and grid searches.
#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "ghz/bloch.hpp"
#include "ghz/statevector.hpp"
#include "ghz/types.hpp"

namespace testing {

using ghz::cplx;

struct Dense {
  std::size_t dim = 0;
  std::vector<cplx> a;  // row-major

  explicit Dense(std::size_t d = 0) : dim(d), a(d * d, cplx{0.0, 0.0}) {}
  static Dense identity(std::size_t d) {
    Dense m(d);
    for (std::size_t k = 0; k < d; ++k) m(k, k) = 1.0;
    return m;
  }
  cplx& operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }
};

inline Dense operator*(const Dense& x, const Dense& y) {
  Dense r(x.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t k = 0; k < x.dim; ++k) {
      const cplx v = x(i, k);
      if (v == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < x.dim; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

inline Dense operator+(const Dense& x, const Dense& y) {
  Dense r(x.dim);
  for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
  return r;
}

inline Dense operator-(const Dense& x, const Dense& y) {
  Dense r(x.dim);
  for (std::size_t k = 0; k < r.a.size(); ++k) r.a[k] = x.a[k] - y.a[k];
  return r;
}

inline Dense scaled(cplx s, const Dense& x) {
  Dense r = x;
  for (auto& v : r.a) v *= s;
  return r;
}

inline Dense dagger(const Dense& x) {
  Dense r(x.dim);
  for (std::size_t i = 0; i < x.dim; ++i)
    for (std::size_t j = 0; j < x.dim; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

inline double max_diff(const Dense& x, const Dense& y) {
  double d = 0.0;
  for (std::size_t k = 0; k < x.a.size(); ++k) d = std::max(d, std::abs(x.a[k] - y.a[k]));
  return d;
}

inline Dense kron(const Dense& hi, const Dense& lo) {
  Dense r(hi.dim * lo.dim);
  for (std::size_t a = 0; a < hi.dim; ++a)
    for (std::size_t b = 0; b < hi.dim; ++b)
      for (std::size_t c = 0; c < lo.dim; ++c)
        for (std::size_t d = 0; d < lo.dim; ++d) r(a * lo.dim + c, b * lo.dim + d) = hi(a, b) * lo(c, d);
  return r;
}

inline Dense from2(const ghz::Mat2& m) {
  Dense r(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return r;
}

/// Operator on qubit k of n (qubit 0 is the least significant, i.e. rightmost
/// Kronecker factor).
inline Dense on_qubit(int n, int k, const ghz::Mat2& m) {
  Dense out = Dense::identity(1);
  for (int q = n - 1; q >= 0; --q) out = kron(out, q == k ? from2(m) : Dense::identity(2));
  return out;
}

inline Dense pair_gate_dense(int n, int i, int j) {
  const Dense yi = on_qubit(n, i, ghz::pauli_y());
  const Dense yj = on_qubit(n, j, ghz::pauli_y());
  const std::size_t d = std::size_t{1} << n;
  return scaled(0.5, Dense::identity(d) + yi + yj - yi * yj);
}

/// S as an explicit matrix product of every S_ij.
inline Dense s_dense(int n) {
  Dense s = Dense::identity(std::size_t{1} << n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s = pair_gate_dense(n, i, j) * s;
  return s;
}

inline std::vector<cplx> apply(const Dense& m, std::span<const cplx> v) {
  std::vector<cplx> r(m.dim, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) r[i] += m(i, j) * v[j];
  return r;
}

inline double max_diff(std::span<const cplx> x, std::span<const cplx> y) {
  double d = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) d = std::max(d, std::abs(x[k] - y[k]));
  return d;
}

/// Spinor tensor product by explicit Kronecker products.
inline std::vector<cplx> kron_spinors(const std::vector<ghz::Spinor>& s) {
  std::vector<cplx> out{1.0};
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    std::vector<cplx> next;
    for (const cplx& hi : out)
      for (const cplx& lo : *it) next.push_back(hi * lo);
    out = std::move(next);
  }
  return out;
}

inline ghz::StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> a(std::size_t{1} << n);
  double nrm = 0.0;
  for (auto& v : a) {
    v = {g(rng), g(rng)};
    nrm += std::norm(v);
  }
  for (auto& v : a) v /= std::sqrt(nrm);
  return ghz::StateVector(n, std::move(a));
}

inline std::vector<double> random_thetas(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-ghz::kPi, ghz::kPi);
  std::vector<double> t(static_cast<std::size_t>(n));
  for (auto& v : t) v = u(rng);
  return t;
}

inline ghz::QubitAngles random_sphere(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ghz::QubitAngles a;
  for (int k = 0; k < n; ++k) a.push_back({std::acos(1.0 - 2.0 * u(rng)), 2.0 * ghz::kPi * u(rng)});
  return a;
}

/// Maximum of |<phi+(eta)|psi>|^2 over `points` etas in (-pi, pi], evaluating
/// the overlap from spinors directly.
inline double grid_search_pmax(double theta, double phi, int points, double* best_eta = nullptr) {
  const ghz::Spinor psi{std::cos(theta / 2), std::sin(theta / 2) * std::polar(1.0, phi)};
  double best = -1.0;
  for (int k = 1; k <= points; ++k) {
    const double eta = -ghz::kPi + 2.0 * ghz::kPi * k / points;
    const cplx o = std::cos(eta / 2) * psi[0] + std::sin(eta / 2) * psi[1];
    const double p = std::norm(o);
    if (p > best) {
      best = p;
      if (best_eta) *best_eta = eta;
    }
  }
  return best;
}

}  // namespace testing
