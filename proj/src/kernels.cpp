#include "ghz/kernels.hpp"

#include <bit>
#include <cstdint>

namespace ghz::kernels {

namespace {

using Index = std::int64_t;

// Index of the pair/quad base with zero bits inserted at the gate positions.
inline std::uint64_t insert_zero(std::uint64_t x, int bit) {
  const std::uint64_t low = x & ((std::uint64_t{1} << bit) - 1);
  return ((x >> bit) << (bit + 1)) | low;
}

inline void single_at(cplx* a, std::uint64_t base, std::uint64_t stride, const Mat2& u) {
  const cplx a0 = a[base];
  const cplx a1 = a[base | stride];
  a[base] = u.m[0] * a0 + u.m[1] * a1;
  a[base | stride] = u.m[2] * a0 + u.m[3] * a1;
}

inline void two_at(cplx* a, std::uint64_t base, std::uint64_t bi, std::uint64_t bj, const Mat4& u) {
  const std::uint64_t idx[4] = {base, base | bi, base | bj, base | bi | bj};
  const cplx v[4] = {a[idx[0]], a[idx[1]], a[idx[2]], a[idx[3]]};
  for (int r = 0; r < 4; ++r)
    a[idx[r]] = u.m[4 * r] * v[0] + u.m[4 * r + 1] * v[1] + u.m[4 * r + 2] * v[2] +
                u.m[4 * r + 3] * v[3];
}

inline std::uint64_t quad_base(std::uint64_t q, int lo, int hi) {
  return insert_zero(insert_zero(q, lo), hi);
}

// i^w (-i)^(n-w): phase of prod_k sigma_y acting on a basis state whose image
// has popcount w.
inline cplx y_string_phase(int w, int n) {
  static const cplx powers[4] = {1.0, kI, -1.0, -kI};
  // i^w (-i)^(n-w) = i^(w - (n - w)) = i^(2w - n)
  const int e = ((2 * w - n) % 4 + 4) % 4;
  return powers[e];
}

inline void y_string_at(cplx* a, std::uint64_t x, std::uint64_t mask, int n, cplx c,
                        double scale) {
  const std::uint64_t xb = x ^ mask;
  const cplx ax = a[x];
  const cplx axb = a[xb];
  // (prod sigma_y psi)[x] = phase(popcount(x)) * psi[x ^ mask]
  a[x] = scale * (ax + c * y_string_phase(std::popcount(x), n) * axb);
  a[xb] = scale * (axb + c * y_string_phase(std::popcount(xb), n) * ax);
}

}  // namespace

namespace serial {

void apply_single(std::span<cplx> amps, int k, const Mat2& u) {
  const std::uint64_t stride = std::uint64_t{1} << k;
  const std::uint64_t half = amps.size() / 2;
  for (std::uint64_t p = 0; p < half; ++p) single_at(amps.data(), insert_zero(p, k), stride, u);
}

void apply_two(std::span<cplx> amps, int i, int j, const Mat4& u) {
  const int lo = i < j ? i : j;
  const int hi = i < j ? j : i;
  const std::uint64_t bi = std::uint64_t{1} << i;
  const std::uint64_t bj = std::uint64_t{1} << j;
  const std::uint64_t quarter = amps.size() / 4;
  for (std::uint64_t q = 0; q < quarter; ++q) two_at(amps.data(), quad_base(q, lo, hi), bi, bj, u);
}

void apply_weight_phases(std::span<cplx> amps, std::span<const cplx> phases) {
  for (std::uint64_t x = 0; x < amps.size(); ++x) amps[x] *= phases[std::popcount(x)];
}

void apply_identity_plus_y_string(std::span<cplx> amps, int n_qubits, cplx c, double scale) {
  const std::uint64_t mask = amps.size() - 1;
  const std::uint64_t half = amps.size() / 2;
  for (std::uint64_t x = 0; x < half; ++x) y_string_at(amps.data(), x, mask, n_qubits, c, scale);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  cplx s = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x) s += std::conj(a[x]) * b[x];
  return s;
}

double norm_squared(std::span<const cplx> a) {
  double s = 0.0;
  for (const cplx& v : a) s += std::norm(v);
  return s;
}

}  // namespace serial

namespace parallel {

void apply_single(std::span<cplx> amps, int k, const Mat2& u) {
  const std::uint64_t stride = std::uint64_t{1} << k;
  const Index half = static_cast<Index>(amps.size() / 2);
  cplx* a = amps.data();
#pragma omp parallel for schedule(static)
  for (Index p = 0; p < half; ++p) single_at(a, insert_zero(static_cast<std::uint64_t>(p), k), stride, u);
}

void apply_two(std::span<cplx> amps, int i, int j, const Mat4& u) {
  const int lo = i < j ? i : j;
  const int hi = i < j ? j : i;
  const std::uint64_t bi = std::uint64_t{1} << i;
  const std::uint64_t bj = std::uint64_t{1} << j;
  const Index quarter = static_cast<Index>(amps.size() / 4);
  cplx* a = amps.data();
#pragma omp parallel for schedule(static)
  for (Index q = 0; q < quarter; ++q)
    two_at(a, quad_base(static_cast<std::uint64_t>(q), lo, hi), bi, bj, u);
}

void apply_weight_phases(std::span<cplx> amps, std::span<const cplx> phases) {
  const Index n = static_cast<Index>(amps.size());
  cplx* a = amps.data();
  const cplx* ph = phases.data();
#pragma omp parallel for schedule(static)
  for (Index x = 0; x < n; ++x) a[x] *= ph[std::popcount(static_cast<std::uint64_t>(x))];
}

void apply_identity_plus_y_string(std::span<cplx> amps, int n_qubits, cplx c, double scale) {
  const std::uint64_t mask = amps.size() - 1;
  const Index half = static_cast<Index>(amps.size() / 2);
  cplx* a = amps.data();
#pragma omp parallel for schedule(static)
  for (Index x = 0; x < half; ++x)
    y_string_at(a, static_cast<std::uint64_t>(x), mask, n_qubits, c, scale);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  double re = 0.0;
  double im = 0.0;
  const Index n = static_cast<Index>(a.size());
  const cplx* pa = a.data();
  const cplx* pb = b.data();
#pragma omp parallel for reduction(+ : re, im) schedule(static)
  for (Index x = 0; x < n; ++x) {
    const cplx v = std::conj(pa[x]) * pb[x];
    re += v.real();
    im += v.imag();
  }
  return {re, im};
}

double norm_squared(std::span<const cplx> a) {
  double s = 0.0;
  const Index n = static_cast<Index>(a.size());
  const cplx* pa = a.data();
#pragma omp parallel for reduction(+ : s) schedule(static)
  for (Index x = 0; x < n; ++x) s += std::norm(pa[x]);
  return s;
}

}  // namespace parallel

namespace {
inline bool use_parallel(std::size_t n) { return n >= kParallelThreshold; }
}  // namespace

void apply_single(std::span<cplx> amps, int k, const Mat2& u) {
  use_parallel(amps.size()) ? parallel::apply_single(amps, k, u) : serial::apply_single(amps, k, u);
}

void apply_two(std::span<cplx> amps, int i, int j, const Mat4& u) {
  use_parallel(amps.size()) ? parallel::apply_two(amps, i, j, u) : serial::apply_two(amps, i, j, u);
}

void apply_weight_phases(std::span<cplx> amps, std::span<const cplx> phases) {
  use_parallel(amps.size()) ? parallel::apply_weight_phases(amps, phases)
                            : serial::apply_weight_phases(amps, phases);
}

void apply_identity_plus_y_string(std::span<cplx> amps, int n_qubits, cplx c, double scale) {
  use_parallel(amps.size()) ? parallel::apply_identity_plus_y_string(amps, n_qubits, c, scale)
                            : serial::apply_identity_plus_y_string(amps, n_qubits, c, scale);
}

cplx inner(std::span<const cplx> a, std::span<const cplx> b) {
  return use_parallel(a.size()) ? parallel::inner(a, b) : serial::inner(a, b);
}

double norm_squared(std::span<const cplx> a) {
  return use_parallel(a.size()) ? parallel::norm_squared(a) : serial::norm_squared(a);
}

}  // namespace ghz::kernels
