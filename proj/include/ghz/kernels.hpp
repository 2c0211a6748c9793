// Amplitude-array kernels. Every kernel exists twice: a straightforward serial
// reference and an OpenMP version. The parallel versions write disjoint index
// pairs/quads per iteration, so gate kernels are bit-identical to the serial
// ones; reductions agree to rounding.
//
// Index convention: qubit k is bit k of the amplitude index.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "ghz/types.hpp"

namespace ghz::kernels {

namespace serial {

void apply_single(std::span<cplx> amps, int k, const Mat2& u);
void apply_two(std::span<cplx> amps, int i, int j, const Mat4& u);
/// amps[x] *= phases[popcount(x)]; phases has n_qubits + 1 entries.
void apply_weight_phases(std::span<cplx> amps, std::span<const cplx> phases);
/// amps *= (I + c * prod_k sigma_y^(k)) scaled by `scale`.
void apply_identity_plus_y_string(std::span<cplx> amps, int n_qubits, cplx c, double scale);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm_squared(std::span<const cplx> a);

}  // namespace serial

namespace parallel {

void apply_single(std::span<cplx> amps, int k, const Mat2& u);
void apply_two(std::span<cplx> amps, int i, int j, const Mat4& u);
void apply_weight_phases(std::span<cplx> amps, std::span<const cplx> phases);
void apply_identity_plus_y_string(std::span<cplx> amps, int n_qubits, cplx c, double scale);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm_squared(std::span<const cplx> a);

}  // namespace parallel

/// Arrays at least this long go to the parallel kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

void apply_single(std::span<cplx> amps, int k, const Mat2& u);
void apply_two(std::span<cplx> amps, int i, int j, const Mat4& u);
void apply_weight_phases(std::span<cplx> amps, std::span<const cplx> phases);
void apply_identity_plus_y_string(std::span<cplx> amps, int n_qubits, cplx c, double scale);
cplx inner(std::span<const cplx> a, std::span<const cplx> b);
double norm_squared(std::span<const cplx> a);

}  // namespace ghz::kernels
