// Dense statevector over 2^N computational-basis states.
//
// Qubit k corresponds to bit k of the amplitude index (qubit 0 is the least
// significant bit). States are values: operations return new states and never
// mutate their inputs.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "ghz/bloch.hpp"
#include "ghz/density_matrix.hpp"
#include "ghz/types.hpp"

namespace ghz {

inline constexpr int kMaxQubits = 20;

/// Effective qubit cap: kMaxQubits, lowered (never raised) by the
/// GHZ_MAX_QUBITS environment variable when it holds a smaller positive integer.
int qubit_cap();

class StateVector {
 public:
  /// |0...0> on n qubits.
  explicit StateVector(int n_qubits);

  /// Takes ownership of raw amplitudes. The length must be 2^n_qubits. No
  /// normalization is applied.
  StateVector(int n_qubits, std::vector<cplx> amps);

  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const cplx> amplitudes() const { return amps_; }
  const cplx& operator[](std::size_t x) const { return amps_[x]; }

  double norm_squared() const;

  // Mutable access for the module's own kernels; returned states are values.
  std::span<cplx> mutable_amplitudes() { return amps_; }

 private:
  int n_qubits_;
  std::vector<cplx> amps_;
};

/// Tensor product; spinors[k] is qubit k.
StateVector product_of(std::span<const Spinor> spinors);

/// prod_k [cos(theta_k/2)|0> + sin(theta_k/2) e^{i phi_k}|1>].
StateVector product_state(const QubitAngles& angles);

StateVector apply_single(const StateVector& state, int k, const Mat2& u);

/// Applies u on the (i, j) subspace, basis order |b_j b_i> (i is the low bit).
StateVector apply_two(const StateVector& state, int i, int j, const Mat4& u);

/// <a|b>
cplx inner(const StateVector& a, const StateVector& b);

/// |<a|b>|^2
double fidelity(const StateVector& a, const StateVector& b);

/// max_x |a[x] - b[x]|
double max_abs_diff(const StateVector& a, const StateVector& b);

/// Reduced density matrix of one or two kept qubits. For two qubits the
/// first entry of `keep` is the low bit of the 4x4 basis index.
DensityMatrix partial_trace(const StateVector& state, std::span<const int> keep);
DensityMatrix partial_trace(const StateVector& state, std::initializer_list<int> keep);

}  // namespace ghz
