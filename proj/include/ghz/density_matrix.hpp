// Reduced density matrices of one or two qubits.
#pragma once

#include <span>
#include <vector>

#include "ghz/types.hpp"

namespace ghz {

class DensityMatrix {
 public:
  /// Row-major dim x dim entries; dim must be 2 or 4.
  DensityMatrix(int dim, std::vector<cplx> entries);

  static DensityMatrix maximally_mixed(int dim);
  /// |v><v| for a 2- or 4-component vector.
  static DensityMatrix pure(std::span<const cplx> v);

  int dim() const { return dim_; }
  const cplx& operator()(int r, int c) const { return entries_[static_cast<std::size_t>(r * dim_ + c)]; }
  std::span<const cplx> entries() const { return entries_; }

  cplx trace() const;
  double hermiticity_error() const;

  /// Ascending eigenvalues.
  std::vector<double> eigenvalues() const;

  struct Spectrum {
    std::vector<double> values;               // ascending
    std::vector<std::vector<cplx>> vectors;   // vectors[k] pairs with values[k]
  };
  Spectrum eigen_decomposition() const;

  /// Spectral norm of (this - other).
  double distance(const DensityMatrix& other) const;

  DensityMatrix operator+(const DensityMatrix& other) const;
  DensityMatrix operator*(double s) const;

 private:
  int dim_;
  std::vector<cplx> entries_;
};

}  // namespace ghz
