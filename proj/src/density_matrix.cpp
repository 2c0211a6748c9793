#include "ghz/density_matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ghz {

namespace {

using Matrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Matrix to_eigen(int dim, std::span<const cplx> entries) {
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = entries[static_cast<std::size_t>(r * dim + c)];
  return m;
}

}  // namespace

DensityMatrix::DensityMatrix(int dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim != 2 && dim != 4) throw std::invalid_argument("density matrix dimension must be 2 or 4");
  if (entries_.size() != static_cast<std::size_t>(dim * dim))
    throw std::invalid_argument("density matrix needs dim*dim entries");
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  std::vector<cplx> e(static_cast<std::size_t>(dim * dim), cplx{0.0, 0.0});
  for (int k = 0; k < dim; ++k) e[static_cast<std::size_t>(k * dim + k)] = 1.0 / dim;
  return DensityMatrix(dim, std::move(e));
}

DensityMatrix DensityMatrix::pure(std::span<const cplx> v) {
  const int dim = static_cast<int>(v.size());
  std::vector<cplx> e(v.size() * v.size());
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) e[static_cast<std::size_t>(r * dim + c)] = v[r] * std::conj(v[c]);
  return DensityMatrix(dim, std::move(e));
}

cplx DensityMatrix::trace() const {
  cplx t = 0.0;
  for (int k = 0; k < dim_; ++k) t += (*this)(k, k);
  return t;
}

double DensityMatrix::hermiticity_error() const {
  double e = 0.0;
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) e = std::max(e, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return e;
}

std::vector<double> DensityMatrix::eigenvalues() const { return eigen_decomposition().values; }

DensityMatrix::Spectrum DensityMatrix::eigen_decomposition() const {
  const Matrix m = to_eigen(dim_, entries_);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigen-decomposition failed");
  Spectrum s;
  for (int k = 0; k < dim_; ++k) {
    s.values.push_back(solver.eigenvalues()(k));
    std::vector<cplx> v(static_cast<std::size_t>(dim_));
    for (int r = 0; r < dim_; ++r) v[static_cast<std::size_t>(r)] = solver.eigenvectors()(r, k);
    s.vectors.push_back(std::move(v));
  }
  return s;
}

double DensityMatrix::distance(const DensityMatrix& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("distance: dimension mismatch");
  std::vector<cplx> diff(entries_.size());
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = entries_[k] - other.entries_[k];
  const Matrix m = to_eigen(dim_, diff);
  Eigen::JacobiSVD<Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>> svd(m);
  return svd.singularValues()(0);
}

DensityMatrix DensityMatrix::operator+(const DensityMatrix& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("sum: dimension mismatch");
  std::vector<cplx> e(entries_.size());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = entries_[k] + other.entries_[k];
  return DensityMatrix(dim_, std::move(e));
}

DensityMatrix DensityMatrix::operator*(double s) const {
  std::vector<cplx> e(entries_);
  for (auto& v : e) v *= s;
  return DensityMatrix(dim_, std::move(e));
}

}  // namespace ghz
