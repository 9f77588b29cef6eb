#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <cmath>
#include <cstddef>
#include <vector>

namespace simplap {

template <typename Scalar>
using SparseMat = Eigen::SparseMatrix<Scalar, Eigen::ColMajor, Eigen::Index>;

template <typename Scalar>
using DenseMat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Axis label for operators whose rows span several dimensions (L_H).
inline constexpr int kMixedDim = -1;

/// Sparse matrix whose rows and columns index simplices of a fixed dimension.
/// Explicit zeros are never stored.
template <typename Scalar>
struct SimplexMatrix {
  SparseMat<Scalar> values;
  int row_dim = 0;
  int col_dim = 0;

  Eigen::Index rows() const { return values.rows(); }
  Eigen::Index cols() const { return values.cols(); }
  Scalar coeff(Eigen::Index i, Eigen::Index j) const { return values.coeff(i, j); }
  DenseMat<Scalar> dense() const { return DenseMat<Scalar>(values); }
};

template <typename Scalar>
SparseMat<Scalar> from_triplets(Eigen::Index rows, Eigen::Index cols,
                                const std::vector<Eigen::Triplet<Scalar, Eigen::Index>>& triplets) {
  SparseMat<Scalar> m(rows, cols);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.prune(Scalar(0));
  m.makeCompressed();
  return m;
}

template <typename Scalar>
SparseMat<Scalar> diagonal_matrix(const DenseVec<Scalar>& diag) {
  SparseMat<Scalar> m(diag.size(), diag.size());
  m.reserve(Eigen::VectorXi::Constant(diag.size(), 1));
  for (Eigen::Index i = 0; i < diag.size(); ++i)
    if (diag[i] != Scalar(0)) m.insert(i, i) = diag[i];
  m.makeCompressed();
  return m;
}

/// Exact structural and numeric symmetry check.
template <typename Scalar>
bool is_symmetric(const SparseMat<Scalar>& m) {
  if (m.rows() != m.cols()) return false;
  SparseMat<Scalar> t = m.transpose();
  SparseMat<Scalar> diff = m - t;
  diff.prune(Scalar(0));
  return diff.nonZeros() == 0;
}

/// Symmetric up to a relative tolerance on the entry magnitudes.
template <typename Scalar>
bool is_symmetric(const SparseMat<Scalar>& m, Scalar rel_tol) {
  if (m.rows() != m.cols()) return false;
  SparseMat<Scalar> t = m.transpose();
  SparseMat<Scalar> diff = m - t;
  Scalar scale(0), worst(0);
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (typename SparseMat<Scalar>::InnerIterator it(m, k); it; ++it) scale = std::max(scale, Scalar(std::abs(it.value())));
  for (Eigen::Index k = 0; k < diff.outerSize(); ++k)
    for (typename SparseMat<Scalar>::InnerIterator it(diff, k); it; ++it) worst = std::max(worst, Scalar(std::abs(it.value())));
  return worst <= rel_tol * scale;
}

template <typename Scalar>
bool is_integral(const SparseMat<Scalar>& m) {
  for (Eigen::Index k = 0; k < m.outerSize(); ++k)
    for (typename SparseMat<Scalar>::InnerIterator it(m, k); it; ++it)
      if (std::floor(it.value()) != it.value()) return false;
  return true;
}

}  // namespace simplap
