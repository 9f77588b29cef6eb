#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "simplap/simplex_matrix.hpp"

namespace simplap {

template <typename Scalar = double>
struct Spectrum {
  DenseVec<Scalar> eigenvalues;                 // ascending (by real part)
  std::optional<DenseMat<Scalar>> eigenvectors;  // orthonormal columns, symmetric inputs only
  bool symmetric = true;
  Scalar max_residual = 0;   // max_j ||M v_j - lambda_j v_j|| / ||M||_F
  Scalar max_imaginary = 0;  // largest |Im lambda| discarded on the general path
};

struct SpectrumOptions {
  std::optional<Eigen::Index> count;  // smallest `count` eigenvalues; all if unset
  bool vectors = false;
  Eigen::Index dense_threshold = 512;  // iterative solver at or above this size
  double tolerance = 1e-10;           // relative residual target for the iterative solver
};

namespace detail {

template <typename Scalar>
Scalar frobenius(const SparseMat<Scalar>& m) {
  return m.norm();
}

template <typename Scalar>
Spectrum<Scalar> dense_symmetric(const SparseMat<Scalar>& m, Eigen::Index count, bool vectors) {
  const DenseMat<Scalar> a(m);
  Eigen::SelfAdjointEigenSolver<DenseMat<Scalar>> es(a);
  if (es.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver did not converge");
  Spectrum<Scalar> s;
  s.eigenvalues = es.eigenvalues().head(count);
  const DenseMat<Scalar> v = es.eigenvectors().leftCols(count);
  const Scalar norm = frobenius(m);
  if (count > 0 && norm > Scalar(0)) {
    const DenseMat<Scalar> r = a * v - v * s.eigenvalues.asDiagonal();
    s.max_residual = r.colwise().norm().maxCoeff() / norm;
  }
  if (vectors) s.eigenvectors = v;
  return s;
}

template <typename Scalar>
Spectrum<Scalar> dense_general(const SparseMat<Scalar>& m, Eigen::Index count) {
  const DenseMat<Scalar> a(m);
  Eigen::EigenSolver<DenseMat<Scalar>> es(a, true);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  const auto values = es.eigenvalues();
  const auto vecs = es.eigenvectors();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return values[i].real() < values[j].real(); });

  Spectrum<Scalar> s;
  s.symmetric = false;
  s.eigenvalues.resize(count);
  const Scalar norm = frobenius(m);
  for (Eigen::Index t = 0; t < count; ++t) {
    const auto idx = order[static_cast<std::size_t>(t)];
    s.eigenvalues[t] = values[idx].real();
    s.max_imaginary = std::max(s.max_imaginary, Scalar(std::abs(values[idx].imag())));
    if (norm > Scalar(0)) {
      const auto v = vecs.col(idx);
      const Scalar res = (a.template cast<std::complex<Scalar>>() * v - values[idx] * v).norm() / v.norm();
      s.max_residual = std::max(s.max_residual, res / norm);
    }
  }
  return s;
}

// Orthogonalizes `w` against the first `cols` columns of `basis` (two passes)
// and returns its remaining norm.
template <typename Scalar>
Scalar orthogonalize(const DenseMat<Scalar>& basis, Eigen::Index cols, DenseVec<Scalar>& w) {
  for (int pass = 0; pass < 2; ++pass) {
    if (cols == 0) break;
    const DenseVec<Scalar> h = basis.leftCols(cols).transpose() * w;
    w.noalias() -= basis.leftCols(cols) * h;
  }
  return w.norm();
}

// Rayleigh-Ritz on a block Krylov subspace with full reorthogonalization.
// The block size bounds the multiplicity that can be resolved, so it is kept
// larger than `count`. Returns nullopt if the residual target is not met
// before the basis spans the whole space.
template <typename Scalar>
std::optional<Spectrum<Scalar>> block_krylov_smallest(const SparseMat<Scalar>& m, Eigen::Index count, bool vectors,
                                                      Scalar tolerance) {
  const Eigen::Index n = m.rows();
  const Eigen::Index block = std::min(n, count + 8);
  const Scalar norm = frobenius(m);
  if (norm == Scalar(0)) {
    Spectrum<Scalar> s;
    s.eigenvalues = DenseVec<Scalar>::Zero(count);
    if (vectors) s.eigenvectors = DenseMat<Scalar>::Identity(n, count);
    return s;
  }

  DenseMat<Scalar> basis(n, std::min(n, 4 * block));
  DenseMat<Scalar> image(n, basis.cols());  // m * basis
  Eigen::Index size = 0;
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;

  auto push = [&](DenseVec<Scalar> w) {
    const Scalar before = w.norm();
    const Scalar after = orthogonalize(basis, size, w);
    if (after <= Scalar(1e-10) * std::max(before, Scalar(1))) return false;
    if (size == basis.cols()) {
      const Eigen::Index grown = std::min(n, 2 * basis.cols());
      basis.conservativeResize(Eigen::NoChange, grown);
      image.conservativeResize(Eigen::NoChange, grown);
    }
    basis.col(size) = w / after;
    image.col(size) = m * basis.col(size);
    ++size;
    return true;
  };

  std::vector<Eigen::Index> frontier;
  for (Eigen::Index j = 0; j < block && size < n; ++j) {
    DenseVec<Scalar> w(n);
    for (Eigen::Index i = 0; i < n; ++i) w[i] = static_cast<Scalar>(gauss(rng));
    if (push(w)) frontier.push_back(size - 1);
  }

  Eigen::Index next_check = std::min(n, std::max<Eigen::Index>(4 * block, 32));
  while (true) {
    std::vector<Eigen::Index> grown;
    for (auto col : frontier) {
      if (size >= n) break;
      if (push(image.col(col))) grown.push_back(size - 1);
    }
    const bool exhausted = grown.empty() || size >= n;
    frontier = std::move(grown);
    if (size < next_check && !exhausted) continue;

    const DenseMat<Scalar> q = basis.leftCols(size);
    const DenseMat<Scalar> mq = image.leftCols(size);
    DenseMat<Scalar> h = q.transpose() * mq;
    h = (h + h.transpose().eval()) / Scalar(2);
    Eigen::SelfAdjointEigenSolver<DenseMat<Scalar>> es(h);
    const Eigen::Index want = std::min(count, size);
    const DenseMat<Scalar> y = es.eigenvectors().leftCols(want);
    const DenseVec<Scalar> theta = es.eigenvalues().head(want);
    const DenseMat<Scalar> x = q * y;
    const DenseMat<Scalar> r = mq * y - x * theta.asDiagonal();
    const Scalar worst = want > 0 ? r.colwise().norm().maxCoeff() / norm : Scalar(0);

    if (want == count && worst <= tolerance) {
      Spectrum<Scalar> s;
      s.eigenvalues = theta;
      s.max_residual = worst;
      if (vectors) s.eigenvectors = x;
      return s;
    }
    if (exhausted) return std::nullopt;
    next_check = std::min(n, size + std::max<Eigen::Index>(size / 3, block));
  }
}

}  // namespace detail

/// Smallest eigenvalues of a square operator, ascending. Symmetric inputs use
/// a self-adjoint solver (block Krylov above `dense_threshold` when only a few
/// eigenvalues are requested); others use a general dense solver and report
/// real parts.
template <typename Scalar>
Spectrum<Scalar> spectrum(const SparseMat<Scalar>& m, const SpectrumOptions& options = {}) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectrum of a non-square matrix");
  const Eigen::Index n = m.rows();
  const Eigen::Index count = std::clamp<Eigen::Index>(options.count.value_or(n), 0, n);
  if (n == 0) return {};

  if (!is_symmetric(m, Scalar(1e-14))) return detail::dense_general(m, count);

  if (n >= options.dense_threshold && count < n / 2) {
    if (auto s = detail::block_krylov_smallest(m, count, options.vectors, static_cast<Scalar>(options.tolerance)))
      return *std::move(s);
  }
  return detail::dense_symmetric(m, count, options.vectors);
}

template <typename Scalar>
Spectrum<Scalar> spectrum(const SimplexMatrix<Scalar>& m, const SpectrumOptions& options = {}) {
  return spectrum(m.values, options);
}

}  // namespace simplap
