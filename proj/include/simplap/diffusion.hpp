#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simplap/simplex_matrix.hpp"

namespace simplap {

enum class DiffusionMode {
  RawExponential,         // dx/dt = -M x
  ConservativeGenerator,  // dx/dt = -G x, G = diffusion_generator(M)
};

inline std::string_view mode_name(DiffusionMode mode) {
  return mode == DiffusionMode::RawExponential ? "raw-exponential" : "conservative-generator";
}

template <typename Scalar = double>
struct DiffusionTrace {
  std::vector<Scalar> times;              // 0 = t_0 < t_1 < ... < t_steps = t_end
  std::vector<DenseVec<Scalar>> states;   // states[0] is the initial condition
  DiffusionMode mode = DiffusionMode::ConservativeGenerator;
  std::size_t substeps = 0;               // integrator steps between checkpoints
};

struct DiffusionOptions {
  double stability = 0.5;  // h * max|diag| bound
  double accuracy = 0.05;  // h * ||M||_inf bound; keeps RK4 well inside its accurate range
};

/// G = R - A: A is `m` with its diagonal removed, R = diag(row sums of A).
/// Rows of G sum to zero exactly.
template <typename Scalar>
SparseMat<Scalar> diffusion_generator(const SparseMat<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("diffusion generator of a non-square matrix");
  std::vector<Eigen::Triplet<Scalar, Eigen::Index>> t;
  DenseVec<Scalar> row_sum = DenseVec<Scalar>::Zero(m.rows());
  for (Eigen::Index col = 0; col < m.outerSize(); ++col)
    for (typename SparseMat<Scalar>::InnerIterator it(m, col); it; ++it) {
      if (it.row() == it.col()) continue;
      if (it.value() < Scalar(0))
        throw std::invalid_argument("negative off-diagonal entry at (" + std::to_string(it.row()) + ", " +
                                    std::to_string(it.col()) + ")");
      t.emplace_back(it.row(), it.col(), -it.value());
      row_sum[it.row()] += it.value();
    }
  for (Eigen::Index i = 0; i < m.rows(); ++i) t.emplace_back(i, i, row_sum[i]);
  return from_triplets<Scalar>(m.rows(), m.cols(), t);
}

namespace detail {

template <typename Scalar>
Scalar max_abs_diagonal(const SparseMat<Scalar>& m) {
  Scalar best(0);
  for (Eigen::Index col = 0; col < m.outerSize(); ++col)
    for (typename SparseMat<Scalar>::InnerIterator it(m, col); it; ++it)
      if (it.row() == it.col()) best = std::max(best, Scalar(std::abs(it.value())));
  return best;
}

template <typename Scalar>
Scalar max_abs_row_sum(const SparseMat<Scalar>& m) {
  DenseVec<Scalar> sums = DenseVec<Scalar>::Zero(m.rows());
  for (Eigen::Index col = 0; col < m.outerSize(); ++col)
    for (typename SparseMat<Scalar>::InnerIterator it(m, col); it; ++it) sums[it.row()] += std::abs(it.value());
  return sums.size() ? sums.maxCoeff() : Scalar(0);
}

}  // namespace detail

/// Integrates dx/dt = -op x with classical RK4 and reports the state at
/// `steps` evenly spaced checkpoints on (0, t_end]. The step size h obeys
/// h * max|diag(op)| <= stability and h * ||op||_inf <= accuracy.
template <typename Scalar>
DiffusionTrace<Scalar> diffuse(const SparseMat<Scalar>& m, const DenseVec<Scalar>& x0, Scalar t_end,
                               std::size_t steps, DiffusionMode mode, const DiffusionOptions& options = {}) {
  if (m.rows() != m.cols()) throw std::invalid_argument("diffusion operator must be square");
  if (x0.size() != m.rows())
    throw std::invalid_argument("initial state has " + std::to_string(x0.size()) + " entries, operator has " +
                                std::to_string(m.rows()) + " rows");
  if (!(t_end > Scalar(0))) throw std::invalid_argument("t_end must be positive");
  if (steps == 0) throw std::invalid_argument("steps must be at least 1");

  const SparseMat<Scalar> op = mode == DiffusionMode::ConservativeGenerator ? diffusion_generator(m) : m;
  const Scalar interval = t_end / static_cast<Scalar>(steps);
  const Scalar rate = std::max(detail::max_abs_diagonal(op) / static_cast<Scalar>(options.stability),
                               detail::max_abs_row_sum(op) / static_cast<Scalar>(options.accuracy));
  const std::size_t sub = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(interval * rate)));
  const Scalar h = interval / static_cast<Scalar>(sub);

  DiffusionTrace<Scalar> trace;
  trace.mode = mode;
  trace.substeps = sub;
  trace.times.reserve(steps + 1);
  trace.states.reserve(steps + 1);
  trace.times.push_back(Scalar(0));
  trace.states.push_back(x0);

  auto rhs = [&op](const DenseVec<Scalar>& x) -> DenseVec<Scalar> { return -(op * x); };
  DenseVec<Scalar> x = x0;
  for (std::size_t s = 1; s <= steps; ++s) {
    for (std::size_t k = 0; k < sub; ++k) {
      const DenseVec<Scalar> k1 = rhs(x);
      const DenseVec<Scalar> k2 = rhs(x + (h / 2) * k1);
      const DenseVec<Scalar> k3 = rhs(x + (h / 2) * k2);
      const DenseVec<Scalar> k4 = rhs(x + h * k3);
      x += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    }
    trace.times.push_back(s == steps ? t_end : interval * static_cast<Scalar>(s));
    trace.states.push_back(x);
  }
  return trace;
}

}  // namespace simplap
