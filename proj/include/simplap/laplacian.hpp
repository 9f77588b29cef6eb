#pragma once

#include <algorithm>
#include <type_traits>
#include <vector>

#include "simplap/complex.hpp"
#include "simplap/incidence.hpp"
#include "simplap/simplex_matrix.hpp"

namespace simplap {

/// Diagonal of W_p: the weight z(sigma) of every p-simplex.
template <typename Scalar = double>
DenseVec<Scalar> simplex_weights(const SimplicialComplex& c, int p) {
  const auto s = c.simplices(p);
  DenseVec<Scalar> w(static_cast<Eigen::Index>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) w[static_cast<Eigen::Index>(i)] = static_cast<Scalar>(s[i].weight);
  return w;
}

namespace detail {

template <typename Scalar>
void require_weight_capable(const SimplicialComplex& c) {
  if constexpr (!std::is_floating_point_v<Scalar>) {
    if (!c.unweighted()) throw std::invalid_argument("weighted complex needs a floating-point scalar type");
  }
}

template <typename Scalar>
SimplexMatrix<Scalar> zero_square(const SimplicialComplex& c, int k) {
  const auto n = static_cast<Eigen::Index>(c.count(k));
  return {SparseMat<Scalar>(n, n), k, k};
}

template <typename Scalar>
SparseMat<Scalar> weight_diag(const SimplicialComplex& c, int p) {
  return diagonal_matrix<Scalar>(simplex_weights<Scalar>(c, p));
}

template <typename Scalar>
SparseMat<Scalar> inverse_weight_diag(const SimplicialComplex& c, int p) {
  return diagonal_matrix<Scalar>(simplex_weights<Scalar>(c, p).cwiseInverse());
}

// W_k^{-1} B^T W_l B, where B is n_l x n_k.
template <typename Scalar>
SparseMat<Scalar> up_form(const SimplicialComplex& c, const SparseMat<Scalar>& b, int k, int l) {
  SparseMat<Scalar> bt = b.transpose();
  if (c.unweighted()) return SparseMat<Scalar>(bt * b);
  return SparseMat<Scalar>(inverse_weight_diag<Scalar>(c, k) * bt * weight_diag<Scalar>(c, l) * b);
}

// B W_l^{-1} B^T W_k, where B is n_k x n_l.
template <typename Scalar>
SparseMat<Scalar> down_form(const SimplicialComplex& c, const SparseMat<Scalar>& b, int k, int l) {
  SparseMat<Scalar> bt = b.transpose();
  if (c.unweighted()) return SparseMat<Scalar>(b * bt);
  return SparseMat<Scalar>(b * inverse_weight_diag<Scalar>(c, l) * bt * weight_diag<Scalar>(c, k));
}

template <typename Scalar>
SimplexMatrix<Scalar> square(SparseMat<Scalar> m, int k) {
  m.prune(Scalar(0));
  m.makeCompressed();
  return {std::move(m), k, k};
}

}  // namespace detail

/// L = D - A over the 1-skeleton, using edge weights.
template <typename Scalar = double>
SimplexMatrix<Scalar> graph_laplacian(const SimplicialComplex& c) {
  detail::require_weight_capable<Scalar>(c);
  std::vector<Eigen::Triplet<Scalar, Eigen::Index>> t;
  for (const auto& e : c.simplices(1)) {
    const auto a = static_cast<Eigen::Index>(e.vertices[0]);
    const auto b = static_cast<Eigen::Index>(e.vertices[1]);
    const auto w = static_cast<Scalar>(e.weight);
    t.emplace_back(a, a, w);
    t.emplace_back(b, b, w);
    t.emplace_back(a, b, -w);
    t.emplace_back(b, a, -w);
  }
  const auto n = static_cast<Eigen::Index>(c.count(0));
  return {from_triplets<Scalar>(n, n, t), 0, 0};
}

/// Up Laplacian W_i^{-1} D_i^T W_{i+1} D_i; zero at i = n.
template <typename Scalar = double>
SimplexMatrix<Scalar> hodge_up(const SimplicialComplex& c, int i, bool oriented) {
  detail::require(i >= 0, "i >= 0");
  detail::require(i <= c.max_dim(), "i <= n" + detail::n_of(c));
  detail::require_weight_capable<Scalar>(c);
  if (i == c.max_dim()) return detail::zero_square<Scalar>(c, i);
  const auto d = hodge_incidence<Scalar>(c, i, oriented);
  return detail::square(detail::up_form<Scalar>(c, d.values, i, i + 1), i);
}

/// Down Laplacian D_{i-1} W_{i-1}^{-1} D_{i-1}^T W_i; zero at i = 0.
template <typename Scalar = double>
SimplexMatrix<Scalar> hodge_down(const SimplicialComplex& c, int i, bool oriented) {
  detail::require(i >= 0, "i >= 0");
  detail::require(i <= c.max_dim(), "i <= n" + detail::n_of(c));
  detail::require_weight_capable<Scalar>(c);
  if (i == 0) return detail::zero_square<Scalar>(c, i);
  const auto d = hodge_incidence<Scalar>(c, i - 1, oriented);
  return detail::square(detail::down_form<Scalar>(c, d.values, i, i - 1), i);
}

template <typename Scalar = double>
SimplexMatrix<Scalar> hodge_full(const SimplicialComplex& c, int i, bool oriented) {
  SparseMat<Scalar> sum = hodge_up<Scalar>(c, i, oriented).values + hodge_down<Scalar>(c, i, oriented).values;
  return detail::square(std::move(sum), i);
}

/// L_{k,l}: diffusion among k-simplices through l-simplices.
///   k < l:  W_k^{-1} D_{k,l}^T W_l D_{k,l}
///   k > l:  D_{l,k} W_l^{-1} D_{l,k}^T W_k
/// The n_k x n_k zero matrix when the complex has no l-simplices.
template <typename Scalar = double>
SimplexMatrix<Scalar> laplacian_between(const SimplicialComplex& c, int k, int l) {
  detail::require(k != l, "k != l");
  detail::require(k >= 0 && l >= 0, "k >= 0 and l >= 0");
  detail::require(k <= c.max_dim(), "k <= n" + detail::n_of(c));
  detail::require_weight_capable<Scalar>(c);
  if (l > c.max_dim()) return detail::zero_square<Scalar>(c, k);
  if (k < l) return detail::square(detail::up_form<Scalar>(c, incidence<Scalar>(c, k, l).values, k, l), k);
  return detail::square(detail::down_form<Scalar>(c, incidence<Scalar>(c, l, k).values, k, l), k);
}

/// L_k: sum of L_{k,l} over every l != k in 0..n.
template <typename Scalar = double>
SimplexMatrix<Scalar> laplacian_fixed(const SimplicialComplex& c, int k) {
  detail::require(k >= 0, "k >= 0");
  detail::require(k <= c.max_dim(), "k <= n" + detail::n_of(c));
  const auto n = static_cast<Eigen::Index>(c.count(k));
  SparseMat<Scalar> sum(n, n);
  for (int l = 0; l <= c.max_dim(); ++l)
    if (l != k) sum += laplacian_between<Scalar>(c, k, l).values;
  return detail::square(std::move(sum), k);
}

/// L_H as a grid of blocks. Block (k, k) is L_k; for p < r, block (r, p) is
/// the aggregated incidence between p- and r-simplices and block (p, r) its
/// transpose. Dimension p occupies global rows offset(p) .. offset(p+1)-1.
template <typename Scalar = double>
class BlockLaplacian {
 public:
  BlockLaplacian(std::vector<std::vector<SimplexMatrix<Scalar>>> blocks, std::vector<Eigen::Index> offsets)
      : blocks_(std::move(blocks)), offsets_(std::move(offsets)) {}

  int block_count() const { return static_cast<int>(blocks_.size()); }
  const SimplexMatrix<Scalar>& block(int row_dim, int col_dim) const { return blocks_.at(row_dim).at(col_dim); }

  Eigen::Index size() const { return offsets_.back(); }
  Eigen::Index offset(int p) const { return offsets_.at(p); }
  Eigen::Index global_index(SimplexRef ref) const { return offsets_.at(ref.dim) + static_cast<Eigen::Index>(ref.index); }

  SimplexRef local_index(Eigen::Index global) const {
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), global);
    const int p = static_cast<int>(it - offsets_.begin()) - 1;
    return {p, static_cast<std::size_t>(global - offsets_[p])};
  }

  SparseMat<Scalar> assemble() const {
    std::vector<Eigen::Triplet<Scalar, Eigen::Index>> t;
    for (int p = 0; p < block_count(); ++p)
      for (int r = 0; r < block_count(); ++r) {
        const auto& m = blocks_[p][r].values;
        for (Eigen::Index col = 0; col < m.outerSize(); ++col)
          for (typename SparseMat<Scalar>::InnerIterator it(m, col); it; ++it)
            t.emplace_back(offsets_[p] + it.row(), offsets_[r] + it.col(), it.value());
      }
    return from_triplets<Scalar>(size(), size(), t);
  }

 private:
  std::vector<std::vector<SimplexMatrix<Scalar>>> blocks_;
  std::vector<Eigen::Index> offsets_;
};

template <typename Scalar = double>
BlockLaplacian<Scalar> laplacian_general(const SimplicialComplex& c) {
  if (c.empty()) throw ComplexError("generalized Laplacian of an empty complex");
  const int dims = c.max_dim() + 1;
  std::vector<Eigen::Index> offsets(static_cast<std::size_t>(dims) + 1, 0);
  for (int p = 0; p < dims; ++p) offsets[p + 1] = offsets[p] + static_cast<Eigen::Index>(c.count(p));

  std::vector<std::vector<SimplexMatrix<Scalar>>> blocks(static_cast<std::size_t>(dims),
                                                         std::vector<SimplexMatrix<Scalar>>(static_cast<std::size_t>(dims)));
  for (int k = 0; k < dims; ++k) blocks[k][k] = laplacian_fixed<Scalar>(c, k);
  for (int p = 0; p < dims; ++p)
    for (int r = p + 1; r < dims; ++r) {
      auto lower = incidence_all<Scalar>(c, p, r);
      blocks[p][r] = {SparseMat<Scalar>(lower.values.transpose()), p, r};
      blocks[r][p] = std::move(lower);
    }
  return BlockLaplacian<Scalar>(std::move(blocks), std::move(offsets));
}

}  // namespace simplap
