#pragma once

#include <string>
#include <vector>

#include "simplap/complex.hpp"
#include "simplap/simplex_matrix.hpp"

namespace simplap {

namespace detail {

inline void require(bool ok, const std::string& constraint) {
  if (!ok) throw DimensionError(constraint + " required");
}

inline std::string n_of(const SimplicialComplex& c) { return " (n = " + std::to_string(c.max_dim()) + ")"; }

inline void check_pair(const SimplicialComplex& c, int p, int r) {
  require(p >= 0, "p >= 0");
  require(p < r, "p < r");
  require(r <= c.max_dim(), "r <= n" + n_of(c));
}

// Rows: r-simplices; cols: p-simplices contained in them. With `oriented`
// (only meaningful for r = p + 1) the entry is (-1)^m, m being the position
// of the omitted vertex in the sorted coface.
template <typename Scalar>
SimplexMatrix<Scalar> face_matrix(const SimplicialComplex& c, int p, int r, bool oriented) {
  const auto cofaces = c.simplices(r);
  std::vector<Eigen::Triplet<Scalar, Eigen::Index>> triplets;
  const std::size_t k = static_cast<std::size_t>(p) + 1;
  std::vector<std::size_t> pick(k);
  std::vector<VertexId> face(k);

  for (std::size_t i = 0; i < cofaces.size(); ++i) {
    const auto& verts = cofaces[i].vertices;
    const std::size_t m = verts.size();
    for (std::size_t t = 0; t < k; ++t) pick[t] = t;
    while (true) {
      for (std::size_t t = 0; t < k; ++t) face[t] = verts[pick[t]];
      const auto j = c.index_of(face);
      Scalar value(1);
      if (oriented) {
        // single omitted position: first index where pick[t] != t, else the last vertex
        std::size_t omitted = k;
        for (std::size_t t = 0; t < k; ++t)
          if (pick[t] != t) { omitted = t; break; }
        if (omitted % 2 == 1) value = Scalar(-1);
      }
      triplets.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(*j), value);

      // next k-combination of 0..m-1
      std::size_t t = k;
      while (t > 0 && pick[t - 1] == m - k + (t - 1)) --t;
      if (t == 0) break;
      ++pick[t - 1];
      for (std::size_t u = t; u < k; ++u) pick[u] = pick[u - 1] + 1;
    }
  }
  return {from_triplets<Scalar>(static_cast<Eigen::Index>(cofaces.size()),
                                static_cast<Eigen::Index>(c.count(p)), triplets),
          r, p};
}

}  // namespace detail

/// Classical boundary incidence D_p: n_{p+1} x n_p, entry 1 (or +-1 when
/// oriented) where sigma_j^p is a facet of sigma_i^{p+1}.
template <typename Scalar = double>
SimplexMatrix<Scalar> hodge_incidence(const SimplicialComplex& c, int p, bool oriented) {
  detail::require(p >= 0, "p >= 0");
  detail::require(p < c.max_dim(), "p < n" + detail::n_of(c));
  return detail::face_matrix<Scalar>(c, p, p + 1, oriented);
}

/// D_{p,r}: n_r x n_p 0/1 matrix, 1 where sigma_j^p is a face of sigma_i^r.
template <typename Scalar = double>
SimplexMatrix<Scalar> incidence(const SimplicialComplex& c, int p, int r) {
  detail::check_pair(c, p, r);
  return detail::face_matrix<Scalar>(c, p, r, false);
}

/// D^q_{p,r}: entry (i, j) counts q-simplices comparable to both sigma_j^p
/// and sigma_i^r. For q in {p, r} this is D_{p,r} itself.
///
/// Comparability with both fixes the direction of each containment, so every
/// case is a product of face matrices:
///   q < p      common q-faces           D_{q,r} D_{q,p}^T
///   p < q < r  sigma^p < tau < sigma^r  D_{q,r} D_{p,q}
///   q > r      common q-cofaces         D_{r,q}^T D_{p,q}
template <typename Scalar = double>
SimplexMatrix<Scalar> incidence_through(const SimplicialComplex& c, int p, int r, int q) {
  detail::check_pair(c, p, r);
  detail::require(q >= 0, "q >= 0");
  detail::require(q <= c.max_dim(), "q <= n" + detail::n_of(c));
  if (q == p || q == r) return incidence<Scalar>(c, p, r);

  SparseMat<Scalar> product;
  if (q < p) {
    const auto to_r = incidence<Scalar>(c, q, r);
    const auto to_p = incidence<Scalar>(c, q, p);
    product = to_r.values * SparseMat<Scalar>(to_p.values.transpose());
  } else if (q < r) {
    product = incidence<Scalar>(c, q, r).values * incidence<Scalar>(c, p, q).values;
  } else {
    const auto r_up = incidence<Scalar>(c, r, q);
    product = SparseMat<Scalar>(r_up.values.transpose()) * incidence<Scalar>(c, p, q).values;
  }
  product.prune(Scalar(0));
  product.makeCompressed();
  return {std::move(product), r, p};
}

/// Aggregated incidence: sum of D^q_{p,r} over q = 0..n. D_{p,r} enters
/// twice, once for q = p and once for q = r.
template <typename Scalar = double>
SimplexMatrix<Scalar> incidence_all(const SimplicialComplex& c, int p, int r) {
  detail::check_pair(c, p, r);
  SparseMat<Scalar> sum(static_cast<Eigen::Index>(c.count(r)), static_cast<Eigen::Index>(c.count(p)));
  for (int q = 0; q <= c.max_dim(); ++q) sum += incidence_through<Scalar>(c, p, r, q).values;
  sum.makeCompressed();
  return {std::move(sum), r, p};
}

}  // namespace simplap
