#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace simplap {

using VertexId = std::size_t;

/// Raised when a dimension argument violates an operation's precondition
/// (p < r, r <= n, k != l, ...). The message names the violated constraint.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for malformed hypergraph input: empty hyperedges, oversized
/// hyperedges, non-positive weights, unknown simplices in a weights file.
class ComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Simplex {
  std::vector<VertexId> vertices;  // strictly increasing
  double weight = 1.0;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

/// (dimension, index within that dimension's canonical ordering)
struct SimplexRef {
  int dim = 0;
  std::size_t index = 0;

  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

/// A hyperedge as read from input: a set of vertex labels plus an optional
/// weight applied to the simplex the hyperedge becomes.
struct Hyperedge {
  std::vector<std::string> labels;
  std::optional<double> weight;
};

/// Explicit weight for an existing simplex of the closure.
struct SimplexWeight {
  std::vector<std::string> labels;
  double weight = 1.0;
};

struct ComplexOptions {
  std::size_t max_cardinality = 16;
};

/// true iff a != b and one vertex set strictly contains the other.
bool comparable(const Simplex& a, const Simplex& b);

/// Downward-closed simplicial complex over a labelled vertex set.
///
/// Vertex ids follow natural label order (numeric labels compare as numbers),
/// and simplices within a dimension are sorted lexicographically by id tuple,
/// so the layout does not depend on input order. Immutable after
/// construction.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Builds the downward closure of `edges`. Faces created by the closure get
  /// weight 1.0; a hyperedge's weight (last occurrence wins) applies to its own
  /// simplex, and `overrides` then assign weights to existing simplices.
  static SimplicialComplex from_hyperedges(std::span<const Hyperedge> edges,
                                           std::span<const SimplexWeight> overrides = {},
                                           const ComplexOptions& options = {});

  /// Maximum simplex dimension n, or -1 for the empty complex.
  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  bool empty() const { return by_dim_.empty(); }

  /// n_p; zero for p outside 0..n.
  std::size_t count(int p) const;
  std::size_t total_count() const;

  /// S_p in canonical order; empty for p outside 0..n.
  std::span<const Simplex> simplices(int p) const;
  const Simplex& simplex(SimplexRef ref) const { return by_dim_.at(ref.dim).at(ref.index); }

  /// Index of the simplex with exactly these (sorted) vertex ids, if present.
  std::optional<std::size_t> index_of(std::span<const VertexId> vertices) const;
  std::optional<SimplexRef> find(std::span<const std::string> labels) const;

  /// Every simplex comparable to `ref`, ordered by (dim, index).
  std::vector<SimplexRef> neighbors(SimplexRef ref) const;

  std::size_t vertex_count() const { return labels_.size(); }
  const std::string& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> vertex_id(const std::string& label) const;

  /// Vertex labels of a simplex joined with ','.
  std::string describe(SimplexRef ref) const;

  /// true when every simplex has weight exactly 1.
  bool unweighted() const { return unweighted_; }

 private:
  std::vector<std::string> labels_;               // id -> label
  std::vector<std::vector<Simplex>> by_dim_;      // S_0 .. S_n
  bool unweighted_ = true;
};

/// Natural ordering used for vertex ids: all-digit labels compare
/// numerically and sort before other labels, which compare as strings.
bool label_less(const std::string& a, const std::string& b);

}  // namespace simplap
