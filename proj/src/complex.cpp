#include "simplap/complex.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

namespace simplap {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

std::string strip_zeros(const std::string& s) {
  auto pos = s.find_first_not_of('0');
  return pos == std::string::npos ? std::string("0") : s.substr(pos);
}

bool strict_subset(const std::vector<VertexId>& small, const std::vector<VertexId>& big) {
  return small.size() < big.size() && std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? " " : "") << labels[i];
  return os.str();
}

}  // namespace

bool label_less(const std::string& a, const std::string& b) {
  const bool da = all_digits(a), db = all_digits(b);
  if (da != db) return da;
  if (da) {
    const std::string sa = strip_zeros(a), sb = strip_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

bool comparable(const Simplex& a, const Simplex& b) {
  return strict_subset(a.vertices, b.vertices) || strict_subset(b.vertices, a.vertices);
}

SimplicialComplex SimplicialComplex::from_hyperedges(std::span<const Hyperedge> edges,
                                                     std::span<const SimplexWeight> overrides,
                                                     const ComplexOptions& options) {
  if (options.max_cardinality == 0 || options.max_cardinality > 62)
    throw ComplexError("cardinality cap must lie in 1..62");

  std::set<std::string, decltype(&label_less)> label_set(&label_less);
  for (const auto& e : edges) {
    if (e.labels.empty()) throw ComplexError("empty hyperedge");
    label_set.insert(e.labels.begin(), e.labels.end());
  }

  SimplicialComplex c;
  c.labels_.assign(label_set.begin(), label_set.end());

  auto to_ids = [&c](const std::vector<std::string>& labels) {
    std::vector<VertexId> ids;
    ids.reserve(labels.size());
    for (const auto& l : labels) {
      auto id = c.vertex_id(l);
      if (!id) throw ComplexError("unknown vertex '" + l + "'");
      ids.push_back(*id);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  };

  std::vector<std::set<std::vector<VertexId>>> faces;
  std::map<std::vector<VertexId>, double> assigned;

  for (const auto& e : edges) {
    const auto ids = to_ids(e.labels);
    if (ids.size() > options.max_cardinality)
      throw ComplexError("hyperedge {" + join_labels(e.labels) + "} has " + std::to_string(ids.size()) +
                         " vertices, above the cardinality cap of " + std::to_string(options.max_cardinality));
    if (e.weight) {
      if (!(*e.weight > 0.0)) throw ComplexError("hyperedge {" + join_labels(e.labels) + "} has non-positive weight");
      assigned[ids] = *e.weight;
    }
    if (faces.size() < ids.size()) faces.resize(ids.size());

    const std::uint64_t full = (std::uint64_t{1} << ids.size());
    std::vector<VertexId> face;
    for (std::uint64_t mask = 1; mask < full; ++mask) {
      face.clear();
      for (std::size_t b = 0; b < ids.size(); ++b)
        if (mask & (std::uint64_t{1} << b)) face.push_back(ids[b]);
      faces[face.size() - 1].insert(face);
    }
  }

  c.by_dim_.resize(faces.size());
  for (std::size_t p = 0; p < faces.size(); ++p) {
    c.by_dim_[p].reserve(faces[p].size());
    for (const auto& f : faces[p]) c.by_dim_[p].push_back(Simplex{f, 1.0});
  }

  auto set_weight = [&c](const std::vector<VertexId>& ids, double w) {
    auto idx = c.index_of(ids);
    if (!idx) return false;
    c.by_dim_[ids.size() - 1][*idx].weight = w;
    return true;
  };

  for (const auto& [ids, w] : assigned) set_weight(ids, w);

  for (const auto& o : overrides) {
    if (o.labels.empty()) throw ComplexError("weight assignment with no vertices");
    if (!(o.weight > 0.0)) throw ComplexError("simplex {" + join_labels(o.labels) + "} has non-positive weight");
    for (const auto& l : o.labels)
      if (!c.vertex_id(l)) throw ComplexError("weight assigned to {" + join_labels(o.labels) + "}, which is not in the complex");
    if (!set_weight(to_ids(o.labels), o.weight))
      throw ComplexError("weight assigned to {" + join_labels(o.labels) + "}, which is not in the complex");
  }

  for (const auto& dim : c.by_dim_)
    for (const auto& s : dim)
      if (s.weight != 1.0) c.unweighted_ = false;
  return c;
}

std::size_t SimplicialComplex::count(int p) const {
  return (p < 0 || p > max_dim()) ? 0 : by_dim_[p].size();
}

std::size_t SimplicialComplex::total_count() const {
  std::size_t total = 0;
  for (const auto& d : by_dim_) total += d.size();
  return total;
}

std::span<const Simplex> SimplicialComplex::simplices(int p) const {
  if (p < 0 || p > max_dim()) return {};
  return by_dim_[p];
}

std::optional<std::size_t> SimplicialComplex::index_of(std::span<const VertexId> vertices) const {
  if (vertices.empty()) return std::nullopt;
  const int p = static_cast<int>(vertices.size()) - 1;
  if (p > max_dim()) return std::nullopt;
  const auto& dim = by_dim_[p];
  auto it = std::lower_bound(dim.begin(), dim.end(), vertices, [](const Simplex& s, std::span<const VertexId> v) {
    return std::lexicographical_compare(s.vertices.begin(), s.vertices.end(), v.begin(), v.end());
  });
  if (it == dim.end() || !std::equal(it->vertices.begin(), it->vertices.end(), vertices.begin(), vertices.end()))
    return std::nullopt;
  return static_cast<std::size_t>(it - dim.begin());
}

std::optional<SimplexRef> SimplicialComplex::find(std::span<const std::string> labels) const {
  std::vector<VertexId> ids;
  for (const auto& l : labels) {
    auto id = vertex_id(l);
    if (!id) return std::nullopt;
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto idx = index_of(ids);
  if (!idx) return std::nullopt;
  return SimplexRef{static_cast<int>(ids.size()) - 1, *idx};
}

std::vector<SimplexRef> SimplicialComplex::neighbors(SimplexRef ref) const {
  const Simplex& s = simplex(ref);
  std::vector<SimplexRef> out;
  for (int p = 0; p <= max_dim(); ++p) {
    if (p == ref.dim) continue;
    for (std::size_t i = 0; i < by_dim_[p].size(); ++i)
      if (comparable(s, by_dim_[p][i])) out.push_back({p, i});
  }
  return out;
}

std::optional<VertexId> SimplicialComplex::vertex_id(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label, &label_less);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::string SimplicialComplex::describe(SimplexRef ref) const {
  std::string out;
  for (auto v : simplex(ref).vertices) {
    if (!out.empty()) out += ',';
    out += labels_[v];
  }
  return out;
}

}  // namespace simplap
