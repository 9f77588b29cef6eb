#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "simplap/complex.hpp"

using namespace simplap;
using simplap::testing::toy_complex;

namespace {

std::vector<std::vector<std::string>> labels_of(const SimplicialComplex& c, int p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : c.simplices(p)) {
    std::vector<std::string> l;
    for (auto v : s.vertices) l.push_back(c.label(v));
    out.push_back(l);
  }
  return out;
}

Simplex make(std::vector<VertexId> v) { return Simplex{std::move(v), 1.0}; }

}  // namespace

TEST(Complex, ToyCounts) {
  const auto c = toy_complex();
  EXPECT_EQ(c.max_dim(), 2);
  EXPECT_EQ(c.count(0), 4u);
  EXPECT_EQ(c.count(1), 5u);
  EXPECT_EQ(c.count(2), 2u);
  EXPECT_EQ(c.total_count(), 11u);
  EXPECT_TRUE(c.unweighted());
}

TEST(Complex, ToyTrianglesInCanonicalOrder) {
  const auto c = toy_complex();
  using L = std::vector<std::vector<std::string>>;
  EXPECT_EQ(labels_of(c, 2), (L{{"v1", "v2", "v3"}, {"v1", "v3", "v4"}}));
  EXPECT_EQ(labels_of(c, 1), (L{{"v1", "v2"}, {"v1", "v3"}, {"v1", "v4"}, {"v2", "v3"}, {"v3", "v4"}}));
  EXPECT_TRUE(c.simplices(3).empty());
  EXPECT_TRUE(c.simplices(-1).empty());
}

TEST(Complex, SingleVertex) {
  const std::vector<Hyperedge> edges{{{"a"}, {}}};
  const auto c = SimplicialComplex::from_hyperedges(edges);
  EXPECT_EQ(c.max_dim(), 0);
  EXPECT_EQ(c.count(0), 1u);
  EXPECT_TRUE(c.neighbors({0, 0}).empty());
}

TEST(Complex, TetrahedronClosure) {
  const std::vector<Hyperedge> edges{{{"a", "b", "c", "d"}, {}}};
  const auto c = SimplicialComplex::from_hyperedges(edges);
  EXPECT_EQ(c.max_dim(), 3);
  EXPECT_EQ(c.count(0), 4u);
  EXPECT_EQ(c.count(1), 6u);
  EXPECT_EQ(c.count(2), 4u);
  EXPECT_EQ(c.count(3), 1u);
  using L = std::vector<std::vector<std::string>>;
  EXPECT_EQ(labels_of(c, 1), (L{{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}}));
}

TEST(Complex, ComparableRelation) {
  EXPECT_TRUE(comparable(make({0, 1}), make({0, 1, 2})));
  EXPECT_TRUE(comparable(make({0, 1, 2}), make({0, 1})));
  EXPECT_FALSE(comparable(make({0}), make({0})));
  EXPECT_FALSE(comparable(make({0, 1}), make({2, 3})));
  EXPECT_FALSE(comparable(make({0, 1}), make({1, 2})));
}

TEST(Complex, NeighborsOfToySimplices) {
  const auto c = toy_complex();
  const auto v1 = c.neighbors({0, 0});
  std::set<std::string> names;
  for (auto r : v1) names.insert(c.describe(r));
  EXPECT_EQ(names, (std::set<std::string>{"v1,v2", "v1,v3", "v1,v4", "v1,v2,v3", "v1,v3,v4"}));

  const auto t1 = c.neighbors({2, 0});
  names.clear();
  for (auto r : t1) names.insert(c.describe(r));
  EXPECT_EQ(names, (std::set<std::string>{"v1", "v2", "v3", "v1,v2", "v1,v3", "v2,v3"}));
}

TEST(Complex, DuplicateHyperedgeWeightLastWins) {
  const std::vector<Hyperedge> edges{{{"a", "b"}, 2.0}, {{"b", "a"}, 3.5}, {{"a", "b", "c"}, {}}};
  const auto c = SimplicialComplex::from_hyperedges(edges);
  EXPECT_EQ(c.count(1), 3u);
  const std::vector<std::string> ab{"a", "b"};
  EXPECT_DOUBLE_EQ(c.simplex(*c.find(ab)).weight, 3.5);
  const std::vector<std::string> bc{"b", "c"};
  EXPECT_DOUBLE_EQ(c.simplex(*c.find(bc)).weight, 1.0);
  EXPECT_FALSE(c.unweighted());
}

TEST(Complex, WeightOverrides) {
  const std::vector<Hyperedge> edges{{{"a", "b", "c"}, {}}};
  const std::vector<SimplexWeight> ok{{{"c", "a"}, 4.0}};
  const auto c = SimplicialComplex::from_hyperedges(edges, ok);
  const std::vector<std::string> ac{"a", "c"};
  EXPECT_DOUBLE_EQ(c.simplex(*c.find(ac)).weight, 4.0);

  const std::vector<SimplexWeight> missing{{{"a", "d"}, 2.0}};
  EXPECT_THROW(SimplicialComplex::from_hyperedges(edges, missing), ComplexError);
  const std::vector<SimplexWeight> zero{{{"a"}, 0.0}};
  EXPECT_THROW(SimplicialComplex::from_hyperedges(edges, zero), ComplexError);
}

TEST(Complex, RejectsBadHyperedges) {
  EXPECT_THROW(SimplicialComplex::from_hyperedges(std::vector<Hyperedge>{{{}, {}}}), ComplexError);
  EXPECT_THROW(SimplicialComplex::from_hyperedges(std::vector<Hyperedge>{{{"a", "b"}, -1.0}}), ComplexError);
  EXPECT_THROW(SimplicialComplex::from_hyperedges(std::vector<Hyperedge>{{{"a", "b"}, 0.0}}), ComplexError);

  std::vector<std::string> big;
  for (int i = 0; i < 17; ++i) big.push_back("u" + std::to_string(i));
  EXPECT_THROW(SimplicialComplex::from_hyperedges(std::vector<Hyperedge>{{big, {}}}), ComplexError);
  big.pop_back();
  EXPECT_NO_THROW(SimplicialComplex::from_hyperedges(std::vector<Hyperedge>{{big, {}}}));

  ComplexOptions small{3};
  EXPECT_THROW(SimplicialComplex::from_hyperedges(std::vector<Hyperedge>{{{"a", "b", "c", "d"}, {}}}, {}, small),
               ComplexError);
}

TEST(Complex, NaturalLabelOrder) {
  const std::vector<Hyperedge> edges{{{"10", "2", "b", "a"}, {}}};
  const auto c = SimplicialComplex::from_hyperedges(edges);
  EXPECT_EQ(c.label(0), "2");
  EXPECT_EQ(c.label(1), "10");
  EXPECT_EQ(c.label(2), "a");
  EXPECT_EQ(c.label(3), "b");
}

TEST(Complex, OrderIndependentOfInput) {
  auto edges = simplap::testing::toy_hyperedges();
  const auto a = toy_complex();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges) std::shuffle(e.labels.begin(), e.labels.end(), rng);
    const auto b = SimplicialComplex::from_hyperedges(edges);
    for (int p = 0; p <= 2; ++p) EXPECT_EQ(labels_of(a, p), labels_of(b, p));
  }
}

// Closure, sortedness, and the vertex-neighbour count identity on random inputs.
TEST(Complex, RandomComplexInvariants) {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = SimplicialComplex::from_hyperedges(simplap::testing::random_hyperedges(rng));
    for (int p = 0; p <= c.max_dim(); ++p) {
      const auto s = c.simplices(p);
      ASSERT_FALSE(s.empty());
      for (std::size_t i = 0; i < s.size(); ++i) {
        ASSERT_EQ(s[i].dim(), p);
        ASSERT_TRUE(std::is_sorted(s[i].vertices.begin(), s[i].vertices.end()));
        ASSERT_EQ(std::adjacent_find(s[i].vertices.begin(), s[i].vertices.end()), s[i].vertices.end());
        if (i > 0) ASSERT_LT(s[i - 1].vertices, s[i].vertices);
        if (p >= 1)
          for (std::size_t drop = 0; drop < s[i].vertices.size(); ++drop) {
            auto facet = s[i].vertices;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
            ASSERT_TRUE(c.index_of(facet).has_value());
          }
      }
    }
    for (std::size_t v = 0; v < c.count(0); ++v) {
      std::size_t containing = 0;
      for (int p = 1; p <= c.max_dim(); ++p)
        for (const auto& s : c.simplices(p))
          containing += std::binary_search(s.vertices.begin(), s.vertices.end(), v);
      ASSERT_EQ(c.neighbors({0, v}).size(), containing);
    }
    // symmetric, irreflexive
    const auto cells = simplap::testing::all_cells(c);
    for (const auto& a : cells)
      for (const auto& b : cells) {
        const Simplex sa{a.vertices, 1.0}, sb{b.vertices, 1.0};
        ASSERT_EQ(comparable(sa, sb), comparable(sb, sa));
        if (a.dim == b.dim && a.index == b.index) ASSERT_FALSE(comparable(sa, sb));
      }
  }
}
