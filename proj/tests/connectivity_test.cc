#include <random>
#include <set>

#include "endtree/connectivity.hpp"
#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace endtree {
namespace {

using testing::columns;
using testing::family;
using testing::v;

// Paths run X to Y, are internally disjoint and avoid the cut except where
// the cut is forced onto them.
void expect_certificate(const TruncatedGraph& g, const VertexSet& x,
                        const VertexSet& y, const CutResult& r, PathMode mode) {
  if (r.unbounded) return;
  ASSERT_EQ(static_cast<int>(r.paths.size()), r.value);
  ASSERT_EQ(static_cast<int>(r.cut.size()), r.value);
  std::multiset<Vertex> used;
  for (const auto& p : r.paths) {
    ASSERT_FALSE(p.empty());
    EXPECT_TRUE(x.contains(p.front()));
    EXPECT_TRUE(y.contains(p.back()));
    for (std::size_t i = 1; i < p.size(); ++i) EXPECT_TRUE(g.adjacent(p[i - 1], p[i]));
    std::size_t lo = mode == PathMode::kTerminals ? 1 : 0;
    std::size_t hi = mode == PathMode::kTerminals ? p.size() - 1 : p.size();
    for (std::size_t i = lo; i < hi; ++i) used.insert(p[i]);
  }
  for (Vertex u : used) EXPECT_EQ(used.count(u), 1u) << g.name(u);
  EXPECT_FALSE(oracle::reaches(g, x, y, r.cut));
}

TEST(MaxDisjointPathsTest, Examples) {
  auto ray = family("ray", 5);
  auto r = max_disjoint_paths(ray, ray.set_of({v(0)}), ray.set_of({v(5)}));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.cut.size(), 1u);

  auto l = family("ladder", 6);
  auto lx = l.set_of(columns(0, 0)), ly = l.set_of(columns(6, 6));
  auto lr = max_disjoint_paths(l, lx, ly);
  EXPECT_EQ(lr.value, 2);
  EXPECT_EQ(oracle::min_terminal_cut(l, lx, ly), 2);
  expect_certificate(l, lx, ly, lr, PathMode::kTerminals);

  auto grid = family("grid", 3);
  auto gx = grid.set_of({"G:0:0"});
  auto gr = max_disjoint_paths(grid, gx, grid.horizon());
  EXPECT_EQ(gr.value, 4);
  expect_certificate(grid, gx, grid.horizon(), gr, PathMode::kTerminals);
}

TEST(MaxDisjointPathsTest, AdjacentTerminalsAreUnbounded) {
  auto ray = family("ray", 3);
  auto r = max_disjoint_paths(ray, ray.set_of({v(0)}), ray.set_of({v(1)}));
  EXPECT_TRUE(r.unbounded);
  EXPECT_EQ(r.value, ray.vertex_count() + 1);
  auto d = max_disjoint_paths(ray, ray.set_of({v(0)}), ray.set_of({v(1)}), {},
                              PathMode::kDisjoint);
  EXPECT_EQ(d.value, 1);
}

TEST(MaxDisjointPathsTest, AgreesWithSubsetSearch) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> size(3, 12);
  for (int trial = 0; trial < 120; ++trial) {
    int n = size(rng);
    auto g = oracle::random_connected(rng, n, 0.25);
    std::uniform_int_distribution<Vertex> pick(0, n - 1);
    VertexSet x{pick(rng)}, y{pick(rng), pick(rng)};
    VertexSet excluded{pick(rng)};
    excluded = excluded - x - y;
    auto t = max_disjoint_paths(g, x, y, excluded, PathMode::kTerminals);
    EXPECT_EQ(t.value, oracle::min_terminal_cut(g, x, y, excluded)) << trial;
    auto d = max_disjoint_paths(g, x, y, excluded, PathMode::kDisjoint);
    EXPECT_EQ(d.value, oracle::min_disjoint_cut(g, x, y, excluded)) << trial;
    expect_certificate(g, x, y, d, PathMode::kDisjoint);
  }
}

TEST(MinimalSeparatorsTest, Examples) {
  auto ray = family("ray", 5);
  auto seps = enumerate_minimal_separators(ray, ray.at(v(0)), ray.at(v(5)), 1);
  std::vector<VertexSet> expected;
  for (int i = 1; i <= 4; ++i) expected.push_back(ray.set_of({v(i)}));
  EXPECT_EQ(seps, expected);

  auto l = family("ladder", 6);
  Vertex u = l.at("L:0:0"), w = l.at("L:1:6");
  EXPECT_TRUE(enumerate_minimal_separators(l, u, w, 1).empty());
  auto two = enumerate_minimal_separators(l, u, w, 2);
  EXPECT_EQ(two, oracle::minimal_separators(l, u, w, 2));
  // Five inner columns, six staircases of one slope and four of the other.
  EXPECT_EQ(two.size(), 5u + 6u + 4u);
}

TEST(MinimalSeparatorsTest, AgreesWithSubsetSearch) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 12)(rng);
    auto g = oracle::random_connected(rng, n, 0.2);
    Vertex u = 0, w = n - 1;
    if (g.adjacent(u, w)) continue;
    for (int k = 1; k <= 3; ++k)
      EXPECT_EQ(enumerate_minimal_separators(g, u, w, k),
                oracle::minimal_separators(g, u, w, k))
          << trial << " k=" << k;
  }
}

TEST(MinimalSeparatorsTest, RejectsAdjacentPair) {
  auto ray = family("ray", 3);
  EXPECT_THROW(enumerate_minimal_separators(ray, 0, 1, 1), Error);
}

TEST(SeparatorSequenceTest, Ray) {
  auto g = family("ray", 9);
  auto s = disjoint_separator_sequence(g, 1);
  std::vector<VertexSet> expected{g.set_of({v(2)}), g.set_of({v(5)}), g.set_of({v(8)})};
  EXPECT_EQ(s.separators, expected);
}

TEST(SeparatorSequenceTest, LadderUsesDisjointColumns) {
  auto g = family("ladder", 9);
  auto s = disjoint_separator_sequence(g, 2);
  ASSERT_GE(s.separators.size(), 2u);
  for (std::size_t i = 0; i < s.separators.size(); ++i) {
    EXPECT_EQ(s.separators[i].size(), 2u);
    EXPECT_EQ(max_disjoint_paths(g, g.base(), g.horizon(), {},
                                 PathMode::kDisjoint).value, 2);
    EXPECT_FALSE(oracle::reaches(g, g.base() - s.separators[i], g.horizon(),
                                 s.separators[i]));
    for (std::size_t j = 0; j < i; ++j)
      EXPECT_FALSE(s.separators[i].intersects(s.separators[j]));
  }
}

TEST(SeparatorSequenceTest, GridDegreeMismatch) {
  try {
    disjoint_separator_sequence(family("grid", 3), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeMismatch);
  }
}

TEST(EndDegreeTest, GoldenValues) {
  auto ray = end_vertex_degree({"ray", {}, {}}, {4, 6, 8}, 8);
  EXPECT_FALSE(ray.thick);
  EXPECT_EQ(ray.degree, 1);
  EXPECT_TRUE(ray.stable);

  auto ladder = end_vertex_degree({"ladder", {}, {}}, {4, 6, 8}, 8);
  EXPECT_EQ(ladder.degree, 2);
  EXPECT_EQ(ladder.values, (std::vector<int>{2, 2, 2}));

  auto grid = end_vertex_degree({"grid", {}, {}}, {3, 4, 5}, 8);
  EXPECT_TRUE(grid.thick);
  EXPECT_EQ(grid.values, (std::vector<int>{12, 16, 20}));
}

TEST(EndDegreeTest, CutValueMatchesBruteForceAtRadiusFour) {
  auto l = family("ladder", 4);
  auto r = boundary_to_horizon_cut(l);
  EXPECT_EQ(r.value, 2);
}

TEST(DominationTest, GoldenValues) {
  auto d = find_dominating_vertices({"dominated_canopy", {}, {}}, {4, 6, 8}, 8);
  EXPECT_EQ(d.dominators, std::vector<std::string>{"apex"});
  EXPECT_TRUE(d.stable);
  for (const char* name : {"ray", "ladder", "canopy", "canopy_fig2", "alpha_example"}) {
    auto r = find_dominating_vertices({name, {}, {}}, {4, 6, 8}, 8);
    EXPECT_TRUE(r.dominators.empty()) << name;
    EXPECT_TRUE(r.stable) << name;
  }
}

TEST(DominationTest, FanGrowsForTheApexOnly) {
  auto g = family("dominated_canopy", 5);
  auto ray = reference_ray(g);
  EXPECT_GE(fan_to_ray(g, g.at("apex"), ray), 3);
  // One path up the spine, one down to a leaf and back through the apex.
  EXPECT_EQ(fan_to_ray(g, g.at("sub:3"), ray), 2);
}

}  // namespace
}  // namespace endtree
