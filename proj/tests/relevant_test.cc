#include <climits>

#include "endtree/connectivity.hpp"
#include "endtree/relevant.hpp"
#include "endtree/symmetry.hpp"
#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace endtree {
namespace {

using testing::columns;
using testing::family;
using testing::ray_cut;
using testing::sep;
using testing::v;

std::vector<VertexSet> sides(const std::vector<RelevantSeparation>& pool) {
  std::vector<VertexSet> out;
  for (const auto& r : pool) out.push_back(r.sep.a_only());
  return out;
}

ErrorCode code_of(const TruncatedGraph& g, const Separation& s, int k) {
  try {
    verify_relevant(g, s, k);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

TEST(VerifyRelevantTest, RayCertificate) {
  auto g = family("ray", 6);
  auto r = verify_relevant(g, ray_cut(g, 3), 1);
  ASSERT_EQ(r.certificate.size(), 1u);
  EXPECT_EQ(g.names_of(VertexSet(r.certificate[0])), testing::spine_range(3, 6));
  EXPECT_EQ(r.certificate[0].front(), g.at(v(3)));
}

TEST(VerifyRelevantTest, LadderColumnCut) {
  auto g = family("ladder", 6);
  auto r = verify_relevant(g, sep(g, columns(0, 3), columns(3, 6)), 2);
  EXPECT_EQ(r.certificate.size(), 2u);
}

TEST(VerifyRelevantTest, FailuresInOrder) {
  auto g = family("ray", 6);
  EXPECT_EQ(code_of(g, ray_cut(g, 3), 2), ErrorCode::kWrongOrder);
  EXPECT_EQ(code_of(g, ray_cut(g, 3).reversed(), 1), ErrorCode::kHorizonOnWrongSide);

  EXPECT_EQ(code_of(g, sep(g, testing::spine_range(0, 3), {v(1), v(3), v(4), v(5), v(6)}), 2),
            ErrorCode::kSideDisconnected);

  // Separator vertex spine:3 hangs only on the B side.
  EXPECT_EQ(code_of(g, sep(g, testing::spine_range(0, 3), testing::spine_range(2, 6)), 2),
            ErrorCode::kSeparatorNotAttached);

  // The leaf sub:2:r reaches the horizon only through A\B.
  auto c = family("canopy", 3);
  auto s = separation_from_side(c, c.set_of({"sub:2", "sub:2:l"}));
  EXPECT_EQ(s.separator(), c.set_of({"sub:2:r", v(2)}));
  EXPECT_EQ(code_of(c, s, 2), ErrorCode::kSmallerCutExists);
}

TEST(VerifyRelevantTest, GridHasNoOrderOneRelevantSeparation) {
  auto g = family("grid", 3);
  EXPECT_TRUE(enumerate_relevant(g, 1, INT_MAX).empty());
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (g.horizon().contains(u)) continue;
    auto s = make_separation(g, VertexSet{u} | neighborhood(g, VertexSet{u}),
                             g.all() - VertexSet{u});
    EXPECT_NE(code_of(g, s, 1), ErrorCode::kOk);
  }
}

TEST(EnumerateRelevantTest, RayPrefixes) {
  auto g = family("ray", 6);
  auto pool = enumerate_relevant(g, 1, 4);
  ASSERT_EQ(pool.size(), 4u);
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(pool[i - 1].sep, ray_cut(g, i));
}

TEST(EnumerateRelevantTest, CanopyAgreesWithConnectedSetScan) {
  auto g = family("canopy", 4);
  auto pool = enumerate_relevant(g, 1, 8);
  auto expected = oracle::relevant_small_sides(g, 1, 8);
  EXPECT_EQ(sides(pool), expected);
  // Spine prefixes and subtrees.
  bool spine_prefix = false, subtree = false;
  for (const auto& r : pool) {
    spine_prefix |= r.sep.a_only() == g.set_of({v(0)});
    subtree |= r.sep.a_only() == g.set_of({"sub:2", "sub:2:l", "sub:2:r"});
  }
  EXPECT_TRUE(spine_prefix);
  EXPECT_TRUE(subtree);
}

TEST(EnumerateRelevantTest, LadderAgreesWithConnectedSetScan) {
  auto g = family("ladder", 6);
  auto pool = enumerate_relevant(g, 2, 6);
  EXPECT_EQ(sides(pool), oracle::relevant_small_sides(g, 2, 6));
  for (const auto& r : pool) EXPECT_EQ(r.sep.order(), 2);
}

TEST(EnumerateRelevantTest, RandomGraphsAgreeWithConnectedSetScan) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 10)(rng);
    auto g = oracle::random_connected(rng, n, 0.2);
    for (int k = 1; k <= 2; ++k)
      EXPECT_EQ(sides(enumerate_relevant(g, k, n)), oracle::relevant_small_sides(g, k, n))
          << trial;
  }
}

TEST(ExhaustingSequenceTest, Ray) {
  auto g = family("ray", 9);
  auto seq = build_exhausting_sequence(g, 1);
  ASSERT_EQ(seq.size(), 3u);
  EXPECT_EQ(seq[0].sep.separator(), g.set_of({v(2)}));
  EXPECT_EQ(seq[1].sep.separator(), g.set_of({v(5)}));
  EXPECT_EQ(seq[2].sep.separator(), g.set_of({v(8)}));
}

TEST(ExhaustingSequenceTest, LadderShrinks) {
  auto g = family("ladder", 9);
  auto seq = build_exhausting_sequence(g, 2);
  ASSERT_GE(seq.size(), 2u);
  for (std::size_t i = 1; i < seq.size(); ++i) {
    EXPECT_TRUE(leq(seq[i - 1].sep, seq[i].sep));
    EXPECT_TRUE(seq[i].sep.b().subset_of(seq[i - 1].sep.b()));
    EXPECT_NE(seq[i].sep.b(), seq[i - 1].sep.b());
  }
}

TEST(AlphaTest, RayChain) {
  auto g = family("ray", 6);
  auto alpha = compute_alpha(g, enumerate_relevant(g, 1, 4));
  EXPECT_EQ(alpha.sep_ranks(), (std::vector<int>{0, 1, 2, 3}));
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(alpha.vertex_rank(g.at(v(i))), i - 1);
  EXPECT_EQ(alpha.set_rank({}), 0);
}

TEST(AlphaTest, SingletonPool) {
  auto g = family("ray", 6);
  auto alpha = compute_alpha(g, {verify_relevant(g, ray_cut(g, 3), 1)});
  EXPECT_EQ(alpha.rank(ray_cut(g, 3)), 0);
}

TEST(AlphaTest, DuplicatesAreRejected) {
  auto g = family("ray", 6);
  auto r = verify_relevant(g, ray_cut(g, 3), 1);
  try {
    compute_alpha(g, {r, r});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycleDetected);
  }
}

TEST(AlphaTest, RanksIncreaseAlongTheOrder) {
  for (auto [name, k, r] : {std::tuple{"ray", 1, 8}, {"ladder", 2, 8}, {"canopy", 1, 5}}) {
    auto g = family(name, r);
    auto alpha = compute_alpha(g, enumerate_relevant(g, k, INT_MAX));
    const auto& pool = alpha.pool();
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < pool.size(); ++j)
        if (i != j && leq(pool[i].sep, pool[j].sep))
          EXPECT_LT(alpha.sep_ranks()[i], alpha.sep_ranks()[j]) << name;
  }
}

// The separation with A\B = P:n:0..P:n:(k-1) sits on top of the chain of its
// shorter prefixes, k - 1 of them.
TEST(AlphaTest, AlphaExamplePrefixes) {
  auto g = family("alpha_example", 5);
  auto alpha = compute_alpha(g, enumerate_relevant(g, 1, INT_MAX));
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k < n; ++k) {
      std::vector<std::string> side;
      for (int j = 0; j < k; ++j)
        side.push_back("P:" + std::to_string(n) + ":" + std::to_string(j));
      EXPECT_EQ(alpha.rank(separation_from_side(g, g.set_of(side))), k - 1)
          << n << "," << k;
    }
}

TEST(PoolPropertyTest, NestedIffComparableOrSmallSidesDisjoint) {
  for (auto [name, k, r] : {std::tuple{"ray", 1, 8}, {"ladder", 2, 8}, {"canopy", 1, 5}}) {
    auto g = family(name, r);
    auto pool = enumerate_relevant(g, k, INT_MAX);
    for (const auto& x : pool)
      for (const auto& y : pool) {
        bool options = leq(x.sep, y.sep) || leq(y.sep, x.sep) ||
                       x.sep.a().subset_of(y.sep.b());
        EXPECT_EQ(nested(x.sep, y.sep), options) << name;
      }
  }
}

TEST(PoolPropertyTest, TightInclusionFlips) {
  for (auto [name, k, r] : {std::tuple{"ray", 1, 8}, {"ladder", 2, 6}, {"canopy", 1, 4}}) {
    auto g = family(name, r);
    auto pool = enumerate_relevant(g, k, INT_MAX);
    for (const auto& x : pool)
      for (const auto& y : pool)
        if (x.sep.a().subset_of(y.sep.a()))
          EXPECT_TRUE(y.sep.b().subset_of(x.sep.b())) << name;
  }
}

TEST(NiceSetTest, RayNextCut) {
  auto g = family("ray", 9);
  auto alpha = compute_alpha(g, enumerate_relevant(g, 1, INT_MAX));
  auto aut = automorphisms(g);
  auto nice = compute_nice_set(g, ray_cut(g, 2), alpha, aut);
  ASSERT_EQ(nice.size(), 1u);
  EXPECT_EQ(nice[0].sep, ray_cut(g, 3));
}

TEST(NiceSetTest, CanopyLeafBlock) {
  auto g = family("canopy", 5);
  auto alpha = compute_alpha(g, enumerate_relevant(g, 1, INT_MAX));
  auto aut = automorphisms(g);
  auto nice = compute_nice_set(g, separation_from_side(g, g.set_of({"sub:1"})), alpha, aut);
  ASSERT_FALSE(nice.empty());
  for (const auto& r : nice) {
    EXPECT_EQ(r.sep.order(), 1);
    for (const auto& s : nice) EXPECT_TRUE(nested(r.sep, s.sep));
  }
  auto orbit = separation_orbit(aut, nice[0].sep);
  EXPECT_EQ(orbit.size(), nice.size());
}

TEST(NiceSetTest, MaximalMemberHasNone) {
  auto g = family("ray", 6);
  auto alpha = compute_alpha(g, enumerate_relevant(g, 1, INT_MAX));
  try {
    compute_nice_set(g, alpha.pool().back().sep, alpha, automorphisms(g));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyNiceSet);
  }
}

}  // namespace
}  // namespace endtree
