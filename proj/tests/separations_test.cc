#include <random>

#include "endtree/separations.hpp"
#include "fixtures.hpp"
#include "gtest/gtest.h"

namespace endtree {
namespace {

using testing::columns;
using testing::family;
using testing::ray_cut;
using testing::sep;
using testing::spine_range;
using testing::v;

// Two order-2 cuts of the ladder at columns 2-3 that cross.
std::pair<Separation, Separation> staircases(const TruncatedGraph& l) {
  auto s1a = columns(0, 2);
  s1a.push_back("L:0:3");
  auto s1b = columns(4, 6);
  for (auto id : {"L:1:2", "L:0:3", "L:1:3"}) s1b.push_back(id);
  auto s2a = columns(0, 2);
  s2a.push_back("L:1:3");
  auto s2b = columns(4, 6);
  for (auto id : {"L:0:2", "L:0:3", "L:1:3"}) s2b.push_back(id);
  return {sep(l, s1a, s1b), sep(l, s2a, s2b)};
}

TEST(MakeSeparationTest, Examples) {
  auto g = family("ray", 5);
  auto s = ray_cut(g, 2);
  EXPECT_EQ(s.order(), 1);
  EXPECT_EQ(s.separator(), g.set_of({v(2)}));

  auto whole = make_separation(g, g.all(), g.all());
  EXPECT_EQ(whole.order(), g.vertex_count());
  EXPECT_FALSE(is_proper(whole));

  auto l = family("ladder", 6);
  EXPECT_EQ(sep(l, columns(0, 3), columns(3, 6)).order(), 2);
}

TEST(MakeSeparationTest, Errors) {
  auto g = family("ray", 5);
  try {
    sep(g, spine_range(0, 2), spine_range(3, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCovering);
  }
  try {
    sep(g, spine_range(0, 2), spine_range(3, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCrossEdge);
    EXPECT_NE(std::string(e.what()).find("spine:2"), std::string::npos);
  }
}

TEST(ProperTightTest, Examples) {
  auto g = family("ray", 5);
  auto s = ray_cut(g, 2);
  EXPECT_TRUE(is_proper(s));
  EXPECT_TRUE(is_tight(g, s));
  EXPECT_FALSE(is_proper(sep(g, spine_range(0, 5), {v(5)})));
  // A leaf-side separator vertex without a neighbour on the A side.
  EXPECT_FALSE(is_tight(g, sep(g, spine_range(0, 3), spine_range(2, 5))));
}

TEST(CornerTest, Examples) {
  auto g = family("ray", 5);
  auto s = ray_cut(g, 2);
  auto [c1, c2] = corner_separations(s, s);
  EXPECT_EQ(c1, s);
  EXPECT_EQ(c2.a(), s.b());
  EXPECT_EQ(c1.order() + c2.order(), 2);

  auto [n1, n2] = corner_separations(ray_cut(g, 2), ray_cut(g, 3));
  EXPECT_EQ(n1.separator(), g.set_of({v(2)}));
  EXPECT_EQ(n2.separator(), g.set_of({v(3)}));

  auto l = family("ladder", 6);
  auto [x, y] = staircases(l);
  auto [k1, k2] = corner_separations(x, y);
  EXPECT_EQ(k1.separator(), l.set_of({"L:0:2", "L:1:2"}));
  EXPECT_EQ(k2.separator(), l.set_of({"L:0:3", "L:1:3"}));
  EXPECT_EQ(k1.order() + k2.order(), 4);
}

TEST(CornerTest, OrderSumIsExactOnRandomPairs) {
  std::mt19937 rng(7);
  for (const char* name : {"ray", "ladder", "canopy", "grid", "alpha_example"}) {
    auto g = family(name, 4);
    for (int i = 0; i < 100; ++i) {
      auto s1 = testing::random_separation(g, rng);
      auto s2 = testing::random_separation(g, rng);
      auto [c1, c2] = corner_separations(s1, s2);
      EXPECT_EQ(c1.order() + c2.order(), s1.order() + s2.order()) << name;
    }
  }
}

TEST(OrderTest, Examples) {
  auto g = family("ray", 5);
  auto s2 = ray_cut(g, 2), s3 = ray_cut(g, 3);
  EXPECT_TRUE(leq(s2, s2));
  EXPECT_TRUE(leq(s2, s3));
  EXPECT_FALSE(leq(s3, s2));
  EXPECT_TRUE(nested(s2, s3));
  EXPECT_TRUE(nested(s2, s2.reversed()));

  auto l = family("ladder", 6);
  auto [x, y] = staircases(l);
  EXPECT_FALSE(leq(x, y));
  EXPECT_FALSE(leq(y, x));
  EXPECT_FALSE(nested(x, y));
}

}  // namespace
}  // namespace endtree
