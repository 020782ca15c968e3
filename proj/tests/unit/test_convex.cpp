#include <gtest/gtest.h>

#include "sumset/convex.hpp"
#include "sumset/generators.hpp"
#include "sumset/rng.hpp"

using namespace sumset;

namespace {

const PointSet kSquare(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});

// Independent hull test for the plane: q is in the hull of x iff it lies in
// some triangle (or segment, or point) of x.
bool in_hull_2d_brute(const RationalPoint& q, const PointSet& x) {
  auto cross = [](const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) -> Rational {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  auto on_segment = [&](const RationalPoint& a, const RationalPoint& b) {
    if (cross(a, b, q) != 0) return false;
    for (int k = 0; k < 2; ++k) {
      if (q[k] < std::min(a[k], b[k]) || q[k] > std::max(a[k], b[k])) return false;
    }
    return true;
  };
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = to_rational(x[i]);
    if (a == q) return true;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto b = to_rational(x[j]);
      if (on_segment(a, b)) return true;
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto c = to_rational(x[k]);
        const Rational s1 = cross(a, b, q), s2 = cross(b, c, q), s3 = cross(c, a, q);
        if ((s1 >= 0 && s2 >= 0 && s3 >= 0) || (s1 <= 0 && s2 <= 0 && s3 <= 0)) {
          if (cross(a, b, c) != 0) return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

TEST(ConvexTest, SquareMembership) {
  EXPECT_TRUE(in_convex_hull(RationalPoint{make_rational(1, 2), make_rational(1, 2)}, kSquare));
  EXPECT_FALSE(in_convex_hull(LatticePoint{2, 0}.coords(), kSquare));
  EXPECT_TRUE(in_convex_hull(LatticePoint{1, 0}.coords(), kSquare));
  EXPECT_FALSE(in_convex_hull(RationalPoint{make_rational(1, 2), make_rational(-1, 100)}, kSquare));
}

TEST(ConvexTest, MidpointsOfHullVertices) {
  const PointSet x(2, {{0, 0}, {4, 1}, {1, 5}, {2, 2}});
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) EXPECT_TRUE(in_convex_hull(midpoint(x[i], x[j]), x));
  }
}

TEST(ConvexTest, ExtremePointsExamples) {
  EXPECT_EQ(extreme_points(PointSet::from_values({0, 1, 2, 3})), PointSet::from_values({0, 3}));
  const PointSet with_top(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}});
  // (1,1) is the midpoint of (1,0) and (1,2)
  EXPECT_EQ(extreme_points(with_top), PointSet(2, {{0, 0}, {0, 1}, {1, 0}, {1, 2}}));
  EXPECT_EQ(extreme_points(PointSet(3, {{4, 5, 6}})), PointSet(3, {{4, 5, 6}}));
  EXPECT_EQ(extreme_points(gen_grid(3, 3)).size(), 8U);
}

TEST(ConvexTest, AgreesWithTriangleOracle) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet x = gen_random_lattice(2, 1 + rng.below(6), 5, rng.next());
    const RationalPoint q{make_rational(static_cast<std::int64_t>(rng.below(11)) - 1, 2),
                          make_rational(static_cast<std::int64_t>(rng.below(11)) - 1, 2)};
    EXPECT_EQ(in_convex_hull(q, x), in_hull_2d_brute(q, x)) << x.to_string();
  }
}

TEST(ConvexTest, ExtremeIffNotInHullOfOthers) {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const PointSet x = gen_random_lattice(3, 4 + rng.below(10), 4, rng.next());
    const PointSet ext = extreme_points(x);
    EXPECT_TRUE(ext.is_subset_of(x));
    EXPECT_FALSE(ext.empty());
    for (std::size_t i = 0; i < x.size(); ++i) {
      EXPECT_EQ(!in_convex_hull(x[i], x.without(x[i])), ext.contains(x[i]));
    }
    // the lexicographic maximum is always a vertex
    EXPECT_TRUE(ext.contains(x[x.size() - 1]));
  }
}
