#include <gtest/gtest.h>

#include "sumset/errors.hpp"
#include "sumset/generators.hpp"
#include "sumset/lattice.hpp"
#include "sumset/rng.hpp"

using namespace sumset;

TEST(PointSetTest, CanonicalOrderAndDedupe) {
  const PointSet a(2, {{1, 0}, {0, 5}, {1, 0}, {0, -1}});
  EXPECT_EQ(a.size(), 3U);
  EXPECT_EQ(a.to_string(), "{(0,-1) (0,5) (1,0)}");
  EXPECT_TRUE(a.contains(LatticePoint{0, 5}));
  EXPECT_FALSE(a.contains(LatticePoint{5, 0}));
  EXPECT_EQ(a.index_of(LatticePoint{1, 0}.coords()), 2U);
}

TEST(PointSetTest, SubsetAndUnion) {
  const PointSet a = PointSet::from_values({3, 1, 2});
  const PointSet b = PointSet::from_values({2, 7});
  EXPECT_EQ(a.united(b), PointSet::from_values({1, 2, 3, 7}));
  EXPECT_TRUE(PointSet::from_values({1, 3}).is_subset_of(a));
  EXPECT_FALSE(b.is_subset_of(a));
}

TEST(DirectionTest, Canonicalises) {
  EXPECT_EQ(Direction({-2, -4}), Direction({1, 2}));
  EXPECT_EQ(Direction({0, -3}), Direction({0, 1}));
  EXPECT_THROW(Direction({0, 0}), ContractViolation);
}

TEST(SumsetTest, SmallCases) {
  EXPECT_EQ(sumset::sumset(PointSet::from_values({0, 1}), PointSet::from_values({0, 1})), PointSet::from_values({0, 1, 2}));
  const PointSet p(2, {{3, 4}}), q(2, {{-1, 2}});
  EXPECT_EQ(sumset::sumset(p, q), PointSet(2, {{2, 6}}));
}

TEST(SumsetTest, ChrFamilyHasFifteenSums) {
  const PointSet a = gen_chr(2, 3);
  EXPECT_EQ(a.size(), 6U);
  EXPECT_EQ(sumset_size(a, a), 15U);
  EXPECT_EQ(sumset::sumset(a, a).size(), 15U);
}

TEST(SumsetTest, Contracts) {
  EXPECT_THROW(sumset::sumset(PointSet::from_values({0}), PointSet(2, {{0, 0}})), ContractViolation);
  EXPECT_THROW(sumset::sumset(PointSet(1), PointSet::from_values({0})), ContractViolation);
}

TEST(SumsetTest, CommutativeAndTranslationInvariant) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PointSet a = gen_random_lattice(2, 12, 6, seed);
    const PointSet b = gen_random_lattice(2, 7, 6, seed + 100);
    EXPECT_EQ(sumset::sumset(a, b), sumset::sumset(b, a));
    const std::vector<Coord> t{5, -3};
    EXPECT_EQ(sumset_size(a.translated(t), b), sumset_size(a, b));
    EXPECT_EQ(sumset_size(a, PointSet(2, {{4, 4}})), a.size());
    const PointSet c = gen_random_lattice(2, 4, 6, seed + 200);
    EXPECT_EQ(sumset::sumset(sumset::sumset(a, b), c), sumset::sumset(a, sumset::sumset(b, c)));
  }
}

TEST(AffineDimTest, Examples) {
  EXPECT_EQ(affine_dim(PointSet(2, {{0, 0}, {1, 0}, {0, 1}})), 2U);
  EXPECT_EQ(affine_dim(PointSet(2, {{0, 0}, {2, 4}, {1, 2}})), 1U);
  EXPECT_EQ(affine_dim(PointSet(3, {{1, 1, 1}})), 0U);
  for (std::size_t d = 1; d <= 5; ++d) EXPECT_EQ(affine_dim(gen_chr(d, 2)), d);
}

TEST(AffineDimTest, InvariantUnderUnimodularMaps) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PointSet a = gen_random_lattice(3, 5, 4, seed);
    std::vector<Coord> flat;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto p = a[i];
      // (x, y, z) -> (x + 2y, y - z, z) + (1, 1, 1)
      flat.insert(flat.end(), {p[0] + 2 * p[1] + 1, p[1] - p[2] + 1, p[2] + 1});
    }
    EXPECT_EQ(affine_dim(PointSet::from_flat(3, flat)), affine_dim(a));
  }
}

TEST(ProjectionTest, ChrFibers) {
  const auto fibers = project_orthogonal(gen_chr(2, 3), Direction::axis(2, 1));
  ASSERT_EQ(fibers.size(), 2U);
  EXPECT_EQ(fibers[0].points.size(), 3U);
  EXPECT_EQ(fibers[1].points.size(), 3U);
  EXPECT_EQ(fibers[0].representative, (LatticePoint{0, 1}));
  EXPECT_EQ(fibers[1].representative, (LatticePoint{1, 1}));
}

TEST(ProjectionTest, GenericDirectionAndSingleLine) {
  const PointSet a = gen_chr(2, 3);
  EXPECT_EQ(project_orthogonal(a, Direction({7, 11})).size(), a.size());
  EXPECT_EQ(project_orthogonal(PointSet(2, {{0, 0}, {0, 5}}), Direction::axis(2, 1)).size(), 1U);
}

TEST(ProjectionTest, FibersAreLines) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const PointSet a = gen_random_lattice(3, 30, 4, rng.next());
    const Direction dir({1, static_cast<Coord>(rng.below(3)) - 1, 2});
    std::size_t total = 0;
    for (const auto& f : project_orthogonal(a, dir)) {
      total += f.points.size();
      EXPECT_EQ(f.representative, f.points.point(0));
      for (std::size_t i = 0; i < f.points.size(); ++i) {
        const auto diff = f.points.point(i) - f.representative;
        const Coord t = f.parameters[i] - f.parameters[0];
        for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(diff[k], t * dir[k]);
      }
    }
    EXPECT_EQ(total, a.size());
  }
}

TEST(AffineChartTest, MapsPlaneInjectively) {
  // a plane in Z^3 with lead direction (1, 1, 0)
  const PointSet a(3, {{0, 0, 0}, {1, 1, 0}, {2, 2, 0}, {0, 1, 1}, {1, 2, 1}, {3, 2, -1}});
  const Direction lead({1, 1, 0});
  const AffineChart chart(a, &lead);
  EXPECT_EQ(chart.target_dim(), 2U);
  const PointSet image = chart.map(a);
  EXPECT_EQ(image.size(), a.size());
  EXPECT_EQ(affine_dim(image), 2U);
  EXPECT_EQ(sumset_size(image, image), sumset_size(a, a));
  // lines along the lead direction become lines along e1
  EXPECT_EQ(project_orthogonal(image, Direction::axis(2, 0)).size(), project_orthogonal(a, lead).size());
  EXPECT_THROW(chart.map(LatticePoint{0, 0, 1}.coords()), ContractViolation);
}

TEST(CheckedArithmeticTest, Overflow) {
  EXPECT_THROW(checked_add(INT64_MAX, 1), std::overflow_error);
  EXPECT_THROW(checked_mul(INT64_MAX / 2 + 1, 2), std::overflow_error);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, 2), 3);
}
