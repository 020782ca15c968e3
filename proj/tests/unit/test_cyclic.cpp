#include <gtest/gtest.h>

#include <bit>
#include <map>

#include "sumset/cyclic.hpp"
#include "sumset/errors.hpp"
#include "sumset/generators.hpp"

using namespace sumset;

namespace {

CyclicSet line_set(const CyclicProductSpace& s, std::initializer_list<std::int64_t> xs) {
  CyclicSet out(s);
  for (auto x : xs) out.insert({x, 0});
  return out;
}

// Straightforward |X| >= |A| + pi check on explicit coordinates, no bitsets.
std::map<std::int64_t, int> lifted_fibers(const CyclicSet& x) {
  std::map<std::int64_t, int> f;
  for (const auto& g : x.elements()) ++f[g.x];
  return f;
}

}  // namespace

TEST(SpaceTest, Validation) {
  EXPECT_THROW(CyclicProductSpace(12, 1), ContractViolation);
  EXPECT_THROW(CyclicProductSpace(7, 0), ContractViolation);
  const CyclicProductSpace s(7, 3);
  EXPECT_EQ(s.order(), 21U);
  EXPECT_EQ(s.reduce(-1, 4), (GroupElement{6, 1}));
  EXPECT_EQ(s.element(s.index({5, 2})), (GroupElement{5, 2}));
}

TEST(CyclicSetTest, TranslateWrapsBothCoordinates) {
  const CyclicProductSpace s(5, 3);
  const CyclicSet a(s, {{4, 2}, {0, 0}});
  EXPECT_EQ(a.translated({1, 1}), CyclicSet(s, {{0, 0}, {1, 1}}));
  EXPECT_EQ(a.size(), 2U);
  EXPECT_TRUE(a.contains({9, 5}));
}

TEST(CyclicSetTest, LargeSpaceMultiWord) {
  const CyclicProductSpace s(101, 3);
  const CyclicSet a = CyclicSet::interval(s, 95, 10);
  EXPECT_EQ(a.size(), 33U);
  const CyclicSet b = a.translated({50, 2});
  EXPECT_EQ(b.size(), 33U);
  EXPECT_EQ(b.translated({51, 1}), a);
}

TEST(ConvolutionTest, Examples) {
  const CyclicProductSpace z5(5, 1), z7(7, 1);
  const auto c5 = convolution_counts(line_set(z5, {0, 1}), line_set(z5, {0, 1}));
  EXPECT_EQ(c5, (std::vector<std::uint64_t>{1, 2, 1, 0, 0}));
  const CyclicSet a = line_set(z7, {0, 1, 2});
  EXPECT_EQ(convolution_counts(a, a), (std::vector<std::uint64_t>{1, 2, 3, 2, 1, 0, 0}));
  const CyclicProductSpace s(5, 2);
  const CyclicSet b(s, {{1, 1}, {3, 0}, {4, 1}});
  for (auto n : convolution_counts(CyclicSet::full(s), b)) EXPECT_EQ(n, 3U);
}

TEST(PopularTest, Examples) {
  const CyclicProductSpace z7(7, 1);
  const CyclicSet a = line_set(z7, {0, 1, 2});
  EXPECT_EQ(popular_product(a, a, 2), line_set(z7, {1, 2, 3}));
  EXPECT_EQ(popular_product(a, a, 1), sumset::sumset(a, a));
  const CyclicSet g = CyclicSet::full(z7);
  EXPECT_EQ(popular_product(g, g, 7), g);
  EXPECT_THROW(popular_product(a, a, 4), ContractViolation);
  EXPECT_THROW(popular_product(a, a, 0), ContractViolation);
}

TEST(PopularTest, NestingAndConservation) {
  const CyclicProductSpace s(11, 2);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const CyclicSet a = gen_random_cyclic(s, 1 + seed % 9, seed);
    const CyclicSet b = gen_random_cyclic(s, 1 + (seed * 7) % 11, seed + 50);
    EXPECT_TRUE(popular_nesting_check(a, b).passed());
  }
}

TEST(FiberProfileTest, Examples) {
  const CyclicProductSpace s(5, 2);
  EXPECT_EQ(fiber_profile(CyclicSet(s, {{0, 0}, {0, 1}, {3, 0}})), (std::vector<std::uint64_t>{2, 0, 0, 1, 0}));
  EXPECT_EQ(fiber_profile(CyclicSet::interval(s, 0, 2)), (std::vector<std::uint64_t>{2, 2, 2, 0, 0}));
}

TEST(MaxProjectionTest, Examples) {
  const CyclicProductSpace z13(13, 1);
  const CyclicSet x = line_set(z13, {0, 1, 2, 5, 6});
  EXPECT_EQ(max_projection(x, 3), 3U);
  EXPECT_EQ(max_projection(x, 7), 5U);
  EXPECT_EQ(max_projection(CyclicSet(z13), 2), 0U);
  // a wrapped support is measured inside its own window
  const CyclicSet wrapped = line_set(z13, {11, 12, 0, 1});
  EXPECT_EQ(max_projection(wrapped, IntervalWindow{11, 3}, 2), 2U);
  EXPECT_THROW(max_projection(wrapped, IntervalWindow{0, 5}, 2), ContractViolation);
  EXPECT_THROW(max_projection(x, 0), ContractViolation);
}

TEST(IntervalTripleTest, IntervalsInZ101) {
  const CyclicProductSpace s(101, 1);
  const CyclicSet a = CyclicSet::interval(s, 0, 39), b = CyclicSet::interval(s, 0, 19);
  const auto sel = interval_triple_select(a, b, IntervalWindow{0, 39}, IntervalWindow{0, 19});
  EXPECT_EQ(sel.witness.achieved, 59U);
  EXPECT_EQ(sel.witness.target, 59);
  EXPECT_LE(sel.witness.selected.size(), 3U);
  EXPECT_EQ(sel.report.integer("undiminished_met"), 0);
}

TEST(IntervalTripleTest, WindowsMayWrap) {
  const CyclicProductSpace s(13, 2);
  const CyclicSet a(s, {{11, 0}, {12, 1}, {0, 0}, {1, 1}});
  const CyclicSet b(s, {{5, 1}, {7, 0}, {6, 1}});
  const auto sel = interval_triple_select(a, b, IntervalWindow{10, 4}, IntervalWindow{4, 4});
  EXPECT_GE(static_cast<std::int64_t>(sel.witness.achieved), 5);
  EXPECT_GE(sel.report.integer("xs_slack"), 0);
  CyclicSet covered(s);
  for (std::size_t i = 0; i < sel.witness.selected.size(); ++i) {
    const auto row = sel.witness.selected[i];
    EXPECT_TRUE(b.contains({row[0], row[1]}));
    covered = covered.united(a.translated({row[0], row[1]}));
  }
  EXPECT_EQ(covered.size(), sel.witness.achieved);
}

TEST(IntervalTripleTest, Contracts) {
  const CyclicProductSpace s(13, 1);
  const CyclicSet a = CyclicSet::interval(s, 0, 5), b = CyclicSet::interval(s, 0, 1);
  // windows too long together
  EXPECT_THROW(interval_triple_select(a, b, IntervalWindow{0, 11}, IntervalWindow{0, 1}), ContractViolation);
  // B on one fiber
  EXPECT_THROW(interval_triple_select(a, line_set(s, {3}), IntervalWindow{0, 5}, IntervalWindow{0, 5}),
               ContractViolation);
  // A outside its window
  EXPECT_THROW(interval_triple_select(a, b, IntervalWindow{1, 5}, IntervalWindow{0, 1}), ContractViolation);
}

TEST(IntervalTripleTest, SweepAgreesWithOperation) {
  // run the operation over the family the sweep enumerates and compare totals
  const std::uint64_t p = 7, m = 2, max_size = 4;
  const CyclicProductSpace s(p, m);
  std::vector<std::vector<CyclicSet>> by_span(p - 1);
  for (std::uint64_t span = 0; span + 1 < p; ++span) {
    const std::uint64_t cells = (span + 1) * m;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << cells); mask += 2) {
      if (static_cast<std::uint64_t>(std::popcount(mask)) > max_size) continue;
      if (span > 0 && ((mask >> (span * m)) == 0)) continue;
      CyclicSet c(s);
      for (std::uint64_t i = 0; i < cells; ++i) {
        if (mask >> i & 1U) c.set(i);
      }
      by_span[span].push_back(c);
    }
  }
  std::uint64_t instances = 0, undiminished = 0;
  for (std::uint64_t la = 0; la + 3 <= p; ++la) {
    for (std::uint64_t lb = 1; la + lb + 2 <= p; ++lb) {
      for (const auto& a : by_span[la]) {
        for (const auto& b : by_span[lb]) {
          if (a.size() < b.size() || a.size() < 2) continue;
          const auto sel = interval_triple_select(a, b, IntervalWindow{0, la}, IntervalWindow{0, lb});
          ++instances;
          undiminished += static_cast<std::uint64_t>(sel.report.integer("undiminished_met"));
        }
      }
    }
  }
  const SweepResult sweep = sweep_interval_instances(p, m, max_size);
  EXPECT_EQ(sweep.instances, instances);
  EXPECT_EQ(sweep.undiminished_met, undiminished);
  EXPECT_EQ(sweep.xs_failures + sweep.bound_failures, 0U);
}

TEST(IntervalTripleTest, XsAgainstDirectComputation) {
  const CyclicProductSpace s(13, 3);
  Rng rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint64_t la = rng.below(6);
    const CyclicSet a = gen_random_cyclic(s, 1 + rng.below(std::min<std::uint64_t>(6, 3 * (la + 1))), rng.next(), la);
    const std::int64_t w = 1 + static_cast<std::int64_t>(rng.below(11 - la));
    const std::int64_t dy = static_cast<std::int64_t>(rng.below(3));
    const CyclicSet x = a.united(a.translated({w, dy}));
    const auto f = lifted_fibers(x);
    std::uint64_t pi = 0;
    for (std::int64_t x0 = 0; x0 < w; ++x0) {
      int best = 0;
      for (const auto& [pos, n] : f) {
        if (pos % w == x0) best = std::max(best, n);
      }
      pi += static_cast<std::uint64_t>(best);
    }
    EXPECT_EQ(max_projection(x, static_cast<std::uint64_t>(w)), pi);
    EXPECT_GE(x.size(), a.size() + pi);
  }
}

TEST(SweepTest, SmallCounts) {
  // Z_3: A on residue 0, B on residues 0..1 containing (0,0)
  const SweepResult z3 = sweep_interval_instances(3, 1, 6);
  EXPECT_EQ(z3.instances, 0U);  // |A| >= |B| = 2 needs A with two elements on one residue
  const SweepResult z5 = sweep_interval_instances(5, 1, 6);
  EXPECT_GT(z5.instances, 0U);
  EXPECT_EQ(z5.xs_failures, 0U);
  EXPECT_EQ(z5.bound_failures, 0U);
  const SweepResult z7 = sweep_interval_instances(7, 2, 4);
  EXPECT_EQ(z7.xs_failures + z7.bound_failures, 0U);
}

TEST(SamplingTest, WholeGroupIsCoveredByOneTranslate) {
  const CyclicProductSpace s(7, 2);
  const CyclicSet g = CyclicSet::full(s);
  const Report r = sample_cover_experiment(g, g, 14, 1, 20, 0);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.rational("mean_uncovered"), 0);
  EXPECT_EQ(r.rational("bound"), 0);
}

TEST(SamplingTest, VacuousWhenNothingIsPopular) {
  const CyclicProductSpace s(31, 1);
  const CyclicSet a = line_set(s, {0, 1, 3}), b = line_set(s, {0, 7, 20});
  const Report r = sample_cover_experiment(a, b, 2, 3, 10, 0);
  EXPECT_EQ(r.verdict, Verdict::kVacuous);
}

TEST(SamplingTest, IntervalsAndSingleTrial) {
  const CyclicProductSpace s(101, 1);
  const CyclicSet a = CyclicSet::interval(s, 0, 29);
  const Report r = sample_cover_experiment(a, a, 10, 25, 300, 1);
  EXPECT_EQ(r.rational("bound"), pow(make_rational(2, 3), 25));
  EXPECT_TRUE(r.passed());
  const Report one = sample_cover_experiment(a, a, 10, 3, 1, 0);
  EXPECT_LE(one.rational("max_uncovered"), 1);
  const Report many = sample_cover_experiment(a, a, 10, 60, 5, 0);
  EXPECT_TRUE(many.passed());
}

TEST(SamplingTest, Deterministic) {
  const CyclicProductSpace s(31, 2);
  const CyclicSet a = gen_random_cyclic(s, 20, 1), b = gen_random_cyclic(s, 15, 2);
  EXPECT_EQ(sample_cover_experiment(a, b, 3, 4, 50, 9).metric_records(),
            sample_cover_experiment(a, b, 3, 4, 50, 9).metric_records());
}

TEST(CauchyDavenportTest, Examples) {
  const CyclicProductSpace z5(5, 1), z7(7, 1);
  const Report r5 = cauchy_davenport_check(line_set(z5, {0, 1}), line_set(z5, {0, 1}));
  EXPECT_EQ(r5.integer("sumset_size"), 3);
  EXPECT_EQ(r5.integer("slack"), 0);
  const CyclicSet g = CyclicSet::full(z7);
  EXPECT_EQ(cauchy_davenport_check(g, g).integer("bound"), 7);
  const Report r7 = cauchy_davenport_check(line_set(z7, {0, 1, 3}), line_set(z7, {0, 2}));
  EXPECT_EQ(r7.integer("sumset_size"), 5);
  EXPECT_EQ(r7.integer("bound"), 4);
  EXPECT_THROW(cauchy_davenport_check(CyclicSet::full(CyclicProductSpace(5, 2)), CyclicSet::full(CyclicProductSpace(5, 2))),
               ContractViolation);
}

TEST(CyclicInvarianceTest, TranslationPreservesCounts) {
  const CyclicProductSpace s(13, 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CyclicSet a = gen_random_cyclic(s, 6, seed), b = gen_random_cyclic(s, 5, seed + 1);
    const GroupElement t{static_cast<std::int64_t>(seed % 13), static_cast<std::int64_t>(seed % 3)};
    EXPECT_EQ(sumset::sumset(a.translated(t), b).size(), sumset::sumset(a, b).size());
    EXPECT_EQ(popular_product(a.translated(t), b, 2).size(), popular_product(a, b, 2).size());
  }
}
