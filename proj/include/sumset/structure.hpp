#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumset/lattice.hpp"
#include "sumset/report.hpp"

namespace sumset {

// Minimal cover of a set by lines parallel to one direction.
struct LineCover {
  Direction dir;
  std::vector<Fiber> fibers;  // by decreasing size, then by representative

  std::size_t r() const { return fibers.size(); }
  std::size_t top_size() const { return fibers.empty() ? 0 : fibers.front().points.size(); }
  PointSet covered() const;
};

LineCover line_cover(const PointSet& a, const Direction& dir);

struct DirectionStats {
  Direction dir;
  std::size_t lines;     // number of fibers
  std::size_t top_size;  // largest fiber
};

// Line statistics for every direction realised by a difference of two
// points, in lexicographic order of direction. O(n^2 log n).
std::vector<DirectionStats> difference_direction_stats(const PointSet& a);
DirectionStats direction_stats(const PointSet& a, const Direction& dir);

// The candidate set searched by best_line_cover: every pairwise difference
// when there are at most `direction_budget` pairs, otherwise the distinct
// directions of `direction_budget` pairs drawn from a generator seeded with
// `seed`.
std::vector<DirectionStats> candidate_direction_stats(const PointSet& a, std::size_t direction_budget,
                                                      std::uint64_t seed);

// Over candidate_direction_stats, picks the fewest lines, then the largest top fiber, then the
// lexicographically smallest direction.
LineCover best_line_cover(const PointSet& a, std::size_t direction_budget, std::uint64_t seed);

struct DenseLine {
  Direction dir;
  PointSet fiber_a;
  PointSet fiber_b;
};

// First direction (lexicographic, over differences of a and of b plus the
// coordinate axes) carrying a fiber of a with at least |a|/d points and a
// fiber of b with at least |b|/d points.
std::optional<DenseLine> detect_dense_line(const PointSet& a, const PointSet& b);

// |A+A| >= (d+1)|A| - d(d+1)/2 for full-dimensional A.
Report check_freiman(const PointSet& a);

// |A+B| >= |A| + d|B| - d(d+1)/2 for full-dimensional A, |A| >= |B| >= 1.
Report check_ruzsa_asymmetric(const PointSet& a, const PointSet& b);

// |A+B| >= |A| + (d + 1 - 1/(r-d+2) - 1/(q-c+2))|B| - (d-1)(r+q) for
// parallel line covers of A (r lines) and B (q lines), c = dim(B) capped at d.
Report check_m2_inequality(const PointSet& a, const PointSet& b, const LineCover& cover_a,
                           const LineCover& cover_b);

// |kA| <= K^k |B| with K = |A+B|/|B|; k in {2, 3}.
Report check_plunnecke_ruzsa(const PointSet& a, const PointSet& b, int k);

}  // namespace sumset
