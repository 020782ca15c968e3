#pragma once

#include "sumset/lattice.hpp"
#include "sumset/rational.hpp"

namespace sumset {

// True iff there are weights w_i >= 0 with sum 1 and sum w_i x_i == q.
// Decided by an exact phase-one simplex (Bland's rule) over Q.
bool in_convex_hull(const RationalPoint& q, const PointSet& x);
bool in_convex_hull(std::span<const Coord> q, const PointSet& x);

// Points of x that are not convex combinations of the other points.
PointSet extreme_points(const PointSet& x);

RationalPoint to_rational(std::span<const Coord> p);
RationalPoint midpoint(std::span<const Coord> a, std::span<const Coord> b);

}  // namespace sumset
