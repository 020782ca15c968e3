#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sumset {

using Coord = std::int64_t;

// Checked coordinate arithmetic; throws std::overflow_error.
Coord checked_add(Coord a, Coord b);
Coord checked_sub(Coord a, Coord b);
Coord checked_mul(Coord a, Coord b);
Coord floor_div(Coord a, Coord b);

class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<Coord> coords) : coords_(coords) {}
  explicit LatticePoint(std::span<const Coord> coords) : coords_(coords.begin(), coords.end()) {}

  std::size_t dim() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Coord> coords() const { return coords_; }

  LatticePoint operator+(const LatticePoint& other) const;
  LatticePoint operator-(const LatticePoint& other) const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;

  std::string to_string() const;

 private:
  std::vector<Coord> coords_;
};

// Finite set of points of Z^dim, kept duplicate-free and in lexicographic
// order. Storage is one flat row-major coordinate array.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t dim);
  PointSet(std::size_t dim, const std::vector<LatticePoint>& points);
  PointSet(std::size_t dim, std::initializer_list<std::initializer_list<Coord>> points);

  // Rows of `flat` are points; duplicates are dropped.
  static PointSet from_flat(std::size_t dim, std::vector<Coord> flat);
  // 1-dimensional convenience.
  static PointSet from_values(const std::vector<Coord>& values);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : flat_.size() / dim_; }
  bool empty() const { return flat_.empty(); }

  std::span<const Coord> operator[](std::size_t i) const {
    return {flat_.data() + i * dim_, dim_};
  }
  LatticePoint point(std::size_t i) const { return LatticePoint((*this)[i]); }
  std::vector<LatticePoint> points() const;
  const std::vector<Coord>& flat() const { return flat_; }

  bool contains(std::span<const Coord> p) const;
  bool contains(const LatticePoint& p) const { return contains(p.coords()); }
  // Position of p in the canonical order, or size() when absent.
  std::size_t index_of(std::span<const Coord> p) const;

  PointSet translated(std::span<const Coord> t) const;
  PointSet without(std::span<const Coord> p) const;
  PointSet united(const PointSet& other) const;
  // Subset given by ascending row indices.
  PointSet subset(std::span<const std::size_t> rows) const;
  bool is_subset_of(const PointSet& other) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.dim_ == b.dim_ && a.flat_ == b.flat_;
  }

  std::string to_string() const;

 private:
  void canonicalize();

  std::size_t dim_ = 0;
  std::vector<Coord> flat_;
};

// Primitive integer direction: gcd of the entries is 1 and the first nonzero
// entry is positive.
class Direction {
 public:
  explicit Direction(std::vector<Coord> vec);

  static Direction axis(std::size_t dim, std::size_t i);

  std::size_t dim() const { return vec_.size(); }
  std::span<const Coord> vec() const { return vec_; }
  Coord operator[](std::size_t i) const { return vec_[i]; }
  // Index of the first nonzero entry.
  std::size_t pivot() const { return pivot_; }

  friend auto operator<=>(const Direction& a, const Direction& b) { return a.vec_ <=> b.vec_; }
  friend bool operator==(const Direction& a, const Direction& b) { return a.vec_ == b.vec_; }

  std::string to_string() const;

 private:
  std::vector<Coord> vec_;
  std::size_t pivot_ = 0;
};

// Every lattice point p decomposes uniquely as p = line_key(p) + t * dir with
// 0 <= line_key(p)[pivot] < dir[pivot]; two points share a line parallel to
// dir iff their keys agree.
LatticePoint line_key(std::span<const Coord> p, const Direction& dir);
Coord line_parameter(std::span<const Coord> p, const Direction& dir);

PointSet sumset(const PointSet& a, const PointSet& b);
std::size_t sumset_size(const PointSet& a, const PointSet& b);

// Dimension of the affine span, by exact rational elimination.
std::size_t affine_dim(const PointSet& a);

struct Fiber {
  LatticePoint representative;  // lexicographically smallest point of the fiber
  PointSet points;
  std::vector<Coord> parameters;  // line_parameter of each point, ascending
};

// Partition of `a` into its intersections with lines parallel to dir,
// ordered by representative.
std::vector<Fiber> project_orthogonal(const PointSet& a, const Direction& dir);

// Integer linear map with kernel span(dir): p -> |dir|^2 p - <p, dir> dir.
// A positive multiple of the orthogonal projection, so convexity questions
// about projected sets are unchanged.
LatticePoint scaled_orthogonal_projection(std::span<const Coord> p, const Direction& dir);

// Injective affine map from the affine span of a set onto Z^k, k = affine_dim.
// Images are integral; the first basis vector is `lead` when given, so the
// lead direction maps onto a positive multiple of e_1.
class AffineChart {
 public:
  AffineChart(const PointSet& a, const Direction* lead = nullptr);

  std::size_t source_dim() const { return origin_.size(); }
  std::size_t target_dim() const { return target_dim_; }

  // p must lie in the affine span the chart was built from.
  LatticePoint map(std::span<const Coord> p) const;
  PointSet map(const PointSet& a) const;

 private:
  std::vector<Coord> origin_;
  std::size_t target_dim_ = 0;
  std::vector<std::size_t> rows_;  // coordinates used to solve for the basis weights
  std::vector<std::vector<Coord>> basis_;
  // Inverse of the selected k x k block, pre-multiplied by scale_.
  std::vector<std::vector<Coord>> solve_;
  Coord scale_ = 1;
};

}  // namespace sumset
