#include "sumset/convex.hpp"

#include <vector>

#include "sumset/errors.hpp"

namespace sumset {

namespace {

// Feasibility of { w >= 0 : M w = b } for a dense rational M (rows x cols).
class PhaseOne {
 public:
  PhaseOne(std::vector<std::vector<Rational>> m, std::vector<Rational> b)
      : rows_(m.size()), cols_(m.empty() ? 0 : m[0].size()) {
    const std::size_t width = cols_ + rows_ + 1;
    tableau_.assign(rows_, std::vector<Rational>(width));
    objective_.assign(width, Rational(0));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      const bool flip = b[i] < 0;
      for (std::size_t j = 0; j < cols_; ++j) tableau_[i][j] = flip ? -m[i][j] : m[i][j];
      tableau_[i][cols_ + i] = 1;
      tableau_[i][width - 1] = flip ? -b[i] : b[i];
      basis_[i] = cols_ + i;
    }
    // Minimise the sum of artificials: express it through the nonbasic columns.
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) objective_[j] -= tableau_[i][j];
      objective_[width - 1] -= tableau_[i][width - 1];
    }
  }

  bool feasible() {
    const std::size_t width = cols_ + rows_ + 1;
    for (;;) {
      std::size_t enter = width;
      for (std::size_t j = 0; j + 1 < width; ++j) {
        if (objective_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == width) break;
      std::size_t leave = rows_;
      Rational best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (tableau_[i][enter] <= 0) continue;
        Rational ratio = tableau_[i][width - 1] / tableau_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) break;  // unbounded; impossible for a phase-one objective
      pivot(leave, enter);
    }
    return objective_[width - 1] == 0;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const std::size_t width = cols_ + rows_ + 1;
    const Rational inv = 1 / tableau_[r][c];
    for (auto& x : tableau_[r]) x *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || tableau_[i][c] == 0) continue;
      const Rational f = tableau_[i][c];
      for (std::size_t j = 0; j < width; ++j) tableau_[i][j] -= f * tableau_[r][j];
    }
    if (objective_[c] != 0) {
      const Rational f = objective_[c];
      for (std::size_t j = 0; j < width; ++j) objective_[j] -= f * tableau_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> tableau_;
  std::vector<Rational> objective_;
  std::vector<std::size_t> basis_;
};

}  // namespace

RationalPoint to_rational(std::span<const Coord> p) {
  RationalPoint q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = make_rational(p[i]);
  return q;
}

RationalPoint midpoint(std::span<const Coord> a, std::span<const Coord> b) {
  if (a.size() != b.size()) throw ContractViolation("midpoint: dimension mismatch");
  RationalPoint q(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) q[i] = (make_rational(a[i]) + make_rational(b[i])) / 2;
  return q;
}

bool in_convex_hull(const RationalPoint& q, const PointSet& x) {
  if (q.size() != x.dim()) throw ContractViolation("in_convex_hull: dimension mismatch");
  if (x.empty()) return false;
  const std::size_t d = x.dim();
  const std::size_t n = x.size();
  std::vector<std::vector<Rational>> m(d + 1, std::vector<Rational>(n));
  std::vector<Rational> b(d + 1);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t j = 0; j < n; ++j) m[k][j] = make_rational(x[j][k]);
    b[k] = q[k];
  }
  for (std::size_t j = 0; j < n; ++j) m[d][j] = 1;
  b[d] = 1;
  return PhaseOne(std::move(m), std::move(b)).feasible();
}

bool in_convex_hull(std::span<const Coord> q, const PointSet& x) {
  return in_convex_hull(to_rational(q), x);
}

PointSet extreme_points(const PointSet& x) {
  if (x.empty()) throw ContractViolation("extreme_points: empty set");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!in_convex_hull(x[i], x.without(x[i]))) keep.push_back(i);
  }
  return x.subset(keep);
}

}  // namespace sumset
