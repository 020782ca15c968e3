#include "sumset/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sumset/errors.hpp"
#include "sumset/rng.hpp"

namespace sumset {

PointSet LineCover::covered() const {
  if (fibers.empty()) return PointSet(dir.dim());
  PointSet out = fibers.front().points;
  for (std::size_t i = 1; i < fibers.size(); ++i) out = out.united(fibers[i].points);
  return out;
}

LineCover line_cover(const PointSet& a, const Direction& dir) {
  if (a.empty()) throw ContractViolation("line_cover: empty set");
  LineCover cover{dir, project_orthogonal(a, dir)};
  std::stable_sort(cover.fibers.begin(), cover.fibers.end(), [](const Fiber& x, const Fiber& y) {
    return x.points.size() > y.points.size();
  });
  return cover;
}

namespace {

std::vector<Coord> difference(std::span<const Coord> p, std::span<const Coord> q) {
  std::vector<Coord> v(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) v[k] = checked_sub(p[k], q[k]);
  return v;
}

// Number of distinct line keys among `rows` and the largest multiplicity.
std::pair<std::size_t, std::size_t> line_counts(const PointSet& a, std::span<const std::size_t> rows,
                                                const Direction& dir) {
  std::vector<LatticePoint> keys;
  keys.reserve(rows.size());
  for (std::size_t r : rows) keys.push_back(line_key(a[r], dir));
  std::sort(keys.begin(), keys.end());
  std::size_t lines = 0, top = 0;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    ++lines;
    top = std::max(top, j - i);
    i = j;
  }
  return {lines, top};
}

bool better(const DirectionStats& x, const DirectionStats& y) {
  if (x.lines != y.lines) return x.lines < y.lines;
  if (x.top_size != y.top_size) return x.top_size > y.top_size;
  return x.dir < y.dir;
}

}  // namespace

DirectionStats direction_stats(const PointSet& a, const Direction& dir) {
  std::vector<std::size_t> rows(a.size());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  auto [lines, top] = line_counts(a, rows, dir);
  return {dir, lines, top};
}

std::vector<DirectionStats> difference_direction_stats(const PointSet& a) {
  const std::size_t n = a.size();
  const std::size_t d = a.dim();
  if (n < 2) return {};
  struct Pair {
    std::uint32_t i, j;
  };
  std::vector<Pair> pairs;
  std::vector<Coord> dirs;  // row-major canonical directions, one per pair
  pairs.reserve(n * (n - 1) / 2);
  dirs.reserve(n * (n - 1) / 2 * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Direction dir(difference(a[j], a[i]));
      dirs.insert(dirs.end(), dir.vec().begin(), dir.vec().end());
      pairs.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
    }
  }
  auto dir_of = [&](std::size_t k) { return std::span<const Coord>(dirs.data() + k * d, d); };
  std::vector<std::uint32_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    auto u = dir_of(x), v = dir_of(y);
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  });

  std::vector<DirectionStats> out;
  std::vector<std::size_t> rows;
  for (std::size_t k = 0; k < order.size();) {
    std::size_t e = k;
    rows.clear();
    while (e < order.size() && std::ranges::equal(dir_of(order[e]), dir_of(order[k]))) {
      rows.push_back(pairs[order[e]].i);
      rows.push_back(pairs[order[e]].j);
      ++e;
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    Direction dir(std::vector<Coord>(dir_of(order[k]).begin(), dir_of(order[k]).end()));
    auto [lines, top] = line_counts(a, rows, dir);
    // points outside every pair in this direction sit on singleton lines
    out.push_back({std::move(dir), n - rows.size() + lines, top});
    k = e;
  }
  return out;
}

std::vector<DirectionStats> candidate_direction_stats(const PointSet& a, std::size_t direction_budget,
                                                      std::uint64_t seed) {
  const std::size_t n = a.size();
  if (n < 2) return {};
  if (n * (n - 1) / 2 <= direction_budget) return difference_direction_stats(a);
  Rng rng(seed);
  std::set<Direction> seen;
  for (std::size_t s = 0; s < direction_budget; ++s) {
    const std::size_t i = rng.below(n);
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    seen.insert(Direction(difference(a[j], a[i])));
  }
  std::vector<DirectionStats> out;
  out.reserve(seen.size());
  for (const auto& dir : seen) out.push_back(direction_stats(a, dir));
  return out;
}

LineCover best_line_cover(const PointSet& a, std::size_t direction_budget, std::uint64_t seed) {
  if (a.empty()) throw ContractViolation("best_line_cover: empty set");
  const auto candidates = candidate_direction_stats(a, direction_budget, seed);
  if (candidates.empty()) return line_cover(a, Direction::axis(a.dim(), a.dim() - 1));
  const auto best = std::min_element(candidates.begin(), candidates.end(), better);
  return line_cover(a, best->dir);
}

std::optional<DenseLine> detect_dense_line(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw ContractViolation("detect_dense_line: dimension mismatch");
  if (a.size() != b.size()) throw ContractViolation("detect_dense_line: requires |A| == |B|");
  if (a.empty()) throw ContractViolation("detect_dense_line: empty sets");
  const std::size_t d = a.dim();

  std::map<Direction, std::pair<std::size_t, std::size_t>> tops;  // dir -> (top in A, top in B)
  for (std::size_t i = 0; i < d; ++i) tops.emplace(Direction::axis(d, i), std::make_pair(1, 1));
  for (const auto& s : difference_direction_stats(a)) {
    tops.try_emplace(s.dir, 1, 1).first->second.first = s.top_size;
  }
  for (const auto& s : difference_direction_stats(b)) {
    tops.try_emplace(s.dir, 1, 1).first->second.second = s.top_size;
  }
  for (const auto& [dir, top] : tops) {
    if (d * top.first < a.size() || d * top.second < b.size()) continue;
    auto largest = [&](const PointSet& s) {
      auto cover = line_cover(s, dir);
      return cover.fibers.front().points;
    };
    return DenseLine{dir, largest(a), largest(b)};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

std::int64_t to_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

void require_full_dimension(const PointSet& a, const char* who) {
  if (a.empty()) throw ContractViolation(std::string(who) + ": empty set");
  if (affine_dim(a) != a.dim()) {
    throw ContractViolation(std::string(who) + ": requires affine dimension equal to the ambient dimension " +
                            std::to_string(a.dim()));
  }
}

void finish(Report& report, const Rational& slack, const std::string& dump) {
  report.add("slack", slack);
  report.verdict = slack >= 0 ? Verdict::kPass : Verdict::kFail;
  if (!report.passed()) report.witness = dump;
}

}  // namespace

Report check_freiman(const PointSet& a) {
  require_full_dimension(a, "check_freiman");
  const std::int64_t d = to_i64(a.dim());
  const std::int64_t n = to_i64(a.size());
  const std::int64_t lhs = to_i64(sumset_size(a, a));
  const std::int64_t rhs = (d + 1) * n - d * (d + 1) / 2;
  Report report("check_freiman");
  report.add("dim", d);
  report.add("size_a", n);
  report.add("sumset_size", lhs);
  report.add("bound", rhs);
  finish(report, make_rational(lhs - rhs), "A=" + a.to_string());
  return report;
}

Report check_ruzsa_asymmetric(const PointSet& a, const PointSet& b) {
  require_full_dimension(a, "check_ruzsa_asymmetric");
  if (b.dim() != a.dim()) throw ContractViolation("check_ruzsa_asymmetric: dimension mismatch");
  if (b.empty() || a.size() < b.size()) {
    throw ContractViolation("check_ruzsa_asymmetric: requires |A| >= |B| >= 1");
  }
  const std::int64_t d = to_i64(a.dim());
  const std::int64_t lhs = to_i64(sumset_size(a, b));
  const std::int64_t rhs = to_i64(a.size()) + d * to_i64(b.size()) - d * (d + 1) / 2;
  Report report("check_ruzsa_asymmetric");
  report.add("dim", d);
  report.add_count("size_a", a.size());
  report.add_count("size_b", b.size());
  report.add("sumset_size", lhs);
  report.add("bound", rhs);
  finish(report, make_rational(lhs - rhs), "A=" + a.to_string() + " B=" + b.to_string());
  return report;
}

Report check_m2_inequality(const PointSet& a, const PointSet& b, const LineCover& cover_a,
                           const LineCover& cover_b) {
  if (b.dim() != a.dim()) throw ContractViolation("check_m2_inequality: dimension mismatch");
  if (a.dim() < 2) throw ContractViolation("check_m2_inequality: requires d >= 2");
  require_full_dimension(a, "check_m2_inequality");
  if (b.empty() || a.size() < b.size()) throw ContractViolation("check_m2_inequality: requires |A| >= |B| >= 1");
  if (!(cover_a.dir == cover_b.dir)) throw ContractViolation("check_m2_inequality: covers use different directions");
  if (!(cover_a.covered() == a) || !(cover_b.covered() == b)) {
    throw ContractViolation("check_m2_inequality: covers do not partition the given sets");
  }
  for (const auto* cover : {&cover_a, &cover_b}) {
    for (const auto& f : cover->fibers) {
      if (f.points.empty()) throw ContractViolation("check_m2_inequality: empty fiber");
    }
  }
  const std::int64_t d = to_i64(a.dim());
  const std::int64_t r = to_i64(cover_a.r());
  const std::int64_t q = to_i64(cover_b.r());
  const std::int64_t dim_b = to_i64(affine_dim(b));
  const std::int64_t c = dim_b == d ? d : dim_b;
  const std::int64_t lhs = to_i64(sumset_size(a, b));
  const Rational coeff = make_rational(d + 1) - make_rational(1, r - d + 2) - make_rational(1, q - c + 2);
  const Rational rhs = make_rational(to_i64(a.size())) + coeff * make_rational(to_i64(b.size())) -
                       make_rational((d - 1) * (r + q));
  Report report("check_m2_inequality");
  report.add("dim", d);
  report.add("lines_a", r);
  report.add("lines_b", q);
  report.add("c", c);
  report.add_count("size_a", a.size());
  report.add_count("size_b", b.size());
  report.add("sumset_size", lhs);
  report.add("bound", rhs);
  finish(report, make_rational(lhs) - rhs,
         "A=" + a.to_string() + " B=" + b.to_string() + " dir=" + cover_a.dir.to_string());
  return report;
}

Report check_plunnecke_ruzsa(const PointSet& a, const PointSet& b, int k) {
  if (k != 2 && k != 3) throw ContractViolation("check_plunnecke_ruzsa: k must be 2 or 3");
  if (a.empty() || b.empty()) throw ContractViolation("check_plunnecke_ruzsa: empty set");
  if (a.dim() != b.dim()) throw ContractViolation("check_plunnecke_ruzsa: dimension mismatch");
  const std::int64_t ab = to_i64(sumset_size(a, b));
  const Rational ratio = make_rational(ab, to_i64(b.size()));
  PointSet fold = a;
  for (int i = 1; i < k; ++i) fold = sumset(fold, a);
  const Rational bound = pow(ratio, static_cast<unsigned long>(k)) * make_rational(to_i64(b.size()));
  Report report("check_plunnecke_ruzsa");
  report.add("k", k);
  report.add("sumset_size_ab", ab);
  report.add("doubling_k", ratio);
  report.add_count("fold_size", fold.size());
  report.add("bound", bound);
  finish(report, bound - make_rational(to_i64(fold.size())), "A=" + a.to_string() + " B=" + b.to_string());
  return report;
}

}  // namespace sumset
