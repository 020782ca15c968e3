#include "sumset/select.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "sumset/convex.hpp"
#include "sumset/errors.hpp"

namespace sumset {

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kTriple1d:
      return "triple-1d";
    case Strategy::kLineCovered:
      return "line-covered";
    case Strategy::kSmallSetFull:
      return "small-set-full";
    case Strategy::kRandomSample:
      return "random-sample";
    case Strategy::kManyLinesBoost:
      return "many-lines-boost";
    case Strategy::kGreedy:
      return "greedy";
    case Strategy::kIntervalTriple:
      return "interval-triple";
    case Strategy::kExhaustive:
      return "exhaustive";
  }
  return "unknown";
}

std::string TranslateWitness::to_string() const {
  std::ostringstream os;
  os << "strategy=" << strategy_name(strategy) << ";source=" << (source == Source::kA ? "A" : "B")
     << ";size=" << selected.size() << ";achieved=" << achieved << ";target=" << target
     << ";selected=" << selected.to_string();
  return os.str();
}

bool verify_witness(const PointSet& a, const PointSet& source, const TranslateWitness& w) {
  if (w.selected.empty() || !w.selected.is_subset_of(source)) return false;
  return sumset_size(a, w.selected) == w.achieved && w.meets_target();
}

namespace {

using Values = std::vector<Coord>;

std::int64_t to_i64(std::size_t v) { return static_cast<std::int64_t>(v); }

std::size_t union_of_shifts(std::span<const Coord> a, std::span<const Coord> shifts) {
  Values sums;
  sums.reserve(a.size() * shifts.size());
  for (Coord s : shifts) {
    for (Coord x : a) sums.push_back(checked_add(x, s));
  }
  std::sort(sums.begin(), sums.end());
  return static_cast<std::size_t>(std::unique(sums.begin(), sums.end()) - sums.begin());
}

std::string values_to_string(std::span<const Coord> v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << '}';
  return os.str();
}

// At most three elements of b (sorted, distinct) whose translates of a cover
// at least |a| + |b| - 1 integers. Requires |a| >= |b| >= 1.
Values choose_triple(std::span<const Coord> a, std::span<const Coord> b) {
  const std::size_t target = a.size() + b.size() - 1;
  if (b.size() <= 2) {
    Values all(b.begin(), b.end());
    if (union_of_shifts(a, all) < target) {
      throw InvariantViolation("triple selection: |A+B| < |A|+|B|-1 for A=" + values_to_string(a) +
                               " B=" + values_to_string(b));
    }
    return all;
  }
  Values pick{b.front(), b.back()};
  if (union_of_shifts(a, pick) >= target) return pick;

  std::size_t best_size = 0;
  Coord best_third = b[1];
  for (std::size_t k = 1; k + 1 < b.size(); ++k) {
    const Values trial{b.front(), b[k], b.back()};
    const std::size_t s = union_of_shifts(a, trial);
    if (s > best_size) {
      best_size = s;
      best_third = b[k];
    }
  }
  if (best_size >= target) return {b.front(), best_third, b.back()};

  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      for (std::size_t k = j + 1; k < b.size(); ++k) {
        const Values trial{b[i], b[j], b[k]};
        if (union_of_shifts(a, trial) >= target) return trial;
      }
    }
  }
  throw InvariantViolation("triple selection: no triple reaches |A|+|B|-1 for A=" + values_to_string(a) +
                           " B=" + values_to_string(b));
}

// Points of a fiber whose line parameters are listed in `params`.
void append_fiber_points(const Fiber& fiber, std::span<const Coord> params, Values& flat) {
  for (Coord t : params) {
    auto it = std::lower_bound(fiber.parameters.begin(), fiber.parameters.end(), t);
    const auto row = fiber.points[static_cast<std::size_t>(it - fiber.parameters.begin())];
    flat.insert(flat.end(), row.begin(), row.end());
  }
}

// Selects from the two fibers so that the smaller one gets translated by
// elements of the larger: returns (points appended) covering
// |small| + |large| - 1 sums on the line of `fixed` + `other`.
void append_line_pair(const Fiber& fixed, const Fiber& other, Values& flat) {
  if (fixed.points.size() >= other.points.size()) {
    append_fiber_points(other, choose_triple(fixed.parameters, other.parameters), flat);
  } else {
    append_fiber_points(fixed, choose_triple(other.parameters, fixed.parameters), flat);
  }
}

std::string cover_dump(const PointSet& a, const Direction& dir) {
  return "A=" + a.to_string() + " dir=" + dir.to_string();
}

// Translate selection for a set of affine dimension d = a.dim() lying on the
// lines given by `fibers` (each with at least two points, r >= d).
PointSet line_covered_selection(const PointSet& a, const Direction& dir, const std::vector<Fiber>& fibers) {
  const std::size_t d = a.dim();
  const std::size_t r = fibers.size();
  Values flat;

  if (d == 1) {
    flat = choose_triple(a.flat(), a.flat());
  } else {
    std::vector<LatticePoint> projected;
    projected.reserve(r);
    for (const auto& f : fibers) projected.push_back(scaled_orthogonal_projection(f.representative.coords(), dir));
    // The lexicographic maximum of a finite set is a vertex of its hull.
    const std::size_t top = static_cast<std::size_t>(
        std::max_element(projected.begin(), projected.end()) - projected.begin());
    const Fiber& extreme = fibers[top];

    std::vector<Fiber> rest;
    std::vector<LatticePoint> rest_projected;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == top) continue;
      rest.push_back(fibers[i]);
      rest_projected.push_back(projected[i]);
    }
    const PointSet hull_rest(d, rest_projected);
    if (in_convex_hull(projected[top].coords(), hull_rest)) {
      throw InvariantViolation("line-covered selection: chosen line is not extreme; " + cover_dump(a, dir));
    }
    PointSet rest_points = rest.front().points;
    for (std::size_t i = 1; i < rest.size(); ++i) rest_points = rest_points.united(rest[i].points);
    const std::size_t rest_dim = affine_dim(hull_rest);

    if (rest_dim + 2 == d) {
      // The remaining lines span one dimension less: chart them onto Z^{d-1}.
      const AffineChart chart(rest_points, &dir);
      const PointSet image = chart.map(rest_points);
      const Direction image_dir = Direction::axis(d - 1, 0);
      const PointSet image_pick = line_covered_selection(image, image_dir, project_orthogonal(image, image_dir));
      std::map<LatticePoint, std::size_t> preimage;
      for (std::size_t i = 0; i < rest_points.size(); ++i) preimage.emplace(chart.map(rest_points[i]), i);
      for (std::size_t i = 0; i < image_pick.size(); ++i) {
        const auto row = rest_points[preimage.at(image_pick.point(i))];
        flat.insert(flat.end(), row.begin(), row.end());
      }
      for (const auto& f : fibers) append_line_pair(extreme, f, flat);
    } else if (rest_dim + 1 == d) {
      // d-1 other lines whose sums with the extreme line avoid rest + rest.
      std::vector<std::size_t> order(rest.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](std::size_t x, std::size_t y) { return rest_projected[x] < rest_projected[y]; });
      std::vector<std::size_t> partners;
      for (std::size_t i : order) {
        if (partners.size() + 1 == d) break;
        if (!in_convex_hull(midpoint(projected[top].coords(), rest_projected[i].coords()), hull_rest)) {
          partners.push_back(i);
        }
      }
      if (partners.size() + 1 != d) {
        throw InvariantViolation("line-covered selection: fewer than d-1 lines with midpoints outside the hull; " +
                                 cover_dump(a, dir));
      }
      const PointSet sub_pick = line_covered_selection(rest_points, dir, rest);
      flat = sub_pick.flat();
      for (std::size_t i : partners) {
        const auto& rep = rest[i].representative;
        flat.insert(flat.end(), rep.coords().begin(), rep.coords().end());
      }
      append_fiber_points(extreme, choose_triple(extreme.parameters, extreme.parameters), flat);
    } else {
      throw InvariantViolation("line-covered selection: projected set has unexpected dimension; " +
                               cover_dump(a, dir));
    }
  }

  PointSet pick = PointSet::from_flat(d, std::move(flat));
  const std::int64_t n = to_i64(a.size());
  const std::int64_t dd = to_i64(d), rr = to_i64(r);
  const std::int64_t achieved = to_i64(sumset_size(a, pick));
  if (to_i64(pick.size()) > 3 * dd * rr * rr || achieved < (dd + 1) * n - 3 * dd * rr) {
    throw InvariantViolation("line-covered selection: bound not met (|S|=" + std::to_string(pick.size()) +
                             ", |A+S|=" + std::to_string(achieved) + "); " + cover_dump(a, dir));
  }
  return pick;
}

}  // namespace

TranslateWitness select_triple_1d(const PointSet& a, const PointSet& b) {
  if (a.dim() != 1 || b.dim() != 1) throw ContractViolation("select_triple_1d: both sets must be 1-dimensional");
  if (b.empty() || a.size() < b.size()) throw ContractViolation("select_triple_1d: requires |A| >= |B| >= 1");
  PointSet pick = PointSet::from_values(choose_triple(a.flat(), b.flat()));
  TranslateWitness w{Source::kB, pick, sumset_size(a, pick), to_i64(a.size() + b.size()) - 1, Strategy::kTriple1d};
  if (!w.meets_target()) throw InvariantViolation("select_triple_1d: " + w.to_string());
  return w;
}

TranslateWitness select_line_covered(const PointSet& a, const LineCover& cover) {
  const std::size_t d = a.dim();
  if (a.empty()) throw ContractViolation("select_line_covered: empty set");
  if (cover.dir.dim() != d) throw ContractViolation("select_line_covered: direction dimension mismatch");
  if (!(cover.covered() == a)) throw ContractViolation("select_line_covered: cover does not partition A");
  if (cover.r() < d) throw ContractViolation("select_line_covered: requires d <= r");
  for (const auto& f : cover.fibers) {
    if (f.points.size() < 2) throw ContractViolation("select_line_covered: every line must hold at least two points");
  }
  if (affine_dim(a) != d) throw ContractViolation("select_line_covered: requires dim(A) = d");

  std::vector<Fiber> fibers = cover.fibers;
  PointSet pick = line_covered_selection(a, cover.dir, fibers);
  const std::int64_t dd = to_i64(d), rr = to_i64(cover.r());
  TranslateWitness w{Source::kA, pick, sumset_size(a, pick), (dd + 1) * to_i64(a.size()) - 3 * dd * rr,
                     Strategy::kLineCovered};
  return w;
}

// ---------------------------------------------------------------------------

namespace {

struct Cascade {
  const PointSet& a;
  std::int64_t target;
  std::optional<TranslateWitness> best;

  TranslateWitness consider(PointSet pick, Strategy strategy) {
    TranslateWitness w{Source::kA, std::move(pick), 0, target, strategy};
    w.achieved = sumset_size(a, w.selected);
    if (!best || w.achieved > best->achieved) best = w;
    return w;
  }
};

std::optional<TranslateWitness> try_line_cover(Cascade& cascade, const LineCover& cover) {
  const PointSet& a = cascade.a;
  const std::size_t d = a.dim();
  if (cover.r() > (d + 1) * (d + 1)) return std::nullopt;
  std::vector<Fiber> kept;
  for (const auto& f : cover.fibers) {
    if (f.points.size() >= 2) kept.push_back(f);
  }
  if (kept.empty()) return std::nullopt;
  LineCover trimmed{cover.dir, kept};
  const PointSet core = trimmed.covered();
  if (affine_dim(core) != d) return std::nullopt;
  const TranslateWitness inner = select_line_covered(core, trimmed);
  return cascade.consider(inner.selected, Strategy::kLineCovered);
}

std::optional<TranslateWitness> try_many_lines(Cascade& cascade, const std::vector<DirectionStats>& stats) {
  const PointSet& a = cascade.a;
  const std::size_t d = a.dim();
  const std::size_t lines_needed = (d + 1) * (d + 1) + 1;
  const DirectionStats* pick = nullptr;
  for (const auto& s : stats) {
    if (s.lines < lines_needed) continue;
    if (pick == nullptr || s.top_size > pick->top_size) pick = &s;
  }
  if (pick == nullptr) return std::nullopt;
  // dense: d |p_1| >= (1 - 100^{-d^2}) |A|
  const Rational slack = 1 - 1 / pow(make_rational(100), static_cast<unsigned long>(d * d));
  if (make_rational(to_i64(d * pick->top_size)) < slack * make_rational(to_i64(a.size()))) return std::nullopt;

  const LineCover cover = line_cover(a, pick->dir);
  Values flat;
  for (std::size_t i = 0; i < lines_needed; ++i) {
    append_fiber_points(cover.fibers[i], choose_triple(cover.fibers[0].parameters, cover.fibers[i].parameters), flat);
  }
  return cascade.consider(PointSet::from_flat(d, std::move(flat)), Strategy::kManyLinesBoost);
}

TranslateWitness random_rounds(Cascade& cascade, std::size_t sample_size, std::size_t rounds, Rng& rng) {
  const PointSet& a = cascade.a;
  std::optional<TranslateWitness> best;
  for (std::size_t round = 0; round < rounds; ++round) {
    std::vector<std::size_t> rows(sample_size);
    for (auto& row : rows) row = rng.below(a.size());
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    auto w = cascade.consider(a.subset(rows), Strategy::kRandomSample);
    if (!best || w.achieved > best->achieved) best = std::move(w);
  }
  return *best;
}

TranslateWitness greedy(Cascade& cascade, std::size_t steps) {
  const PointSet& a = cascade.a;
  const std::size_t n = a.size();
  std::vector<std::size_t> chosen;
  std::vector<bool> used(n, false);
  PointSet covered(a.dim());
  for (std::size_t step = 0; step < steps; ++step) {
    std::size_t best_gain = 0, best_row = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      const PointSet shifted = a.translated(a[j]);
      std::size_t gain = 0;
      for (std::size_t i = 0; i < n; ++i) gain += covered.contains(shifted[i]) ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best_row = j;
      }
    }
    if (best_row == n) break;
    used[best_row] = true;
    chosen.push_back(best_row);
    covered = covered.united(a.translated(a[best_row]));
    if (to_i64(covered.size()) >= cascade.target) break;
  }
  std::sort(chosen.begin(), chosen.end());
  return cascade.consider(a.subset(chosen), Strategy::kGreedy);
}

}  // namespace

TranslateWitness select_general(const PointSet& a, const SelectionBudget& budget, Rng& rng) {
  if (a.empty()) throw ContractViolation("select_general: empty set");
  const std::size_t d = a.dim();
  if (affine_dim(a) != d) {
    throw ContractViolation("select_general: affine_dim(A) = " + std::to_string(affine_dim(a)) +
                            " < d = " + std::to_string(d));
  }
  const std::size_t n = a.size();
  const std::int64_t cube = to_i64((d + 1) * (d + 1) * (d + 1));
  Cascade cascade{a, to_i64(d + 1) * to_i64(n) - 5 * cube, std::nullopt};

  if (to_i64(n) <= cube) {
    auto w = cascade.consider(a, Strategy::kSmallSetFull);
    if (w.meets_target()) return w;
  }

  std::size_t direction_budget = budget.direction_budget;
  if (direction_budget == 0) direction_budget = n <= 512 ? n * (n - 1) / 2 : 4096;
  const auto stats = candidate_direction_stats(a, direction_budget, rng.next());
  if (!stats.empty()) {
    const auto best = std::min_element(stats.begin(), stats.end(), [](const auto& x, const auto& y) {
      if (x.lines != y.lines) return x.lines < y.lines;
      if (x.top_size != y.top_size) return x.top_size > y.top_size;
      return x.dir < y.dir;
    });
    if (auto w = try_line_cover(cascade, line_cover(a, best->dir)); w && w->meets_target()) return *w;
    if (auto w = try_many_lines(cascade, stats); w && w->meets_target()) return *w;
  }

  if (budget.rounds > 0 && budget.sample_size > 0) {
    auto w = random_rounds(cascade, budget.sample_size, budget.rounds, rng);
    if (w.meets_target()) return w;
  }

  const std::size_t steps = budget.max_greedy ? budget.max_greedy : static_cast<std::size_t>(4 * cube);
  if (auto w = greedy(cascade, steps); w.meets_target()) return w;

  throw CascadeExhausted("select_general: no stage reached (d+1)|A| - 5(d+1)^3 = " +
                             std::to_string(cascade.target) + " for A=" + a.to_string(),
                         *cascade.best);
}

// ---------------------------------------------------------------------------

std::optional<TranslateWitness> minimal_witness_oracle(const PointSet& a, const PointSet& b,
                                                       std::int64_t threshold, std::size_t max_size) {
  if (a.empty() || b.empty()) throw ContractViolation("minimal_witness_oracle: empty set");
  if (a.dim() != b.dim()) throw ContractViolation("minimal_witness_oracle: dimension mismatch");
  const std::size_t m = b.size();
  max_size = std::min(max_size, m);

  // sum over k <= max_size of C(m, k), saturating at the guard
  std::uint64_t total = 0, binom = 1;
  for (std::size_t k = 1; k <= max_size; ++k) {
    binom = binom * (m - k + 1) / k;
    total += binom;
    if (total > kOracleSubsetGuard || binom > kOracleSubsetGuard) {
      throw EnumerationRefused("minimal_witness_oracle: more than 10^8 candidate subsets");
    }
  }

  // Each translate a + b_j as a bitmask over the sumset a + b.
  const PointSet universe = sumset(a, b);
  const std::size_t words = (universe.size() + 63) / 64;
  std::vector<std::uint64_t> masks(m * words, 0);
  std::vector<Coord> sum(a.dim());
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t k = 0; k < a.dim(); ++k) sum[k] = a[i][k] + b[j][k];
      const std::size_t pos = universe.index_of(sum);
      masks[j * words + pos / 64] |= std::uint64_t{1} << (pos % 64);
    }
  }

  std::vector<std::size_t> combo;
  std::vector<std::uint64_t> acc;
  for (std::size_t k = 1; k <= max_size; ++k) {
    combo.resize(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    acc.assign((k + 1) * words, 0);
    // acc level i holds the union of the first i chosen translates
    std::size_t level = 0;
    for (;;) {
      for (; level < k; ++level) {
        for (std::size_t w = 0; w < words; ++w) {
          acc[(level + 1) * words + w] = acc[level * words + w] | masks[combo[level] * words + w];
        }
      }
      std::int64_t count = 0;
      for (std::size_t w = 0; w < words; ++w) count += std::popcount(acc[k * words + w]);
      if (count >= threshold) {
        PointSet pick = b.subset(combo);
        return TranslateWitness{Source::kB, pick, static_cast<std::size_t>(count), threshold, Strategy::kExhaustive};
      }
      // next combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == m - k + i - 1) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t t = i; t < k; ++t) combo[t] = combo[t - 1] + 1;
      level = i - 1;
    }
  }
  return std::nullopt;
}

}  // namespace sumset
