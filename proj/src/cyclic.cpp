#include "sumset/cyclic.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "sumset/errors.hpp"
#include "sumset/rng.hpp"

namespace sumset {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

CyclicProductSpace::CyclicProductSpace(std::uint64_t p, std::uint64_t m) : p_(p), m_(m) {
  if (!is_prime(p)) throw ContractViolation("cyclic space: p = " + std::to_string(p) + " is not prime");
  if (m == 0) throw ContractViolation("cyclic space: m must be positive");
  if (p > (std::uint64_t{1} << 26) || m > (std::uint64_t{1} << 26) / p) {
    throw ContractViolation("cyclic space: group order above 2^26");
  }
}

GroupElement CyclicProductSpace::reduce(std::int64_t x, std::int64_t y) const {
  const auto pp = static_cast<std::int64_t>(p_), mm = static_cast<std::int64_t>(m_);
  return {((x % pp) + pp) % pp, ((y % mm) + mm) % mm};
}

GroupElement CyclicProductSpace::element(std::size_t index) const {
  return {static_cast<std::int64_t>(index / m_), static_cast<std::int64_t>(index % m_)};
}

// ---------------------------------------------------------------------------

CyclicSet::CyclicSet(const CyclicProductSpace& space) : space_(space), words_((space.order() + 63) / 64, 0) {}

CyclicSet::CyclicSet(const CyclicProductSpace& space, const std::vector<GroupElement>& elems) : CyclicSet(space) {
  for (const auto& g : elems) insert(g);
}

CyclicSet CyclicSet::full(const CyclicProductSpace& space) {
  CyclicSet s(space);
  for (std::size_t i = 0; i < space.order(); ++i) s.set(i);
  return s;
}

CyclicSet CyclicSet::interval(const CyclicProductSpace& space, std::int64_t start, std::uint64_t length,
                              std::uint64_t fiber_size) {
  if (length + 1 > space.p()) throw ContractViolation("interval: length + 1 exceeds p");
  if (fiber_size == 0 || fiber_size > space.m()) fiber_size = space.m();
  CyclicSet s(space);
  for (std::uint64_t k = 0; k <= length; ++k) {
    for (std::uint64_t y = 0; y < fiber_size; ++y) {
      s.insert(space.reduce(start + static_cast<std::int64_t>(k), static_cast<std::int64_t>(y)));
    }
  }
  return s;
}

std::size_t CyclicSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool CyclicSet::contains(const GroupElement& g) const {
  const auto r = space_.reduce(g.x, g.y);
  return test(space_.index(r));
}

void CyclicSet::insert(const GroupElement& g) { set(space_.index(space_.reduce(g.x, g.y))); }

std::vector<GroupElement> CyclicSet::elements() const {
  std::vector<GroupElement> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
      out.push_back(space_.element(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
    }
  }
  return out;
}

CyclicSet CyclicSet::translated(const GroupElement& t) const {
  CyclicSet out(space_);
  const auto shift = space_.reduce(t.x, t.y);
  const auto p = static_cast<std::int64_t>(space_.p()), m = static_cast<std::int64_t>(space_.m());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1) {
      const auto g = space_.element(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      std::int64_t x = g.x + shift.x, y = g.y + shift.y;
      if (x >= p) x -= p;
      if (y >= m) y -= m;
      out.set(space_.index({x, y}));
    }
  }
  return out;
}

void CyclicSet::require_same_space(const CyclicSet& other) const {
  if (!(space_ == other.space_)) throw ContractViolation("cyclic sets live in different spaces");
}

CyclicSet CyclicSet::united(const CyclicSet& other) const {
  require_same_space(other);
  CyclicSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] |= other.words_[w];
  return out;
}

CyclicSet CyclicSet::minus(const CyclicSet& other) const {
  require_same_space(other);
  CyclicSet out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~other.words_[w];
  return out;
}

bool CyclicSet::is_subset_of(const CyclicSet& other) const {
  require_same_space(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

std::string CyclicSet::to_string() const {
  std::ostringstream os;
  os << "Z" << space_.p() << "xZ" << space_.m() << "{";
  bool first = true;
  for (const auto& g : elements()) {
    os << (first ? "" : " ") << "(" << g.x << "," << g.y << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

CyclicSet sumset(const CyclicSet& a, const CyclicSet& b) {
  if (!(a.space() == b.space())) throw ContractViolation("sumset: cyclic sets live in different spaces");
  CyclicSet out(a.space());
  for (const auto& g : b.elements()) out = out.united(a.translated(g));
  return out;
}

// ---------------------------------------------------------------------------

void IntervalWindow::validate(const CyclicProductSpace& space) const {
  if (length + 1 > space.p()) {
    throw ContractViolation("interval window: length " + std::to_string(length) + " + 1 exceeds p = " +
                            std::to_string(space.p()));
  }
}

std::uint64_t IntervalWindow::lift(const CyclicProductSpace& space, std::int64_t x) const {
  const auto p = static_cast<std::int64_t>(space.p());
  return static_cast<std::uint64_t>((((x - start) % p) + p) % p);
}

bool IntervalWindow::contains_support(const CyclicSet& a) const {
  for (const auto& g : a.elements()) {
    if (lift(a.space(), g.x) > length) return false;
  }
  return true;
}

std::vector<std::uint64_t> convolution_counts(const CyclicSet& a, const CyclicSet& b) {
  if (!(a.space() == b.space())) throw ContractViolation("convolution_counts: different spaces");
  const auto& space = a.space();
  std::vector<std::uint64_t> counts(space.order(), 0);
  const auto bs = b.elements();
  for (const auto& x : a.elements()) {
    for (const auto& y : bs) ++counts[space.index(space.reduce(x.x + y.x, x.y + y.y))];
  }
  return counts;
}

CyclicSet popular_product(const CyclicSet& a, const CyclicSet& b, std::uint64_t t_count) {
  if (t_count < 1 || t_count > std::min(a.size(), b.size())) {
    throw ContractViolation("popular_product: threshold " + std::to_string(t_count) + " outside [1, min(|A|,|B|)]");
  }
  const auto counts = convolution_counts(a, b);
  CyclicSet out(a.space());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] >= t_count) out.set(i);
  }
  return out;
}

std::vector<std::uint64_t> fiber_profile(const CyclicSet& a) {
  std::vector<std::uint64_t> profile(a.space().p(), 0);
  for (const auto& g : a.elements()) ++profile[static_cast<std::size_t>(g.x)];
  return profile;
}

namespace {

std::uint64_t projection_of_profile(const std::vector<std::uint64_t>& lifted, std::uint64_t w) {
  std::uint64_t total = 0;
  for (std::uint64_t x0 = 0; x0 < w && x0 < lifted.size(); ++x0) {
    std::uint64_t best = 0;
    for (std::uint64_t x = x0; x < lifted.size(); x += w) best = std::max(best, lifted[x]);
    total += best;
  }
  return total;
}

}  // namespace

std::uint64_t max_projection(const CyclicSet& x, const IntervalWindow& window, std::uint64_t w) {
  const auto& space = x.space();
  window.validate(space);
  if (w == 0) throw ContractViolation("max_projection: period w must be positive");
  std::vector<std::uint64_t> lifted(window.length + 1, 0);
  for (const auto& g : x.elements()) {
    const auto t = window.lift(space, g.x);
    if (t > window.length) {
      throw ContractViolation("max_projection: support wraps around outside the window at residue " +
                              std::to_string(g.x));
    }
    ++lifted[t];
  }
  return projection_of_profile(lifted, w);
}

std::uint64_t max_projection(const CyclicSet& x, std::uint64_t w) {
  return max_projection(x, IntervalWindow{0, x.space().p() - 1}, w);
}

// ---------------------------------------------------------------------------

namespace {

struct Tight {
  std::int64_t origin;   // residue mapped to lifted 0
  std::uint64_t length;  // lifted span
};

Tight tighten(const CyclicSet& a, const IntervalWindow& window) {
  const auto& space = a.space();
  std::uint64_t lo = window.length, hi = 0;
  for (const auto& g : a.elements()) {
    const auto t = window.lift(space, g.x);
    if (t > window.length) {
      throw ContractViolation("interval_triple_select: set " + a.to_string() + " leaves its window");
    }
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return {window.start + static_cast<std::int64_t>(lo), hi - lo};
}

std::string selection_dump(const CyclicSet& a, const CyclicSet& b) { return "A=" + a.to_string() + " B=" + b.to_string(); }

}  // namespace

IntervalSelection interval_triple_select(const CyclicSet& a, const CyclicSet& b, const IntervalWindow& i,
                                         const IntervalWindow& j) {
  if (!(a.space() == b.space())) throw ContractViolation("interval_triple_select: different spaces");
  const auto& space = a.space();
  i.validate(space);
  j.validate(space);
  if (i.length + j.length + 2 > space.p()) {
    throw ContractViolation("interval_triple_select: windows need |I| + |J| + 2 <= p");
  }
  const std::size_t na = a.size(), nb = b.size();
  if (nb < 2 || na < nb) throw ContractViolation("interval_triple_select: requires |A| >= |B| >= 2");
  const Tight ta = tighten(a, i), tb = tighten(b, j);
  if (tb.length == 0) throw ContractViolation("interval_triple_select: B must meet at least two fibers");

  // Move both sets so their windows start at residue 0.
  const CyclicSet a0 = a.translated({-ta.origin, 0});
  const CyclicSet b0 = b.translated({-tb.origin, 0});
  const auto belems = b0.elements();
  const auto w = tb.length;
  const GroupElement b1 = *std::find_if(belems.begin(), belems.end(), [](const auto& g) { return g.x == 0; });
  const GroupElement b2 = *std::find_if(belems.begin(), belems.end(),
                                        [&](const auto& g) { return static_cast<std::uint64_t>(g.x) == w; });
  const CyclicSet x = a0.translated(b1).united(a0.translated(b2));
  const std::uint64_t pi = max_projection(x, IntervalWindow{0, ta.length + tb.length}, w);
  const std::uint64_t x_size = x.size();

  GroupElement b3 = belems.front();
  std::size_t gain = 0;
  for (const auto& g : belems) {
    const std::size_t fresh = a0.translated(g).minus(x).size();
    if (fresh > gain) {
      gain = fresh;
      b3 = g;
    }
  }
  const std::size_t achieved = x_size + gain;

  // Back to the caller's coordinates; recompute the sumset there.
  std::vector<Coord> flat;
  CyclicSet covered(space);
  for (const auto& g : {b1, b2, b3}) {
    const auto orig = space.reduce(g.x + tb.origin, g.y);
    flat.push_back(orig.x);
    flat.push_back(orig.y);
    covered = covered.united(a.translated(orig));
  }
  const auto m = static_cast<std::int64_t>(space.m());
  const auto target = static_cast<std::int64_t>(na + nb) - m;

  if (covered.size() != achieved) {
    throw InvariantViolation("interval_triple_select: translated and original sumsets disagree; " +
                             selection_dump(a, b));
  }
  if (x_size < na + pi) {
    throw InvariantViolation("interval_triple_select: |X| = " + std::to_string(x_size) + " < |A| + pi = " +
                             std::to_string(na + pi) + "; " + selection_dump(a, b));
  }
  if (static_cast<std::int64_t>(achieved) < target) {
    throw InvariantViolation("interval_triple_select: |A+S| = " + std::to_string(achieved) +
                             " < |A| + |B| - m = " + std::to_string(target) + "; " + selection_dump(a, b));
  }

  IntervalSelection out{
      TranslateWitness{Source::kB, PointSet::from_flat(2, std::move(flat)), achieved, target,
                       Strategy::kIntervalTriple},
      Report("interval-triple")};
  auto& r = out.report;
  r.add_count("size_a", na);
  r.add_count("size_b", nb);
  r.add("m", m);
  r.add_count("period_w", w);
  r.add_count("x_size", x_size);
  r.add_count("max_projection", pi);
  r.add("xs_slack", static_cast<std::int64_t>(x_size) - static_cast<std::int64_t>(na + pi));
  r.add_count("achieved", achieved);
  r.add("target", target);
  r.add("undiminished_met", static_cast<std::int64_t>(achieved >= na + nb ? 1 : 0));
  r.witness = out.witness.to_string();
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// a - b - 1/n <= 0, or (a - b - 1/n)^2 <= 16 b (1 - b) / n: the 4-sigma test
// without square roots.
bool within_tolerance(const Rational& observed, const Rational& bound, std::uint64_t trials) {
  const Rational n = make_rational(static_cast<std::int64_t>(trials));
  const Rational excess = observed - bound - 1 / n;
  if (excess <= 0) return true;
  return excess * excess <= 16 * bound * (1 - bound) / n;
}

}  // namespace

Report sample_cover_experiment(const CyclicSet& a, const CyclicSet& b, std::uint64_t t_count, std::uint64_t c,
                               std::uint64_t trials, std::uint64_t seed) {
  if (c < 1) throw ContractViolation("sample_cover_experiment: c must be at least 1");
  if (trials < 1) throw ContractViolation("sample_cover_experiment: trials must be at least 1");
  const CyclicSet popular = popular_product(a, b, t_count);
  const auto counts = convolution_counts(a, b);
  const auto nb = static_cast<std::int64_t>(b.size());

  Report r("sim");
  r.seed = seed;
  r.add_count("size_a", a.size());
  r.add_count("size_b", b.size());
  r.add_count("t_count", t_count);
  r.add_count("c", c);
  r.add_count("trials", trials);
  r.add_count("popular_size", popular.size());
  const Rational bound = pow(make_rational(nb - static_cast<std::int64_t>(t_count), nb), c);
  r.add("bound", bound);
  if (popular.empty()) {
    r.verdict = Verdict::kVacuous;
    return r;
  }

  const auto bs = b.elements();
  const auto pops = popular.elements();
  std::vector<std::uint64_t> misses(pops.size(), 0);
  std::uint64_t uncovered_total = 0, uncovered_max = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, trial);
    CyclicSet covered(a.space());
    for (std::uint64_t k = 0; k < c; ++k) covered = covered.united(a.translated(bs[rng.below(bs.size())]));
    std::uint64_t uncovered = 0;
    for (std::size_t g = 0; g < pops.size(); ++g) {
      if (!covered.contains(pops[g])) {
        ++uncovered;
        ++misses[g];
      }
    }
    uncovered_total += uncovered;
    uncovered_max = std::max(uncovered_max, uncovered);
  }

  const auto np = static_cast<std::int64_t>(pops.size());
  const Rational mean = make_rational(static_cast<std::int64_t>(uncovered_total), np * static_cast<std::int64_t>(trials));
  r.add("mean_uncovered", mean);
  r.add("max_uncovered", make_rational(static_cast<std::int64_t>(uncovered_max), np));
  r.add("tolerance_sq", 16 * bound * (1 - bound) / make_rational(static_cast<std::int64_t>(trials)));

  std::int64_t violations = 0;
  for (std::size_t g = 0; g < pops.size(); ++g) {
    const auto n_g = static_cast<std::int64_t>(counts[a.space().index(pops[g])]);
    const Rational bound_g = pow(make_rational(nb - n_g, nb), c);
    const Rational freq = make_rational(static_cast<std::int64_t>(misses[g]), static_cast<std::int64_t>(trials));
    if (!within_tolerance(freq, bound_g, trials)) ++violations;
  }
  r.add("per_element_violations", violations);
  const bool mean_ok = within_tolerance(mean, bound, trials);
  r.add("mean_within_tolerance", static_cast<std::int64_t>(mean_ok ? 1 : 0));
  r.verdict = mean_ok && violations == 0 ? Verdict::kPass : Verdict::kFail;
  return r;
}

Report cauchy_davenport_check(const CyclicSet& a, const CyclicSet& b) {
  if (!(a.space() == b.space())) throw ContractViolation("cauchy_davenport_check: different spaces");
  if (a.space().m() != 1) throw ContractViolation("cauchy_davenport_check: requires m = 1");
  if (a.empty() || b.empty()) throw ContractViolation("cauchy_davenport_check: empty set");
  const auto lhs = static_cast<std::int64_t>(sumset(a, b).size());
  const auto bound = std::min(static_cast<std::int64_t>(a.size() + b.size()) - 1,
                              static_cast<std::int64_t>(a.space().p()));
  Report r("cauchy-davenport");
  r.add_count("size_a", a.size());
  r.add_count("size_b", b.size());
  r.add("sumset_size", lhs);
  r.add("bound", bound);
  r.add("slack", lhs - bound);
  if (lhs < bound) {
    r.verdict = Verdict::kFail;
    r.witness = selection_dump(a, b);
  }
  return r;
}

Report popular_nesting_check(const CyclicSet& a, const CyclicSet& b) {
  if (a.empty() || b.empty()) throw ContractViolation("popular_nesting_check: empty set");
  const auto counts = convolution_counts(a, b);
  std::uint64_t total = 0;
  for (auto n : counts) total += n;
  const CyclicSet sums = sumset(a, b);
  const std::uint64_t top = std::min(a.size(), b.size());
  std::int64_t violations = 0;
  CyclicSet previous = popular_product(a, b, 1);
  if (!(previous == sums)) ++violations;
  for (std::uint64_t t = 2; t <= top; ++t) {
    CyclicSet next = popular_product(a, b, t);
    if (!next.is_subset_of(previous)) ++violations;
    previous = std::move(next);
  }
  if (total != a.size() * b.size()) ++violations;
  Report r("popular-nesting");
  r.add_count("size_a", a.size());
  r.add_count("size_b", b.size());
  r.add_count("convolution_total", total);
  r.add_count("sumset_size", sums.size());
  r.add_count("thresholds", top);
  r.add("violations", violations);
  if (violations) {
    r.verdict = Verdict::kFail;
    r.witness = selection_dump(a, b);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive sweep on single-word bitsets. Index x*m + y as elsewhere; lifted
// sums never leave residues 0..p-1, so only the kernel coordinate wraps.

namespace {

struct Normalized {
  std::uint64_t mask;
  std::uint8_t size;
  std::array<std::uint8_t, 8> ys;  // kernel residues in index order
  std::array<std::uint8_t, 8> xs;
};

class WordShift {
 public:
  WordShift(unsigned p, unsigned m) : m_(m) {
    for (unsigned by = 0; by < m; ++by) {
      std::uint64_t keep = 0;
      for (unsigned x = 0; x < p; ++x) {
        for (unsigned y = 0; y + by < m; ++y) keep |= std::uint64_t{1} << (x * m + y);
      }
      keep_[by] = keep;
    }
  }

  std::uint64_t operator()(std::uint64_t s, unsigned bx, unsigned by) const {
    if (by != 0) s = ((s & keep_[by]) << by) | ((s & ~keep_[by]) >> (m_ - by));
    return s << (bx * m_);
  }

 private:
  unsigned m_;
  std::array<std::uint64_t, 64> keep_{};
};

// Sets containing (0,0), meeting fiber `span`, inside residues 0..span.
std::vector<Normalized> normalized_sets(unsigned span, unsigned m, unsigned max_size) {
  std::vector<Normalized> out;
  const unsigned bits = (span + 1) * m;
  const std::uint64_t last_fiber = ((std::uint64_t{1} << m) - 1) << (span * m);
  std::vector<unsigned> chosen{0};
  // depth-first over increasing bit indices
  auto emit = [&]() {
    std::uint64_t mask = 0;
    for (unsigned b : chosen) mask |= std::uint64_t{1} << b;
    if (span > 0 && !(mask & last_fiber)) return;
    Normalized n{mask, static_cast<std::uint8_t>(chosen.size()), {}, {}};
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      n.xs[k] = static_cast<std::uint8_t>(chosen[k] / m);
      n.ys[k] = static_cast<std::uint8_t>(chosen[k] % m);
    }
    out.push_back(n);
  };
  auto recurse = [&](auto&& self, unsigned next) -> void {
    emit();
    if (chosen.size() == max_size) return;
    for (unsigned b = next; b < bits; ++b) {
      chosen.push_back(b);
      self(self, b + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 1);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.size < y.size; });
  return out;
}

std::string mask_string(std::uint64_t mask, unsigned m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (; mask; mask &= mask - 1) {
    const auto i = static_cast<unsigned>(std::countr_zero(mask));
    os << (first ? "" : " ") << '(' << i / m << ',' << i % m << ')';
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

SweepResult sweep_interval_instances(std::uint64_t p, std::uint64_t m, std::uint64_t max_size) {
  const CyclicProductSpace space(p, m);
  if (space.order() > 64) throw ContractViolation("sweep: p*m must be at most 64");
  if (max_size > 8) throw ContractViolation("sweep: max size at most 8");
  SweepResult result;
  if (p < 3 || max_size < 2) return result;

  const auto pu = static_cast<unsigned>(p), mu = static_cast<unsigned>(m);
  const WordShift shift(pu, mu);
  const std::uint64_t fiber_mask = (std::uint64_t{1} << mu) - 1;
  std::vector<std::vector<Normalized>> by_span(pu - 1);
  for (unsigned span = 0; span + 1 < pu; ++span) {
    by_span[span] = normalized_sets(span, mu, static_cast<unsigned>(max_size));
  }

  std::array<std::uint64_t, 64> fiber{};
  for (unsigned la = 0; la + 3 <= pu; ++la) {
    for (unsigned lb = 1; la + lb + 2 <= pu; ++lb) {
      const unsigned total_span = la + lb;
      for (const auto& sa : by_span[la]) {
        if (sa.size < 2) continue;
        const int na = sa.size;
        for (const auto& sb : by_span[lb]) {
          if (sb.size > sa.size) break;
          // b1 = (0,0); b2 = first element on fiber lb
          unsigned k2 = 0;
          while (sb.xs[k2] != lb) ++k2;
          const std::uint64_t x = sa.mask | shift(sa.mask, lb, sb.ys[k2]);
          const int x_size = std::popcount(x);
          for (unsigned r = 0; r <= total_span; ++r) fiber[r] = (x >> (r * mu)) & fiber_mask;
          int pi = 0;
          for (unsigned x0 = 0; x0 < lb; ++x0) {
            int best = 0;
            for (unsigned r = x0; r <= total_span; r += lb) best = std::max(best, std::popcount(fiber[r]));
            pi += best;
          }
          int gain = 0;
          for (unsigned k = 0; k < sb.size; ++k) {
            gain = std::max(gain, std::popcount(shift(sa.mask, sb.xs[k], sb.ys[k]) & ~x));
          }
          const int achieved = x_size + gain;
          const int nb = sb.size;
          ++result.instances;
          const bool xs_ok = x_size >= na + pi;
          const bool bound_ok = achieved >= na + nb - static_cast<int>(mu);
          if (achieved >= na + nb) ++result.undiminished_met;
          if (!xs_ok) ++result.xs_failures;
          if (!bound_ok) ++result.bound_failures;
          if ((!xs_ok || !bound_ok) && !result.first_failure) {
            result.first_failure = "p=" + std::to_string(p) + " m=" + std::to_string(m) +
                                   " A=" + mask_string(sa.mask, mu) + " B=" + mask_string(sb.mask, mu) +
                                   " |X|=" + std::to_string(x_size) + " pi=" + std::to_string(pi) +
                                   " |A+S|=" + std::to_string(achieved);
          }
        }
      }
    }
  }
  return result;
}

Report sweep_report(std::uint64_t p, std::uint64_t m, std::uint64_t max_size) {
  const SweepResult s = sweep_interval_instances(p, m, max_size);
  Report r("xs-sweep");
  r.add_count("p", p);
  r.add_count("m", m);
  r.add_count("max_size", max_size);
  r.add_count("instances", s.instances);
  r.add_count("xs_failures", s.xs_failures);
  r.add_count("bound_failures", s.bound_failures);
  r.add_count("undiminished_met", s.undiminished_met);
  if (s.instances == 0) r.verdict = Verdict::kVacuous;
  if (s.first_failure) {
    r.verdict = Verdict::kFail;
    r.witness = s.first_failure;
  }
  return r;
}

}  // namespace sumset
