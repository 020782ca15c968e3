#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "sumset/report.hpp"
#include "sumset/select.hpp"

namespace sumset {

struct GroupElement {
  std::int64_t x = 0;  // residue mod p
  std::int64_t y = 0;  // residue mod m

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

bool is_prime(std::uint64_t n);

// Z_p x Z_m with chi the projection to Z_p; element (x, y) has index x*m + y.
class CyclicProductSpace {
 public:
  CyclicProductSpace(std::uint64_t p, std::uint64_t m);

  std::uint64_t p() const { return p_; }
  std::uint64_t m() const { return m_; }
  std::uint64_t order() const { return p_ * m_; }

  GroupElement reduce(std::int64_t x, std::int64_t y) const;
  std::size_t index(const GroupElement& g) const { return static_cast<std::size_t>(g.x) * m_ + g.y; }
  GroupElement element(std::size_t index) const;

  friend bool operator==(const CyclicProductSpace&, const CyclicProductSpace&) = default;

 private:
  std::uint64_t p_;
  std::uint64_t m_;
};

// Subset of Z_p x Z_m as a bitset over element indices.
class CyclicSet {
 public:
  using Words = boost::container::small_vector<std::uint64_t, 2>;

  explicit CyclicSet(const CyclicProductSpace& space);
  CyclicSet(const CyclicProductSpace& space, const std::vector<GroupElement>& elems);
  static CyclicSet full(const CyclicProductSpace& space);
  // {start, ..., start+length} x Z_m restricted to kernel residues y < fiber_size.
  static CyclicSet interval(const CyclicProductSpace& space, std::int64_t start, std::uint64_t length,
                            std::uint64_t fiber_size = 0);

  const CyclicProductSpace& space() const { return space_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  bool contains(const GroupElement& g) const;
  bool test(std::size_t index) const { return (words_[index / 64] >> (index % 64)) & 1U; }
  void insert(const GroupElement& g);
  void set(std::size_t index) { words_[index / 64] |= std::uint64_t{1} << (index % 64); }

  // In index order, which is lexicographic in (x, y).
  std::vector<GroupElement> elements() const;

  CyclicSet translated(const GroupElement& t) const;
  CyclicSet united(const CyclicSet& other) const;
  CyclicSet minus(const CyclicSet& other) const;
  bool is_subset_of(const CyclicSet& other) const;

  friend bool operator==(const CyclicSet& a, const CyclicSet& b) { return a.space_ == b.space_ && a.words_ == b.words_; }

  std::string to_string() const;

 private:
  void require_same_space(const CyclicSet& other) const;

  CyclicProductSpace space_;
  Words words_;
};

CyclicSet sumset(const CyclicSet& a, const CyclicSet& b);

// Residues start, ..., start+length of Z_p.
struct IntervalWindow {
  std::int64_t start = 0;
  std::uint64_t length = 0;

  void validate(const CyclicProductSpace& space) const;
  // (x - start) mod p
  std::uint64_t lift(const CyclicProductSpace& space, std::int64_t x) const;
  bool contains_support(const CyclicSet& a) const;
};

// N(x) = #{(a,b) : a + b = x}, indexed by element index.
std::vector<std::uint64_t> convolution_counts(const CyclicSet& a, const CyclicSet& b);

// {x : N(x) >= t_count}; requires 1 <= t_count <= min(|A|, |B|).
CyclicSet popular_product(const CyclicSet& a, const CyclicSet& b, std::uint64_t t_count);

// |A ∩ chi^{-1}(x)| for x = 0..p-1.
std::vector<std::uint64_t> fiber_profile(const CyclicSet& a);

// Sum over x0 < w of the largest fiber among the lifted residues x0 + k w.
// The support of X must lie inside `window`; lifting is x -> (x - start) mod p.
std::uint64_t max_projection(const CyclicSet& x, const IntervalWindow& window, std::uint64_t w);
std::uint64_t max_projection(const CyclicSet& x, std::uint64_t w);

struct IntervalSelection {
  TranslateWitness witness;  // selected points are (x, y) pairs
  Report report;
};

// Three translates b1, b2, b3 of B with |A + S| >= |A| + |B| - m, after
// checking |X| >= |A| + pi_w(X) for X = (A + b1) ∪ (A + b2).
IntervalSelection interval_triple_select(const CyclicSet& a, const CyclicSet& b, const IntervalWindow& i,
                                         const IntervalWindow& j);

Report sample_cover_experiment(const CyclicSet& a, const CyclicSet& b, std::uint64_t t_count, std::uint64_t c,
                               std::uint64_t trials, std::uint64_t seed);

// |A+B| >= min(|A| + |B| - 1, p) for m = 1.
Report cauchy_davenport_check(const CyclicSet& a, const CyclicSet& b);

// Popular sets shrink as the threshold grows and equal A+B at threshold 1.
Report popular_nesting_check(const CyclicSet& a, const CyclicSet& b);

// Every normalised interval instance of Z_p x Z_m with 2 <= |B| <= |A| <= max_size:
// both sets have (0,0) as the first element of their left end fiber, A spans
// residues 0..L_A, B spans 0..L_B with L_B >= 1 and L_A + L_B + 2 <= p.
// Requires p*m <= 64.
struct SweepResult {
  std::uint64_t instances = 0;
  std::uint64_t xs_failures = 0;
  std::uint64_t bound_failures = 0;
  std::uint64_t undiminished_met = 0;  // |A+S| >= |A| + |B|
  std::optional<std::string> first_failure;
};

SweepResult sweep_interval_instances(std::uint64_t p, std::uint64_t m, std::uint64_t max_size);
Report sweep_report(std::uint64_t p, std::uint64_t m, std::uint64_t max_size);

}  // namespace sumset
