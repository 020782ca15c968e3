#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sumset/lattice.hpp"
#include "sumset/rng.hpp"
#include "sumset/structure.hpp"

namespace sumset {

enum class Strategy {
  kTriple1d,
  kLineCovered,
  kSmallSetFull,
  kRandomSample,
  kManyLinesBoost,
  kGreedy,
  kIntervalTriple,
  kExhaustive,
};

std::string_view strategy_name(Strategy s);

enum class Source { kA, kB };

// A small subset `selected` of the source set together with |A + selected|
// and the lower bound it is meant to certify.
struct TranslateWitness {
  Source source = Source::kA;
  PointSet selected;
  std::size_t achieved = 0;
  std::int64_t target = 0;
  Strategy strategy = Strategy::kExhaustive;

  bool meets_target() const { return static_cast<std::int64_t>(achieved) >= target; }
  std::string to_string() const;
};

// Recomputes |a + w.selected| and checks it against the stored value, the
// target, and membership of the selection in `source`.
bool verify_witness(const PointSet& a, const PointSet& source, const TranslateWitness& w);

// S subset of B, |S| <= 3, |A + S| >= |A| + |B| - 1. Needs 1-D sets with
// |A| >= |B| >= 1.
TranslateWitness select_triple_1d(const PointSet& a, const PointSet& b);

// Full-dimensional A covered by the r >= d lines of `cover`, each holding at
// least two points. Returns S subset of A with |S| <= 3 d r^2 and
// |A + S| >= (d+1)|A| - 3 d r.
TranslateWitness select_line_covered(const PointSet& a, const LineCover& cover);

struct SelectionBudget {
  std::size_t sample_size = 64;
  std::size_t rounds = 200;
  std::size_t max_greedy = 0;        // 0: 4 (d+1)^3
  std::size_t direction_budget = 0;  // 0: every pair when |A| <= 512, else 4096
};

// Thrown by select_general when no stage reaches the target.
class CascadeExhausted : public std::runtime_error {
 public:
  CascadeExhausted(const std::string& what, TranslateWitness best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const TranslateWitness& best() const { return best_; }

 private:
  TranslateWitness best_;
};

// S subset of A with |A + S| >= (d+1)|A| - 5(d+1)^3 for full-dimensional A,
// trying in order: the whole set when small, a trimmed line cover, the
// many-lines boost, random samples, greedy growth.
TranslateWitness select_general(const PointSet& a, const SelectionBudget& budget, Rng& rng);

// Smallest S subset of B (lexicographically first among equals) with
// |A + S| >= threshold and |S| <= max_size, or nullopt. Refuses to run when
// more than 10^8 subsets would be examined.
std::optional<TranslateWitness> minimal_witness_oracle(const PointSet& a, const PointSet& b,
                                                       std::int64_t threshold, std::size_t max_size);

inline constexpr std::uint64_t kOracleSubsetGuard = 100'000'000;

}  // namespace sumset
