#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sumset/rational.hpp"

namespace sumset {

enum class Verdict { kPass, kFail, kVacuous };

std::string_view verdict_name(Verdict v);

using MetricValue = std::variant<std::int64_t, Rational>;

struct Metric {
  std::string name;
  MetricValue value;
};

// Structured result of a check or experiment. Metric values are exact;
// rationals print as num/den.
struct Report {
  std::string command;
  std::string inputs_digest;
  std::optional<std::uint64_t> seed;
  std::vector<Metric> metrics;
  Verdict verdict = Verdict::kPass;
  std::optional<std::string> witness;

  Report() = default;
  explicit Report(std::string cmd) : command(std::move(cmd)) {}

  void add(std::string name, std::int64_t value) { metrics.push_back({std::move(name), value}); }
  void add(std::string name, Rational value) { metrics.push_back({std::move(name), std::move(value)}); }
  void add_count(std::string name, std::size_t value) { add(std::move(name), static_cast<std::int64_t>(value)); }

  const MetricValue* find(std::string_view name) const;
  std::int64_t integer(std::string_view name) const;
  Rational rational(std::string_view name) const;

  bool passed() const { return verdict == Verdict::kPass; }

  // `name<TAB>value` lines for the metrics only; the reproducibility surface.
  std::string metric_records(bool decimal = false) const;
  // Full record block: header fields, metrics, verdict, witness.
  std::string records(bool decimal = false) const;
  // Single-line JSON object.
  std::string json() const;
  std::string metrics_digest() const;
};

std::string sha256_hex(std::string_view data);

}  // namespace sumset
