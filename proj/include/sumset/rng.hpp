#pragma once

#include <cstdint>
#include <random>

namespace sumset {

// Seeded generator with draws that do not depend on the standard library's
// distribution implementations, so runs are reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Generator for an independent stream: seed mixed with the stream index
  // through splitmix64.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace sumset
