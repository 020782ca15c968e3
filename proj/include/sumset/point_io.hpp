#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sumset/cyclic.hpp"
#include "sumset/lattice.hpp"

namespace sumset {

struct ParseOptions {
  bool dedupe = false;  // drop repeated points with a warning instead of failing
};

// Point-set files: a `dim d` header, then one point per line as d tokens.
// Tokens may be integers or fractions a/b; fractions are cleared by scaling
// every point by the lcm of the denominators. `#` starts a comment.
struct ParsedPoints {
  PointSet set;
  Coord scale = 1;
  std::vector<std::string> warnings;
};

ParsedPoints parse_point_set(std::istream& in, const ParseOptions& opts = {});
ParsedPoints read_point_set(const std::string& path, const ParseOptions& opts = {});
std::string format_point_set(const PointSet& a);

// Cyclic-set files: a `cyclic p m` header, then `x y` lines (`x` alone when m = 1).
struct ParsedCyclic {
  CyclicSet set;
  std::vector<std::string> warnings;
};

ParsedCyclic parse_cyclic_set(std::istream& in, const ParseOptions& opts = {});
ParsedCyclic read_cyclic_set(const std::string& path, const ParseOptions& opts = {});
std::string format_cyclic_set(const CyclicSet& a);

std::string read_file(const std::string& path);

}  // namespace sumset
