#include "sumset/generators.hpp"

#include <set>

#include "sumset/errors.hpp"
#include "sumset/rng.hpp"

namespace sumset {

PointSet gen_chr(std::size_t d, Coord n) {
  if (d < 1 || n < 1) throw ContractViolation("chr: needs d >= 1 and N >= 1");
  std::vector<Coord> flat;
  for (std::size_t base = 0; base < d; ++base) {
    // base 0 is the origin of Z^{d-1}, base i is e_i
    for (Coord t = 1; t <= n; ++t) {
      for (std::size_t k = 0; k + 1 < d; ++k) flat.push_back(base == k + 1 ? 1 : 0);
      flat.push_back(t);
    }
  }
  return PointSet::from_flat(d, std::move(flat));
}

PointSet gen_grid(std::size_t d, Coord side) {
  if (d < 1 || side < 1) throw ContractViolation("grid: needs d >= 1 and side >= 1");
  std::vector<Coord> flat, cur(d, 0);
  for (;;) {
    flat.insert(flat.end(), cur.begin(), cur.end());
    std::size_t k = 0;
    while (k < d && ++cur[k] == side) cur[k++] = 0;
    if (k == d) break;
  }
  return PointSet::from_flat(d, std::move(flat));
}

PointSet gen_simplex(std::size_t d) {
  if (d < 1) throw ContractViolation("simplex: needs d >= 1");
  std::vector<Coord> flat(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) flat.push_back(k == i ? 1 : 0);
  }
  return PointSet::from_flat(d, std::move(flat));
}

PointSet gen_random_lattice(std::size_t d, std::size_t n, Coord box, std::uint64_t seed) {
  if (d < 1 || n < 1 || box < 1) throw ContractViolation("random-lattice: needs d, n, box >= 1");
  // box^d must hold n points
  std::uint64_t cells = 1;
  for (std::size_t k = 0; k < d && cells < n; ++k) cells *= static_cast<std::uint64_t>(box);
  if (cells < n) throw ContractViolation("random-lattice: box too small for n distinct points");
  Rng rng(seed);
  std::set<std::vector<Coord>> seen;
  std::vector<Coord> flat;
  while (seen.size() < n) {
    std::vector<Coord> p(d);
    for (auto& c : p) c = static_cast<Coord>(rng.below(static_cast<std::uint64_t>(box)));
    if (seen.insert(p).second) flat.insert(flat.end(), p.begin(), p.end());
  }
  return PointSet::from_flat(d, std::move(flat));
}

CyclicSet gen_random_cyclic(const CyclicProductSpace& space, std::size_t n, std::uint64_t seed,
                            std::optional<std::uint64_t> span) {
  const std::uint64_t residues = span ? std::min(*span + 1, space.p()) : space.p();
  const std::uint64_t cells = residues * space.m();
  if (n > cells) throw ContractViolation("random-cyclic: more elements requested than available");
  Rng rng(seed);
  CyclicSet out(space);
  while (out.size() < n) out.set(static_cast<std::size_t>(rng.below(cells)));
  return out;
}

}  // namespace sumset
