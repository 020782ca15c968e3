#pragma once

#include <cstdint>
#include <optional>

#include "sumset/cyclic.hpp"
#include "sumset/lattice.hpp"

namespace sumset {

// {0, e_1, ..., e_{d-1}} x {1, ..., n}: the equality case of Freiman's lemma.
PointSet gen_chr(std::size_t d, Coord n);
// {0, ..., side-1}^d
PointSet gen_grid(std::size_t d, Coord side);
// {0, e_1, ..., e_d}
PointSet gen_simplex(std::size_t d);
// n distinct points drawn uniformly from {0, ..., box-1}^d.
PointSet gen_random_lattice(std::size_t d, std::size_t n, Coord box, std::uint64_t seed);
// n distinct elements of Z_p x Z_m, drawn from residues 0..span when a span is given.
CyclicSet gen_random_cyclic(const CyclicProductSpace& space, std::size_t n, std::uint64_t seed,
                            std::optional<std::uint64_t> span = std::nullopt);

}  // namespace sumset
