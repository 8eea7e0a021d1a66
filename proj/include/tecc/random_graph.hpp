#pragma once

#include <cstdint>

#include "tecc/multigraph.hpp"

namespace tecc {

/// m edges with uniform endpoints drawn from a 64-bit Mersenne Twister;
/// parallel edges are allowed, self-loops are redrawn. Throws
/// std::invalid_argument if m > 0 and n < 2.
Multigraph gen_random(std::size_t n, std::size_t m, std::uint64_t seed);

/// Random recursive spanning tree plus m - (n - 1) uniform extra edges.
/// Throws std::invalid_argument if n == 0 or m < n - 1.
Multigraph gen_random_connected(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace tecc
