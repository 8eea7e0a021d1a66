#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tecc/multigraph.hpp"

namespace tecc {

using EdgePair = std::pair<EdgeId, EdgeId>;  // first < second

/// Number of connected components of g after deleting the edges with
/// removed[e] set.
std::size_t count_components(const Multigraph& g, const std::vector<char>& removed);

/// Edges whose removal increases the number of connected components, sorted.
std::vector<EdgeId> bridges_bf(const Multigraph& g);

/// Pairs of non-bridge edges whose joint removal increases the number of
/// connected components, sorted.
std::vector<EdgePair> cut_pairs_bf(const Multigraph& g);

/// Classes of the relation "u and v stay connected after deleting any set
/// of at most two edges". Blocks sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> three_ecc_bf(const Multigraph& g);

/// Number of edge-disjoint s-t paths, counted up to `limit`.
std::size_t edge_disjoint_paths(const Multigraph& g, Vertex s, Vertex t, std::size_t limit);

/// Bridges by the classic lowpoint rule, linear time. Used where the
/// removal oracle is too slow.
std::vector<EdgeId> bridges_lowpoint(const Multigraph& g);

}  // namespace tecc
