#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tecc {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

struct Edge {
    Vertex a = kNoVertex;
    Vertex b = kNoVertex;

    Vertex other(Vertex v) const { return v == a ? b : a; }
    bool operator==(const Edge&) const = default;
};

/// One entry of an adjacency list: the edge and the endpoint it leads to.
struct HalfEdge {
    EdgeId edge = kNoEdge;
    Vertex to = kNoVertex;
    bool operator==(const HalfEdge&) const = default;
};

/**
 * Undirected multigraph with dense vertex ids 0..n-1 and dense edge ids
 * 0..m-1. Parallel edges are kept; self-loops are never stored.
 *
 * Adjacency lists are kept in edge insertion order. The decomposition engine
 * walks them in that order, so insertion order is also the tie-break between
 * parallel back-edges.
 */
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(std::size_t vertex_count);

    /// Adds edge (a, b) and returns its id. Throws std::invalid_argument on a
    /// self-loop or an out-of-range endpoint.
    EdgeId add_edge(Vertex a, Vertex b);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const HalfEdge> adjacency(Vertex v) const { return adjacency_[v]; }

    /// Number of edges incident on v, parallel edges counted with multiplicity.
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

    bool operator==(const Multigraph&) const = default;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<HalfEdge>> adjacency_;
};

struct NormalizationLog {
    std::size_t removed_self_loops = 0;
    std::vector<Vertex> isolated_vertices;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParsedGraph {
    Multigraph graph;
    NormalizationLog log;
};

/// Reads the line-oriented edge-list format:
///   c <comment>
///   p <n> <m>
///   e <u> <v>      (exactly m lines, 1-based vertex ids)
/// Self-loops are dropped and counted in the log; edge ids are assigned to
/// the remaining edges in input order.
ParsedGraph parse_graph(std::string_view text);
ParsedGraph parse_graph(std::istream& in);

/// Writes g in the same format (1-based ids, one "e" line per edge, in id
/// order). parse_graph(serialize_graph(g)).graph == g.
std::string serialize_graph(const Multigraph& g);

/// Partition of the vertices into connected components. Blocks are ordered
/// by smallest vertex; vertices inside a block are sorted.
std::vector<std::vector<Vertex>> connected_components(const Multigraph& g);

/// Convenience for tests and tools: builds a graph from 0-based endpoint pairs.
Multigraph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
Multigraph make_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

}  // namespace tecc
