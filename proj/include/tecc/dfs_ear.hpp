#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

#include "tecc/multigraph.hpp"

namespace tecc {

enum class EdgeKind : std::uint8_t { Unvisited, Tree, Back };

/// Per-edge DFS data. Real edges occupy ids 0..m-1; virtual edges created by
/// the engine are appended after them. Orientation: `upper` is the endpoint
/// closer to the root (parent of a tree edge, head of a back-edge).
struct EdgeRecord {
    Vertex upper = kNoVertex;
    Vertex lower = kNoVertex;
    std::uint64_t stamp = 0;   // encounter order, only meaningful for back-edges
    Vertex ear_top = kNoVertex;  // t(P) once the ear of this back-edge is closed
    EdgeKind kind = EdgeKind::Unvisited;
    bool is_virtual = false;
};

/// A materialized path: vertices[i], edges[i], vertices[i+1].
struct VertexPath {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
};

/**
 * DFS annotations filled in incrementally by the decomposition engine.
 *
 * `parent` and `parent_edge` are the *current* tree: the engine rewires them
 * when a cut-pair chain is replaced by a virtual tree edge. Ancestry is always
 * answered against the original DFS tree through the dfs-number intervals,
 * which rewiring never touches.
 */
class DfsAnnotations {
public:
    static constexpr std::uint32_t kOpen = std::numeric_limits<std::uint32_t>::max();

    explicit DfsAnnotations(const Multigraph& g);

    std::size_t real_edge_count() const { return real_edges_; }

    // per vertex
    std::vector<std::uint32_t> dfs_num;      // 0 = unvisited
    std::vector<std::uint32_t> subtree_end;  // largest dfs number in T_v; kOpen while v is active
    std::vector<std::uint32_t> lowpt;
    std::vector<Vertex> parent;
    std::vector<EdgeId> parent_edge;
    std::vector<EdgeId> ear;  // ear(parent(v) -> v), kNoEdge when undefined

    // per edge, real and virtual
    std::vector<EdgeRecord> edges;

    bool visited(Vertex v) const { return dfs_num[v] != 0; }

    /// a is an ancestor of b (reflexive) in the original DFS tree. O(1).
    bool is_ancestor(Vertex a, Vertex b) const;

    /// Lexicographic order on back-edges (real or virtual).
    std::strong_ordering compare_lex(EdgeId f, EdgeId g) const;

    /// f before g, with kNoEdge treated as larger than every back-edge.
    bool lex_less(EdgeId f, EdgeId g) const;

    void classify_tree(EdgeId e, Vertex parent_vertex, Vertex child);
    void classify_back(EdgeId e, Vertex head, Vertex tail);
    EdgeId add_virtual_back(Vertex head, Vertex tail);
    EdgeId add_virtual_tree(Vertex parent_vertex, Vertex child);
    /// A virtual edge that only appears in certificates; it is never ranked.
    EdgeId add_virtual_link(Vertex a, Vertex b);

    /// The back-edge that names the ear containing e.
    EdgeId ear_label(EdgeId e) const;

    /// s(P) for the ear of back-edge f (its head).
    Vertex ear_source(EdgeId f) const { return edges[f].upper; }
    Vertex ear_sink(EdgeId f) const { return edges[f].ear_top; }

    /// Path s(P) = y, x, parent(x), ..., t(P) for the ear of back-edge f.
    /// Requires the ear to be closed (its sink recorded).
    VertexPath materialize_ear(EdgeId f) const;

    /// Current-tree path from `top` down to `bottom`, listed top first.
    VertexPath tree_path(Vertex top, Vertex bottom) const;

private:
    std::size_t real_edges_ = 0;
    std::uint64_t next_stamp_ = 1;
};

/// Plain DFS from `root` over its connected component, in adjacency order,
/// with ear labels from the recursion ear(v->w) = min over the outgoing
/// back-edges of w and the ears of w's child edges (undefined when that
/// minimum does not leave T_w). Every back-edge gets its ear closed, so each
/// can be materialized. No contraction happens.
DfsAnnotations dfs_ears(const Multigraph& g, Vertex root);

}  // namespace tecc
