#include "tecc/dfs_ear.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tecc {

DfsAnnotations::DfsAnnotations(const Multigraph& g)
    : dfs_num(g.vertex_count(), 0),
      subtree_end(g.vertex_count(), 0),
      lowpt(g.vertex_count(), 0),
      parent(g.vertex_count(), kNoVertex),
      parent_edge(g.vertex_count(), kNoEdge),
      ear(g.vertex_count(), kNoEdge),
      edges(g.edge_count()),
      real_edges_(g.edge_count()) {}

bool DfsAnnotations::is_ancestor(Vertex a, Vertex b) const {
    if (!visited(a) || !visited(b)) throw std::logic_error("ancestor test on unvisited vertex");
    return dfs_num[a] <= dfs_num[b] && dfs_num[b] <= subtree_end[a];
}

std::strong_ordering DfsAnnotations::compare_lex(EdgeId f, EdgeId g) const {
    const EdgeRecord& ef = edges[f];
    const EdgeRecord& eg = edges[g];
    if (ef.kind != EdgeKind::Back || eg.kind != EdgeKind::Back) {
        throw std::logic_error("lexicographic order is defined on back-edges only");
    }
    if (f == g) return std::strong_ordering::equal;
    if (ef.upper != eg.upper) return dfs_num[ef.upper] <=> dfs_num[eg.upper];
    // equal heads
    const Vertex p = ef.lower;
    const Vertex x = eg.lower;
    if (p == x) return ef.stamp <=> eg.stamp;
    if (is_ancestor(x, p)) return std::strong_ordering::less;     // p below x
    if (is_ancestor(p, x)) return std::strong_ordering::greater;  // x below p
    return dfs_num[p] <=> dfs_num[x];
}

bool DfsAnnotations::lex_less(EdgeId f, EdgeId g) const {
    if (f == kNoEdge) return false;
    if (g == kNoEdge) return true;
    return compare_lex(f, g) == std::strong_ordering::less;
}

void DfsAnnotations::classify_tree(EdgeId e, Vertex parent_vertex, Vertex child) {
    edges[e].kind = EdgeKind::Tree;
    edges[e].upper = parent_vertex;
    edges[e].lower = child;
}

void DfsAnnotations::classify_back(EdgeId e, Vertex head, Vertex tail) {
    EdgeRecord& r = edges[e];
    r.kind = EdgeKind::Back;
    r.upper = head;
    r.lower = tail;
    r.stamp = next_stamp_++;
}

EdgeId DfsAnnotations::add_virtual_back(Vertex head, Vertex tail) {
    EdgeRecord r;
    r.kind = EdgeKind::Back;
    r.upper = head;
    r.lower = tail;
    r.stamp = next_stamp_++;
    r.is_virtual = true;
    edges.push_back(r);
    return static_cast<EdgeId>(edges.size() - 1);
}

EdgeId DfsAnnotations::add_virtual_tree(Vertex parent_vertex, Vertex child) {
    EdgeRecord r;
    r.kind = EdgeKind::Tree;
    r.upper = parent_vertex;
    r.lower = child;
    r.is_virtual = true;
    edges.push_back(r);
    return static_cast<EdgeId>(edges.size() - 1);
}

EdgeId DfsAnnotations::add_virtual_link(Vertex a, Vertex b) {
    EdgeRecord r;
    r.upper = a;
    r.lower = b;
    r.is_virtual = true;
    edges.push_back(r);
    return static_cast<EdgeId>(edges.size() - 1);
}

EdgeId DfsAnnotations::ear_label(EdgeId e) const {
    const EdgeRecord& r = edges[e];
    switch (r.kind) {
        case EdgeKind::Back:
            return e;
        case EdgeKind::Tree:
            return ear[r.lower];
        case EdgeKind::Unvisited:
            break;
    }
    return kNoEdge;
}

VertexPath DfsAnnotations::materialize_ear(EdgeId f) const {
    const EdgeRecord& r = edges[f];
    if (r.kind != EdgeKind::Back) throw std::logic_error("ear must be named by a back-edge");
    if (r.ear_top == kNoVertex) throw std::logic_error("ear is not closed yet");
    VertexPath path;
    path.vertices = {r.upper, r.lower};
    path.edges = {f};
    Vertex v = r.lower;
    while (v != r.ear_top) {
        assert(ear[v] == f);
        const EdgeId pe = parent_edge[v];
        const Vertex p = parent[v];
        if (pe == kNoEdge || p == kNoVertex) throw std::logic_error("ear sink is not an ancestor of its tail");
        path.edges.push_back(pe);
        path.vertices.push_back(p);
        v = p;
    }
    return path;
}

VertexPath DfsAnnotations::tree_path(Vertex top, Vertex bottom) const {
    VertexPath path;
    path.vertices.push_back(bottom);
    Vertex v = bottom;
    while (v != top) {
        const EdgeId pe = parent_edge[v];
        if (pe == kNoEdge) throw std::logic_error("tree path endpoint is not an ancestor");
        path.edges.push_back(pe);
        v = parent[v];
        path.vertices.push_back(v);
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    std::reverse(path.edges.begin(), path.edges.end());
    return path;
}

DfsAnnotations dfs_ears(const Multigraph& g, Vertex root) {
    DfsAnnotations ann(g);
    struct Frame {
        Vertex w;
        std::size_t pos;
    };
    std::vector<Frame> stack;
    std::uint32_t counter = 0;
    auto enter = [&](Vertex v, Vertex p, EdgeId pe) {
        ann.dfs_num[v] = ++counter;
        ann.subtree_end[v] = DfsAnnotations::kOpen;
        ann.lowpt[v] = ann.dfs_num[v];
        ann.parent[v] = p;
        ann.parent_edge[v] = pe;
        stack.push_back({v, 0});
    };
    enter(root, kNoVertex, kNoEdge);
    while (!stack.empty()) {
        Frame& f = stack.back();
        const Vertex w = f.w;
        const auto adj = g.adjacency(w);
        if (f.pos < adj.size()) {
            const HalfEdge he = adj[f.pos++];
            if (he.edge == ann.parent_edge[w] || ann.edges[he.edge].kind != EdgeKind::Unvisited) continue;
            if (!ann.visited(he.to)) {
                ann.classify_tree(he.edge, w, he.to);
                enter(he.to, w, he.edge);
            } else {
                ann.classify_back(he.edge, he.to, w);
                ann.lowpt[w] = std::min(ann.lowpt[w], ann.dfs_num[he.to]);
            }
            continue;
        }
        ann.subtree_end[w] = counter;
        stack.pop_back();

        // candidates: outgoing back-edges of w and ears of its child edges
        EdgeId best = kNoEdge;
        for (const HalfEdge& he : adj) {
            const EdgeRecord& r = ann.edges[he.edge];
            EdgeId cand = kNoEdge;
            if (r.kind == EdgeKind::Back && r.lower == w) cand = he.edge;
            if (r.kind == EdgeKind::Tree && r.upper == w) cand = ann.ear[r.lower];
            if (cand != kNoEdge && ann.lex_less(cand, best)) best = cand;
        }
        if (best != kNoEdge && ann.dfs_num[ann.edges[best].upper] >= ann.dfs_num[w]) best = kNoEdge;
        if (w != root) ann.ear[w] = best;
        for (const HalfEdge& he : adj) {
            const EdgeRecord& r = ann.edges[he.edge];
            EdgeId closing = kNoEdge;
            if (r.kind == EdgeKind::Back && r.lower == w) closing = he.edge;
            if (r.kind == EdgeKind::Tree && r.upper == w) closing = ann.ear[r.lower];
            if (closing != kNoEdge && (w == root || closing != best)) ann.edges[closing].ear_top = w;
        }
        if (!stack.empty()) {
            const Vertex p = stack.back().w;
            ann.lowpt[p] = std::min(ann.lowpt[p], ann.lowpt[w]);
        }
    }
    return ann;
}

}  // namespace tecc
