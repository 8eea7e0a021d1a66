#include "tecc/oracle.hpp"

#include <algorithm>
#include <map>

namespace tecc {
namespace {

/// Component label per vertex with `removed` edges deleted.
std::vector<std::uint32_t> component_labels(const Multigraph& g, const std::vector<char>& removed,
                                            std::size_t* count) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> label(n, UINT32_MAX);
    std::vector<Vertex> queue;
    std::uint32_t next = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (label[s] != UINT32_MAX) continue;
        label[s] = next;
        queue.assign(1, s);
        while (!queue.empty()) {
            const Vertex v = queue.back();
            queue.pop_back();
            for (const HalfEdge& he : g.adjacency(v)) {
                if (removed[he.edge] || label[he.to] != UINT32_MAX) continue;
                label[he.to] = next;
                queue.push_back(he.to);
            }
        }
        ++next;
    }
    if (count != nullptr) *count = next;
    return label;
}

}  // namespace

std::size_t count_components(const Multigraph& g, const std::vector<char>& removed) {
    std::size_t count = 0;
    component_labels(g, removed, &count);
    return count;
}

std::vector<EdgeId> bridges_bf(const Multigraph& g) {
    std::vector<char> removed(g.edge_count(), 0);
    const std::size_t base = count_components(g, removed);
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        removed[e] = 1;
        if (count_components(g, removed) > base) out.push_back(e);
        removed[e] = 0;
    }
    return out;
}

std::vector<EdgePair> cut_pairs_bf(const Multigraph& g) {
    std::vector<char> removed(g.edge_count(), 0);
    const std::size_t base = count_components(g, removed);
    std::vector<char> bridge(g.edge_count(), 0);
    for (const EdgeId e : bridges_bf(g)) bridge[e] = 1;
    std::vector<EdgePair> out;
    for (EdgeId a = 0; a < g.edge_count(); ++a) {
        if (bridge[a]) continue;
        removed[a] = 1;
        for (EdgeId b = a + 1; b < g.edge_count(); ++b) {
            if (bridge[b]) continue;
            removed[b] = 1;
            if (count_components(g, removed) > base) out.emplace_back(a, b);
            removed[b] = 0;
        }
        removed[a] = 0;
    }
    return out;
}

std::vector<std::vector<Vertex>> three_ecc_bf(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    std::vector<char> removed(m, 0);
    std::vector<std::uint32_t> cls = component_labels(g, removed, nullptr);

    auto refine = [&] {
        const std::vector<std::uint32_t> lab = component_labels(g, removed, nullptr);
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> ids;
        for (Vertex v = 0; v < n; ++v) {
            const auto key = std::make_pair(cls[v], lab[v]);
            const auto it = ids.emplace(key, static_cast<std::uint32_t>(ids.size())).first;
            cls[v] = it->second;
        }
    };
    for (EdgeId a = 0; a < m; ++a) {
        removed[a] = 1;
        refine();
        for (EdgeId b = a + 1; b < m; ++b) {
            removed[b] = 1;
            refine();
            removed[b] = 0;
        }
        removed[a] = 0;
    }

    std::map<std::uint32_t, std::vector<Vertex>> blocks;
    for (Vertex v = 0; v < n; ++v) blocks[cls[v]].push_back(v);
    std::vector<std::vector<Vertex>> out;
    out.reserve(blocks.size());
    for (auto& [id, block] : blocks) out.push_back(std::move(block));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t edge_disjoint_paths(const Multigraph& g, Vertex s, Vertex t, std::size_t limit) {
    if (s == t) return limit;
    // flow[e] > 0: one unit from edge(e).a to edge(e).b; < 0: the reverse.
    std::vector<int> flow(g.edge_count(), 0);
    std::vector<EdgeId> via(g.vertex_count());
    std::vector<char> seen(g.vertex_count());
    std::vector<Vertex> queue;
    std::size_t paths = 0;
    while (paths < limit) {
        std::fill(seen.begin(), seen.end(), 0);
        seen[s] = 1;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size() && !seen[t]; ++head) {
            const Vertex v = queue[head];
            for (const HalfEdge& he : g.adjacency(v)) {
                if (seen[he.to]) continue;
                const int dir = g.edge(he.edge).a == v ? 1 : -1;
                if (flow[he.edge] == dir) continue;  // saturated in this direction
                seen[he.to] = 1;
                via[he.to] = he.edge;
                queue.push_back(he.to);
            }
        }
        if (!seen[t]) break;
        for (Vertex v = t; v != s;) {
            const Edge& e = g.edge(via[v]);
            const Vertex u = e.other(v);
            flow[via[v]] += e.a == u ? 1 : -1;
            v = u;
        }
        ++paths;
    }
    return paths;
}

std::vector<EdgeId> bridges_lowpoint(const Multigraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> num(n, 0);
    std::vector<std::uint32_t> low(n, 0);
    std::vector<EdgeId> up(n, kNoEdge);
    std::vector<std::pair<Vertex, std::size_t>> stack;
    std::vector<EdgeId> out;
    std::uint32_t counter = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (num[s] != 0) continue;
        num[s] = low[s] = ++counter;
        stack.emplace_back(s, 0);
        while (!stack.empty()) {
            auto& [v, pos] = stack.back();
            const auto adj = g.adjacency(v);
            if (pos < adj.size()) {
                const HalfEdge he = adj[pos++];
                if (he.edge == up[v]) continue;
                if (num[he.to] == 0) {
                    up[he.to] = he.edge;
                    num[he.to] = low[he.to] = ++counter;
                    stack.emplace_back(he.to, 0);
                } else {
                    low[v] = std::min(low[v], num[he.to]);
                }
                continue;
            }
            const Vertex child = v;
            stack.pop_back();
            if (!stack.empty()) {
                const Vertex parent = stack.back().first;
                low[parent] = std::min(low[parent], low[child]);
                if (low[child] > num[parent]) out.push_back(up[child]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tecc
