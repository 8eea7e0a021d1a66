#include "tecc/verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_map>

#include "tecc/oracle.hpp"

namespace tecc {
namespace {

std::string edge_str(Vertex a, Vertex b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

/// Incremental state of a graph being built path by path.
class Replay {
public:
    explicit Replay(const std::vector<Vertex>& vertices) {
        for (std::size_t i = 0; i < vertices.size(); ++i) local_.emplace(vertices[i], static_cast<std::uint32_t>(i));
        present_.assign(vertices.size(), 0);
        adj_.resize(vertices.size());
    }

    bool member(Vertex v) const { return local_.count(v) != 0; }
    std::uint32_t id(Vertex v) const { return local_.at(v); }
    bool present(Vertex v) const { return present_[id(v)] != 0; }
    std::size_t degree(Vertex v) const { return adj_[id(v)].size(); }
    bool branch(Vertex v) const { return degree(v) >= 3; }

    void add_path(const CertificatePath& p) {
        for (const Vertex v : p.vertices) present_[id(v)] = 1;
        for (std::size_t i = 0; i < p.edges.size(); ++i) {
            const auto e = static_cast<std::uint32_t>(edge_count_++);
            adj_[id(p.vertices[i])].push_back({id(p.vertices[i + 1]), e});
            adj_[id(p.vertices[i + 1])].push_back({id(p.vertices[i]), e});
        }
    }

    std::size_t present_count() const { return static_cast<std::size_t>(std::count(present_.begin(), present_.end(), 1)); }

    /// x and y are degree-2 vertices on the same maximal degree-2 chain.
    bool same_link(Vertex x, Vertex y) const {
        const std::uint32_t lx = id(x);
        const std::uint32_t ly = id(y);
        for (const Arc& start : adj_[lx]) {
            std::uint32_t cur = start.to;
            std::uint32_t via = start.edge;
            while (cur != ly && cur != lx && adj_[cur].size() == 2) {
                const Arc& out = adj_[cur][0].edge == via ? adj_[cur][1] : adj_[cur][0];
                via = out.edge;
                cur = out.to;
            }
            if (cur == ly) return true;
        }
        return false;
    }

    /// The graph is a subdivision of K2^3.
    bool is_theta(std::string& why) const {
        std::vector<std::uint32_t> branches;
        for (std::uint32_t v = 0; v < adj_.size(); ++v) {
            if (!present_[v]) continue;
            const std::size_t d = adj_[v].size();
            if (d == 3) {
                branches.push_back(v);
            } else if (d != 2) {
                why = "seed vertex of degree " + std::to_string(d);
                return false;
            }
        }
        if (branches.size() != 2) {
            why = "seed has " + std::to_string(branches.size()) + " branch vertices";
            return false;
        }
        std::size_t walked = 0;
        for (const Arc& start : adj_[branches[0]]) {
            std::uint32_t cur = start.to;
            std::uint32_t via = start.edge;
            ++walked;
            while (adj_[cur].size() == 2) {
                const Arc& out = adj_[cur][0].edge == via ? adj_[cur][1] : adj_[cur][0];
                via = out.edge;
                cur = out.to;
                ++walked;
            }
            if (cur != branches[1]) {
                why = "seed branch paths do not all join the two branch vertices";
                return false;
            }
        }
        if (walked != edge_count_) {
            why = "seed is not connected";
            return false;
        }
        return true;
    }

private:
    struct Arc {
        std::uint32_t to;
        std::uint32_t edge;
    };
    std::unordered_map<Vertex, std::uint32_t> local_;
    std::vector<char> present_;
    std::vector<std::vector<Arc>> adj_;
    std::size_t edge_count_ = 0;
};

/// For one cactus cycle: the G edges joining the parts the cycle separates,
/// or an explanation of why the cycle does not behave like a cut-edge chain.
struct CycleCut {
    std::vector<EdgeId> crossing;
    std::string error;
};

class CactusView {
public:
    CactusView(const Multigraph& g, std::span<const Vertex> block, const Cactus& cactus, const std::vector<Vertex>& phi)
        : g_(g), block_(block), cactus_(cactus), phi_(phi) {
        for (std::size_t i = 0; i < cactus.nodes.size(); ++i) {
            node_index_.emplace(cactus.nodes[i], static_cast<std::uint32_t>(i));
        }
        for (std::size_t c = 0; c < cactus.cycles.size(); ++c) {
            const auto& cyc = cactus.cycles[c];
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                edges_.push_back({cyc[i], cyc[(i + 1) % cyc.size()], c});
            }
        }
        for (const Vertex v : block) in_block_.insert(v);
    }

    std::string structure_error() const {
        std::set<Vertex> expected;
        for (const Vertex v : block_) expected.insert(phi_[v]);
        if (std::vector<Vertex>(expected.begin(), expected.end()) != cactus_.nodes) {
            return "cactus nodes differ from the component representatives of the block";
        }
        for (const auto& cyc : cactus_.cycles) {
            if (cyc.size() < 2) return "cactus cycle shorter than two nodes";
            std::set<Vertex> seen;
            for (const Vertex x : cyc) {
                if (node_index_.count(x) == 0) return "cactus cycle visits unknown node " + std::to_string(x);
                if (!seen.insert(x).second) return "cactus cycle repeats node " + std::to_string(x);
            }
        }
        if (cactus_.nodes.empty()) return "cactus has no nodes";
        if (labels(kNone).second != 1) return "cactus is not connected";
        if (edges_.size() != cactus_.nodes.size() - 1 + cactus_.cycles.size()) {
            return "cactus cycles share edges or close extra cycles";
        }
        return {};
    }

    CycleCut cut_of(std::size_t c) const {
        CycleCut out;
        const auto& cyc = cactus_.cycles[c];
        const auto [part_of_node, parts] = labels(c);
        if (parts != cyc.size()) {
            out.error = "cycle " + std::to_string(c) + " splits the cactus into " + std::to_string(parts) + " parts";
            return out;
        }
        std::set<std::uint32_t> hit;
        for (const Vertex x : cyc) hit.insert(part_of_node[node_index_.at(x)]);
        if (hit.size() != cyc.size()) {
            out.error = "cycle " + std::to_string(c) + " has two nodes in one part";
            return out;
        }
        std::vector<std::uint32_t> incidences(parts, 0);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> links;
        for (const Vertex v : block_) {
            for (const HalfEdge& he : g_.adjacency(v)) {
                if (g_.edge(he.edge).a != v || in_block_.count(he.to) == 0) continue;
                const std::uint32_t pa = part_of_node[node_index_.at(phi_[v])];
                const std::uint32_t pb = part_of_node[node_index_.at(phi_[he.to])];
                if (pa == pb) continue;
                out.crossing.push_back(he.edge);
                ++incidences[pa];
                ++incidences[pb];
                links.emplace_back(pa, pb);
            }
        }
        std::sort(out.crossing.begin(), out.crossing.end());
        const bool ring = out.crossing.size() == parts &&
                          std::all_of(incidences.begin(), incidences.end(), [](std::uint32_t d) { return d == 2; }) &&
                          ring_connected(links, parts);
        if (!ring) {
            out.error = "cycle " + std::to_string(c) + " is crossed by " + std::to_string(out.crossing.size()) +
                        " graph edges that do not form a ring over its parts";
        }
        return out;
    }

    std::size_t cycle_count() const { return cactus_.cycles.size(); }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    struct CEdge {
        Vertex a;
        Vertex b;
        std::size_t cycle;
    };

    /// Component labels of the cactus nodes with the edges of cycle `skip` removed.
    std::pair<std::vector<std::uint32_t>, std::size_t> labels(std::size_t skip) const {
        const std::size_t k = cactus_.nodes.size();
        std::vector<std::vector<std::uint32_t>> adj(k);
        for (const CEdge& e : edges_) {
            if (e.cycle == skip) continue;
            const std::uint32_t a = node_index_.at(e.a);
            const std::uint32_t b = node_index_.at(e.b);
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<std::uint32_t> label(k, UINT32_MAX);
        std::uint32_t next = 0;
        std::vector<std::uint32_t> stack;
        for (std::uint32_t s = 0; s < k; ++s) {
            if (label[s] != UINT32_MAX) continue;
            label[s] = next;
            stack.assign(1, s);
            while (!stack.empty()) {
                const std::uint32_t v = stack.back();
                stack.pop_back();
                for (const std::uint32_t w : adj[v]) {
                    if (label[w] == UINT32_MAX) {
                        label[w] = next;
                        stack.push_back(w);
                    }
                }
            }
            ++next;
        }
        return {label, next};
    }

    static bool ring_connected(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& links, std::size_t parts) {
        std::vector<std::uint32_t> root(parts);
        for (std::uint32_t i = 0; i < parts; ++i) root[i] = i;
        auto find = [&](std::uint32_t x) {
            while (root[x] != x) x = root[x] = root[root[x]];
            return x;
        };
        std::size_t groups = parts;
        for (const auto& [a, b] : links) {
            const std::uint32_t ra = find(a);
            const std::uint32_t rb = find(b);
            if (ra != rb) {
                root[ra] = rb;
                --groups;
            }
        }
        return groups == 1;
    }

    const Multigraph& g_;
    std::span<const Vertex> block_;
    const Cactus& cactus_;
    const std::vector<Vertex>& phi_;
    std::unordered_map<Vertex, std::uint32_t> node_index_;
    std::vector<CEdge> edges_;
    std::set<Vertex> in_block_;
};

/// Subgraph induced by `block`, with a map from local edge ids to g's.
Multigraph induced(const Multigraph& g, std::span<const Vertex> block, std::vector<EdgeId>& original) {
    std::unordered_map<Vertex, Vertex> local;
    for (std::size_t i = 0; i < block.size(); ++i) local.emplace(block[i], static_cast<Vertex>(i));
    Multigraph h(block.size());
    original.clear();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        const auto ia = local.find(ed.a);
        const auto ib = local.find(ed.b);
        if (ia == local.end() || ib == local.end()) continue;
        h.add_edge(ia->second, ib->second);
        original.push_back(e);
    }
    return h;
}

}  // namespace

void Verdict::absorb(const Verdict& other, std::string_view context) {
    for (const std::string& f : other.failures) failures.push_back(std::string(context) + ": " + f);
}

ComponentGraph component_graph(const Multigraph& g, std::span<const Vertex> members) {
    ComponentGraph cg;
    cg.vertices.assign(members.begin(), members.end());
    std::sort(cg.vertices.begin(), cg.vertices.end());
    std::vector<char> inside(g.vertex_count(), 0);
    for (const Vertex v : cg.vertices) inside[v] = 1;
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<Vertex> stack;
    std::vector<Vertex> attach;
    for (const Vertex v : cg.vertices) {
        for (const HalfEdge& he : g.adjacency(v)) {
            if (inside[he.to]) {
                if (g.edge(he.edge).a == v) cg.real_edges.push_back(he.edge);
                continue;
            }
            if (seen[he.to]) continue;
            seen[he.to] = 1;
            stack.assign(1, he.to);
            attach.clear();
            while (!stack.empty()) {
                const Vertex y = stack.back();
                stack.pop_back();
                for (const HalfEdge& out : g.adjacency(y)) {
                    if (inside[out.to]) {
                        attach.push_back(out.to);
                    } else if (!seen[out.to]) {
                        seen[out.to] = 1;
                        stack.push_back(out.to);
                    }
                }
            }
            if (attach.size() == 2 && attach[0] != attach[1]) {
                const auto [a, b] = ordered(attach[0], attach[1]);
                cg.virtual_edges.push_back({a, b});
            } else if (attach.size() >= 3) {
                cg.anomalies.push_back("outside part at vertex " + std::to_string(he.to) + " attached by " +
                                       std::to_string(attach.size()) + " edges");
            }
        }
    }
    std::sort(cg.real_edges.begin(), cg.real_edges.end());
    std::sort(cg.virtual_edges.begin(), cg.virtual_edges.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
    return cg;
}

Verdict verify_mader_sequence(const Multigraph& g, const ComponentGraph& cg, const Certificate& cert) {
    Verdict v;
    if (cert.paths.empty()) {
        v.fail("empty certificate");
        return v;
    }
    std::size_t seed = 0;
    while (seed < cert.paths.size() && cert.paths[seed].tag == PathTag::K23Seed) ++seed;
    if (seed == 0) {
        v.fail("seed: no K23_SEED block");
        return v;
    }
    for (std::size_t i = seed; i < cert.paths.size(); ++i) {
        if (cert.paths[i].tag != PathTag::MaderPath) {
            v.fail("path " + std::to_string(i) + ": seed path after the seed block");
            return v;
        }
    }

    std::unordered_map<EdgeId, char> real_used;
    for (const EdgeId e : cg.real_edges) real_used.emplace(e, 0);
    std::map<std::pair<Vertex, Vertex>, int> virtual_left;
    for (const Edge& e : cg.virtual_edges) ++virtual_left[{e.a, e.b}];

    Replay replay(cg.vertices);
    for (std::size_t i = 0; i < cert.paths.size(); ++i) {
        const CertificatePath& p = cert.paths[i];
        const std::string where = "path " + std::to_string(i);
        if (p.edges.empty() || p.vertices.size() != p.edges.size() + 1) {
            v.fail(where + ": malformed path");
            return v;
        }
        for (const Vertex x : p.vertices) {
            if (!replay.member(x)) {
                v.fail(where + ": vertex " + std::to_string(x) + " is outside the component");
                return v;
            }
        }
        for (std::size_t j = 0; j < p.edges.size(); ++j) {
            const Vertex a = p.vertices[j];
            const Vertex b = p.vertices[j + 1];
            const CertificateEdge& ce = p.edges[j];
            if (ce.is_virtual) {
                auto it = virtual_left.find(ordered(a, b));
                if (it == virtual_left.end() || it->second == 0) {
                    v.fail(where + ": unexpected virtual edge " + edge_str(a, b));
                    return v;
                }
                --it->second;
                continue;
            }
            auto it = real_used.find(ce.id);
            if (it == real_used.end()) {
                v.fail(where + ": edge " + std::to_string(ce.id) + " is not inside the component");
                return v;
            }
            if (ordered(g.edge(ce.id).a, g.edge(ce.id).b) != ordered(a, b)) {
                v.fail(where + ": edge " + std::to_string(ce.id) + " does not join " + edge_str(a, b));
                return v;
            }
            if (it->second) {
                v.fail(where + ": edge " + std::to_string(ce.id) + " used twice");
                return v;
            }
            it->second = 1;
        }

        if (i < seed) {
            replay.add_path(p);
            if (i + 1 == seed) {
                std::string why;
                if (!replay.is_theta(why)) {
                    v.fail("seed: " + why);
                    return v;
                }
            }
            continue;
        }

        const Vertex x = p.vertices.front();
        const Vertex y = p.vertices.back();
        if (!replay.present(x) || !replay.present(y)) {
            v.fail(where + ": endpoint not on the current graph");
            return v;
        }
        std::set<Vertex> inner;
        for (std::size_t j = 1; j + 1 < p.vertices.size(); ++j) {
            const Vertex z = p.vertices[j];
            if (replay.present(z) || !inner.insert(z).second) {
                v.fail(where + ": internal vertex " + std::to_string(z) + " is not new");
                return v;
            }
        }
        const bool bx = replay.branch(x);
        const bool by = replay.branch(y);
        if (x == y) {
            if (!bx) {
                v.fail(where + ": closed path at non-branch vertex " + std::to_string(x));
                return v;
            }
        } else if (!bx && !by && replay.same_link(x, y)) {
            v.fail(where + ": endpoints " + edge_str(x, y) + " lie on the same link");
            return v;
        }
        replay.add_path(p);
    }

    if (replay.present_count() != cg.vertices.size()) v.fail("coverage: some component vertices are never used");
    for (const auto& [e, used] : real_used) {
        if (!used) {
            v.fail("coverage: edge " + std::to_string(e) + " missing");
            break;
        }
    }
    for (const auto& [key, left] : virtual_left) {
        if (left != 0) {
            v.fail("coverage: virtual edge " + edge_str(key.first, key.second) + " missing");
            break;
        }
    }
    return v;
}

std::vector<std::pair<EdgeId, EdgeId>> cactus_cut_pairs(const Multigraph& g, std::span<const Vertex> block,
                                                        const Cactus& cactus, const std::vector<Vertex>& phi) {
    CactusView view(g, block, cactus, phi);
    std::set<std::pair<EdgeId, EdgeId>> pairs;
    for (std::size_t c = 0; c < view.cycle_count(); ++c) {
        const CycleCut cut = view.cut_of(c);
        for (std::size_t i = 0; i < cut.crossing.size(); ++i) {
            for (std::size_t j = i + 1; j < cut.crossing.size(); ++j) pairs.emplace(cut.crossing[i], cut.crossing[j]);
        }
    }
    return {pairs.begin(), pairs.end()};
}

Verdict verify_cactus(const Multigraph& g, std::span<const Vertex> block, const Cactus& cactus,
                      const std::vector<Vertex>& phi, bool brute_force) {
    Verdict v;
    CactusView view(g, block, cactus, phi);
    if (std::string err = view.structure_error(); !err.empty()) {
        v.fail(err);
        return v;
    }
    std::set<std::pair<EdgeId, EdgeId>> implied;
    for (std::size_t c = 0; c < view.cycle_count(); ++c) {
        const CycleCut cut = view.cut_of(c);
        if (!cut.error.empty()) {
            v.fail(cut.error);
            return v;
        }
        for (std::size_t i = 0; i < cut.crossing.size(); ++i) {
            for (std::size_t j = i + 1; j < cut.crossing.size(); ++j) {
                if (!implied.emplace(cut.crossing[i], cut.crossing[j]).second) {
                    v.fail("cut-pair " + edge_str(cut.crossing[i], cut.crossing[j]) + " implied by two cycles");
                    return v;
                }
            }
        }
    }
    if (!brute_force) return v;
    std::vector<EdgeId> original;
    const Multigraph h = induced(g, block, original);
    std::set<std::pair<EdgeId, EdgeId>> truth;
    for (const auto& [a, b] : cut_pairs_bf(h)) truth.insert(ordered(original[a], original[b]));
    for (const auto& p : truth) {
        if (implied.count(p) == 0) {
            v.fail("missing cut-pair " + edge_str(p.first, p.second));
            return v;
        }
    }
    for (const auto& p : implied) {
        if (truth.count(p) == 0) {
            v.fail("spurious cut-pair " + edge_str(p.first, p.second));
            return v;
        }
    }
    return v;
}

Verdict verify_report(const Multigraph& g, const ThreeEccReport& report, const VerifyOptions& options) {
    Verdict v;
    const std::size_t n = g.vertex_count();
    const bool use_oracle = n <= options.oracle_max_n;

    // partition
    std::vector<Vertex> phi(n, kNoVertex);
    bool partition_ok = true;
    for (const Component& c : report.components) {
        if (c.members.empty() || !std::is_sorted(c.members.begin(), c.members.end()) ||
            !std::binary_search(c.members.begin(), c.members.end(), c.representative)) {
            v.fail("partition: malformed component");
            partition_ok = false;
            continue;
        }
        for (const Vertex x : c.members) {
            if (x >= n || phi[x] != kNoVertex) {
                v.fail("partition: vertex " + std::to_string(x) + " listed twice or out of range");
                partition_ok = false;
                continue;
            }
            phi[x] = c.representative;
        }
    }
    for (Vertex x = 0; x < n; ++x) {
        if (phi[x] == kNoVertex) {
            v.fail("partition: vertex " + std::to_string(x) + " not covered");
            partition_ok = false;
        }
    }
    if (!partition_ok) return v;
    if (use_oracle) {
        std::vector<std::vector<Vertex>> got;
        for (const Component& c : report.components) got.push_back(c.members);
        std::sort(got.begin(), got.end());
        if (got != three_ecc_bf(g)) v.fail("partition: differs from the brute-force oracle");
    }

    // bridges
    std::vector<EdgeId> got_bridges;
    for (const BridgeRecord& b : report.bridges) {
        if (b.id >= g.edge_count() || ordered(b.upper, b.lower) != ordered(g.edge(b.id).a, g.edge(b.id).b)) {
            v.fail("bridges: record " + std::to_string(b.id) + " does not match the graph");
            return v;
        }
        got_bridges.push_back(b.id);
    }
    std::sort(got_bridges.begin(), got_bridges.end());
    const std::vector<EdgeId> want_bridges = use_oracle ? bridges_bf(g) : bridges_lowpoint(g);
    if (got_bridges != want_bridges) v.fail("bridges: differ from the oracle");

    // certificates
    for (const Component& c : report.components) {
        const std::string where = "component " + std::to_string(c.representative);
        if (c.members.size() == 1) {
            if (c.certificate) v.fail(where + ": singleton carries a certificate");
            continue;
        }
        if (!c.certificate) {
            v.fail(where + ": certificate missing");
            continue;
        }
        const ComponentGraph cg = component_graph(g, c.members);
        for (const std::string& a : cg.anomalies) v.fail(where + ": " + a);
        if (c.virtual_edge) {
            const auto [a, b] = ordered(c.virtual_edge->first, c.virtual_edge->second);
            const bool known = std::any_of(cg.virtual_edges.begin(), cg.virtual_edges.end(),
                                           [&](const Edge& e) { return e.a == a && e.b == b; });
            if (!known) v.fail(where + ": virtual edge " + edge_str(a, b) + " is not implied by the graph");
        }
        v.absorb(verify_mader_sequence(g, cg, *c.certificate), where);
    }

    // cacti, one per 2-edge-connected component
    std::vector<char> removed(g.edge_count(), 0);
    for (const EdgeId e : want_bridges) removed[e] = 1;
    std::vector<std::uint32_t> block_of(n, UINT32_MAX);
    std::vector<std::vector<Vertex>> blocks;
    for (Vertex s = 0; s < n; ++s) {
        if (block_of[s] != UINT32_MAX) continue;
        const auto id = static_cast<std::uint32_t>(blocks.size());
        blocks.emplace_back();
        std::vector<Vertex> stack{s};
        block_of[s] = id;
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            blocks[id].push_back(x);
            for (const HalfEdge& he : g.adjacency(x)) {
                if (removed[he.edge] || block_of[he.to] != UINT32_MAX) continue;
                block_of[he.to] = id;
                stack.push_back(he.to);
            }
        }
        std::sort(blocks[id].begin(), blocks[id].end());
    }
    if (report.cacti.size() != blocks.size()) {
        v.fail("cacti: " + std::to_string(report.cacti.size()) + " cacti for " + std::to_string(blocks.size()) +
               " 2-edge-connected components");
        return v;
    }
    std::vector<char> claimed(blocks.size(), 0);
    for (const Cactus& cactus : report.cacti) {
        if (cactus.nodes.empty() || cactus.nodes.front() >= n) {
            v.fail("cacti: empty cactus");
            continue;
        }
        const std::uint32_t id = block_of[cactus.nodes.front()];
        if (claimed[id]) {
            v.fail("cacti: two cacti for one 2-edge-connected component");
            continue;
        }
        claimed[id] = 1;
        v.absorb(verify_cactus(g, blocks[id], cactus, phi, use_oracle),
                 "cactus " + std::to_string(blocks[id].front()));
    }

    if (report.is_three_edge_connected != (report.components.size() == 1)) {
        v.fail("flag: is_three_edge_connected disagrees with the component count");
    }
    return v;
}

}  // namespace tecc
