#include "tecc/decomposer.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tecc/dfs_ear.hpp"

namespace tecc {
namespace {

enum class State : std::uint8_t { Unseen, Live, Absorbed, Ejected };

struct Frame {
    Vertex w;
    std::size_t adj_pos;
    Vertex child;           // child whose subtree just finished, or kNoVertex
    std::size_t inc_start;  // first slot of Inc_w in the shared buffer
};

class Engine {
public:
    Engine(const Multigraph& g, const EngineOptions& options)
        : g_(g),
          opt_(options),
          ann_(g),
          cactus_(g.vertex_count()),
          phat_(g.vertex_count(), kNoEdge),
          anchor_(g.vertex_count(), kNoEdge),
          cs_(g.vertex_count()),
          next_(g.vertex_count(), kNoVertex),
          member_next_(g.vertex_count(), kNoVertex),
          member_tail_(g.vertex_count(), kNoVertex),
          rep_of_(g.vertex_count(), kNoVertex),
          state_(g.vertex_count(), State::Unseen) {
        pool_.reserve(g.edge_count() + g.vertex_count());
        ann_.edges.reserve(g.edge_count() + 2 * g.vertex_count());
        if (opt_.check_invariants) {
            order_.reserve(g.vertex_count());
            path_stamp_.assign(g.vertex_count(), 0);
        }
    }

    bool visited(Vertex v) const { return ann_.visited(v); }

    void run(Vertex root) {
        enter(root, kNoVertex, kNoEdge);
        while (!stack_.empty()) {
            Frame& f = stack_.back();
            const Vertex w = f.w;
            if (f.child != kNoVertex) {
                const Vertex u = f.child;
                f.child = kNoVertex;
                child_return(w, u);
                continue;
            }
            const auto adj = g_.adjacency(w);
            if (f.adj_pos < adj.size()) {
                const HalfEdge he = adj[f.adj_pos++];
                if (he.edge == ann_.parent_edge[w]) continue;
                const EdgeRecord& r = ann_.edges[he.edge];
                if (r.kind == EdgeKind::Unvisited) {
                    ++counters_.classifications;
                    if (!visited(he.to)) {
                        ann_.classify_tree(he.edge, w, he.to);
                        f.child = he.to;
                        enter(he.to, w, he.edge);  // invalidates f
                    } else {
                        ann_.classify_back(he.edge, he.to, w);
                        ann_.lowpt[w] = std::min(ann_.lowpt[w], ann_.dfs_num[he.to]);
                        outgoing_back(w, he.edge);
                    }
                } else if (r.kind == EdgeKind::Back && r.upper == w) {
                    ++counters_.classifications;
                    inc_.push_back(r.lower);
                }
                continue;
            }
            const std::size_t inc_start = f.inc_start;
            if (next_[w] != kNoVertex && inc_.size() > inc_start) absorb_path(w, inc_start);
            inc_.resize(inc_start);
            ann_.subtree_end[w] = next_dfs_ - 1;
            stack_.pop_back();
        }
        finalize_root(root);
    }

    ThreeEccReport finish() {
        cactus_.check_all_closed();
        ThreeEccReport report;
        report.components = std::move(ejected_);
        std::sort(report.components.begin(), report.components.end(),
                  [](const Component& a, const Component& b) { return a.members.front() < b.members.front(); });
        report.bridges = std::move(bridges_);
        std::sort(report.bridges.begin(), report.bridges.end(),
                  [](const BridgeRecord& a, const BridgeRecord& b) { return a.id < b.id; });
        report.cacti = std::move(cacti_);
        std::sort(report.cacti.begin(), report.cacti.end(),
                  [](const Cactus& a, const Cactus& b) { return a.nodes.front() < b.nodes.front(); });
        report.is_three_edge_connected = report.components.size() == 1;
        counters_.cs_splices = pool_.splices();
        counters_.cactus_events = cactus_.events();
        report.counters = counters_;
        return report;
    }

private:
    void enter(Vertex v, Vertex parent, EdgeId parent_edge) {
        ann_.dfs_num[v] = next_dfs_++;
        ann_.subtree_end[v] = DfsAnnotations::kOpen;
        ann_.lowpt[v] = ann_.dfs_num[v];
        ann_.parent[v] = parent;
        ann_.parent_edge[v] = parent_edge;
        ann_.ear[v] = kNoEdge;
        member_tail_[v] = v;
        state_[v] = State::Live;
        cactus_.on_enter(v);
        if (opt_.check_invariants) order_.push_back(v);
        stack_.push_back({v, 0, kNoVertex, inc_.size()});
    }

    bool lex_less(EdgeId f, EdgeId g) const { return ann_.lex_less(f, g); }

    void merge_members(Vertex w, Vertex x) {
        member_next_[member_tail_[w]] = x;
        member_tail_[w] = member_tail_[x];
        state_[x] = State::Absorbed;
        ++counters_.absorptions;
    }

    /// Absorbs the path first, next(first), ... into w together with the ear
    /// hat. Returns the last absorbed vertex, or w if the path is empty.
    Vertex absorb_ear(Vertex w, EdgeId hat, Vertex first) {
        ConstructionSequence seq;
        Vertex last = w;
        for (Vertex x = first; x != kNoVertex; x = next_[x]) {
            merge_members(w, x);
            seq = pool_.concat(cs_[x], seq);
            cactus_.on_absorb(w, x);
            last = x;
        }
        if (hat != kNoEdge) {
            ann_.edges[hat].ear_top = w;
            seq = pool_.concat(pool_.single(hat), seq);
            if (lex_less(hat, anchor_[w])) {
                cs_[w] = pool_.concat(seq, cs_[w]);
                anchor_[w] = hat;
            } else {
                cs_[w] = pool_.concat(cs_[w], seq);
            }
        } else if (!seq.empty()) {
            throw std::logic_error("path absorbed without an ear");
        }
        check_head(w);
        return last;
    }

    void outgoing_back(Vertex w, EdgeId e) {
        if (lex_less(e, phat_[w])) {
            const Vertex last = absorb_ear(w, phat_[w], next_[w]);
            cactus_.close_bchain(w, last);
            next_[w] = kNoVertex;
            phat_[w] = e;
            ann_.ear[w] = e;
        } else {
            absorb_ear(w, e, kNoVertex);
        }
    }

    void child_return(Vertex w, Vertex u) {
        ann_.lowpt[w] = std::min(ann_.lowpt[w], ann_.lowpt[u]);
        if (opt_.check_invariants) check_backtrack(u);

        const bool test = anchor_[u] == kNoEdge || ann_.edges[anchor_[u]].upper == u;
        if (opt_.observer != nullptr) notify(w, u, test);

        Vertex upath = u;
        std::vector<Vertex> bchain_t;
        if (test) gen_cs(w, u, upath, bchain_t);

        if (lex_less(phat_[w], phat_[u])) {
            const Vertex last = absorb_ear(w, phat_[u], upath);
            if (!bchain_t.empty()) {
                cactus_.close_chain(w, std::move(bchain_t));
            } else if (last != w) {
                cactus_.close_bchain(w, last);
            }
        } else {
            const Vertex last = absorb_ear(w, phat_[w], next_[w]);
            cactus_.close_bchain(w, last);
            cactus_.set_bchain(w, std::move(bchain_t));
            next_[w] = upath;
            phat_[w] = phat_[u];
            ann_.ear[w] = phat_[w];
        }
    }

    void absorb_path(Vertex w, std::size_t inc_start) {
        section_.assign(1, w);
        Vertex hat = w;
        for (std::size_t i = inc_start; i < inc_.size(); ++i) {
            const Vertex x = inc_[i];
            while (next_[hat] != kNoVertex && ann_.is_ancestor(next_[hat], x)) {
                hat = next_[hat];
                section_.push_back(hat);
                ++counters_.path_steps;
            }
            ++counters_.path_steps;
        }
        const std::size_t h = section_.size() - 1;
        if (h == 0) return;

        std::size_t l = h;
        for (std::size_t j = 0; j <= h; ++j) {
            if (lex_less(anchor_[section_[j]], anchor_[section_[l]])) l = j;
        }
        const Vertex wh = section_[h];
        ConstructionSequence seq;
        CsNodeId mark = kNoNode;
        if (l != h) {
            mark = cs_[wh].head;
            seq = pool_.concat(cs_[section_[l]], cs_[wh]);
        } else {
            seq = cs_[wh];
        }
        for (std::size_t j = h; j-- > 0;) {
            if (j != l) seq = pool_.concat(seq, cs_[section_[j]]);
        }
        seq.rotation_mark = mark;

        const bool wh_last = next_[wh] == kNoVertex;
        for (std::size_t j = 1; j <= h; ++j) {
            const Vertex x = section_[j];
            if (opt_.check_invariants && x != wh && cactus_.has_bchain(x)) {
                throw std::logic_error("bchain held by an inner w-path vertex");
            }
            merge_members(w, x);
            cactus_.on_absorb(w, x);
        }
        cs_[w] = seq;
        anchor_[w] = anchor_[section_[l]];
        if (wh_last) {
            cactus_.move_bchain(w, wh);
        } else if (opt_.check_invariants && cactus_.has_bchain(wh)) {
            throw std::logic_error("bchain held by an inner w-path vertex");
        }
        next_[w] = next_[wh];
        check_head(w);
    }

    Component collect(Vertex u) {
        Component comp;
        comp.representative = u;
        for (Vertex x = u; x != kNoVertex; x = member_next_[x]) {
            comp.members.push_back(x);
            rep_of_[x] = u;
        }
        std::sort(comp.members.begin(), comp.members.end());
        state_[u] = State::Ejected;
        return comp;
    }

    CertificatePath to_path(const VertexPath& vp) const {
        CertificatePath p;
        p.vertices = vp.vertices;
        p.edges.reserve(vp.edges.size());
        for (const EdgeId e : vp.edges) p.edges.push_back({e, ann_.edges[e].is_virtual});
        return p;
    }

    Certificate materialize(std::vector<CertificatePath> prefix, ConstructionSequence seq, std::size_t seed) const {
        Certificate cert;
        cert.paths = std::move(prefix);
        for (const EdgeId f : pool_.to_vector(seq)) cert.paths.push_back(to_path(ann_.materialize_ear(f)));
        for (std::size_t i = 0; i < cert.paths.size(); ++i) {
            cert.paths[i].tag = i < seed ? PathTag::K23Seed : PathTag::MaderPath;
        }
        return cert;
    }

    /// Certificate of a component cut off by a cut-pair; u2 is the inner
    /// endpoint of the second cut edge.
    void certify_cut(Component& comp, Vertex u, Vertex u2) {
        const bool multi = comp.members.size() > 1;
        if (u == u2) {
            if (multi) comp.certificate = materialize({}, cs_[u], 2);
            return;
        }
        comp.virtual_edge = std::make_pair(u, u2);
        if (!multi) return;
        ConstructionSequence seq = cs_[u];
        if (anchor_[u] != kNoEdge && ann_.edges[anchor_[u]].ear_top == u) seq = pool_.rotate_at_mark(seq);
        std::vector<CertificatePath> prefix;
        prefix.push_back(to_path(ann_.tree_path(u, u2)));
        const EdgeId link = ann_.add_virtual_link(u2, u);
        prefix.push_back(to_path(VertexPath{{u2, u}, {link}}));
        comp.certificate = materialize(std::move(prefix), seq, 3);
    }

    void gen_cs(Vertex w, Vertex u, Vertex& upath, std::vector<Vertex>& bchain_t) {
        Component comp = collect(u);
        const EdgeId f = phat_[u];
        if (f == kNoEdge || ann_.edges[f].upper == u) {
            cactus_.close_bchain(u, u);
            ConstructionSequence seq = cs_[u];
            if (f != kNoEdge) {
                ann_.edges[f].ear_top = u;
                seq = pool_.concat(pool_.single(f), seq);
            }
            if (comp.members.size() > 1) comp.certificate = materialize({}, seq, 2);
            const EdgeId pe = ann_.parent_edge[u];
            if (pe >= ann_.real_edge_count()) throw std::logic_error("bridge detected on a virtual edge");
            bridges_.push_back({w, u, pe});
            phat_[u] = kNoEdge;
            ann_.ear[u] = kNoEdge;
            upath = kNoVertex;
            cactus_.on_eject(u);
            cacti_.push_back(cactus_.finalize_cactus(u, rep_of_));
        } else if (next_[u] == kNoVertex) {
            const Vertex tail = ann_.edges[f].lower;
            const Vertex head = ann_.edges[f].upper;
            certify_cut(comp, u, tail);
            bchain_t = cactus_.take_bchain_with(u);
            if (head == w) {
                cactus_.close_chain(w, std::move(bchain_t));
                bchain_t.clear();
                phat_[u] = kNoEdge;
            } else {
                phat_[u] = ann_.add_virtual_back(head, w);
            }
            upath = kNoVertex;
            cactus_.on_eject(u);
        } else {
            const Vertex u1 = next_[u];
            certify_cut(comp, u, ann_.parent[u1]);
            if (cactus_.has_bchain(u)) throw std::logic_error("bchain left on a tree-generator ejection");
            cactus_.extend_tchain(u1, u);
            const EdgeId ve = ann_.add_virtual_tree(w, u1);
            ann_.parent[u1] = w;
            ann_.parent_edge[u1] = ve;
            ann_.ear[u1] = ann_.ear[u];
            upath = u1;
            cactus_.on_eject(u);
        }
        ejected_.push_back(std::move(comp));
    }

    void finalize_root(Vertex r) {
        cactus_.close_bchain(r, r);
        Component comp = collect(r);
        ConstructionSequence seq = cs_[r];
        if (phat_[r] != kNoEdge) {
            ann_.edges[phat_[r]].ear_top = r;
            seq = pool_.concat(pool_.single(phat_[r]), seq);
        }
        if (comp.members.size() > 1) comp.certificate = materialize({}, seq, 2);
        cactus_.on_eject(r);
        cacti_.push_back(cactus_.finalize_cactus(r, rep_of_));
        ejected_.push_back(std::move(comp));
    }

    // debug support

    void check_head(Vertex w) {
        if (!opt_.check_invariants) return;
        ++counters_.invariant_checks;
        const ConstructionSequence seq = cs_[w];
        if (pool_.front(seq) != anchor_[w]) {
            throw std::logic_error("anchor of " + std::to_string(w) + " is not the head of its sequence");
        }
        if (!pool_.head_is_min(seq, [this](EdgeId a, EdgeId b) { return lex_less(a, b); })) {
            throw std::logic_error("head of the sequence of " + std::to_string(w) + " is not its minimum");
        }
    }

    void check_backtrack(Vertex u) {
        ++counters_.invariant_checks;
        ++stamp_;
        for (Vertex x = u; x != kNoVertex; x = next_[x]) {
            if (state_[x] != State::Live) throw std::logic_error("u-path holds a dead supervertex");
            path_stamp_[x] = stamp_;
            const Vertex y = next_[x];
            if (y != kNoVertex && (x == y || !ann_.is_ancestor(x, y))) {
                throw std::logic_error("u-path of " + std::to_string(u) + " does not descend");
            }
        }
        const std::uint32_t lo = ann_.dfs_num[u];
        const std::uint32_t hi = ann_.subtree_end[u];
        for (std::uint32_t d = lo; d <= hi; ++d) {
            const Vertex v = order_[d - 1];
            if (state_[v] == State::Live && path_stamp_[v] != stamp_) {
                throw std::logic_error("live supervertex " + std::to_string(v) + " is off the u-path of " +
                                       std::to_string(u));
            }
        }
        const EdgeId hat = phat_[u];
        const std::uint32_t expect = hat == kNoEdge ? ann_.dfs_num[u] : ann_.dfs_num[ann_.edges[hat].upper];
        if (expect != ann_.lowpt[u]) throw std::logic_error("ear head disagrees with lowpt at " + std::to_string(u));
        if (hat != kNoEdge && anchor_[u] != kNoEdge && !lex_less(hat, anchor_[u])) {
            throw std::logic_error("anchor of " + std::to_string(u) + " precedes its lowpt ear");
        }
    }

    void notify(Vertex w, Vertex u, bool test) {
        owner_.assign(g_.vertex_count(), kNoVertex);
        for (Vertex v = 0; v < g_.vertex_count(); ++v) {
            if (state_[v] == State::Unseen) {
                owner_[v] = v;
            } else if (state_[v] == State::Live) {
                for (Vertex x = v; x != kNoVertex; x = member_next_[x]) owner_[x] = v;
            }
        }
        BacktrackSnapshot snap;
        snap.child = u;
        snap.parent = w;
        snap.anchor_test = test;
        snap.owner = owner_;
        snap.ejected = ejected_;
        opt_.observer->on_backtrack(snap);
    }

    const Multigraph& g_;
    EngineOptions opt_;
    DfsAnnotations ann_;
    CsPool pool_;
    CactusState cactus_;

    std::vector<EdgeId> phat_;
    std::vector<EdgeId> anchor_;
    std::vector<ConstructionSequence> cs_;
    std::vector<Vertex> next_;  // w-path successor
    std::vector<Vertex> member_next_;
    std::vector<Vertex> member_tail_;
    std::vector<Vertex> rep_of_;
    std::vector<State> state_;

    std::vector<Frame> stack_;
    std::vector<Vertex> inc_;      // tails of incoming back-edges, one run per active frame
    std::vector<Vertex> section_;  // scratch for absorb_path
    std::uint32_t next_dfs_ = 1;

    std::vector<Component> ejected_;
    std::vector<BridgeRecord> bridges_;
    std::vector<Cactus> cacti_;
    EngineCounters counters_;

    std::vector<Vertex> order_;  // vertices by dfs number, debug only
    std::vector<std::uint64_t> path_stamp_;
    std::uint64_t stamp_ = 0;
    std::vector<Vertex> owner_;
};

}  // namespace

ThreeEccReport decompose(const Multigraph& g, Vertex root, const EngineOptions& options) {
    if (root >= g.vertex_count()) throw std::invalid_argument("root out of range");
    Engine engine(g, options);
    engine.run(root);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!engine.visited(v)) throw std::invalid_argument("graph is not connected");
    }
    return engine.finish();
}

ThreeEccReport decompose_graph(const Multigraph& g, const EngineOptions& options) {
    Engine engine(g, options);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!engine.visited(v)) engine.run(v);
    }
    return engine.finish();
}

}  // namespace tecc
