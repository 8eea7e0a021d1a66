#pragma once

#include <cstdint>
#include <vector>

#include "tecc/multigraph.hpp"

namespace tecc {

/// Cactus of one 2-edge-connected component. Nodes are representatives of
/// its 3-edge-connected components; each cycle lists its nodes once, the
/// closing edge back to the first node being implied.
struct Cactus {
    std::vector<Vertex> nodes;
    std::vector<std::vector<Vertex>> cycles;
    bool operator==(const Cactus&) const = default;
};

/**
 * Chain and cycle bookkeeping driven by the decomposition engine.
 *
 * tchain(x): nodes of a cut-edge chain whose generator is the parent edge of x.
 * bchain(x): nodes of a chain with a back-edge generator, held by the last
 *            vertex of a w-path.
 * Closed cycles hang off the supervertex that closed them and follow it
 * through absorptions; an ejection stamps its representative on them.
 */
class CactusState {
public:
    explicit CactusState(std::size_t n = 0);

    /// Remembers where the cactus of a 2ecc rooted at v starts.
    void on_enter(Vertex v);

    /// u was ejected: it becomes a cactus node and the start of every cycle
    /// attached to it.
    void on_eject(Vertex u);

    /// Tree generator: u joins the chain hanging below it at u1.
    void extend_tchain(Vertex u1, Vertex u);

    /// Back generator: returns u.bchain followed by u, leaving u.bchain empty.
    std::vector<Vertex> take_bchain_with(Vertex u);

    /// Closes `chain` into the cycle w + chain + w attached to w. No-op on
    /// an empty chain.
    void close_chain(Vertex w, std::vector<Vertex> chain);

    /// w absorbs x: x's cycles move to w and x.tchain closes at w.
    void on_absorb(Vertex w, Vertex x);

    /// Closes x.bchain at w (x may be w itself).
    void close_bchain(Vertex w, Vertex x);

    /// Hands x.bchain over to w without closing it.
    void move_bchain(Vertex w, Vertex x);

    void set_bchain(Vertex w, std::vector<Vertex> chain);

    bool has_bchain(Vertex x) const { return !bchain_[x].empty(); }
    bool has_tchain(Vertex x) const { return !tchain_[x].empty(); }

    /// Emits the cactus of the 2ecc whose top vertex is `top`. Every cycle
    /// start must already be a representative (rep_of[start] == start).
    Cactus finalize_cactus(Vertex top, const std::vector<Vertex>& rep_of);

    /// Throws std::logic_error if a chain was left open.
    void check_all_closed() const;

    std::uint64_t events() const { return events_; }

private:
    static constexpr std::uint32_t kNil = std::numeric_limits<std::uint32_t>::max();

    struct CycleRec {
        Vertex start;
        std::vector<Vertex> chain;
        std::uint32_t next;  // next cycle attached to the same vertex
    };

    std::vector<std::vector<Vertex>> tchain_;
    std::vector<std::vector<Vertex>> bchain_;
    std::vector<std::uint32_t> cycles_head_;
    std::vector<std::uint32_t> cycles_tail_;
    std::vector<CycleRec> cycles_;

    // Per-2ecc grouping: everything pushed after on_enter(v) and not yet
    // claimed by a deeper 2ecc belongs to v's 2ecc.
    std::vector<Vertex> node_stack_;
    std::vector<std::uint32_t> cycle_stack_;
    std::vector<std::size_t> node_mark_;
    std::vector<std::size_t> cycle_mark_;

    std::uint64_t events_ = 0;
};

}  // namespace tecc
