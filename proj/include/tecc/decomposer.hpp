#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tecc/cactus_builder.hpp"
#include "tecc/mader_cs.hpp"
#include "tecc/multigraph.hpp"

namespace tecc {

/// One 3-edge-connected component.
struct Component {
    std::vector<Vertex> members;  // sorted
    Vertex representative = kNoVertex;
    /// The virtual edge (w, w'') added when the component was cut off by a
    /// cut-pair whose inner endpoints differ.
    std::optional<std::pair<Vertex, Vertex>> virtual_edge;
    /// Mader construction sequence; absent for singletons.
    std::optional<Certificate> certificate;
    bool operator==(const Component&) const = default;
};

struct BridgeRecord {
    Vertex upper = kNoVertex;  // endpoint closer to the DFS root
    Vertex lower = kNoVertex;
    EdgeId id = kNoEdge;
    bool operator==(const BridgeRecord&) const = default;
};

struct EngineCounters {
    std::uint64_t classifications = 0;  // edge classifications and incoming back-edge visits
    std::uint64_t absorptions = 0;      // supervertices absorbed
    std::uint64_t path_steps = 0;       // w-path positions scanned by absorb_path
    std::uint64_t cs_splices = 0;
    std::uint64_t cactus_events = 0;
    std::uint64_t invariant_checks = 0;

    std::uint64_t edge_events() const {
        return classifications + absorptions + path_steps + cs_splices + cactus_events;
    }
};

struct ThreeEccReport {
    std::vector<Component> components;  // ordered by smallest member
    std::vector<BridgeRecord> bridges;  // ordered by edge id
    std::vector<Cactus> cacti;          // one per 2-edge-connected component, ordered by smallest node
    bool is_three_edge_connected = false;
    EngineCounters counters;
};

/// State handed to a debug observer each time the DFS backtracks from
/// `child` to `parent`, before the ejection test is acted upon.
struct BacktrackSnapshot {
    Vertex child = kNoVertex;
    Vertex parent = kNoVertex;
    /// Outcome of the anchor test that stands in for deg(child) <= 2.
    bool anchor_test = false;
    /// owner[v]: live supervertex holding v (unvisited vertices own
    /// themselves), or kNoVertex once v's component has been ejected.
    std::span<const Vertex> owner;
    /// Components ejected so far, in ejection order.
    std::span<const Component> ejected;
};

class DebugObserver {
public:
    virtual ~DebugObserver() = default;
    virtual void on_backtrack(const BacktrackSnapshot& snapshot) = 0;
};

struct EngineOptions {
    /// Checks the anchor, path and lowpt invariants as the pass runs and
    /// throws std::logic_error on the first violation.
    bool check_invariants = false;
    DebugObserver* observer = nullptr;
};

/// Runs the engine on a connected graph from `root`. Throws
/// std::invalid_argument if root is out of range or g is disconnected.
ThreeEccReport decompose(const Multigraph& g, Vertex root, const EngineOptions& options = {});

/// Runs the engine once per connected component, each rooted at its
/// smallest vertex, and merges the results.
ThreeEccReport decompose_graph(const Multigraph& g, const EngineOptions& options = {});

}  // namespace tecc
