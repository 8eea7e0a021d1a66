#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tecc/cactus_builder.hpp"
#include "tecc/decomposer.hpp"
#include "tecc/mader_cs.hpp"
#include "tecc/multigraph.hpp"

namespace tecc {

struct Verdict {
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void fail(std::string reason) { failures.push_back(std::move(reason)); }
    /// Appends other's failures, each prefixed with `context`.
    void absorb(const Verdict& other, std::string_view context);
};

/// A 3-edge-connected component as its certificate must cover it: the
/// induced edges plus one virtual edge per outside part that hangs on two
/// distinct member vertices through a cut-pair.
struct ComponentGraph {
    std::vector<Vertex> vertices;      // sorted
    std::vector<EdgeId> real_edges;    // sorted
    std::vector<Edge> virtual_edges;   // a < b
    std::vector<std::string> anomalies;  // outside parts attached by three or more edges
};

/// Computed from g and the member set alone.
ComponentGraph component_graph(const Multigraph& g, std::span<const Vertex> members);

/// Replays the certificate: the K23_SEED block must form a subdivision of
/// K2^3, every later path must be a Mader path of the current graph, and the
/// paths must use every vertex and edge of `cg` exactly once.
Verdict verify_mader_sequence(const Multigraph& g, const ComponentGraph& cg, const Certificate& cert);

/// Checks the cactus of the 2-edge-connected component with vertex set
/// `block`. phi maps each vertex to its component representative. With
/// `brute_force` the implied cut-pairs are compared with cut_pairs_bf;
/// otherwise only the structure and the cut property of each cycle are checked.
Verdict verify_cactus(const Multigraph& g, std::span<const Vertex> block, const Cactus& cactus,
                      const std::vector<Vertex>& phi, bool brute_force);

/// Cut-pairs implied by a verified cactus, as sorted pairs of edge ids.
std::vector<std::pair<EdgeId, EdgeId>> cactus_cut_pairs(const Multigraph& g, std::span<const Vertex> block,
                                                        const Cactus& cactus, const std::vector<Vertex>& phi);

struct VerifyOptions {
    /// Largest n for which the brute-force oracles are consulted.
    std::size_t oracle_max_n = 12;
};

/// Partition, bridges, certificates and cacti of a report against g.
Verdict verify_report(const Multigraph& g, const ThreeEccReport& report, const VerifyOptions& options = {});

}  // namespace tecc
