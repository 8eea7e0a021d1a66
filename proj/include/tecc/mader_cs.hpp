#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "tecc/multigraph.hpp"

namespace tecc {

using CsNodeId = std::uint32_t;
inline constexpr CsNodeId kNoNode = std::numeric_limits<CsNodeId>::max();

/// Handle to a sequence of ears living in a CsPool. Ears are named by their
/// back-edge id. An empty sequence has head == tail == kNoNode.
struct ConstructionSequence {
    CsNodeId head = kNoNode;
    CsNodeId tail = kNoNode;
    /// First node of the block that followed the anchor block when the
    /// sequence was assembled from a w-path section; kNoNode when unset.
    CsNodeId rotation_mark = kNoNode;

    bool empty() const { return head == kNoNode; }
};

/// Node storage for all construction sequences of one run. Every splice is
/// O(1); nodes are never copied or freed.
class CsPool {
public:
    ConstructionSequence single(EdgeId ear);

    /// a followed by b. The result carries no rotation mark.
    ConstructionSequence concat(ConstructionSequence a, ConstructionSequence b);

    /// Moves the block before the rotation mark to the end. Without a mark
    /// the sequence is returned unchanged.
    ConstructionSequence rotate_at_mark(ConstructionSequence cs);

    EdgeId front(ConstructionSequence cs) const;
    std::vector<EdgeId> to_vector(ConstructionSequence cs) const;

    /// Head is the minimum under `less` (an empty sequence passes).
    bool head_is_min(ConstructionSequence cs, const std::function<bool(EdgeId, EdgeId)>& less) const;

    std::uint64_t splices() const { return splices_; }
    std::size_t node_count() const { return nodes_.size(); }
    void reserve(std::size_t n) { nodes_.reserve(n); }

private:
    struct Node {
        EdgeId ear;
        CsNodeId prev;
        CsNodeId next;
    };
    std::vector<Node> nodes_;
    std::uint64_t splices_ = 0;
};

enum class PathTag : std::uint8_t { K23Seed, MaderPath };

std::string_view to_string(PathTag tag);

struct CertificateEdge {
    EdgeId id = kNoEdge;
    bool is_virtual = false;
    bool operator==(const CertificateEdge&) const = default;
};

/// vertices.size() == edges.size() + 1; edges[i] joins vertices[i] and vertices[i+1].
struct CertificatePath {
    std::vector<Vertex> vertices;
    std::vector<CertificateEdge> edges;
    PathTag tag = PathTag::MaderPath;
    bool operator==(const CertificatePath&) const = default;
};

struct Certificate {
    std::vector<CertificatePath> paths;
    bool operator==(const Certificate&) const = default;
};

}  // namespace tecc
