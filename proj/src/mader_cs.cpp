#include "tecc/mader_cs.hpp"

#include <stdexcept>

namespace tecc {

ConstructionSequence CsPool::single(EdgeId ear) {
    const auto id = static_cast<CsNodeId>(nodes_.size());
    nodes_.push_back({ear, kNoNode, kNoNode});
    return {id, id, kNoNode};
}

ConstructionSequence CsPool::concat(ConstructionSequence a, ConstructionSequence b) {
    if (a.empty()) return {b.head, b.tail, kNoNode};
    if (b.empty()) return {a.head, a.tail, kNoNode};
    if (a.head == b.head) throw std::logic_error("construction sequence concatenated with itself");
    nodes_[a.tail].next = b.head;
    nodes_[b.head].prev = a.tail;
    ++splices_;
    return {a.head, b.tail, kNoNode};
}

ConstructionSequence CsPool::rotate_at_mark(ConstructionSequence cs) {
    const CsNodeId mark = cs.rotation_mark;
    if (cs.empty() || mark == kNoNode || mark == cs.head) return cs;
    const CsNodeId before = nodes_[mark].prev;
    if (before == kNoNode) throw std::logic_error("rotation mark is not inside the sequence");
    nodes_[before].next = kNoNode;
    nodes_[mark].prev = kNoNode;
    ConstructionSequence prefix{cs.head, before, kNoNode};
    ConstructionSequence suffix{mark, cs.tail, kNoNode};
    return concat(suffix, prefix);
}

EdgeId CsPool::front(ConstructionSequence cs) const {
    return cs.empty() ? kNoEdge : nodes_[cs.head].ear;
}

std::vector<EdgeId> CsPool::to_vector(ConstructionSequence cs) const {
    std::vector<EdgeId> out;
    for (CsNodeId at = cs.head; at != kNoNode; at = nodes_[at].next) {
        out.push_back(nodes_[at].ear);
        if (at == cs.tail) break;
    }
    return out;
}

bool CsPool::head_is_min(ConstructionSequence cs, const std::function<bool(EdgeId, EdgeId)>& less) const {
    if (cs.empty()) return true;
    const EdgeId h = nodes_[cs.head].ear;
    for (CsNodeId at = nodes_[cs.head].next; at != kNoNode; at = nodes_[at].next) {
        if (less(nodes_[at].ear, h)) return false;
        if (at == cs.tail) break;
    }
    return true;
}

std::string_view to_string(PathTag tag) {
    return tag == PathTag::K23Seed ? "K23_SEED" : "MADER_PATH";
}

}  // namespace tecc
