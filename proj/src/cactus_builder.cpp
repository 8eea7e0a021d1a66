#include "tecc/cactus_builder.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tecc {

CactusState::CactusState(std::size_t n)
    : tchain_(n),
      bchain_(n),
      cycles_head_(n, kNil),
      cycles_tail_(n, kNil),
      node_mark_(n, 0),
      cycle_mark_(n, 0) {}

void CactusState::on_enter(Vertex v) {
    node_mark_[v] = node_stack_.size();
    cycle_mark_[v] = cycle_stack_.size();
}

void CactusState::on_eject(Vertex u) {
    for (std::uint32_t c = cycles_head_[u]; c != kNil; c = cycles_[c].next) {
        cycles_[c].start = u;
        ++events_;
    }
    node_stack_.push_back(u);
}

void CactusState::extend_tchain(Vertex u1, Vertex u) {
    tchain_[u1].push_back(u);
    ++events_;
}

std::vector<Vertex> CactusState::take_bchain_with(Vertex u) {
    std::vector<Vertex> chain = std::move(bchain_[u]);
    bchain_[u].clear();
    chain.push_back(u);
    ++events_;
    return chain;
}

void CactusState::close_chain(Vertex w, std::vector<Vertex> chain) {
    if (chain.empty()) return;
    const auto id = static_cast<std::uint32_t>(cycles_.size());
    cycles_.push_back({w, std::move(chain), kNil});
    if (cycles_head_[w] == kNil) {
        cycles_head_[w] = id;
    } else {
        cycles_[cycles_tail_[w]].next = id;
    }
    cycles_tail_[w] = id;
    cycle_stack_.push_back(id);
    ++events_;
}

void CactusState::on_absorb(Vertex w, Vertex x) {
    if (cycles_head_[x] != kNil) {
        if (cycles_head_[w] == kNil) {
            cycles_head_[w] = cycles_head_[x];
        } else {
            cycles_[cycles_tail_[w]].next = cycles_head_[x];
        }
        cycles_tail_[w] = cycles_tail_[x];
        cycles_head_[x] = cycles_tail_[x] = kNil;
        ++events_;
    }
    if (!tchain_[x].empty()) {
        std::vector<Vertex> chain = std::move(tchain_[x]);
        tchain_[x].clear();
        close_chain(w, std::move(chain));
    }
}

void CactusState::close_bchain(Vertex w, Vertex x) {
    if (bchain_[x].empty()) return;
    std::vector<Vertex> chain = std::move(bchain_[x]);
    bchain_[x].clear();
    close_chain(w, std::move(chain));
}

void CactusState::move_bchain(Vertex w, Vertex x) {
    if (w == x || bchain_[x].empty()) return;
    if (!bchain_[w].empty()) throw std::logic_error("bchain moved onto a vertex that already holds one");
    bchain_[w] = std::move(bchain_[x]);
    bchain_[x].clear();
    ++events_;
}

void CactusState::set_bchain(Vertex w, std::vector<Vertex> chain) {
    if (!bchain_[w].empty() && !chain.empty()) {
        throw std::logic_error("bchain overwritten while still open");
    }
    if (!chain.empty()) bchain_[w] = std::move(chain);
}

Cactus CactusState::finalize_cactus(Vertex top, const std::vector<Vertex>& rep_of) {
    Cactus cactus;
    cactus.nodes.assign(node_stack_.begin() + static_cast<std::ptrdiff_t>(node_mark_[top]), node_stack_.end());
    node_stack_.resize(node_mark_[top]);
    std::sort(cactus.nodes.begin(), cactus.nodes.end());

    for (std::size_t i = cycle_mark_[top]; i < cycle_stack_.size(); ++i) {
        CycleRec& rec = cycles_[cycle_stack_[i]];
        if (rep_of[rec.start] != rec.start) {
            throw std::logic_error("cactus cycle start " + std::to_string(rec.start) + " is not a representative");
        }
        std::vector<Vertex> cycle;
        cycle.reserve(rec.chain.size() + 1);
        cycle.push_back(rec.start);
        cycle.insert(cycle.end(), rec.chain.begin(), rec.chain.end());
        cactus.cycles.push_back(std::move(cycle));
    }
    cycle_stack_.resize(cycle_mark_[top]);
    return cactus;
}

void CactusState::check_all_closed() const {
    for (std::size_t v = 0; v < tchain_.size(); ++v) {
        if (!tchain_[v].empty() || !bchain_[v].empty()) {
            throw std::logic_error("unclosed cut-edge chain at vertex " + std::to_string(v));
        }
    }
}

}  // namespace tecc
