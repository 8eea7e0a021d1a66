#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tecc/multigraph.hpp"

namespace tecc::testing {

inline Multigraph k2_3() { return make_graph(2, {{0, 1}, {0, 1}, {0, 1}}); }

inline Multigraph cycle(std::size_t n) {
    Multigraph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
    return g;
}

inline Multigraph complete(std::size_t n) {
    Multigraph g(n);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
    }
    return g;
}

inline Multigraph petersen() {
    Multigraph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

/// Triangles {0,1,2} and {3,4,5} joined by the bridge (2,3).
inline Multigraph bridge_joined_triangles() {
    return make_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 3}});
}

/// K4 on {0..3} and K4 on {4..7} joined by (3,4) and (0,7).
inline Multigraph two_k4_cut_pair() {
    Multigraph g(8);
    for (Vertex base : {0u, 4u}) {
        for (Vertex a = 0; a < 4; ++a) {
            for (Vertex b = a + 1; b < 4; ++b) g.add_edge(base + a, base + b);
        }
    }
    g.add_edge(3, 4);
    g.add_edge(0, 7);
    return g;
}

inline Multigraph path(std::size_t n) {
    Multigraph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Multigraph star(std::size_t leaves) {
    Multigraph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

inline Multigraph binary_tree(std::size_t n) {
    Multigraph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge((v - 1) / 2, v);
    return g;
}

struct Named {
    std::string name;
    Multigraph graph;
};

inline std::vector<Named> golden_suite() {
    return {
        {"K2^3", k2_3()},
        {"C3", cycle(3)},
        {"C4", cycle(4)},
        {"C5", cycle(5)},
        {"C6", cycle(6)},
        {"K4", complete(4)},
        {"K5", complete(5)},
        {"Petersen", petersen()},
        {"bridge-joined triangles", bridge_joined_triangles()},
        {"two K4 with cut-pair", two_k4_cut_pair()},
        {"path P5", path(5)},
        {"star S4", star(4)},
        {"binary tree T7", binary_tree(7)},
    };
}

}  // namespace tecc::testing
