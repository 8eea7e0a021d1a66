#include "tecc/random_graph.hpp"

#include <random>
#include <stdexcept>

namespace tecc {
namespace {

void add_random_edges(Multigraph& g, std::size_t count, std::mt19937_64& rng) {
    const std::size_t n = g.vertex_count();
    for (std::size_t i = 0; i < count; ++i) {
        Vertex a = 0;
        Vertex b = 0;
        while (a == b) {
            a = static_cast<Vertex>(rng() % n);
            b = static_cast<Vertex>(rng() % n);
        }
        g.add_edge(a, b);
    }
}

}  // namespace

Multigraph gen_random(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (m > 0 && n < 2) throw std::invalid_argument("edges need at least two vertices");
    std::mt19937_64 rng(seed);
    Multigraph g(n);
    add_random_edges(g, m, rng);
    return g;
}

Multigraph gen_random_connected(std::size_t n, std::size_t m, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("connected graph needs a vertex");
    if (m + 1 < n) throw std::invalid_argument("connected graph needs at least n - 1 edges");
    std::mt19937_64 rng(seed);
    Multigraph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(static_cast<Vertex>(rng() % v), v);
    add_random_edges(g, m - (n - 1), rng);
    return g;
}

}  // namespace tecc
