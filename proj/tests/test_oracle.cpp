#include <doctest.h>

#include <random>

#include "graphs.hpp"
#include "tecc/oracle.hpp"
#include "tecc/random_graph.hpp"

using namespace tecc;

using Partition = std::vector<std::vector<Vertex>>;

TEST_CASE("bridges_bf") {
    CHECK(bridges_bf(testing::path(3)) == std::vector<EdgeId>{0, 1});
    CHECK(bridges_bf(testing::cycle(4)).empty());
    CHECK(bridges_bf(testing::bridge_joined_triangles()) == std::vector<EdgeId>{6});
    CHECK(bridges_bf(testing::k2_3()).empty());
}

TEST_CASE("cut_pairs_bf") {
    CHECK(cut_pairs_bf(testing::cycle(4)) ==
          std::vector<EdgePair>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(cut_pairs_bf(testing::complete(4)).empty());
    CHECK(cut_pairs_bf(testing::two_k4_cut_pair()) == std::vector<EdgePair>{{12, 13}});
    // bridges never take part in a cut-pair
    CHECK(cut_pairs_bf(testing::path(4)).empty());
}

TEST_CASE("three_ecc_bf") {
    CHECK(three_ecc_bf(testing::cycle(3)) == Partition{{0}, {1}, {2}});
    CHECK(three_ecc_bf(testing::k2_3()) == Partition{{0, 1}});
    CHECK(three_ecc_bf(testing::petersen()) == Partition{{0, 1, 2, 3, 4, 5, 6, 7, 8, 9}});
    CHECK(three_ecc_bf(testing::two_k4_cut_pair()) == Partition{{0, 1, 2, 3}, {4, 5, 6, 7}});
    CHECK(three_ecc_bf(Multigraph(0)).empty());
    CHECK(three_ecc_bf(Multigraph(2)) == Partition{{0}, {1}});
}

TEST_CASE("three_ecc_bf agrees with a flow count on random pairs") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Multigraph g = gen_random(2 + seed % 8, 4 + seed % 18, seed);
        const Partition classes = three_ecc_bf(g);
        std::vector<std::size_t> cls(g.vertex_count());
        for (std::size_t i = 0; i < classes.size(); ++i) {
            for (const Vertex v : classes[i]) cls[v] = i;
        }
        for (int k = 0; k < 20; ++k) {
            const Vertex s = static_cast<Vertex>(rng() % g.vertex_count());
            const Vertex t = static_cast<Vertex>(rng() % g.vertex_count());
            if (s == t) continue;
            CAPTURE(seed);
            CHECK((edge_disjoint_paths(g, s, t, 3) >= 3) == (cls[s] == cls[t]));
        }
    }
}

TEST_CASE("edge_disjoint_paths honours the limit") {
    CHECK(edge_disjoint_paths(testing::k2_3(), 0, 1, 2) == 2);
    CHECK(edge_disjoint_paths(testing::k2_3(), 0, 1, 10) == 3);
    CHECK(edge_disjoint_paths(testing::complete(5), 0, 4, 10) == 4);
    CHECK(edge_disjoint_paths(make_graph(3, {{0, 1}}), 0, 2, 3) == 0);
}

TEST_CASE("bridges_lowpoint matches bridges_bf") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const Multigraph g = gen_random(2 + seed % 10, seed % 20, seed);
        CAPTURE(seed);
        CHECK(bridges_lowpoint(g) == bridges_bf(g));
    }
}

TEST_CASE("partition is an equivalence on random graphs") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const Multigraph g = gen_random(2 + seed % 8, seed % 20, seed);
        const Partition classes = three_ecc_bf(g);
        std::vector<int> seen(g.vertex_count(), 0);
        for (const auto& c : classes) {
            CHECK(std::is_sorted(c.begin(), c.end()));
            for (const Vertex v : c) ++seen[v];
        }
        for (const int s : seen) CHECK(s == 1);
    }
}
