#include <doctest.h>

#include <numeric>

#include "tecc/cactus_builder.hpp"

using namespace tecc;

namespace {

std::vector<Vertex> identity(std::size_t n) {
    std::vector<Vertex> rep(n);
    std::iota(rep.begin(), rep.end(), Vertex{0});
    return rep;
}

}  // namespace

TEST_CASE("a tree-generator chain closes into one cycle") {
    // C4 rooted at 0: 3, 2 and 1 are ejected in turn
    CactusState st(4);
    st.on_enter(0);
    st.on_eject(3);
    st.extend_tchain(2, 3);
    st.on_eject(2);
    st.extend_tchain(1, 2);
    CHECK(st.has_tchain(1));
    st.on_eject(1);
    // the back-edge 3-0 ends the chain at 0
    st.close_chain(0, {1, 2, 3});
    st.on_eject(0);
    const Cactus c = st.finalize_cactus(0, identity(4));
    CHECK(c.nodes == std::vector<Vertex>{0, 1, 2, 3});
    REQUIRE(c.cycles.size() == 1);
    CHECK(c.cycles[0] == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("on_absorb closes the tchain and moves cycles") {
    CactusState st(4);
    st.on_enter(0);
    st.extend_tchain(2, 3);
    st.on_absorb(1, 2);
    CHECK_FALSE(st.has_tchain(2));
    st.on_absorb(0, 1);
    st.on_eject(3);
    st.on_eject(0);
    std::vector<Vertex> rep = identity(4);
    rep[1] = rep[2] = 0;
    const Cactus c = st.finalize_cactus(0, rep);
    REQUIRE(c.cycles.size() == 1);
    CHECK(c.cycles[0] == std::vector<Vertex>{0, 3});
    st.check_all_closed();
}

TEST_CASE("bchains: take, move, close") {
    CactusState st(5);
    st.on_enter(0);
    st.set_bchain(2, {4});
    const std::vector<Vertex> chain = st.take_bchain_with(2);
    CHECK(chain == std::vector<Vertex>{4, 2});
    CHECK_FALSE(st.has_bchain(2));
    st.set_bchain(3, chain);
    st.move_bchain(1, 3);
    CHECK(st.has_bchain(1));
    CHECK_FALSE(st.has_bchain(3));
    CHECK_THROWS_AS(st.check_all_closed(), std::logic_error);
    st.close_bchain(0, 1);
    st.check_all_closed();
    CHECK(st.events() > 0);
}

TEST_CASE("contract violations throw") {
    CactusState st(3);
    st.set_bchain(0, {1});
    CHECK_THROWS_AS(st.set_bchain(0, {2}), std::logic_error);
    st.set_bchain(1, {2});
    CHECK_THROWS_AS(st.move_bchain(0, 1), std::logic_error);

    CactusState other(3);
    other.on_enter(0);
    other.close_chain(1, {2});
    std::vector<Vertex> rep = identity(3);
    rep[1] = 0;
    CHECK_THROWS_AS(other.finalize_cactus(0, rep), std::logic_error);
}

TEST_CASE("nested 2ecc cacti are kept apart") {
    CactusState st(6);
    st.on_enter(0);
    st.on_enter(3);
    st.close_chain(3, {4});
    st.on_eject(4);
    st.on_eject(3);
    const Cactus inner = st.finalize_cactus(3, identity(6));
    CHECK(inner.nodes == std::vector<Vertex>{3, 4});
    CHECK(inner.cycles == std::vector<std::vector<Vertex>>{{3, 4}});
    st.on_eject(0);
    const Cactus outer = st.finalize_cactus(0, identity(6));
    CHECK(outer.nodes == std::vector<Vertex>{0});
    CHECK(outer.cycles.empty());
}
