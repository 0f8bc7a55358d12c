#include <doctest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tetra/generators.hpp"
#include "tetra/recognizers.hpp"

using namespace tetra;

TEST_CASE("torso shapes") {
    CHECK(torso_shape(gen::complete(3)) == TorsoShape::Triangle);
    CHECK(torso_shape(gen::cycle(4)) == TorsoShape::FourCycle);
    CHECK(torso_shape(gen::complete(4)) == TorsoShape::ThreeConnected);
    CHECK(torso_shape(gen::complete(5)) == TorsoShape::ThreeConnected);
    CHECK(torso_shape(gen::path(4)) == TorsoShape::Other);
    CHECK(torso_shape(gen::cycle(5)) == TorsoShape::Other);
}

TEST_CASE("double-wheels are recognised with their hubs as centre") {
    for (int rim = 4; rim <= 8; ++rim) {
        Graph g = gen::double_wheel(rim);
        auto w = generalised_double_wheel_with_centre(g, rim, rim + 1);
        REQUIRE(w);
        CHECK(w->all_k2());
        CHECK(w->ring.length() == rim);
        // Any witness found without the hint must re-check.
        auto found = recognize_generalised_double_wheel(g);
        REQUIRE(found);
        CHECK(generalised_double_wheel_with_centre(g, found->centre[0], found->centre[1]));
    }
    for (int rim = 3; rim <= 5; ++rim) {
        auto w = generalised_double_wheel_with_centre(gen::double_wheel_of_triangles(rim), 2 * rim, 2 * rim + 1);
        REQUIRE(w);
        CHECK(w->all_triangles());
        CHECK(w->ring.length() == rim);
    }
    // The centre need not be adjacent to the whole rim: in the octahedron any
    // two vertices work.
    CHECK(generalised_double_wheel_with_centre(gen::double_wheel(4), 0, 1));
    auto mixed = recognize_generalised_double_wheel(gen::generalised_double_wheel("KTKKT"));
    REQUIRE(mixed);
    CHECK(mixed->ring.length() == 5);
    CHECK_FALSE(mixed->all_k2());
    CHECK_FALSE(mixed->all_triangles());
    CHECK_FALSE(recognize_generalised_double_wheel(gen::circular_saw(10, 4)));
    CHECK_FALSE(recognize_generalised_double_wheel(gen::k4m(gen::KmKind::Pure, 5)));
}

TEST_CASE("wheels with one hub") {
    auto w = recognize_generalised_wheel(gen::wheel(7));
    REQUIRE(w);
    CHECK(w->centre == VertexSet{7});
    CHECK(generalised_wheel_with_centre(gen::wheel(7), 7));
    CHECK_FALSE(generalised_wheel_with_centre(gen::wheel(7), 0));
}

TEST_CASE("K4,m variants are recognised with the ground-truth left side") {
    using gen::KmKind;
    for (int m = 4; m <= 7; ++m) {
        auto pure = recognize_k4m(gen::k4m(KmKind::Pure, m));
        REQUIRE(pure);
        CHECK(pure->left == VertexSet{0, 1, 2, 3});
        CHECK(pure->m == m);
        CHECK_FALSE(pure->thickened);
        auto thick = recognize_k4m(gen::k4m(KmKind::Thickened, m));
        REQUIRE(thick);
        CHECK(thick->thickened);
        auto spr = km_with_left(gen::k4m(KmKind::Sprinkled, m, {{1, 3}}), {0, 1, 2, 3});
        REQUIRE(spr);
        CHECK(spr->m == m);
    }
    auto k3 = recognize_k3m(gen::k3m(KmKind::Pure, 5));
    REQUIRE(k3);
    CHECK(k3->left == VertexSet{0, 1, 2});
    CHECK_FALSE(recognize_k4m(gen::double_wheel(6)));
}

TEST_CASE("quasi-5-connectivity recogniser agrees with exhaustive search") {
    for (const auto& e : corpus::four_connected(30, 12))
        if (e.graph.order() <= 14)
            CHECK_MESSAGE(recognize_quasi_5_connected(e.graph) == oracle::quasi_k_connected(e.graph, 5), e.name);
}

TEST_CASE("rings of cliques") {
    for (int count = 4; count <= 6; ++count) {
        auto glued = gen::cycle_of_cliques(count, 5);
        CHECK(is_ring_decomposition(glued.graph, glued.ring));
        CHECK(glued.ring.adhesionSize == 2);
        for (int i = 0; i < count; ++i) {
            CHECK(torso_shape(ring_torso(glued.graph, glued.ring, i)) == TorsoShape::ThreeConnected);
            CHECK_FALSE(good_torso(glued.graph, glued.ring, i));
        }
        auto found = recognize_small_torso_cycle(glued.graph);
        REQUIRE(found);
        CHECK(found->length() == count);
        auto bagel = recognize_angry_bagel(glued.graph);
        REQUIRE(bagel);
        CHECK(alpha_factor(glued.graph, *bagel) >= 4);
    }
    // K6 pieces have six vertices, so every torso is good.
    auto big = gen::cycle_of_cliques(4, 6);
    for (int i = 0; i < 4; ++i) CHECK(good_torso(big.graph, big.ring, i));
    CHECK_FALSE(recognize_angry_bagel(big.graph));
}

TEST_CASE("angry classification") {
    CHECK_THROWS_AS(classify_4_angry(gen::complete(7)), InputError);
    CHECK_THROWS_AS(classify_4_angry(gen::cycle(9)), InputError);
    auto saw = classify_4_angry(gen::circular_saw(10, 4));
    CHECK(saw.angry);
    CHECK(saw.shapes == std::vector<int>{1});
    auto dw = classify_4_angry(gen::double_wheel(6));
    CHECK(dw.angry);
    CHECK(std::find(dw.shapes.begin(), dw.shapes.end(), 3) != dw.shapes.end());
    auto km = classify_4_angry(gen::k4m(gen::KmKind::Pure, 5));
    CHECK(std::find(km.shapes.begin(), km.shapes.end(), 4) != km.shapes.end());
    REQUIRE(km.km);
    CHECK(km.km->left == VertexSet{0, 1, 2, 3});
    auto calm = classify_4_angry(gen::cycle_of_cliques(4, 6).graph);
    CHECK_FALSE(calm.angry);
    CHECK(calm.nestedWitness);
}
