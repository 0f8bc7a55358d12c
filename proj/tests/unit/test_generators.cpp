#include <doctest.h>

#include "support/oracles.hpp"
#include "tetra/connectivity.hpp"
#include "tetra/generators.hpp"

using namespace tetra;

TEST_CASE("circular saws") {
    Graph s = gen::circular_saw(8, 3);
    CHECK(s.order() == 16);
    CHECK(s.size() == 24);
    for (int v = 0; v < 8; ++v)
        for (int j = 0; j < 3; ++j) CHECK(s.has_edge(v, 8 + (v + j) % 8));
    CHECK_THROWS_AS(gen::circular_saw(7, 3), InputError);

    Graph t = gen::circular_saw(12, 4);
    CHECK(oracle::k_connected(t, 4));
    CHECK_FALSE(oracle::k_connected(t, 5));
    auto seps = oracle::separators(t, 4);
    std::vector<Mask> nbhds;
    for (int v = 0; v < t.order(); ++v) nbhds.push_back(t.adj(v));
    std::sort(seps.begin(), seps.end());
    std::sort(nbhds.begin(), nbhds.end());
    nbhds.erase(std::unique(nbhds.begin(), nbhds.end()), nbhds.end());
    CHECK(seps == nbhds);
}

TEST_CASE("double wheels") {
    Graph octahedron = Graph::from_edges({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {1, 5},
                                          {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(is_isomorphic(gen::double_wheel(4), octahedron));
    CHECK_FALSE(gen::double_wheel(4).has_edge(4, 5));
    CHECK(gen::double_wheel(4, true).has_edge(4, 5));
    for (int rim = 4; rim <= 8; ++rim) {
        CHECK(oracle::k_connected(gen::double_wheel(rim), 4));
        CHECK(oracle::k_connected(gen::double_wheel_of_triangles(rim), 4));
    }
    CHECK(oracle::k_connected(gen::double_wheel(3, true), 4));
    Graph t = gen::double_wheel_of_triangles(4);
    CHECK(t.order() == 10);
    CHECK(t.has_edge(0, 4));
    CHECK(t.has_edge(1, 4));
}

TEST_CASE("generalised double wheels") {
    CHECK(gen::generalised_double_wheel("KKKKK") == gen::double_wheel(5));
    CHECK(gen::generalised_double_wheel("TTTT") == gen::double_wheel_of_triangles(4));
    CHECK(gen::generalised_double_wheel("KKT", true).order() == 6);
    CHECK_THROWS_AS(gen::generalised_double_wheel("KX"), InputError);
    CHECK_THROWS_AS(gen::generalised_double_wheel("KK"), InputError);
}

TEST_CASE("K_{k,m} families") {
    using gen::KmKind;
    CHECK(gen::k4m(KmKind::Thickened, 0) == gen::complete(4));
    Graph k44 = gen::k4m(KmKind::Pure, 4);
    CHECK(is_isomorphic(k44, gen::complete_bipartite(4, 4)));
    CHECK(oracle::k_connected(k44, 4));
    for (int m = 4; m <= 6; ++m) {
        CHECK(oracle::k_connected(gen::k4m(KmKind::Thickened, m), 4));
        CHECK(oracle::k_connected(gen::k4m(KmKind::Sprinkled, m, {{0, 2}}), 4));
    }
    Graph spr = gen::k4m(KmKind::Sprinkled, 4, {{0, 1}, {2, 3}});
    CHECK(spr.size() == 18);
    CHECK_THROWS_AS(gen::k4m(KmKind::Sprinkled, 4, {{0, 5}}), InputError);
    CHECK_THROWS_AS(gen::k3m(KmKind::Sprinkled, 4, {{0, 3}}), InputError);
}

TEST_CASE("cycles of graphs") {
    auto ring = gen::cycle_of_cliques(6, 5);
    CHECK(ring.graph.order() == 18);
    CHECK(ring.ring.length() == 6);
    CHECK(is_ring_decomposition(ring.graph, ring.ring));
    CHECK(oracle::k_connected(ring.graph, 4));

    // Alternating K4 and triangle pieces.
    Graph k4 = gen::complete(4);
    Graph tri = gen::complete(3);
    std::vector<gen::Piece> pieces{{k4, {0, 1}, {2, 3}}, {tri, {0, 1}, {1, 2}}, {k4, {0, 1}, {2, 3}},
                                   {tri, {0, 1}, {1, 2}}};
    auto alt = gen::cycle_of_graphs(pieces);
    CHECK(is_ring_decomposition(alt.graph, alt.ring));
    CHECK(alt.ring.length() == 4);

    std::vector<gen::Piece> bad{{k4, {0, 1}, {0, 2}}, {k4, {0, 1}, {2, 3}}};
    CHECK_THROWS_AS(gen::cycle_of_graphs(bad), InputError);
}

TEST_CASE("seeded random k-connected graphs") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = gen::random_k_connected(10, 4, seed, seed % 2);
        CHECK(oracle::k_connected(g, 4));
        CHECK(g == gen::random_k_connected(10, 4, seed, seed % 2));
    }
    CHECK_FALSE(gen::random_k_connected(12, 4, 1) == gen::random_k_connected(12, 4, 2));
}
