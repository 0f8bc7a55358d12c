#include <doctest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tetra/generators.hpp"
#include "tetra/pipeline.hpp"

using namespace tetra;

TEST_CASE("the empty nested set has one splitting star") {
    auto stars = splitting_stars({});
    REQUIRE(stars.size() == 1);
    CHECK(stars[0].empty());
    Graph g = gen::complete(5);
    auto d = build_decomposition(g, {});
    CHECK(d.nodes.size() == 1);
    CHECK(d.bags[0] == g.all());
    CHECK(compressed_torso(g, {}).torso == g);
    CHECK(expanded_torso(g, {}) == g);
}

TEST_CASE("splitting stars reject sets that are not nested, symmetric and proper") {
    Graph g = gen::double_wheel(6);
    auto all = enumerate_tetra_separations(g);
    REQUIRE(all.size() >= 2);
    CHECK_THROWS_AS(splitting_stars({all[0]}), InputError);
    Sep x = all[0];
    for (Sep y : all)
        if (!is_nested(x, y)) {
            CHECK_THROWS_AS(splitting_stars({x, x.reversed(), y, y.reversed()}), InputError);
            break;
        }
    Sep improper{g.all(), g.mask_of({0, 1, 2, 3})};
    CHECK_THROWS_AS(splitting_stars({improper, improper.reversed()}), InputError);
}

TEST_CASE("expanded torso of a single-separation star on K4,6") {
    Graph g = gen::k4m(gen::KmKind::Pure, 6);
    Sep s{g.mask_of({0, 1, 2, 3, 4, 5, 6, 7, 8}), g.mask_of({0, 1, 2, 3, 9})};
    Graph t = expanded_torso(g, {s});
    // The right vertex joined to the left side, which is made complete.
    CHECK(is_isomorphic(t, gen::complete(5)));
    CHECK(t.vertices() == VertexSet{0, 1, 2, 3, 9});
}

TEST_CASE("decompositions over the corpus satisfy the tree axioms") {
    int nonTrivial = 0;
    for (const auto& e : corpus::four_connected(30, 12)) {
        auto d = tetra_decompose(e.graph);
        CHECK_MESSAGE(d.tree.nodes.size() == d.nested.size() / 2 + 1, e.name);
        CHECK(d.tree.treeEdges.size() + 1 == d.tree.nodes.size());
        for (const auto& st : d.tree.nodes) {
            CHECK(is_star(st));
            CHECK(is_splitting_star(st, d.nested));
        }
        for (const auto& t : d.torsos) {
            bool ok = is_k_connected(t.torso, 4) || is_isomorphic(t.torso, gen::complete(4));
            CHECK_MESSAGE(ok, e.name);
            for (const auto& [v, origin] : t.originMap) {
                CHECK(!origin.empty());
                CHECK(t.representative(origin.front()) == v);
            }
        }
        if (d.tree.nodes.size() > 1) ++nonTrivial;
    }
    CHECK(nonTrivial >= 5);
}

TEST_CASE("a ring of K6 pieces decomposes along its adhesions") {
    auto ring = gen::cycle_of_cliques(4, 6);
    auto d = tetra_decompose(ring.graph, NestedMethod::Both);
    CHECK(d.nested.size() >= 2);
    for (std::size_t i = 0; i < d.classes.size(); ++i)
        CHECK(verify_torso_class(ring.graph, d.torsos[i].torso, d.classes[i]));
}

TEST_CASE("lambda set holds the cut and the A-side ends of separator edges") {
    Graph g = gen::double_wheel(6);
    Sep s{g.mask_of({0, 1, 2, 6, 7}), g.mask_of({3, 4, 5, 6, 7})};
    CHECK(order_of(g, s) == 4);
    CHECK(g.labels_of(lambda_set(g, s)) == VertexSet{0, 2, 6, 7});
}
