#include <doctest.h>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tetra/generators.hpp"
#include "tetra/tetra_engine.hpp"

using namespace tetra;

TEST_CASE("order and separator of a mixed separation") {
    Graph c6 = gen::cycle(6);
    Sep s{c6.mask_of({0, 1, 2}), c6.mask_of({3, 4, 5})};
    auto sep = separator_of(c6, s);
    CHECK(sep.vertices == 0);
    REQUIRE(sep.edges.size() == 2);
    // A-side end first
    for (auto e : sep.edges) {
        CHECK(has(s.a, e.u));
        CHECK(has(s.b, e.v));
    }
    CHECK(order_of(c6, s) == 2);
    CHECK_FALSE(covers(c6, Sep{c6.mask_of({0, 1}), c6.mask_of({3, 4})}));

    MixedSeparation m{{0, 1, 2, 3}, {0, 3, 4, 5}};
    CHECK(to_labels(c6, to_sep(c6, m)) == m);
    CHECK(separator_of(c6, m).order() == 2);
}

TEST_CASE("order agrees with the oracle on every mixed separation of small graphs") {
    for (Graph g : {gen::complete(5), gen::double_wheel(4), gen::prism()}) {
        for (int k = 0; k <= 6; ++k)
            for (Sep s : oracle::mixed_separations(g, k)) CHECK(order_of(g, s) == k);
    }
}

TEST_CASE("nestedness and the partial order") {
    Graph g = gen::double_wheel(6);
    auto all = oracle::mixed_separations(g, 4);
    std::vector<Sep> sample;
    for (std::size_t i = 0; i < all.size(); i += 97) sample.push_back(all[i]);
    for (Sep x : sample)
        for (Sep y : sample) {
            CHECK(is_nested(x, y) == oracle::nested(x, y));
            CHECK(is_nested(x, y) == is_nested(y, x));
            CHECK(leq(x, y) == leq(y.reversed(), x.reversed()));
        }
}

TEST_CASE("canonical order is a strict total order") {
    Graph g = gen::complete(5);
    auto all = oracle::mixed_separations(g, 3);
    auto sorted = all;
    sort_canonical(sorted);
    CHECK(sorted.size() == all.size());
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        CHECK(canonical_less(sorted[i], sorted[i + 1]));
        CHECK_FALSE(canonical_less(sorted[i + 1], sorted[i]));
    }
}

TEST_CASE("crossing diagram of two sprinkled K4,4 tetra-separations") {
    Graph g = gen::k4m(gen::KmKind::Sprinkled, 4, {{0, 1}, {2, 3}});
    auto all = enumerate_tetra_separations(g);
    int crossingEmptyLinks = 0;
    for (Sep x : all)
        for (Sep y : all)
            if (!is_nested(x, y)) {
                auto d = corner_diagram(g, x, y);
                bool empty = true;
                for (const auto& l : d.links) empty = empty && l.size() == 0;
                if (empty) {
                    ++crossingEmptyLinks;
                    CHECK(d.centre_size() == 4);
                }
                CHECK(crossing_report(g, d).holds);
            }
    CHECK(crossingEmptyLinks >= 2);
}

TEST_CASE("potter corner on a double wheel of triangles") {
    // In a double-wheel every pair of crossing tetra-separations satisfies the
    // crossing lemma; corners flanked by dangling edges are potter.
    Graph g = gen::double_wheel_of_triangles(4);
    auto all = enumerate_tetra_separations(g);
    for (Sep x : all)
        for (Sep y : all)
            if (!is_nested(x, y)) {
                auto d = corner_diagram(g, x, y);
                auto r = crossing_report(g, d);
                CHECK(r.holds);
                CHECK(d.diagonal.empty());
                CHECK(d.jumping.empty());
                for (const auto& dg : d.dangling) {
                    CHECK(r.linkSize == 2);
                    CHECK(dg.from != dg.through);
                }
            }
}
