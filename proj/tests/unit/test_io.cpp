#include <doctest.h>

#include "support/corpus.hpp"
#include "tetra/generators.hpp"
#include "tetra/io.hpp"

using namespace tetra;
using io::Format;

TEST_CASE("edge list parsing") {
    Graph g = io::parse_graph("# a path\np 4\n0 1\n\n1 2 # middle\n", Format::EdgeList);
    CHECK(g.vertices() == VertexSet{0, 1, 2, 3});
    CHECK(g.size() == 2);
    Graph h = io::parse_graph("5 7\n7 9\n", Format::EdgeList);
    CHECK(h.vertices() == VertexSet{5, 7, 9});

    for (const char* bad : {"0 x\n", "0 -1\n", "3 3\n", "0 1 2\n", "0 1\np 3\n", "p 2\n0 4\n", "0 1\n1 0\n"})
        CHECK_THROWS_AS(io::parse_graph(bad, Format::EdgeList), InputError);
}

TEST_CASE("JSON parsing") {
    Graph g = io::parse_graph(R"({"vertices":[0,1,2,5],"edges":[[0,1],[1,2]]})", Format::Json);
    CHECK(g.vertices() == VertexSet{0, 1, 2, 5});
    for (const char* bad : {"{", "[]", R"({"edges":[[0]]})", R"({"edges":[[0,"a"]]})",
                            R"({"vertices":[0,1],"edges":[[0,2]]})", R"({"vertices":[-3],"edges":[]})",
                            R"({"edges":[[0,1],[1,0]]})", R"({"edges":[[2,2]]})"})
        CHECK_THROWS_AS(io::parse_graph(bad, Format::Json), InputError);
    CHECK_THROWS_AS(io::parse_format("graph6"), InputError);
}

TEST_CASE("round trip in both formats") {
    std::vector<Graph> gs;
    for (const auto& e : corpus::four_connected(20, 12)) gs.push_back(e.graph);
    for (const auto& e : corpus::three_connected(10, 10)) gs.push_back(e.graph);
    gs.push_back(Graph({0, 1, 2}, {}));
    gs.push_back(Graph({}, {}));
    gs.push_back(Graph({0, 1, 2, 3}, {{1, 2}}));
    gs.push_back(Graph({4, 9}, {{4, 9}}));
    for (const Graph& g : gs)
        for (Format f : {Format::EdgeList, Format::Json}) CHECK(io::parse_graph(io::serialize_graph(g, f), f) == g);
    Graph gap({0, 5, 9}, {{0, 5}});
    CHECK(io::parse_graph(io::serialize_graph(gap, Format::Json), Format::Json) == gap);
    CHECK_THROWS_AS(io::serialize_graph(gap, Format::EdgeList), CapabilityError);
}

TEST_CASE("decomposition JSON and DOT") {
    auto ring = gen::cycle_of_cliques(4, 6);
    const Graph& g = ring.graph;
    auto d = tetra_decompose(g);
    std::vector<io::NodeReport> nodes;
    for (std::size_t i = 0; i < d.torsos.size(); ++i)
        nodes.push_back({d.torsos[i].torso, io::torso_class_json(d.classes[i])});
    auto j = io::decomposition_json(g, d.tree, nodes);
    REQUIRE(j["nodes"].size() == d.tree.nodes.size());
    REQUIRE(j["edges"].size() == d.tree.treeEdges.size());
    for (const auto& n : j["nodes"]) {
        CHECK(n.contains("id"));
        CHECK(n.contains("bag"));
        CHECK(n["torso"].contains("vertices"));
        CHECK(n["torso"].contains("edges"));
        CHECK(n["class"].contains("verdict"));
    }
    for (std::size_t k = 0; k < d.tree.treeEdges.size(); ++k) {
        const auto& e = j["edges"][k];
        auto [from, to] = d.tree.treeEdges[k];
        CHECK(e["from"] == from);
        CHECK(e["to"] == to);
        Sep s = d.tree.edgeMap.at({from, to});
        for (const auto& se : e["separatorEdges"]) {
            CHECK(has(s.strict_a(), g.index(se[0].get<int>())));
            CHECK(has(s.strict_b(), g.index(se[1].get<int>())));
        }
        CHECK(e["separatorVertices"].size() + e["separatorEdges"].size() == 4);
    }
    auto again = io::decomposition_json(g, tetra_decompose(g).tree, nodes);
    CHECK(again.dump() == j.dump());

    std::string dot = io::decomposition_dot(g, d.tree, nodes);
    CHECK(dot.rfind("graph decomposition {", 0) == 0);
    CHECK(dot.find("n0 [label=\"bag ") != std::string::npos);
}

TEST_CASE("separation JSON lists the A end of each separator edge first") {
    Graph c = gen::cycle(6);
    Sep s{c.mask_of({0, 1, 2}), c.mask_of({3, 4, 5})};
    auto j = io::separation_json(c, s);
    CHECK(j["separatorVertices"].empty());
    CHECK(j["separatorEdges"] == nlohmann::json::parse("[[0,5],[2,3]]"));
    auto r = io::separation_json(c, s.reversed());
    CHECK(r["separatorEdges"] == nlohmann::json::parse("[[3,2],[5,0]]"));
}
