#pragma once

#include <string>
#include <vector>

#include "tetra/connectivity.hpp"
#include "tetra/generators.hpp"

namespace corpus {

using tetra::Edge;
using tetra::Graph;

struct Entry {
    std::string name;
    Graph graph;
    bool random = false;
};

inline Graph circulant(int n, std::vector<int> jumps) {
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v)
        for (int j : jumps) {
            int w = (v + j) % n;
            es.push_back({std::min(v, w), std::max(v, w)});
        }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    tetra::VertexSet vs(n);
    for (int v = 0; v < n; ++v) vs[v] = v;
    return Graph(vs, es);
}

inline Graph from_edges(int n, const std::vector<Edge>& es) {
    tetra::VertexSet vs(n);
    for (int v = 0; v < n; ++v) vs[v] = v;
    return Graph(vs, es);
}

inline Graph cube() {
    std::vector<Edge> es;
    for (int v = 0; v < 8; ++v)
        for (int b = 1; b < 8; b <<= 1)
            if (v < (v ^ b)) es.push_back({v, v ^ b});
    return from_edges(8, es);
}

inline Graph petersen() {
    std::vector<Edge> es;
    for (int i = 0; i < 5; ++i) {
        es.push_back({i, (i + 1) % 5});
        es.push_back({i, i + 5});
        es.push_back({5 + i, 5 + (i + 2) % 5});
    }
    for (auto& e : es)
        if (e.first > e.second) std::swap(e.first, e.second);
    return from_edges(10, es);
}

// 4-connected graphs: every named family in small ranges plus seeded random ones.
inline std::vector<Entry> four_connected(int randomCount = 110, int maxRandomOrder = 14) {
    using namespace tetra::gen;
    std::vector<Entry> c;
    auto add = [&](std::string name, Graph g, bool random = false) {
        if (tetra::is_k_connected(g, 4)) c.push_back({std::move(name), std::move(g), random});
    };
    for (int n = 5; n <= 9; ++n) add("K" + std::to_string(n), complete(n));
    for (int rim = 3; rim <= 8; ++rim)
        for (bool hub : {false, true})
            add("double-wheel " + std::to_string(rim) + (hub ? " hub" : ""), double_wheel(rim, hub));
    for (int rim = 3; rim <= 5; ++rim)
        for (bool hub : {false, true})
            add("double-wheel-of-triangles " + std::to_string(rim) + (hub ? " hub" : ""),
                double_wheel_of_triangles(rim, hub));
    for (std::string p : {"KKT", "KTT", "KKKT", "KTKT", "KKTT", "KKKKT", "KKTKT", "KTTKK", "TTKK"})
        for (bool hub : {false, true}) add("gdw " + p + (hub ? " hub" : ""), generalised_double_wheel(p, hub));
    for (int m = 4; m <= 7; ++m) {
        add("k4m pure " + std::to_string(m), k4m(KmKind::Pure, m));
        add("k4m thickened " + std::to_string(m), k4m(KmKind::Thickened, m));
        add("k4m sprinkled-1 " + std::to_string(m), k4m(KmKind::Sprinkled, m, {{0, 1}}));
        add("k4m sprinkled-2 " + std::to_string(m), k4m(KmKind::Sprinkled, m, {{0, 1}, {2, 3}}));
        add("k4m sprinkled-path " + std::to_string(m), k4m(KmKind::Sprinkled, m, {{0, 1}, {1, 2}, {2, 3}}));
    }
    for (int n = 10; n <= 12; ++n) add("saw " + std::to_string(n) + " 4", circular_saw(n, 4));
    for (int count = 3; count <= 6; ++count)
        for (int size = 4; size <= 5; ++size)
            add("cycle-of-cliques " + std::to_string(count) + " " + std::to_string(size),
                cycle_of_cliques(count, size).graph);
    for (int n = 8; n <= 14; ++n) {
        add("circulant " + std::to_string(n) + " 1,2", circulant(n, {1, 2}));
        add("circulant " + std::to_string(n) + " 1,3", circulant(n, {1, 3}));
        if (n >= 10) add("circulant " + std::to_string(n) + " 1,4", circulant(n, {1, 4}));
        add("circulant " + std::to_string(n) + " 1,2,3", circulant(n, {1, 2, 3}));
    }
    add("K4,4", complete_bipartite(4, 4));
    add("K4,5", complete_bipartite(4, 5));
    add("K5,5", complete_bipartite(5, 5));
    for (int i = 0; i < randomCount; ++i) {
        int n = 8 + i % (maxRandomOrder - 7);
        std::uint64_t seed = 1000 + i;
        add("random n=" + std::to_string(n) + " seed=" + std::to_string(seed) + (i % 2 ? " sparse" : ""),
            random_k_connected(n, 4, seed, i % 2 == 1), true);
    }
    return c;
}

// 3-connected graphs for the apex-lifted decomposition and Y-Delta checks.
inline std::vector<Entry> three_connected(int maxOrder = 12, int randomCount = 40) {
    using namespace tetra::gen;
    std::vector<Entry> c;
    auto add = [&](std::string name, Graph g, bool random = false) {
        if (g.order() <= maxOrder && tetra::is_k_connected(g, 3)) c.push_back({std::move(name), std::move(g), random});
    };
    add("K4", complete(4));
    add("K5", complete(5));
    add("K3,3", complete_bipartite(3, 3));
    add("K3,4", complete_bipartite(3, 4));
    add("prism", prism());
    add("cube", cube());
    add("petersen", petersen());
    for (int rim = 3; rim <= 8; ++rim) add("wheel " + std::to_string(rim), wheel(rim));
    for (int n = 8; n <= 10; ++n) add("saw " + std::to_string(n) + " 3", circular_saw(n, 3));
    for (int m = 3; m <= 6; ++m) {
        add("k3m pure " + std::to_string(m), k3m(KmKind::Pure, m));
        add("k3m thickened " + std::to_string(m), k3m(KmKind::Thickened, m));
        add("k3m sprinkled " + std::to_string(m), k3m(KmKind::Sprinkled, m, {{0, 1}}));
    }
    for (int n = 6; n <= 12; ++n) add("circulant " + std::to_string(n) + " 1,2", circulant(n, {1, 2}));
    add("double-wheel 5", double_wheel(5));
    add("theta 3 2", theta(3, 2));
    for (int i = 0; i < randomCount; ++i) {
        int n = 6 + i % 5;
        std::uint64_t seed = 5000 + i;
        add("random3 n=" + std::to_string(n) + " seed=" + std::to_string(seed) + (i % 2 ? " sparse" : ""),
            random_k_connected(n, 3, seed, i % 2 == 1), true);
    }
    return c;
}

}  // namespace corpus
