#include "tetra/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "tetra/connectivity.hpp"

namespace tetra::gen {

namespace {

VertexSet range(int n) {
    VertexSet v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw InputError(msg);
}

}  // namespace

Graph complete(int n) {
    require(n >= 0, "complete: n must be non-negative");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(range(n), es);
}

Graph cycle(int n) {
    require(n >= 3, "cycle: n must be at least 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(normalised(i, (i + 1) % n));
    return Graph(range(n), es);
}

Graph path(int n) {
    require(n >= 1, "path: n must be positive");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(range(n), es);
}

Graph complete_bipartite(int a, int b) {
    require(a >= 0 && b >= 0, "complete_bipartite: sizes must be non-negative");
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.push_back({i, a + j});
    return Graph(range(a + b), es);
}

Graph wheel(int n) {
    Graph c = cycle(n);
    auto es = c.edges();
    for (int i = 0; i < n; ++i) es.push_back({i, n});
    return Graph(range(n + 1), es);
}

Graph prism() {
    return Graph(range(6), {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph theta(int paths, int inner) {
    require(paths >= 2 && inner >= 0, "theta: need at least two paths");
    require(inner >= 1 || paths == 2, "theta: at most one path may be an edge");
    std::vector<Edge> es;
    int next = 2;
    for (int p = 0; p < paths; ++p) {
        int prev = 0;
        for (int i = 0; i < inner; ++i) {
            es.push_back(normalised(prev, next));
            prev = next++;
        }
        es.push_back(normalised(prev, 1));
    }
    return Graph(range(next), es);
}

Graph circular_saw(int n, int k) {
    require(k >= 1, "circular_saw: k must be positive");
    require(n >= 2 * k + 2, "circular_saw: need n >= 2k+2");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j) es.push_back({v, n + (v + j) % n});
    return Graph(range(2 * n), es);
}

Graph double_wheel(int rim, bool hubEdge) {
    require(rim >= 3, "double_wheel: rim must be at least 3");
    auto es = cycle(rim).edges();
    for (int i = 0; i < rim; ++i) {
        es.push_back({i, rim});
        es.push_back({i, rim + 1});
    }
    if (hubEdge) es.push_back({rim, rim + 1});
    return Graph(range(rim + 2), es);
}

Graph double_wheel_of_triangles(int rim, bool hubEdge) {
    return generalised_double_wheel(std::string(rim, 'T'), hubEdge);
}

Graph generalised_double_wheel(const std::string& pattern, bool hubEdge) {
    int p = static_cast<int>(pattern.size());
    require(p >= 3, "generalised_double_wheel: pattern needs length at least 3");
    require(pattern.find_first_not_of("KT") == std::string::npos, "generalised_double_wheel: pattern uses K and T only");
    std::vector<Edge> es = cycle(p).edges();
    int next = p;
    for (int i = 0; i < p; ++i)
        if (pattern[i] == 'T') {
            es.push_back({i, next});
            es.push_back({(i + 1) % p, next});
            ++next;
        }
    int u = next, v = next + 1;
    for (int x = 0; x < next; ++x) {
        es.push_back({x, u});
        es.push_back({x, v});
    }
    if (hubEdge) es.push_back({u, v});
    Graph g(range(next + 2), es);
    require(is_k_connected(g, 4), "generalised_double_wheel: result is not 4-connected");
    return g;
}

Graph kkm(int k, KmKind kind, int m, const std::vector<Edge>& sprinkle) {
    require(k >= 1 && m >= 0, "kkm: bad sizes");
    std::set<Edge> es;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) es.insert({i, k + j});
    if (kind == KmKind::Thickened)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) es.insert({i, j});
    if (kind == KmKind::Sprinkled)
        for (auto [a, b] : sprinkle) {
            require(a != b && a >= 0 && b >= 0 && a < k && b < k, "kkm: sprinkled edge outside the left side");
            es.insert(normalised(a, b));
        }
    else
        require(sprinkle.empty(), "kkm: extra edges only for the sprinkled kind");
    return Graph(range(k + m), {es.begin(), es.end()});
}

GluedRing cycle_of_graphs(const std::vector<Piece>& pieces) {
    int m = static_cast<int>(pieces.size());
    require(m >= 3, "cycle_of_graphs: need at least three pieces");
    std::vector<std::pair<int, Vertex>> keys;
    std::map<std::pair<int, Vertex>, int> id;
    for (int i = 0; i < m; ++i) {
        const auto& p = pieces[i];
        for (Vertex v : {p.in.first, p.in.second, p.out.first, p.out.second})
            require(p.graph.has_vertex(v), "cycle_of_graphs: adhesion vertex missing from its piece");
        require(p.in.first != p.in.second && p.out.first != p.out.second, "cycle_of_graphs: adhesion pairs need two vertices");
        for (Vertex v : p.graph.vertices()) {
            id[{i, v}] = static_cast<int>(keys.size());
            keys.push_back({i, v});
        }
    }
    std::vector<int> parent(keys.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        unite(id[{i, pieces[i].out.first}], id[{j, pieces[j].in.first}]);
        unite(id[{i, pieces[i].out.second}], id[{j, pieces[j].in.second}]);
    }
    std::map<int, Vertex> label;
    for (std::size_t x = 0; x < keys.size(); ++x) {
        int r = find(static_cast<int>(x));
        if (!label.count(r)) label[r] = static_cast<Vertex>(label.size());
    }
    auto lab = [&](int i, Vertex v) { return label.at(find(id.at({i, v}))); };
    std::set<Edge> es;
    GluedRing out;
    out.ring.adhesionSize = 2;
    for (int i = 0; i < m; ++i) {
        VertexSet part;
        for (Vertex v : pieces[i].graph.vertices()) part.push_back(lab(i, v));
        std::sort(part.begin(), part.end());
        part.erase(std::unique(part.begin(), part.end()), part.end());
        out.ring.parts.push_back(part);
        VertexSet a{lab(i, pieces[i].out.first), lab(i, pieces[i].out.second)};
        std::sort(a.begin(), a.end());
        out.ring.adhesions.push_back(a);
        for (auto [u, v] : pieces[i].graph.edges()) {
            Vertex a2 = lab(i, u), b2 = lab(i, v);
            require(a2 != b2, "cycle_of_graphs: gluing identifies adjacent vertices");
            es.insert(normalised(a2, b2));
        }
    }
    out.graph = Graph(range(static_cast<int>(label.size())), {es.begin(), es.end()});
    if (!is_ring_decomposition(out.graph, out.ring)) throw InputError("cycle_of_graphs: gluing does not give a ring");
    return out;
}

GluedRing cycle_of_cliques(int count, int size) {
    require(size >= 4, "cycle_of_cliques: cliques need at least four vertices");
    std::vector<Piece> pieces;
    for (int i = 0; i < count; ++i) pieces.push_back({complete(size), {0, 1}, {2, 3}});
    return cycle_of_graphs(pieces);
}

Graph random_k_connected(int n, int k, std::uint64_t seed, bool sparse) {
    require(n > k, "random_k_connected: need more than k vertices");
    std::mt19937_64 rng(seed);
    std::set<Edge> es;
    auto degree = [&](int v) {
        int d = 0;
        for (auto [a, b] : es) d += (a == v) + (b == v);
        return d;
    };
    auto addRandom = [&](int u) {
        std::vector<int> options;
        for (int v = 0; v < n; ++v)
            if (v != u && !es.count(normalised(u, v))) options.push_back(v);
        if (options.empty()) return;
        std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
        es.insert(normalised(u, options[pick(rng)]));
    };
    std::uniform_int_distribution<int> anyVertex(0, n - 1);
    if (sparse) {
        while (true) {
            int low = -1;
            std::vector<int> lows;
            for (int v = 0; v < n; ++v)
                if (degree(v) < k) lows.push_back(v);
            if (lows.empty()) break;
            std::uniform_int_distribution<std::size_t> pick(0, lows.size() - 1);
            low = lows[pick(rng)];
            addRandom(low);
        }
    }
    while (true) {
        Graph g(range(n), {es.begin(), es.end()});
        bool minDegOk = true;
        for (int v = 0; v < n; ++v) minDegOk = minDegOk && static_cast<int>(g.nbrs(v).size()) >= k;
        if (minDegOk && is_k_connected(g, k)) return g;
        addRandom(anyVertex(rng));
    }
}

}  // namespace tetra::gen
