#include "tetra/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tetra {

bool is_star(const Star& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (i != j && !leq(s[i], s[j].reversed())) return false;
    return true;
}

bool interlaces(Sep s, const Star& star) {
    return std::all_of(star.begin(), star.end(),
                       [&](Sep x) { return less(x, s) || less(x, s.reversed()); });
}

bool is_splitting_star(const Star& star, const std::vector<Sep>& set) {
    return std::none_of(set.begin(), set.end(), [&](Sep s) { return interlaces(s, star); });
}

namespace {

bool star_less(const Star& x, const Star& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), canonical_less);
}

void require_nested_symmetric(const std::vector<Sep>& set) {
    std::set<Sep> members(set.begin(), set.end());
    for (Sep s : set) {
        if (!members.count(s.reversed())) throw InputError("separation set is not closed under reversal");
        if (!s.proper()) throw InputError("separation set contains an improper separation");
        for (Sep t : set)
            if (!is_nested(s, t)) throw InputError("separation set is not nested");
    }
}

}  // namespace

std::vector<Star> splitting_stars(const std::vector<Sep>& set) {
    require_nested_symmetric(set);
    if (set.empty()) return {Star{}};
    std::vector<Star> stars;
    for (Sep s : set) {
        Sep r = s.reversed();
        std::vector<Sep> below;
        for (Sep t : set)
            if (less(t, r)) below.push_back(t);
        Star star{s};
        for (Sep t : below) {
            bool maximal = std::none_of(below.begin(), below.end(), [&](Sep u) { return less(t, u); });
            if (maximal) star.push_back(t);
        }
        sort_canonical(star);
        stars.push_back(star);
    }
    std::sort(stars.begin(), stars.end(), star_less);
    stars.erase(std::unique(stars.begin(), stars.end()), stars.end());

    std::map<Sep, int> owner;
    for (const auto& st : stars) {
        if (!is_star(st)) throw InvariantError("constructed star is not a star");
        if (!is_splitting_star(st, set)) throw InvariantError("constructed star is interlaced by the set");
        for (Sep s : st)
            if (owner[s]++) throw InvariantError("separation lies in two splitting stars");
    }
    if (owner.size() != set.size()) throw InvariantError("some separation lies in no splitting star");
    return stars;
}

std::vector<int> MixedTreeDecomposition::neighbours(int node) const {
    std::vector<int> out;
    for (auto [i, j] : treeEdges) {
        if (i == node) out.push_back(j);
        if (j == node) out.push_back(i);
    }
    return out;
}

namespace {

bool tree_connected_on(const MixedTreeDecomposition& d, const std::vector<char>& in) {
    int n = static_cast<int>(d.nodes.size());
    int start = -1, count = 0;
    for (int i = 0; i < n; ++i)
        if (in[i]) {
            ++count;
            if (start < 0) start = i;
        }
    if (count == 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : d.neighbours(x))
            if (in[y] && !seen[y]) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == count;
}

}  // namespace

MixedTreeDecomposition build_decomposition(const Graph& g, const std::vector<Sep>& set) {
    g.require_mask("build_decomposition");
    for (Sep s : set)
        if (!covers(g, s)) throw InputError("separation does not belong to the graph");
    MixedTreeDecomposition d;
    d.nodes = splitting_stars(set);
    int n = static_cast<int>(d.nodes.size());
    for (const auto& st : d.nodes) {
        Mask bag = g.all();
        for (Sep s : st) bag &= s.b;
        d.bags.push_back(bag);
    }
    std::map<Sep, int> owner;
    for (int i = 0; i < n; ++i)
        for (Sep s : d.nodes[i]) owner[s] = i;
    for (int i = 0; i < n; ++i)
        for (Sep s : d.nodes[i]) {
            int j = owner.at(s.reversed());
            if (j == i) throw InvariantError("a separation and its reverse share a star");
            if (d.edgeMap.count({j, i})) throw InvariantError("two separations join the same pair of stars");
            d.edgeMap[{j, i}] = s;
            if (i < j) d.treeEdges.push_back({i, j});
        }
    std::sort(d.treeEdges.begin(), d.treeEdges.end());

    if (static_cast<int>(d.treeEdges.size()) != n - 1 || !tree_connected_on(d, std::vector<char>(n, 1)))
        throw InvariantError("decomposition graph is not a tree");
    Mask covered = 0;
    for (Mask b : d.bags) covered |= b;
    if (covered != g.all()) throw InvariantError("bags do not cover the vertex set");
    for (int v = 0; v < g.order(); ++v) {
        std::vector<char> in(n);
        for (int i = 0; i < n; ++i) in[i] = has(d.bags[i], v);
        if (!tree_connected_on(d, in)) throw InvariantError("bags containing a vertex are not connected in the tree");
    }
    std::vector<Sep> recovered;
    for (auto& [key, s] : d.edgeMap) {
        if (d.edgeMap.at({key.second, key.first}) != s.reversed())
            throw InvariantError("edge map is not reversal-compatible");
        recovered.push_back(s);
    }
    std::vector<Sep> expected = set;
    sort_canonical(expected);
    sort_canonical(recovered);
    if (recovered != expected) throw InvariantError("the separation set is not recovered from the tree");
    return d;
}

Mask lambda_set(const Graph& g, Sep s) {
    Mask out = s.cut();
    for (auto e : separator_of(g, s).edges) out |= bit(e.u);
    return out;
}

namespace {

std::vector<Edge> torso_edges(const Graph& g, const Star& star, Mask& verts) {
    verts = g.all();
    for (Sep s : star) verts &= s.b;
    std::vector<Mask> lambdas;
    for (Sep s : star) {
        lambdas.push_back(lambda_set(g, s));
        verts |= lambdas.back();
    }
    std::set<Edge> es;
    for (auto [a, b] : g.edges())
        if (has(verts, g.index(a)) && has(verts, g.index(b))) es.insert({a, b});
    for (Mask l : lambdas)
        for_each_bit(l, [&](int u) {
            for_each_bit(l & ~(bit(u + 1) - 1), [&](int v) { es.insert(normalised(g.label(u), g.label(v))); });
        });
    return {es.begin(), es.end()};
}

}  // namespace

Graph expanded_torso(const Graph& g, const Star& star) {
    Mask verts = 0;
    auto es = torso_edges(g, star, verts);
    return Graph(g.labels_of(verts), es);
}

Vertex TorsoResult::representative(Vertex hostVertex) const {
    for (auto& [rep, cls] : originMap)
        if (std::binary_search(cls.begin(), cls.end(), hostVertex)) return rep;
    throw InputError("vertex " + std::to_string(hostVertex) + " is not represented in the torso");
}

TorsoResult compressed_torso(const Graph& g, const Star& star) {
    Mask verts = 0;
    auto es = torso_edges(g, star, verts);
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (Sep s : star)
        for (auto e : separator_of(g, s).edges)
            if (has(verts, e.u) && has(verts, e.v)) {
                int a = find(e.u), b = find(e.v);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    TorsoResult r;
    for_each_bit(verts, [&](int v) { r.originMap[g.label(find(v))].push_back(g.label(v)); });
    std::set<Edge> ces;
    for (auto [a, b] : es) {
        int x = find(g.index(a)), y = find(g.index(b));
        if (x != y) ces.insert(normalised(g.label(x), g.label(y)));
    }
    VertexSet reps;
    for (auto& [rep, cls] : r.originMap) reps.push_back(rep);
    r.torso = Graph(reps, {ces.begin(), ces.end()});
    return r;
}

}  // namespace tetra
