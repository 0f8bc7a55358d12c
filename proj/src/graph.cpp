#include "tetra/graph.hpp"

#include <algorithm>
#include <set>

namespace tetra {

bool lex_less(Mask x, Mask y) {
    while (x && y) {
        int a = lowest(x), b = lowest(y);
        if (a != b) return a < b;
        x &= x - 1;
        y &= y - 1;
    }
    return !x && y;
}

Edge normalised(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Graph::Graph(VertexSet vertices, std::vector<Edge> edges) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw InputError("duplicate vertex label");
    for (Vertex v : vertices)
        if (v < 0) throw InputError("negative vertex label");
    verts_ = std::move(vertices);
    for (auto& e : edges) {
        if (e.first == e.second) throw InputError("loop at vertex " + std::to_string(e.first));
        e = normalised(e.first, e.second);
        if (!has_vertex(e.first) || !has_vertex(e.second))
            throw InputError("edge endpoint not in vertex set");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    nbr_.assign(verts_.size(), {});
    for (auto [u, v] : edges_) {
        int i = index(u), j = index(v);
        nbr_[i].push_back(j);
        nbr_[j].push_back(i);
    }
    for (auto& l : nbr_) std::sort(l.begin(), l.end());
    if (fits_mask()) {
        adj_.assign(verts_.size(), 0);
        for (std::size_t i = 0; i < nbr_.size(); ++i)
            for (int j : nbr_[i]) adj_[i] |= bit(j);
    }
}

Graph Graph::from_edges(const std::vector<Edge>& edges, const VertexSet& extra) {
    std::set<Vertex> vs(extra.begin(), extra.end());
    for (auto [u, v] : edges) {
        vs.insert(u);
        vs.insert(v);
    }
    return Graph(VertexSet(vs.begin(), vs.end()), edges);
}

bool Graph::has_vertex(Vertex v) const { return std::binary_search(verts_.begin(), verts_.end(), v); }

int Graph::index(Vertex v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) throw InputError("unknown vertex " + std::to_string(v));
    return static_cast<int>(it - verts_.begin());
}

bool Graph::adjacent_idx(int i, int j) const {
    if (fits_mask()) return has(adj_[i], j);
    return std::binary_search(nbr_[i].begin(), nbr_[i].end(), j);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    return adjacent_idx(index(u), index(v));
}

VertexSet Graph::neighbours(Vertex v) const {
    VertexSet out;
    for (int j : nbr_[index(v)]) out.push_back(verts_[j]);
    return out;
}

void Graph::require_mask(const char* what) const {
    if (!fits_mask())
        throw CapabilityError(std::string(what) + ": graphs above 64 vertices are not supported");
}

Mask Graph::mask_of(const VertexSet& s) const {
    require_mask("mask_of");
    Mask m = 0;
    for (Vertex v : s) m |= bit(index(v));
    return m;
}

VertexSet Graph::labels_of(Mask m) const {
    VertexSet out;
    for_each_bit(m, [&](int i) { out.push_back(verts_[i]); });
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(g.label(v));
            for (int w : g.nbrs(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    VertexSet vs(s);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (Vertex v : vs)
        if (!g.has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
    std::vector<Edge> es;
    for (auto e : g.edges())
        if (std::binary_search(vs.begin(), vs.end(), e.first) &&
            std::binary_search(vs.begin(), vs.end(), e.second))
            es.push_back(e);
    return Graph(vs, es);
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
    VertexSet keep;
    for (Vertex v : g.vertices())
        if (std::find(s.begin(), s.end(), v) == s.end()) keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::pair<Graph, Relabeling> contract_edge(const Graph& g, Edge e, Vertex representative) {
    if (!g.has_edge(e.first, e.second)) throw InputError("contract_edge: not an edge");
    if (representative != e.first && representative != e.second)
        throw InputError("contract_edge: representative must be an endpoint");
    Vertex other = representative == e.first ? e.second : e.first;
    Relabeling map;
    VertexSet vs;
    for (Vertex v : g.vertices()) {
        map[v] = v == other ? representative : v;
        if (v != other) vs.push_back(v);
    }
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) {
        Vertex a = map[u], b = map[v];
        if (a != b) es.push_back(normalised(a, b));
    }
    return {Graph(vs, es), map};
}

Graph apply_relabeling(const Graph& g, const Relabeling& pi) {
    if (pi.size() != static_cast<std::size_t>(g.order())) throw InputError("relabeling domain mismatch");
    std::set<Vertex> image;
    for (Vertex v : g.vertices()) {
        auto it = pi.find(v);
        if (it == pi.end()) throw InputError("relabeling domain mismatch");
        image.insert(it->second);
    }
    if (image.size() != pi.size()) throw InputError("relabeling is not injective");
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.push_back(normalised(pi.at(u), pi.at(v)));
    return Graph(VertexSet(image.begin(), image.end()), es);
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d;
    for (int i = 0; i < g.order(); ++i) d.push_back(static_cast<int>(g.nbrs(i).size()));
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> map, used, order;

    bool extend(std::size_t pos) {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (int w = 0; w < h.order(); ++w) {
            if (used[w] || g.nbrs(v).size() != h.nbrs(w).size()) continue;
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q) {
                int u = order[q];
                ok = g.adjacent_idx(u, v) == h.adjacent_idx(map[u], w);
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (extend(pos + 1)) return true;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h, int bound) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    if (g.order() > bound) throw CapabilityError("is_isomorphic: graph exceeds size bound");
    if (degree_sequence(g) != degree_sequence(h)) return false;
    IsoSearch s{g, h, std::vector<int>(g.order(), -1), std::vector<int>(h.order(), 0), {}};
    // Visit vertices in BFS order so every new vertex has a mapped neighbour early.
    std::vector<char> seen(g.order(), 0);
    for (int r = 0; r < g.order(); ++r) {
        if (seen[r]) continue;
        seen[r] = 1;
        std::size_t head = s.order.size();
        s.order.push_back(r);
        while (head < s.order.size()) {
            int v = s.order[head++];
            for (int w : g.nbrs(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    s.order.push_back(w);
                }
        }
    }
    return s.extend(0);
}

std::vector<Mask> components_within(const Graph& g, Mask within) {
    std::vector<Mask> out;
    Mask rest = within;
    while (rest) {
        Mask comp = bit(lowest(rest)), frontier = comp;
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.adj(v); });
            next &= within & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        rest &= ~comp;
    }
    return out;
}

bool connected_within(const Graph& g, Mask within) {
    if (!within) return true;
    Mask comp = bit(lowest(within)), frontier = comp;
    while (frontier) {
        Mask next = 0;
        for_each_bit(frontier, [&](int v) { next |= g.adj(v); });
        next &= within & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp == within;
}

int count_neighbours_in(const Graph& g, int v, Mask m) { return popcount(g.adj(v) & m); }

}  // namespace tetra
