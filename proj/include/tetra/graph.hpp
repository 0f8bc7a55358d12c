#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tetra {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;
using Mask = std::uint64_t;
using Relabeling = std::map<Vertex, Vertex>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1U; }
inline int lowest(Mask m) { return std::countr_zero(m); }

template <class F>
inline void for_each_bit(Mask m, F&& f) {
    while (m) {
        int i = std::countr_zero(m);
        f(i);
        m &= m - 1;
    }
}

// Lexicographic comparison of the sorted index lists encoded by two masks.
bool lex_less(Mask x, Mask y);

// Finite simple undirected graph with sorted integer labels. Internally every
// vertex also has a dense index (its rank among the labels); masks refer to
// those indices.
class Graph {
public:
    Graph() = default;
    Graph(VertexSet vertices, std::vector<Edge> edges);

    static Graph from_edges(const std::vector<Edge>& edges, const VertexSet& extra = {});

    int order() const { return static_cast<int>(verts_.size()); }
    int size() const { return static_cast<int>(edges_.size()); }
    const VertexSet& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;
    int index(Vertex v) const;
    Vertex label(int i) const { return verts_[i]; }
    Vertex max_label() const { return verts_.empty() ? -1 : verts_.back(); }

    const std::vector<int>& nbrs(int i) const { return nbr_[i]; }
    VertexSet neighbours(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(nbr_[index(v)].size()); }
    bool adjacent_idx(int i, int j) const;

    bool fits_mask() const { return order() <= 64; }
    void require_mask(const char* what) const;
    Mask adj(int i) const { return adj_[i]; }
    Mask all() const { return order() == 64 ? ~Mask{0} : (bit(order()) - 1); }
    Mask mask_of(const VertexSet& s) const;
    VertexSet labels_of(Mask m) const;

    bool operator==(const Graph& o) const { return verts_ == o.verts_ && edges_ == o.edges_; }

private:
    VertexSet verts_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> nbr_;
    std::vector<Mask> adj_;
};

Edge normalised(Vertex u, Vertex v);

std::vector<VertexSet> components(const Graph& g);
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph remove_vertices(const Graph& g, const VertexSet& s);
std::pair<Graph, Relabeling> contract_edge(const Graph& g, Edge e, Vertex representative);
Graph apply_relabeling(const Graph& g, const Relabeling& pi);
bool is_isomorphic(const Graph& g, const Graph& h, int bound = 12);
std::vector<int> degree_sequence(const Graph& g);

// Mask-level helpers on graphs with at most 64 vertices.
std::vector<Mask> components_within(const Graph& g, Mask within);
bool connected_within(const Graph& g, Mask within);
int count_neighbours_in(const Graph& g, int v, Mask m);

}  // namespace tetra
