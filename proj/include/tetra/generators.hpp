#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tetra/recognizers.hpp"

namespace tetra::gen {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);
// Hub n joined to the cycle 0..n-1.
Graph wheel(int n);
Graph prism();
// Two poles 0,1 joined by `paths` internally disjoint paths with `inner` inner vertices each.
Graph theta(int paths, int inner);

// Vertex (v,0) is labelled v, (v,1) is labelled n+v; (v,0) ~ (v+j,1) for 0 <= j < k.
Graph circular_saw(int n, int k);

// Rim 0..rim-1, hubs rim and rim+1.
Graph double_wheel(int rim, bool hubEdge = false);
// Rim cycle 0..rim-1, tip rim+i on the edge (i, i+1), hubs 2rim and 2rim+1.
Graph double_wheel_of_triangles(int rim, bool hubEdge = false);
// Pattern of 'K' (plain rim edge) and 'T' (rim edge with a tip); rim cycle
// first, then tips in pattern order, then the two hubs.
Graph generalised_double_wheel(const std::string& pattern, bool hubEdge = false);

enum class KmKind { Pure, Thickened, Sprinkled };
// Left side 0..k-1, right side k..k+m-1. Sprinkled edges must lie in the left side.
Graph kkm(int k, KmKind kind, int m, const std::vector<Edge>& sprinkle = {});
inline Graph k4m(KmKind kind, int m, const std::vector<Edge>& sprinkle = {}) { return kkm(4, kind, m, sprinkle); }
inline Graph k3m(KmKind kind, int m, const std::vector<Edge>& sprinkle = {}) { return kkm(3, kind, m, sprinkle); }

struct Piece {
    Graph graph;
    std::pair<Vertex, Vertex> in, out;  // adhesion pairs; out is glued to the next piece's in
};

struct GluedRing {
    Graph graph;
    RingDecomposition ring;
};

// Labels are assigned in order of first appearance (piece by piece, local labels ascending).
GluedRing cycle_of_graphs(const std::vector<Piece>& pieces);
// Ring of `count` copies of K_size, consecutive copies sharing disjoint pairs.
GluedRing cycle_of_cliques(int count, int size);

// Adds random edges until the graph is k-connected. Sparse mode first raises
// the minimum degree to k before adding arbitrary edges.
Graph random_k_connected(int n, int k, std::uint64_t seed, bool sparse = false);

}  // namespace tetra::gen
