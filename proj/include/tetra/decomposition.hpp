#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tetra/separations.hpp"

namespace tetra {

// Canonically sorted set of separations, pairwise (A,B) <= (D,C).
using Star = std::vector<Sep>;

bool is_star(const Star& s);
bool interlaces(Sep s, const Star& star);
bool is_splitting_star(const Star& star, const std::vector<Sep>& set);

// Requires a nested set closed under reversal. Stars come out in canonical order.
std::vector<Star> splitting_stars(const std::vector<Sep>& set);

struct MixedTreeDecomposition {
    std::vector<Star> nodes;
    std::vector<Mask> bags;
    std::vector<std::pair<int, int>> treeEdges;  // i < j
    // (i, j) -> the separation whose A side holds node i and B side node j.
    std::map<std::pair<int, int>, Sep> edgeMap;

    std::vector<int> neighbours(int node) const;
};

// Throws InvariantError when any structural check fails.
MixedTreeDecomposition build_decomposition(const Graph& g, const std::vector<Sep>& set);

Mask lambda_set(const Graph& g, Sep s);
Graph expanded_torso(const Graph& g, const Star& star);

struct TorsoResult {
    Graph torso;
    std::map<Vertex, VertexSet> originMap;  // torso vertex -> host vertices it stands for
    Vertex representative(Vertex hostVertex) const;
};

TorsoResult compressed_torso(const Graph& g, const Star& star);

}  // namespace tetra
