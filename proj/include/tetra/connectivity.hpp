#pragma once

#include <vector>

#include "tetra/graph.hpp"

namespace tetra {

struct PathFamily {
    int count = 0;
    std::vector<VertexSet> paths;  // each path listed from its x-end to its y-end
};

struct StrongSeparation {
    VertexSet sideA, sideB;
    int order = 0;
};

// Maximum number of x-y paths that are internally disjoint and whose interiors
// avoid x and y. Every x-y edge counts as a path of length one.
PathFamily max_independent_paths(const Graph& g, const VertexSet& x, const VertexSet& y);
StrongSeparation min_strong_separation(const Graph& g, const VertexSet& x, const VertexSet& y);
int min_strong_separation_order(const Graph& g, const VertexSet& x, const VertexSet& y);

// Index/mask form used by the engines: paths may only use vertices in `allowed`
// (x and y must lie inside it). Stops early once `cap` paths are found.
int independent_path_count(const Graph& g, Mask x, Mask y, Mask allowed, int cap);

bool is_k_connected(const Graph& g, int k);
int vertex_connectivity(const Graph& g);
bool is_quasi_k_connected(const Graph& g, int k);

// All vertex sets of size k whose deletion disconnects g.
std::vector<VertexSet> k_separators(const Graph& g, int k);

}  // namespace tetra
