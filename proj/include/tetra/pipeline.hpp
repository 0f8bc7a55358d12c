#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tetra/recognizers.hpp"

namespace tetra {

struct BlockCutTree {
    std::vector<VertexSet> blocks;             // sorted
    VertexSet cutVertices;                     // sorted
    std::vector<std::pair<int, Vertex>> edges;  // (block index, cut vertex)
};

BlockCutTree block_cut_decomposition(const Graph& g);

// Vertex 2-separations (both orientations) of a 2-connected graph.
std::vector<Sep> two_separations(const Graph& g);
// Half-connected and G[A] or G[B] 2-connected.
bool totally_nested_two_separation(const Graph& g, Sep s);

enum class TutteTorso { ThreeConnected, Cycle, K2 };
std::string to_string(TutteTorso t);

struct TutteDecomposition {
    std::vector<Sep> nested;
    MixedTreeDecomposition tree;
    std::vector<Graph> torsos;
    std::vector<TutteTorso> kinds;
};

TutteDecomposition tutte_decomposition(const Graph& g);

struct TetraDecomposition {
    std::vector<Sep> all;     // every tetra-separation
    std::vector<Sep> nested;  // the totally-nested ones
    MixedTreeDecomposition tree;
    std::vector<TorsoResult> torsos;
    std::vector<TorsoClass> classes;
};

// Requires a 4-connected graph.
TetraDecomposition tetra_decompose(const Graph& g, NestedMethod method = NestedMethod::Characterization,
                                   const EnumerationBound& bound = {}, int threads = 1);

// Adds one vertex labelled max+1 adjacent to every vertex.
Graph apex_lift(const Graph& g);

std::vector<Sep> strict_tri_separations(const Graph& g, const EnumerationBound& bound = {});

enum class TriVerdict { Quasi4Connected, GeneralisedWheel, ThickenedK3m, SprinkledK3m };
std::string to_string(TriVerdict v);

struct TriClass {
    TriVerdict verdict = TriVerdict::Quasi4Connected;
    VertexSet centre;  // wheel centre or left side of the K3,m
    int m = 0;
};

struct TriDecomposition {
    Graph lifted;
    Vertex apex = 0;
    std::vector<Sep> all;     // strict tri-separations of g
    std::vector<Sep> nested;  // totally-nested ones
    MixedTreeDecomposition tree;
    std::vector<TorsoResult> torsos;
    std::vector<TriClass> classes;
};

Sep lift_separation(const Graph& g, Sep s);
Sep drop_apex(const Graph& g, Sep lifted);

TriDecomposition tri_decompose(const Graph& g, NestedMethod method = NestedMethod::Characterization,
                               const EnumerationBound& bound = {});
bool verify_tri_class(const Graph& g, const Graph& torso, const TriClass& c);

struct YDelta {
    VertexSet degreeThree;
    Graph subdivided;    // degree-3 to degree-3 edges subdivided
    Graph triangulated;  // each neighbourhood of a degree-3 vertex made a triangle
    Graph result;        // triangulated minus the degree-3 vertices
};

YDelta ydelta(const Graph& h);

enum class RefinementOutcome { ReducesToNestedStrict, Negligible };

// `t` must be a totally-nested tri-separation in the weaker sense, supplied by
// the caller. Throws InvariantError when neither outcome holds.
RefinementOutcome trisep_refinement_check(const Graph& g, Sep t, const std::vector<Sep>& strictAll);

struct PipelineNode {
    std::string stage;
    Graph graph;
    std::string verdict;
    int parent = -1;
    std::vector<int> children;
};

struct PipelineReport {
    std::vector<PipelineNode> nodes;
};

PipelineReport full_pipeline(const Graph& g, const EnumerationBound& bound = {});

}  // namespace tetra
