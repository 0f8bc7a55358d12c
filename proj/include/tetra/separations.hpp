#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "tetra/graph.hpp"

namespace tetra {

// Mixed-separation (A,B) of a host graph; sides are index masks of the host.
struct Sep {
    Mask a = 0, b = 0;
    Sep reversed() const { return {b, a}; }
    Mask strict_a() const { return a & ~b; }
    Mask strict_b() const { return b & ~a; }
    Mask cut() const { return a & b; }
    bool proper() const { return strict_a() && strict_b(); }
    auto operator<=>(const Sep&) const = default;
};

// Label-based form of a separation, for interfaces.
struct MixedSeparation {
    VertexSet sideA, sideB;
    bool operator==(const MixedSeparation&) const = default;
};

Sep to_sep(const Graph& g, const MixedSeparation& s);
MixedSeparation to_labels(const Graph& g, Sep s);

// Edge between dense indices, oriented with its A-side end first when it
// belongs to a separator.
struct IEdge {
    int u = 0, v = 0;
    bool operator==(const IEdge&) const = default;
    auto operator<=>(const IEdge&) const = default;
};

struct Separator {
    Mask vertices = 0;
    std::vector<IEdge> edges;
    int order() const { return popcount(vertices) + static_cast<int>(edges.size()); }
};

// An element of a separator: a vertex (u) or an edge (u in A\B, v in B\A).
struct Element {
    bool is_edge = false;
    int u = 0, v = 0;
    Mask hat() const { return is_edge ? (bit(u) | bit(v)) : bit(u); }
    bool operator==(const Element&) const = default;
};

bool covers(const Graph& g, Sep s);
Separator separator_of(const Graph& g, Sep s);
Separator separator_of(const Graph& g, const MixedSeparation& s);
std::vector<Element> separator_elements(const Graph& g, Sep s);
int order_of(const Graph& g, Sep s);

// Canonical total order: lexicographic on (sorted A, sorted B).
bool canonical_less(Sep x, Sep y);
void sort_canonical(std::vector<Sep>& v);

inline bool leq(Sep x, Sep y) { return (x.a & ~y.a) == 0 && (y.b & ~x.b) == 0; }
inline bool less(Sep x, Sep y) { return leq(x, y) && x != y; }
bool is_nested(Sep x, Sep y);
bool is_nested(const Graph& g, const MixedSeparation& x, const MixedSeparation& y);

enum Corner { AC = 0, AD = 1, BC = 2, BD = 3 };
enum LinkId { LinkA = 0, LinkB = 1, LinkC = 2, LinkD = 3 };

struct Link {
    Mask vertices = 0;
    std::vector<IEdge> edges;
    int size() const { return popcount(vertices) + static_cast<int>(edges.size()); }
};

struct Dangling {
    IEdge edge;
    int from = 0;     // link holding the endvertex
    int through = 0;  // link holding the edge
};

struct CrossDiagram {
    Sep first, second;
    std::array<Mask, 4> corners{};
    std::array<Link, 4> links{};
    Mask vertexCentre = 0;
    std::vector<IEdge> diagonal, jumping;
    std::vector<Dangling> dangling;
    int centre_size() const { return popcount(vertexCentre) + static_cast<int>(diagonal.size()); }
};

CrossDiagram corner_diagram(const Graph& g, Sep first, Sep second);
bool is_potter_corner(const Graph& g, const CrossDiagram& d, Corner c);
int corner_separator_order(const CrossDiagram& d, Corner c);

// Corner between link x (of the first separation) and link y (of the second).
Corner corner_between(int x, int y);

struct CrossingReport {
    int linkSize = -1;
    bool holds = false;
    std::string failure;
};

// Checks link sizes, centre size and dangling edges of two crossing tetra-separations.
CrossingReport crossing_report(const Graph& g, const CrossDiagram& d);
// Requires two crossing tetra-separations; throws InputError on a violated
// precondition and InvariantError when a conclusion fails.
int crossing_classification(const Graph& g, Sep first, Sep second);

}  // namespace tetra
