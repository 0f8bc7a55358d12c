#pragma once

#include <string>
#include <vector>

#include "tetra/separations.hpp"

namespace tetra {

struct EnumerationBound {
    int maxVertices = 24;
    int maxVerticesPlusEdges = 120;
};

void check_bound(const Graph& g, const EnumerationBound& bound, const char* stage);

enum class SepFailure { None, Cover, Improper, Order, Degree, Matching };
std::string to_string(SepFailure f);

struct SepCheck {
    bool ok = false;
    SepFailure reason = SepFailure::None;
};

// Order-k mixed-separation with the degree- and matching-conditions; k = 4
// gives tetra-separations, k = 3 strict tri-separations.
SepCheck check_strict_separation(const Graph& g, Sep s, int k);
inline SepCheck check_tetra_separation(const Graph& g, Sep s) { return check_strict_separation(g, s, 4); }
inline bool is_tetra_separation(const Graph& g, Sep s) { return check_tetra_separation(g, s).ok; }
bool satisfies_degree_condition(const Graph& g, Sep s);
bool satisfies_matching_condition(const Graph& g, Sep s);

// Candidate-separator enumeration of all order-k separations satisfying both
// conditions, in both orientations, canonically sorted. Requires g to be
// k-connected unless `checkConnectivity` is false.
std::vector<Sep> enumerate_strict_separations(const Graph& g, int k, const EnumerationBound& bound = {},
                                              bool checkConnectivity = true, int threads = 1);
std::vector<Sep> enumerate_tetra_separations(const Graph& g, const EnumerationBound& bound = {},
                                             int threads = 1);

// Every mixed-k-separation⁺ (proper or not) by exhaustive search; small graphs only.
std::vector<Sep> all_mixed_separations(const Graph& g, int k, int maxVertices = 12);

Sep left_reduction(const Graph& g, Sep s);
Sep right_reduction(const Graph& g, Sep s);
Sep left_right_reduction(const Graph& g, Sep s);
Sep right_left_reduction(const Graph& g, Sep s);
bool reduction_characterization(const Graph& g, Sep s);

bool is_half_connected(const Graph& g, Sep s);
bool is_3_linked_pair(const Graph& g, Sep s, const Element& x1, const Element& x2);
bool is_3_linked(const Graph& g, Sep s);

enum class Side { A, B };
// pair = {edge, vertex}; false for any other shape.
bool is_weird(const Graph& g, Sep s, const Element& p, const Element& q, Side side);

struct Bipartition {
    std::vector<Element> first, second;
};
std::vector<Bipartition> balanced_bipartitions(const Graph& g, Sep s);
bool is_potter_linked(const Graph& g, Sep s, const Bipartition& bip, int h);
bool is_externally_5_connected(const Graph& g, Sep s);

enum class NestedMethod { Oracle, Characterization, Both };

struct NestedResult {
    std::vector<Sep> all;     // every tetra-separation
    std::vector<Sep> nested;  // the totally-nested ones
};

// Oracle: keep tetra-separations nested with all others. Characterization:
// keep the externally 5-connected ones. Both: compute both and require equality.
NestedResult totally_nested_set(const Graph& g, NestedMethod method = NestedMethod::Characterization,
                                const EnumerationBound& bound = {}, int threads = 1);
// Same, for an already enumerated family of separations.
std::vector<Sep> totally_nested_among(const Graph& g, const std::vector<Sep>& all, NestedMethod method);

bool is_4_angry(const Graph& g, const EnumerationBound& bound = {});

}  // namespace tetra
