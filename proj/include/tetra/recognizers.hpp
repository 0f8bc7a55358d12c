#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tetra/decomposition.hpp"
#include "tetra/tetra_engine.hpp"

namespace tetra {

// Cyclic sequence of parts; adhesions[i] = parts[i] ∩ parts[i+1 mod m].
// Parts are vertex sets and stand for the induced subgraphs they span.
struct RingDecomposition {
    std::vector<VertexSet> parts;
    std::vector<VertexSet> adhesions;
    int adhesionSize = 0;

    int length() const { return static_cast<int>(parts.size()); }
};

// Checks (H1), (H2), the adhesion sizes and the intersection pattern.
bool is_ring_decomposition(const Graph& g, const RingDecomposition& r);
// Part plus its two adhesion sets made complete.
Graph ring_torso(const Graph& g, const RingDecomposition& r, int index);

enum class TorsoShape { Triangle, FourCycle, ThreeConnected, Other };
TorsoShape torso_shape(const Graph& torso);

struct WheelWitness {
    VertexSet centre;
    RingDecomposition ring;  // adhesion size 1, parts are K2's and triangles
    bool all_k2() const;
    bool all_triangles() const;
};

// Ring of K2's and triangles glued at single vertices, on the graph `rim`.
std::optional<RingDecomposition> recognize_wheel_rim(const Graph& rim);
std::optional<WheelWitness> generalised_double_wheel_with_centre(const Graph& x, Vertex u, Vertex v);
std::optional<WheelWitness> recognize_generalised_double_wheel(const Graph& x);
std::optional<WheelWitness> generalised_wheel_with_centre(const Graph& x, Vertex v);
std::optional<WheelWitness> recognize_generalised_wheel(const Graph& x);

struct KmWitness {
    bool thickened = false;  // left side complete
    VertexSet left;
    int m = 0;
};

// K_{k,m} with arbitrary edges inside the left k-set; least left side first.
std::optional<KmWitness> km_with_left(const Graph& x, const VertexSet& left);
std::optional<KmWitness> recognize_km(const Graph& x, int k);
inline std::optional<KmWitness> recognize_k4m(const Graph& x) { return recognize_km(x, 4); }
inline std::optional<KmWitness> recognize_k3m(const Graph& x) { return recognize_km(x, 3); }

bool recognize_quasi_5_connected(const Graph& x);

struct RingSearch {
    int adhesion = 2;
    int maxPart = 5;
    int bound = 18;
    // Called with the torso of a part; prunes the search.
    std::function<bool(const Graph&)> torsoOk;
    // Final check on a complete ring.
    std::function<bool(const RingDecomposition&)> accept;
};

std::optional<RingDecomposition> find_ring_decomposition(const Graph& x, const RingSearch& search);

// Tutte-bagel notions on an adhesion-2 ring.
bool satisfies_triangle_adhesion_rule(const Graph& g, const RingDecomposition& r);
bool good_torso(const Graph& g, const RingDecomposition& r, int index);
int alpha_factor(const Graph& g, const RingDecomposition& r);

// Cycle of triangle-torsos and 3-connected torsos on at most five vertices.
std::optional<RingDecomposition> recognize_small_torso_cycle(const Graph& x, int bound = 18);
// Tutte-bagel with only bad torsos and alpha >= 4.
std::optional<RingDecomposition> recognize_angry_bagel(const Graph& x, int bound = 18);

enum class Verdict { Quasi5Connected, CycleOfSmallTorsos, GeneralisedDoubleWheel, ThickenedK4m, SprinkledK4m };
std::string to_string(Verdict v);

struct TorsoClass {
    Verdict verdict = Verdict::Quasi5Connected;
    VertexSet centre;  // vertex-centre, as torso vertices
    int m = 0;
    std::optional<RingDecomposition> ring;
    std::optional<Sep> interlacer, partner;
};

// Re-checks a verdict against its defining property on the torso (or on g
// for the sprinkled outcome, where the torso is g itself).
bool verify_torso_class(const Graph& g, const Graph& torso, const TorsoClass& c);

struct ClassifyOptions {
    int ringBound = 18;
};

// `all` lists every tetra-separation of g; `star` is a splitting star of the
// totally-nested subset.
TorsoClass classify_torso(const Graph& g, const Star& star, const std::vector<Sep>& all,
                          const ClassifyOptions& options = {});

struct AngryReport {
    bool angry = false;
    std::vector<int> shapes;  // matching shapes of the angry theorem, ascending
    std::optional<RingDecomposition> bagel;
    std::optional<WheelWitness> wheel;
    std::optional<KmWitness> km;
    std::optional<Sep> nestedWitness;  // a totally-nested tetra-separation when not angry
};

AngryReport classify_4_angry(const Graph& g, const EnumerationBound& bound = {}, int ringBound = 18);

}  // namespace tetra
