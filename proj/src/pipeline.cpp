#include "tetra/pipeline.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "tetra/connectivity.hpp"

namespace tetra {

BlockCutTree block_cut_decomposition(const Graph& g) {
    if (g.order() == 0 || components(g).size() != 1)
        throw InputError("block-cutvertex decomposition needs a connected graph");
    int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> isCut(n, 0);
    std::vector<std::pair<int, int>> stack;
    std::vector<VertexSet> blocks;
    int time = 0;
    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = time++;
        int children = 0;
        for (int v : g.nbrs(u)) {
            if (disc[v] == -1) {
                ++children;
                stack.push_back({u, v});
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if ((parent == -1 && children > 1) || (parent != -1 && low[v] >= disc[u])) isCut[u] = 1;
                if (low[v] >= disc[u]) {
                    std::set<Vertex> block;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        block.insert(g.label(e.first));
                        block.insert(g.label(e.second));
                        if (e.first == u && e.second == v) break;
                    }
                    blocks.push_back({block.begin(), block.end()});
                }
            } else if (v != parent && disc[v] < disc[u]) {
                stack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    dfs(0, -1);
    if (n == 1) blocks.push_back({g.label(0)});
    BlockCutTree t;
    std::sort(blocks.begin(), blocks.end());
    t.blocks = blocks;
    for (int v = 0; v < n; ++v)
        if (isCut[v]) t.cutVertices.push_back(g.label(v));
    for (std::size_t b = 0; b < t.blocks.size(); ++b)
        for (Vertex c : t.cutVertices)
            if (std::binary_search(t.blocks[b].begin(), t.blocks[b].end(), c))
                t.edges.push_back({static_cast<int>(b), c});
    return t;
}

std::vector<Sep> two_separations(const Graph& g) {
    g.require_mask("two_separations");
    std::vector<Sep> out;
    Mask all = g.all();
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y) {
            Mask cut = bit(x) | bit(y);
            auto comps = components_within(g, all & ~cut);
            int c = static_cast<int>(comps.size());
            if (c < 2) continue;
            if (c > 20) throw CapabilityError("two_separations: too many components");
            for (std::uint32_t pick = 1; pick + 1 < (1U << c); ++pick) {
                Mask a = cut, b = cut;
                for (int i = 0; i < c; ++i) ((pick >> i) & 1U ? a : b) |= comps[i];
                out.push_back({a, b});
            }
        }
    sort_canonical(out);
    return out;
}

bool totally_nested_two_separation(const Graph& g, Sep s) {
    if (!connected_within(g, s.strict_a()) && !connected_within(g, s.strict_b())) return false;
    auto twoConnected = [&](Mask side) { return is_k_connected(induced_subgraph(g, g.labels_of(side)), 2); };
    return twoConnected(s.a) || twoConnected(s.b);
}

std::string to_string(TutteTorso t) {
    switch (t) {
        case TutteTorso::ThreeConnected: return "3-connected";
        case TutteTorso::Cycle: return "cycle";
        case TutteTorso::K2: return "K2";
    }
    return "unknown";
}

namespace {

bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || g.size() != g.order()) return false;
    for (Vertex v : g.vertices())
        if (g.degree(v) != 2) return false;
    return components(g).size() == 1;
}

}  // namespace

TutteDecomposition tutte_decomposition(const Graph& g) {
    if (!is_k_connected(g, 2)) throw InputError("Tutte decomposition needs a 2-connected graph");
    auto all = two_separations(g);
    TutteDecomposition d;
    std::vector<Sep> oracle;
    for (Sep s : all) {
        if (totally_nested_two_separation(g, s)) d.nested.push_back(s);
        if (std::all_of(all.begin(), all.end(), [&](Sep t) { return is_nested(s, t); })) oracle.push_back(s);
    }
    if (oracle != d.nested) throw InvariantError("totally-nested 2-separations differ between oracle and characterization");
    d.tree = build_decomposition(g, d.nested);
    for (const auto& st : d.tree.nodes) {
        Graph t = compressed_torso(g, st).torso;
        TutteTorso kind;
        if (t.order() == 2 && t.size() == 1) kind = TutteTorso::K2;
        else if (is_cycle_graph(t)) kind = TutteTorso::Cycle;
        else if (is_k_connected(t, 3)) kind = TutteTorso::ThreeConnected;
        else throw InvariantError("Tutte torso is neither 3-connected, a cycle nor a K2");
        d.torsos.push_back(t);
        d.kinds.push_back(kind);
    }
    for (auto [key, s] : d.tree.edgeMap) {
        if (popcount(s.cut()) != 2 || !separator_of(g, s).edges.empty())
            throw InvariantError("Tutte adhesion is not a pair of vertices");
        if (d.kinds[key.first] == TutteTorso::Cycle && d.kinds[key.second] == TutteTorso::Cycle) {
            int x = lowest(s.cut()), y = lowest(s.cut() & (s.cut() - 1));
            if (!g.adjacent_idx(x, y)) throw InvariantError("adhesion between two cycle torsos is not an edge");
        }
    }
    for (std::size_t i = 0; i < d.kinds.size(); ++i) {
        if (d.kinds[i] != TutteTorso::K2 || d.kinds.size() == 1) continue;
        auto nb = d.tree.neighbours(static_cast<int>(i));
        if (nb.size() < 3 || std::any_of(nb.begin(), nb.end(), [&](int j) { return d.kinds[j] == TutteTorso::K2; }))
            throw InvariantError("K2 torso violates the neighbour rule");
    }
    return d;
}

Graph apex_lift(const Graph& g) {
    Vertex apex = g.max_label() + 1;
    auto vs = g.vertices();
    auto es = g.edges();
    for (Vertex v : vs) es.push_back({v, apex});
    vs.push_back(apex);
    return Graph(vs, es);
}

Sep lift_separation(const Graph& g, Sep s) {
    Mask apex = bit(g.order());
    return {s.a | apex, s.b | apex};
}

Sep drop_apex(const Graph& g, Sep lifted) {
    Mask keep = g.all();
    return {lifted.a & keep, lifted.b & keep};
}

std::vector<Sep> strict_tri_separations(const Graph& g, const EnumerationBound& bound) {
    if (!is_k_connected(g, 3)) throw InputError("strict tri-separations need a 3-connected graph");
    Graph lifted = apex_lift(g);
    std::vector<Sep> out;
    for (Sep s : enumerate_tetra_separations(lifted, bound)) out.push_back(drop_apex(g, s));
    sort_canonical(out);
    return out;
}

std::string to_string(TriVerdict v) {
    switch (v) {
        case TriVerdict::Quasi4Connected: return "Quasi4Connected";
        case TriVerdict::GeneralisedWheel: return "GeneralisedWheel";
        case TriVerdict::ThickenedK3m: return "ThickenedK3m";
        case TriVerdict::SprinkledK3m: return "SprinkledK3m";
    }
    return "Unknown";
}

bool verify_tri_class(const Graph& g, const Graph& torso, const TriClass& c) {
    switch (c.verdict) {
        case TriVerdict::Quasi4Connected:
            // A K4 lifted torso leaves a triangle.
            return is_quasi_k_connected(torso, 4) || (torso.order() == 3 && torso.size() == 3);
        case TriVerdict::GeneralisedWheel:
            return c.centre.size() == 1 && generalised_wheel_with_centre(torso, c.centre[0]).has_value();
        case TriVerdict::ThickenedK3m: {
            auto w = km_with_left(torso, c.centre);
            return c.centre.size() == 3 && w && w->thickened && w->m == c.m;
        }
        case TriVerdict::SprinkledK3m: {
            auto w = km_with_left(g, c.centre);
            return c.centre.size() == 3 && w && w->m == c.m && c.m >= 4;
        }
    }
    return false;
}

TriDecomposition tri_decompose(const Graph& g, NestedMethod method, const EnumerationBound& bound) {
    if (!is_k_connected(g, 3)) throw InputError("tri-decompose needs a 3-connected graph");
    TriDecomposition d;
    d.lifted = apex_lift(g);
    d.apex = d.lifted.max_label();
    auto liftedAll = enumerate_tetra_separations(d.lifted, bound);
    auto liftedNested = totally_nested_among(d.lifted, liftedAll, method);
    for (Sep s : liftedAll) d.all.push_back(drop_apex(g, s));
    for (Sep s : liftedNested) d.nested.push_back(drop_apex(g, s));
    sort_canonical(d.all);
    sort_canonical(d.nested);
    d.tree = build_decomposition(g, d.nested);
    for (const auto& st : d.tree.nodes) {
        Star lifted;
        for (Sep s : st) lifted.push_back(lift_separation(g, s));
        sort_canonical(lifted);
        auto hat = compressed_torso(d.lifted, lifted);
        auto own = compressed_torso(g, st);
        if (remove_vertices(hat.torso, {d.apex}) != own.torso)
            throw InvariantError("torso of a star differs from the lifted torso minus the apex");
        auto c = classify_torso(d.lifted, lifted, liftedAll);
        TriClass t;
        VertexSet rest;
        bool hasApex = false;
        for (Vertex v : c.centre) {
            if (v == d.apex) hasApex = true;
            else rest.push_back(v);
        }
        switch (c.verdict) {
            case Verdict::Quasi5Connected:
                t.verdict = TriVerdict::Quasi4Connected;
                break;
            case Verdict::GeneralisedDoubleWheel:
                if (!hasApex) throw InvariantError("double-wheel centre of a lifted torso misses the apex");
                t.verdict = TriVerdict::GeneralisedWheel;
                t.centre = rest;
                break;
            case Verdict::ThickenedK4m:
            case Verdict::SprinkledK4m:
                if (!hasApex) throw InvariantError("K4,m left side of a lifted torso misses the apex");
                t.verdict = c.verdict == Verdict::ThickenedK4m ? TriVerdict::ThickenedK3m : TriVerdict::SprinkledK3m;
                t.centre = rest;
                t.m = c.m;
                break;
            case Verdict::CycleOfSmallTorsos:
                throw InvariantError("lifted torso classified as a cycle of small torsos");
        }
        if (!verify_tri_class(g, own.torso, t))
            throw InvariantError("tri-torso does not match its class " + to_string(t.verdict) + " (" +
                                 std::to_string(own.torso.order()) + " vertices, " +
                                 std::to_string(own.torso.size()) + " edges)");
        d.torsos.push_back(own);
        d.classes.push_back(t);
    }
    return d;
}

YDelta ydelta(const Graph& h) {
    YDelta y;
    for (Vertex v : h.vertices())
        if (h.degree(v) == 3) y.degreeThree.push_back(v);
    auto inU = [&](Vertex v) { return std::binary_search(y.degreeThree.begin(), y.degreeThree.end(), v); };
    Vertex fresh = h.max_label() + 1;
    VertexSet vs = h.vertices();
    std::vector<Edge> es;
    for (auto [a, b] : h.edges()) {
        if (inU(a) && inU(b)) {
            Vertex s = fresh++;
            vs.push_back(s);
            es.push_back({a, s});
            es.push_back({b, s});
        } else {
            es.push_back({a, b});
        }
    }
    y.subdivided = Graph(vs, es);
    for (Vertex u : y.degreeThree) {
        auto nb = y.subdivided.neighbours(u);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) es.push_back(normalised(nb[i], nb[j]));
    }
    y.triangulated = Graph(vs, es);
    y.result = remove_vertices(y.triangulated, y.degreeThree);
    return y;
}

RefinementOutcome trisep_refinement_check(const Graph& g, Sep t, const std::vector<Sep>& strictAll) {
    Sep r = left_right_reduction(g, t);
    if (check_strict_separation(g, r, 3).ok &&
        std::all_of(strictAll.begin(), strictAll.end(), [&](Sep s) { return is_nested(r, s); }))
        return RefinementOutcome::ReducesToNestedStrict;
    if (popcount(t.strict_a()) <= 1 || popcount(t.strict_b()) <= 1) return RefinementOutcome::Negligible;
    throw InvariantError("tri-separation neither reduces to a totally-nested strict tri-separation nor is negligible");
}

namespace {

class PipelineBuilder {
public:
    explicit PipelineBuilder(const EnumerationBound& bound) : bound_(bound) {}

    template <class F>
    auto guarded(const char* stage, F&& f) {
        try {
            return f();
        } catch (const CapabilityError& e) {
            throw CapabilityError(std::string(stage) + " stage: " + e.what());
        }
    }

    int add(std::string stage, Graph g, std::string verdict, int parent) {
        PipelineNode n{std::move(stage), std::move(g), std::move(verdict), parent, {}};
        report.nodes.push_back(std::move(n));
        int id = static_cast<int>(report.nodes.size()) - 1;
        if (parent >= 0) report.nodes[parent].children.push_back(id);
        return id;
    }

    void component(const Graph& c, int parent) {
        int id = add("component", c, "", parent);
        if (c.order() <= 2) {
            report.nodes[id].verdict = "basic";
            return;
        }
        auto bc = block_cut_decomposition(c);
        for (const auto& b : bc.blocks) {
            Graph block = induced_subgraph(c, b);
            if (block.order() <= 2) add("block", block, "basic", id);
            else tutte(block, add("block", block, "2-connected", id));
        }
    }

    void tutte(const Graph& block, int parent) {
        auto t = guarded("tutte", [&] { return tutte_decomposition(block); });
        for (std::size_t i = 0; i < t.torsos.size(); ++i) {
            int id = add("tutte-torso", t.torsos[i], to_string(t.kinds[i]), parent);
            if (t.kinds[i] == TutteTorso::ThreeConnected) tri(t.torsos[i], id);
        }
    }

    void tri(const Graph& torso, int parent) {
        auto d = guarded("tri-decompose", [&] { return tri_decompose(torso, NestedMethod::Characterization, bound_); });
        for (std::size_t i = 0; i < d.torsos.size(); ++i) {
            const Graph& t = d.torsos[i].torso;
            const auto& c = d.classes[i];
            int id = add("tri-torso", t, to_string(c.verdict), parent);
            if (c.verdict != TriVerdict::Quasi4Connected) continue;
            if (t.order() <= 6) {
                report.nodes[id].verdict += " (basic)";
                continue;
            }
            Graph y = ydelta(t).result;
            if (!is_k_connected(y, 4)) throw InvariantError("Y-Delta of a quasi-4-connected torso is not 4-connected");
            tetra(y, add("ydelta", y, "4-connected", id));
        }
    }

    void tetra(const Graph& g, int parent) {
        auto d = guarded("tetra", [&] { return tetra_decompose(g, NestedMethod::Characterization, bound_); });
        for (std::size_t i = 0; i < d.torsos.size(); ++i)
            add("tetra-torso", d.torsos[i].torso, to_string(d.classes[i].verdict), parent);
    }

    PipelineReport report;

private:
    EnumerationBound bound_;
};

}  // namespace

TetraDecomposition tetra_decompose(const Graph& g, NestedMethod method, const EnumerationBound& bound,
                                   int threads) {
    if (!is_k_connected(g, 4)) throw InputError("decompose requires a 4-connected graph");
    TetraDecomposition d;
    auto r = totally_nested_set(g, method, bound, threads);
    d.all = std::move(r.all);
    d.nested = std::move(r.nested);
    d.tree = build_decomposition(g, d.nested);
    for (const auto& st : d.tree.nodes) {
        d.torsos.push_back(compressed_torso(g, st));
        d.classes.push_back(classify_torso(g, st, d.all));
    }
    return d;
}

PipelineReport full_pipeline(const Graph& g, const EnumerationBound& bound) {
    PipelineBuilder b(bound);
    int root = b.add("input", g, "", -1);
    for (const auto& comp : components(g)) b.component(induced_subgraph(g, comp), root);
    return b.report;
}

}  // namespace tetra
