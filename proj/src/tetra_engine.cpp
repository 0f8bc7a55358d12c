#include "tetra/tetra_engine.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "tetra/connectivity.hpp"

namespace tetra {

void check_bound(const Graph& g, const EnumerationBound& bound, const char* stage) {
    if (g.order() > bound.maxVertices || g.order() + g.size() > bound.maxVerticesPlusEdges)
        throw CapabilityError(std::string(stage) + ": graph exceeds the enumeration bound (|V|=" +
                              std::to_string(g.order()) + ", |V|+|E|=" +
                              std::to_string(g.order() + g.size()) + ")");
    g.require_mask(stage);
}

std::string to_string(SepFailure f) {
    switch (f) {
        case SepFailure::None: return "none";
        case SepFailure::Cover: return "cover";
        case SepFailure::Improper: return "improper";
        case SepFailure::Order: return "order";
        case SepFailure::Degree: return "degree";
        case SepFailure::Matching: return "matching";
    }
    return "unknown";
}

bool satisfies_degree_condition(const Graph& g, Sep s) {
    Mask sa = s.strict_a(), sb = s.strict_b();
    bool ok = true;
    for_each_bit(s.cut(), [&](int v) {
        if (popcount(g.adj(v) & sa) < 2 || popcount(g.adj(v) & sb) < 2) ok = false;
    });
    return ok;
}

bool satisfies_matching_condition(const Graph& g, Sep s) {
    Mask sa = s.strict_a(), sb = s.strict_b();
    bool ok = true;
    for_each_bit(sa, [&](int u) { ok = ok && popcount(g.adj(u) & sb) <= 1; });
    for_each_bit(sb, [&](int u) { ok = ok && popcount(g.adj(u) & sa) <= 1; });
    return ok;
}

SepCheck check_strict_separation(const Graph& g, Sep s, int k) {
    if (!covers(g, s)) return {false, SepFailure::Cover};
    if (!s.proper()) return {false, SepFailure::Improper};
    if (order_of(g, s) != k) return {false, SepFailure::Order};
    if (!satisfies_degree_condition(g, s)) return {false, SepFailure::Degree};
    if (!satisfies_matching_condition(g, s)) return {false, SepFailure::Matching};
    return {true, SepFailure::None};
}

namespace {

std::vector<Mask> subsets_of_size(Mask pool, int k) {
    std::vector<Mask> out;
    std::function<void(Mask, Mask, int)> rec = [&](Mask rest, Mask chosen, int need) {
        if (need == 0) {
            out.push_back(chosen);
            return;
        }
        if (popcount(rest) < need) return;
        int v = lowest(rest);
        rest &= rest - 1;
        rec(rest, chosen | bit(v), need - 1);
        rec(rest, chosen, need);
    };
    rec(pool, 0, k);
    return out;
}

struct CandidateWorker {
    const Graph& g;
    int k;
    std::vector<Sep> found;

    void run_cut(Mask T) {
        int n = g.order();
        Mask rest = g.all() & ~T;
        bool viable = true;
        for_each_bit(T, [&](int v) { viable = viable && popcount(g.adj(v) & rest) >= 4; });
        if (!viable) return;
        int need = k - popcount(T);
        std::vector<IEdge> es;
        for_each_bit(rest, [&](int u) {
            for_each_bit(g.adj(u) & rest & ~(bit(u + 1) - 1), [&](int v) { es.push_back({u, v}); });
        });
        if (need == 0) {
            if (!connected_within(g, rest)) colourings(T, rest, {});
            return;
        }
        std::vector<IEdge> chosen;
        std::function<void(std::size_t, Mask)> pick = [&](std::size_t from, Mask usedEnds) {
            if (static_cast<int>(chosen.size()) == need) {
                colourings(T, rest, chosen);
                return;
            }
            for (std::size_t i = from; i < es.size(); ++i) {
                Mask ends = bit(es[i].u) | bit(es[i].v);
                if (ends & usedEnds) continue;
                chosen.push_back(es[i]);
                pick(i + 1, usedEnds | ends);
                chosen.pop_back();
            }
        };
        pick(0, 0);
        (void)n;
    }

    void colourings(Mask T, Mask rest, const std::vector<IEdge>& M) {
        // Components of g - T - M.
        std::vector<Mask> adjm(g.order());
        for_each_bit(rest, [&](int v) { adjm[v] = g.adj(v) & rest; });
        for (auto e : M) {
            adjm[e.u] &= ~bit(e.v);
            adjm[e.v] &= ~bit(e.u);
        }
        std::vector<Mask> comps;
        std::vector<int> compOf(g.order(), -1);
        Mask left = rest;
        while (left) {
            Mask comp = bit(lowest(left)), frontier = comp;
            while (frontier) {
                Mask nx = 0;
                for_each_bit(frontier, [&](int v) { nx |= adjm[v]; });
                nx &= ~comp;
                comp |= nx;
                frontier = nx;
            }
            for_each_bit(comp, [&](int v) { compOf[v] = static_cast<int>(comps.size()); });
            comps.push_back(comp);
            left &= ~comp;
        }
        int c = static_cast<int>(comps.size());
        if (c < 2) return;
        // Parity constraints: every M-edge joins components of opposite colours.
        std::vector<std::vector<int>> cons(c);
        for (auto e : M) {
            int x = compOf[e.u], y = compOf[e.v];
            if (x == y) return;
            cons[x].push_back(y);
            cons[y].push_back(x);
        }
        std::vector<int> colour(c, -1), group(c, -1);
        std::vector<std::vector<int>> groups;
        for (int s = 0; s < c; ++s) {
            if (colour[s] != -1) continue;
            int gid = static_cast<int>(groups.size());
            groups.push_back({});
            colour[s] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                group[x] = gid;
                groups[gid].push_back(x);
                for (int y : cons[x]) {
                    if (colour[y] == -1) {
                        colour[y] = 1 - colour[x];
                        stack.push_back(y);
                    } else if (colour[y] == colour[x]) {
                        return;
                    }
                }
            }
        }
        int r = static_cast<int>(groups.size());
        if (r > 30) throw CapabilityError("enumeration: too many components for a candidate separator");
        for (std::uint64_t flip = 0; flip < (std::uint64_t{1} << r); ++flip) {
            Mask a = T, b = T;
            for (int x = 0; x < c; ++x) {
                int col = colour[x] ^ static_cast<int>((flip >> group[x]) & 1U);
                (col == 0 ? a : b) |= comps[x];
            }
            Sep s{a, b};
            if (!s.proper()) continue;
            if (!satisfies_degree_condition(g, s)) continue;
            found.push_back(s);
        }
    }
};

}  // namespace

std::vector<Sep> enumerate_strict_separations(const Graph& g, int k, const EnumerationBound& bound,
                                              bool checkConnectivity, int threads) {
    check_bound(g, bound, "enumerate");
    if (checkConnectivity && !is_k_connected(g, k))
        throw InputError("enumeration requires a " + std::to_string(k) + "-connected graph");
    std::vector<Mask> cuts;
    for (int t = 0; t <= k; ++t) {
        auto ss = subsets_of_size(g.all(), t);
        cuts.insert(cuts.end(), ss.begin(), ss.end());
    }
    threads = std::max(1, threads);
    std::vector<CandidateWorker> workers(threads, CandidateWorker{g, k, {}});
    auto work = [&](int w) {
        for (std::size_t i = w; i < cuts.size(); i += threads) workers[w].run_cut(cuts[i]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::vector<Sep> out;
    for (auto& w : workers) out.insert(out.end(), w.found.begin(), w.found.end());
    sort_canonical(out);
    return out;
}

std::vector<Sep> enumerate_tetra_separations(const Graph& g, const EnumerationBound& bound, int threads) {
    return enumerate_strict_separations(g, 4, bound, true, threads);
}

std::vector<Sep> all_mixed_separations(const Graph& g, int k, int maxVertices) {
    if (g.order() > maxVertices)
        throw CapabilityError("exhaustive separation search is limited to " + std::to_string(maxVertices) + " vertices");
    std::vector<Sep> out;
    Mask all = g.all();
    for (int t = 0; t <= std::min(k, g.order()); ++t)
        for (Mask cut : subsets_of_size(all, t)) {
            Mask rest = all & ~cut;
            // Walk every subset of `rest` as the strict A side.
            Mask sa = 0;
            while (true) {
                Mask sb = rest & ~sa;
                int order = t;
                for_each_bit(sa, [&](int u) { order += popcount(g.adj(u) & sb); });
                if (order == k) out.push_back({sa | cut, sb | cut});
                if (sa == rest) break;
                sa = (sa - rest) & rest;
            }
        }
    sort_canonical(out);
    return out;
}

Sep left_reduction(const Graph& g, Sep s) {
    Mask L = 0, sa = s.strict_a();
    for_each_bit(s.cut(), [&](int v) {
        if (popcount(g.adj(v) & sa) <= 1) L |= bit(v);
    });
    return {s.a & ~L, s.b};
}

Sep right_reduction(const Graph& g, Sep s) {
    Mask R = 0, sb = s.strict_b();
    for_each_bit(s.cut(), [&](int v) {
        if (popcount(g.adj(v) & sb) <= 1) R |= bit(v);
    });
    return {s.a, s.b & ~R};
}

Sep left_right_reduction(const Graph& g, Sep s) { return right_reduction(g, left_reduction(g, s)); }
Sep right_left_reduction(const Graph& g, Sep s) { return left_reduction(g, right_reduction(g, s)); }

bool reduction_characterization(const Graph& g, Sep s) {
    Mask sa = s.strict_a(), sb = s.strict_b();
    int lowLeft = 0;
    for_each_bit(s.cut(), [&](int v) {
        if (popcount(g.adj(v) & sa) <= 1) ++lowLeft;
    });
    int sepEdges = order_of(g, s) - popcount(s.cut());
    bool predicted = popcount(sa) >= 2 && lowLeft >= 2 - popcount(sb) && (popcount(sb) >= 2 || sepEdges <= 1);
    bool direct = is_tetra_separation(g, left_right_reduction(g, s));
    if (predicted != direct)
        throw InvariantError("reduction characterization disagrees with the direct test");
    return predicted;
}

bool is_half_connected(const Graph& g, Sep s) {
    return connected_within(g, s.strict_a()) || connected_within(g, s.strict_b());
}

bool is_3_linked_pair(const Graph& g, Sep s, const Element& x1, const Element& x2) {
    auto elems = separator_elements(g, s);
    Mask others = 0;
    for (auto& e : elems) {
        if (e == x1 || e == x2) continue;
        if (e.is_edge) return true;
        others |= bit(e.u);
    }
    Mask h1 = x1.hat(), h2 = x2.hat();
    if (!x1.is_edge || !x2.is_edge) {
        bool edge = false;
        for_each_bit(h1, [&](int v) { edge = edge || (g.adj(v) & h2); });
        if (edge) return true;
    }
    return independent_path_count(g, h1, h2, g.all() & ~others, 3) >= 3;
}

bool is_3_linked(const Graph& g, Sep s) {
    auto elems = separator_elements(g, s);
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (!is_3_linked_pair(g, s, elems[i], elems[j])) return false;
    return true;
}

bool is_weird(const Graph& g, Sep s, const Element& p, const Element& q, Side side) {
    if (p.is_edge == q.is_edge) return false;
    const Element& e = p.is_edge ? p : q;
    const Element& w = p.is_edge ? q : p;
    if (side == Side::A) return popcount(g.adj(w.u) & s.a & ~bit(e.u)) == 1;
    return popcount(g.adj(w.u) & s.b & ~bit(e.v)) == 1;
}

std::vector<Bipartition> balanced_bipartitions(const Graph& g, Sep s) {
    auto e = separator_elements(g, s);
    if (e.size() != 4) throw InputError("balanced bipartitions need a separator of size four");
    return {{{e[0], e[1]}, {e[2], e[3]}}, {{e[0], e[2]}, {e[1], e[3]}}, {{e[0], e[3]}, {e[1], e[2]}}};
}

namespace {

Mask hat_of(const std::vector<Element>& p) {
    Mask m = 0;
    for (auto& e : p) m |= e.hat();
    return m;
}

Mask vertex_elements(const std::vector<Element>& p) {
    Mask m = 0;
    for (auto& e : p)
        if (!e.is_edge) m |= bit(e.u);
    return m;
}

bool any_edge_between(const Graph& g, Mask x, Mask y) {
    bool found = false;
    for_each_bit(x, [&](int v) { found = found || (g.adj(v) & y); });
    return found;
}

bool weird_pair(const Graph& g, Sep s, const std::vector<Element>& p, Side side) {
    return p.size() == 2 && is_weird(g, s, p[0], p[1], side);
}

bool one_potter_direction(const Graph& g, Sep s, const std::vector<Element>& p, const std::vector<Element>& q,
                          Side x) {
    if (!weird_pair(g, s, p, x)) return true;
    Mask Y = x == Side::A ? s.b : s.a;
    if (any_edge_between(g, vertex_elements(p), hat_of(q) & Y)) return true;
    if (any_edge_between(g, hat_of(p) & Y, vertex_elements(q))) return true;
    return independent_path_count(g, hat_of(p) & Y, hat_of(q) & Y, Y, 3) >= 3;
}

}  // namespace

bool is_potter_linked(const Graph& g, Sep s, const Bipartition& bip, int h) {
    const auto& p1 = bip.first;
    const auto& p2 = bip.second;
    switch (h) {
        case 0:
            if (any_edge_between(g, vertex_elements(p1), hat_of(p2))) return true;
            if (any_edge_between(g, hat_of(p1), vertex_elements(p2))) return true;
            return independent_path_count(g, hat_of(p1), hat_of(p2), g.all(), 5) >= 5;
        case 1:
            for (Side x : {Side::A, Side::B})
                if (!one_potter_direction(g, s, p1, p2, x) || !one_potter_direction(g, s, p2, p1, x)) return false;
            return true;
        case 2:
            return (!weird_pair(g, s, p1, Side::A) || !weird_pair(g, s, p2, Side::B)) &&
                   (!weird_pair(g, s, p1, Side::B) || !weird_pair(g, s, p2, Side::A));
        default:
            throw InputError("potter-linkedness is defined for h in {0,1,2}");
    }
}

bool is_externally_5_connected(const Graph& g, Sep s) {
    if (!is_half_connected(g, s)) return false;
    if (!is_3_linked(g, s)) return false;
    for (auto& bip : balanced_bipartitions(g, s))
        for (int h : {2, 1, 0})
            if (!is_potter_linked(g, s, bip, h)) return false;
    return true;
}

std::vector<Sep> totally_nested_among(const Graph& g, const std::vector<Sep>& all, NestedMethod method) {
    std::vector<Sep> oracle, charac;
    if (method != NestedMethod::Characterization) {
        for (auto s : all) {
            bool ok = true;
            for (auto t : all)
                if (!is_nested(s, t)) {
                    ok = false;
                    break;
                }
            if (ok) oracle.push_back(s);
        }
        if (method == NestedMethod::Oracle) return oracle;
    }
    for (auto s : all)
        if (is_externally_5_connected(g, s)) charac.push_back(s);
    if (method == NestedMethod::Both && oracle != charac)
        throw InvariantError("totally-nested set differs between oracle and characterization");
    return charac;
}

NestedResult totally_nested_set(const Graph& g, NestedMethod method, const EnumerationBound& bound, int threads) {
    NestedResult r;
    r.all = enumerate_tetra_separations(g, bound, threads);
    r.nested = totally_nested_among(g, r.all, method);
    return r;
}

bool is_4_angry(const Graph& g, const EnumerationBound& bound) {
    if (!is_k_connected(g, 4)) return false;
    return totally_nested_set(g, NestedMethod::Characterization, bound).nested.empty();
}

}  // namespace tetra
