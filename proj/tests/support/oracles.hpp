#pragma once

// Exhaustive reference implementations. They touch only the adjacency masks of
// a Graph and share no code with the library's algorithms.

#include <algorithm>
#include <functional>
#include <vector>

#include "tetra/graph.hpp"
#include "tetra/separations.hpp"

namespace oracle {

using tetra::Graph;
using tetra::Mask;
using tetra::Sep;

inline int pc(Mask m) { return __builtin_popcountll(m); }

inline Mask all_of(const Graph& g) { return g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1; }

inline bool connected(const Graph& g, Mask within) {
    if (!within) return true;
    Mask seen = within & -within, frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (int v = 0; v < g.order(); ++v)
            if (frontier >> v & 1) next |= g.adj(v);
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == within;
}

inline void for_subsets_of_size(int n, int k, const std::function<void(Mask)>& f) {
    std::function<void(int, int, Mask)> rec = [&](int from, int need, Mask cur) {
        if (!need) {
            f(cur);
            return;
        }
        for (int v = from; v <= n - need; ++v) rec(v + 1, need - 1, cur | Mask{1} << v);
    };
    rec(0, k, 0);
}

inline bool k_connected(const Graph& g, int k) {
    if (g.order() <= k) return false;
    bool ok = true;
    for (int s = 0; s < k && ok; ++s)
        for_subsets_of_size(g.order(), s, [&](Mask cut) { ok = ok && connected(g, all_of(g) & ~cut); });
    return ok;
}

// Vertex sets S with |S| = k and G - S disconnected.
inline std::vector<Mask> separators(const Graph& g, int k) {
    std::vector<Mask> out;
    for_subsets_of_size(g.order(), k, [&](Mask s) {
        if (!connected(g, all_of(g) & ~s)) out.push_back(s);
    });
    return out;
}

inline std::vector<Mask> components(const Graph& g, Mask within) {
    std::vector<Mask> out;
    while (within) {
        Mask comp = within & -within;
        for (;;) {
            Mask grow = comp;
            for (int v = 0; v < g.order(); ++v)
                if (comp >> v & 1) grow |= g.adj(v) & within;
            if (grow == comp) break;
            comp = grow;
        }
        out.push_back(comp);
        within &= ~comp;
    }
    return out;
}

// (k-1)-connected, and every vertex separation of order k-1 has a strict side of size one.
inline bool quasi_k_connected(const Graph& g, int k) {
    if (!k_connected(g, k - 1)) return false;
    for (Mask s : separators(g, k - 1)) {
        auto comps = components(g, all_of(g) & ~s);
        int c = static_cast<int>(comps.size());
        for (Mask pick = 1; pick + 1 < (Mask{1} << c); ++pick) {
            int left = 0;
            for (int i = 0; i < c; ++i)
                if (pick >> i & 1) left += pc(comps[i]);
            int right = pc(all_of(g) & ~s) - left;
            if (left >= 2 && right >= 2) return false;
        }
    }
    return true;
}

inline int crossing_edges(const Graph& g, Mask sa, Mask sb) {
    int e = 0;
    for (int v = 0; v < g.order(); ++v)
        if (sa >> v & 1) e += pc(g.adj(v) & sb);
    return e;
}

inline int order(const Graph& g, Sep s) {
    Mask sa = s.a & ~s.b, sb = s.b & ~s.a;
    return pc(s.a & s.b) + crossing_edges(g, sa, sb);
}

// Every (A, B) with A u B = V of the given order, by assigning each vertex to
// A only, B only, or both. The order of a partial assignment never drops, so
// branches past k are cut.
inline std::vector<Sep> mixed_separations(const Graph& g, int k) {
    int n = g.order();
    std::vector<Sep> out;
    std::function<void(int, Mask, Mask, int)> rec = [&](int v, Mask a, Mask b, int ord) {
        if (ord > k) return;
        if (v == n) {
            if (ord == k) out.push_back({a, b});
            return;
        }
        Mask bit = Mask{1} << v, sa = a & ~b, sb = b & ~a;
        rec(v + 1, a | bit, b, ord + pc(g.adj(v) & sb));
        rec(v + 1, a, b | bit, ord + pc(g.adj(v) & sa));
        rec(v + 1, a | bit, b | bit, ord + 1);
    };
    rec(0, 0, 0, 0);
    std::sort(out.begin(), out.end(), [](Sep x, Sep y) { return x.a != y.a ? x.a < y.a : x.b < y.b; });
    return out;
}

inline bool proper(Sep s) { return (s.a & ~s.b) && (s.b & ~s.a); }

// Each cut vertex has at least two neighbours on each strict side, and the
// crossing edges form a matching.
inline bool strict(const Graph& g, Sep s, int k) {
    Mask sa = s.a & ~s.b, sb = s.b & ~s.a;
    if (!proper(s) || order(g, s) != k) return false;
    for (int v = 0; v < g.order(); ++v) {
        if ((s.a & s.b) >> v & 1)
            if (pc(g.adj(v) & sa) < 2 || pc(g.adj(v) & sb) < 2) return false;
        if (sa >> v & 1 && pc(g.adj(v) & sb) > 1) return false;
        if (sb >> v & 1 && pc(g.adj(v) & sa) > 1) return false;
    }
    return true;
}

inline std::vector<Sep> strict_separations(const Graph& g, int k) {
    std::vector<Sep> out;
    for (Sep s : mixed_separations(g, k))
        if (strict(g, s, k)) out.push_back(s);
    return out;
}

// Degree counted against the whole of each side minus the vertex itself.
inline bool tri_separation(const Graph& g, Sep s) {
    if (!proper(s) || order(g, s) != 3) return false;
    for (int v = 0; v < g.order(); ++v)
        if ((s.a & s.b) >> v & 1) {
            Mask self = Mask{1} << v;
            if (pc(g.adj(v) & s.a & ~self) < 2 || pc(g.adj(v) & s.b & ~self) < 2) return false;
        }
    return true;
}

inline bool leq(Sep x, Sep y) { return (x.a & ~y.a) == 0 && (y.b & ~x.b) == 0; }
inline Sep rev(Sep x) { return {x.b, x.a}; }

inline bool nested(Sep x, Sep y) {
    return oracle::leq(x, y) || oracle::leq(x, rev(y)) || oracle::leq(rev(x), y) || oracle::leq(rev(x), rev(y));
}

inline std::vector<Sep> totally_nested(const std::vector<Sep>& family, const std::vector<Sep>& against) {
    std::vector<Sep> out;
    for (Sep s : family)
        if (std::all_of(against.begin(), against.end(), [&](Sep t) { return nested(s, t); })) out.push_back(s);
    return out;
}

inline Sep left_reduction(const Graph& g, Sep s) {
    Mask sa = s.a & ~s.b, drop = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((s.a & s.b) >> v & 1 && pc(g.adj(v) & sa) <= 1) drop |= Mask{1} << v;
    return {s.a & ~drop, s.b};
}

inline Sep right_reduction(const Graph& g, Sep s) { return rev(oracle::left_reduction(g, rev(s))); }

inline Sep left_right_reduction(const Graph& g, Sep s) {
    return oracle::right_reduction(g, oracle::left_reduction(g, s));
}

// The three-condition predicate for a mixed-4-separation+.
inline bool reduction_predicate(const Graph& g, Sep s) {
    Mask sa = s.a & ~s.b, sb = s.b & ~s.a, cut = s.a & s.b;
    int weak = 0;
    for (int v = 0; v < g.order(); ++v)
        if (cut >> v & 1 && pc(g.adj(v) & sa) <= 1) ++weak;
    int edges = crossing_edges(g, sa, sb);
    return pc(sa) >= 2 && weak >= 2 - pc(sb) && (pc(sb) >= 2 || edges <= 1);
}

}  // namespace oracle
