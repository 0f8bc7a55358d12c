#include "tetra/separations.hpp"

#include <algorithm>

#include "tetra/tetra_engine.hpp"

namespace tetra {

Sep to_sep(const Graph& g, const MixedSeparation& s) {
    return {g.mask_of(s.sideA), g.mask_of(s.sideB)};
}

MixedSeparation to_labels(const Graph& g, Sep s) { return {g.labels_of(s.a), g.labels_of(s.b)}; }

bool covers(const Graph& g, Sep s) { return (s.a | s.b) == g.all(); }

Separator separator_of(const Graph& g, Sep s) {
    if (!covers(g, s)) throw InputError("separation sides do not cover the vertex set");
    Separator sep;
    sep.vertices = s.cut();
    Mask sa = s.strict_a(), sb = s.strict_b();
    for_each_bit(sa, [&](int u) {
        for_each_bit(g.adj(u) & sb, [&](int v) { sep.edges.push_back({u, v}); });
    });
    return sep;
}

Separator separator_of(const Graph& g, const MixedSeparation& s) { return separator_of(g, to_sep(g, s)); }

std::vector<Element> separator_elements(const Graph& g, Sep s) {
    auto sep = separator_of(g, s);
    std::vector<Element> out;
    for_each_bit(sep.vertices, [&](int v) { out.push_back({false, v, v}); });
    for (auto e : sep.edges) out.push_back({true, e.u, e.v});
    return out;
}

int order_of(const Graph& g, Sep s) {
    int k = popcount(s.cut());
    for_each_bit(s.strict_a(), [&](int u) { k += popcount(g.adj(u) & s.strict_b()); });
    return k;
}

bool canonical_less(Sep x, Sep y) {
    if (x.a != y.a) return lex_less(x.a, y.a);
    return lex_less(x.b, y.b);
}

void sort_canonical(std::vector<Sep>& v) {
    std::sort(v.begin(), v.end(), canonical_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool is_nested(Sep x, Sep y) {
    Sep xr = x.reversed(), yr = y.reversed();
    return leq(x, y) || leq(xr, y) || leq(x, yr) || leq(xr, yr);
}

bool is_nested(const Graph& g, const MixedSeparation& x, const MixedSeparation& y) {
    Sep a = to_sep(g, x), b = to_sep(g, y);
    if (!covers(g, a) || !covers(g, b)) throw InputError("separations do not belong to this graph");
    return is_nested(a, b);
}

Corner corner_between(int x, int y) {
    if (x > y) std::swap(x, y);
    // x in {A,B}, y in {C,D}
    return static_cast<Corner>((x == LinkA ? 0 : 2) + (y == LinkC ? 0 : 1));
}

CrossDiagram corner_diagram(const Graph& g, Sep s1, Sep s2) {
    CrossDiagram d;
    d.first = s1;
    d.second = s2;
    Mask A = s1.strict_a(), B = s1.strict_b(), C = s2.strict_a(), D = s2.strict_b();
    d.corners = {A & C, A & D, B & C, B & D};
    d.vertexCentre = s1.cut() & s2.cut();
    auto cornerOf = [&](int v) {
        for (int c = 0; c < 4; ++c)
            if (has(d.corners[c], v)) return c;
        return -1;
    };
    auto opposite = [](int c1, int c2) { return c1 >= 0 && c2 >= 0 && c1 + c2 == 3; };

    for (auto [a, b] : g.edges()) {
        int u = g.index(a), v = g.index(b);
        if (opposite(cornerOf(u), cornerOf(v))) d.diagonal.push_back({u, v});
    }
    auto isDiagonal = [&](IEdge e) {
        return std::find_if(d.diagonal.begin(), d.diagonal.end(), [&](IEdge f) {
                   return (f.u == e.u && f.v == e.v) || (f.u == e.v && f.v == e.u);
               }) != d.diagonal.end();
    };

    d.links[LinkA].vertices = A & s2.cut();
    d.links[LinkB].vertices = B & s2.cut();
    d.links[LinkC].vertices = C & s1.cut();
    d.links[LinkD].vertices = D & s1.cut();
    auto sep1 = separator_of(g, s1), sep2 = separator_of(g, s2);
    // Edges of S(A,B) go to the C- or D-link, edges of S(C,D) to the A- or B-link.
    for (auto e : sep1.edges) {
        if (isDiagonal(e)) continue;
        Mask ends = bit(e.u) | bit(e.v);
        if (ends & C) d.links[LinkC].edges.push_back(e);
        else if (ends & D) d.links[LinkD].edges.push_back(e);
    }
    for (auto e : sep2.edges) {
        if (isDiagonal(e)) continue;
        Mask ends = bit(e.u) | bit(e.v);
        if (ends & A) d.links[LinkA].edges.push_back(e);
        else if (ends & B) d.links[LinkB].edges.push_back(e);
    }

    for (auto [a, b] : g.edges()) {
        int u = g.index(a), v = g.index(b);
        for (int p = 0; p < 4; p += 2) {
            Mask l1 = d.links[p].vertices, l2 = d.links[p + 1].vertices;
            if ((has(l1, u) && has(l2, v)) || (has(l2, u) && has(l1, v))) d.jumping.push_back({u, v});
        }
    }

    for (int through = 0; through < 4; ++through)
        for (auto e : d.links[through].edges)
            for (int from = 0; from < 4; ++from) {
                if ((from < 2) == (through < 2)) continue;
                if (has(d.links[from].vertices, e.u) || has(d.links[from].vertices, e.v))
                    d.dangling.push_back({e, from, through});
            }
    return d;
}

bool is_potter_corner(const Graph& g, const CrossDiagram& d, Corner c) {
    if (d.corners[c]) return false;
    int x = (c == AC || c == AD) ? LinkA : LinkB;
    int y = (c == AC || c == BC) ? LinkC : LinkD;
    const Link& lx = d.links[x];
    const Link& ly = d.links[y];
    if (lx.size() != 2 || ly.size() != 2) return false;
    // u1u2 in the x-link with u2 a vertex of the y-link; u3u4 in the y-link with
    // u3 a vertex of the x-link; u2u3 an edge.
    for (auto e : lx.edges)
        for (int k = 0; k < 2; ++k) {
            int u1 = k ? e.v : e.u, u2 = k ? e.u : e.v;
            if (!has(ly.vertices, u2)) continue;
            for (auto f : ly.edges)
                for (int l = 0; l < 2; ++l) {
                    int u3 = l ? f.v : f.u, u4 = l ? f.u : f.v;
                    if (!has(lx.vertices, u3)) continue;
                    if (!g.adjacent_idx(u2, u3)) continue;
                    Mask used = bit(u1) | bit(u2) | bit(u3) | bit(u4);
                    if (popcount(used) == 4) return true;
                }
        }
    return false;
}

int corner_separator_order(const CrossDiagram& d, Corner c) {
    int x = (c == AC || c == AD) ? LinkA : LinkB;
    int y = (c == AC || c == BC) ? LinkC : LinkD;
    int k = d.links[x].size() + d.links[y].size() + popcount(d.vertexCentre);
    for (auto e : d.diagonal)
        if (has(d.corners[c], e.u) || has(d.corners[c], e.v)) ++k;
    return k;
}

CrossingReport crossing_report(const Graph& g, const CrossDiagram& d) {
    CrossingReport r;
    int l = d.links[0].size();
    for (int i = 1; i < 4; ++i)
        if (d.links[i].size() != l) {
            r.failure = "links differ in size";
            return r;
        }
    r.linkSize = l;
    if (l > 2) {
        r.failure = "link size above two";
        return r;
    }
    if (d.centre_size() != 4 - 2 * l) {
        r.failure = "centre size is not 4-2l";
        return r;
    }
    if (!d.diagonal.empty()) {
        r.failure = "diagonal edge present";
        return r;
    }
    if (!d.jumping.empty()) {
        r.failure = "jumping edge present";
        return r;
    }
    for (auto& dg : d.dangling) {
        if (l != 2) {
            r.failure = "dangling edge with links of size below two";
            return r;
        }
        if (!is_potter_corner(g, d, corner_between(dg.from, dg.through))) {
            r.failure = "dangling edge without a potter corner";
            return r;
        }
    }
    r.holds = true;
    return r;
}

int crossing_classification(const Graph& g, Sep s1, Sep s2) {
    if (!is_tetra_separation(g, s1) || !is_tetra_separation(g, s2))
        throw InputError("crossing_classification: both separations must be tetra-separations");
    if (is_nested(s1, s2)) throw InputError("crossing_classification: separations are nested");
    auto r = crossing_report(g, corner_diagram(g, s1, s2));
    if (!r.holds) throw InvariantError("crossing lemma violated: " + r.failure);
    return r.linkSize;
}

}  // namespace tetra
