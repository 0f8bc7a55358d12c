#include "tetra/recognizers.hpp"

#include <algorithm>
#include <functional>

#include "tetra/connectivity.hpp"

namespace tetra {

namespace {

// Visits k-subsets of `pool` in increasing lexicographic order of index lists;
// stops when f returns true.
bool visit_subsets(Mask pool, int k, const std::function<bool(Mask)>& f) {
    std::vector<int> items;
    for_each_bit(pool, [&](int i) { items.push_back(i); });
    int n = static_cast<int>(items.size());
    if (k > n || k < 0) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= bit(items[i]);
        if (f(m)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool is_clique(const Graph& g, Mask m) {
    bool ok = true;
    for_each_bit(m, [&](int v) { ok = ok && (g.adj(v) & m) == (m & ~bit(v)); });
    return ok;
}

Graph torso_of_part(const Graph& g, Mask part, Mask in, Mask out) {
    std::vector<Edge> es;
    for_each_bit(part, [&](int u) {
        for_each_bit(part & ~(bit(u + 1) - 1), [&](int v) {
            bool inner = g.adjacent_idx(u, v) || (has(in, u) && has(in, v)) || (has(out, u) && has(out, v));
            if (inner) es.push_back({g.label(u), g.label(v)});
        });
    });
    return Graph(g.labels_of(part), es);
}

}  // namespace

bool is_ring_decomposition(const Graph& g, const RingDecomposition& r) {
    int m = r.length();
    if (m < 3 || static_cast<int>(r.adhesions.size()) != m) return false;
    std::vector<Mask> parts;
    for (const auto& p : r.parts) {
        for (Vertex v : p)
            if (!g.has_vertex(v)) return false;
        parts.push_back(g.mask_of(p));
    }
    Mask covered = 0;
    for (Mask p : parts) covered |= p;
    if (covered != g.all()) return false;
    for (auto [a, b] : g.edges()) {
        Mask e = bit(g.index(a)) | bit(g.index(b));
        if (std::none_of(parts.begin(), parts.end(), [&](Mask p) { return (p & e) == e; })) return false;
    }
    for (int i = 0; i < m; ++i) {
        for (Vertex v : r.adhesions[i])
            if (!g.has_vertex(v)) return false;
        Mask a = g.mask_of(r.adhesions[i]);
        if (popcount(a) != r.adhesionSize || a != (parts[i] & parts[(i + 1) % m])) return false;
    }
    for (int v = 0; v < g.order(); ++v) {
        int runs = 0, count = 0;
        for (int i = 0; i < m; ++i) {
            bool here = has(parts[i], v), before = has(parts[(i + m - 1) % m], v);
            if (here) ++count;
            if (here && !before) ++runs;
        }
        if (count < m && runs != 1) return false;
    }
    return true;
}

Graph ring_torso(const Graph& g, const RingDecomposition& r, int index) {
    int m = r.length();
    return torso_of_part(g, g.mask_of(r.parts[index]), g.mask_of(r.adhesions[(index + m - 1) % m]),
                         g.mask_of(r.adhesions[index]));
}

TorsoShape torso_shape(const Graph& t) {
    if (t.order() == 3 && t.size() == 3) return TorsoShape::Triangle;
    if (t.order() == 4 && t.size() == 4) {
        bool twoRegular = true;
        for (Vertex v : t.vertices()) twoRegular = twoRegular && t.degree(v) == 2;
        if (twoRegular) return TorsoShape::FourCycle;
    }
    if (is_k_connected(t, 3)) return TorsoShape::ThreeConnected;
    return TorsoShape::Other;
}

bool WheelWitness::all_k2() const {
    return std::all_of(ring.parts.begin(), ring.parts.end(), [](const VertexSet& p) { return p.size() == 2; });
}

bool WheelWitness::all_triangles() const {
    return std::all_of(ring.parts.begin(), ring.parts.end(), [](const VertexSet& p) { return p.size() == 3; });
}

namespace {

std::optional<RingDecomposition> rim_with_tips(const Graph& rim, Mask tips) {
    Mask rest = rim.all() & ~tips;
    if (popcount(rest) < 3) return std::nullopt;
    bool cycle = true;
    for_each_bit(rest, [&](int v) { cycle = cycle && popcount(rim.adj(v) & rest) == 2; });
    if (!cycle || !connected_within(rim, rest)) return std::nullopt;
    std::vector<int> order{lowest(rest)};
    {
        Mask nb = rim.adj(order[0]) & rest;
        int prev = order[0], cur = lowest(nb);
        while (cur != order[0]) {
            order.push_back(cur);
            int next = lowest(rim.adj(cur) & rest & ~bit(prev));
            prev = cur;
            cur = next;
        }
    }
    int c = static_cast<int>(order.size());
    RingDecomposition r;
    r.adhesionSize = 1;
    Mask usedTips = 0;
    for (int i = 0; i < c; ++i) {
        int a = order[i], b = order[(i + 1) % c];
        Mask part = bit(a) | bit(b);
        Mask onEdge = tips & rim.adj(a) & rim.adj(b) & ~usedTips;
        if (popcount(onEdge) > 1) return std::nullopt;
        part |= onEdge;
        usedTips |= onEdge;
        r.parts.push_back(rim.labels_of(part));
        r.adhesions.push_back({rim.label(b)});
    }
    if (usedTips != tips) return std::nullopt;
    if (!is_ring_decomposition(rim, r)) return std::nullopt;
    return r;
}

}  // namespace

std::optional<RingDecomposition> recognize_wheel_rim(const Graph& rim) {
    if (rim.order() < 3) return std::nullopt;
    rim.require_mask("recognize_wheel_rim");
    Mask candidates = 0;
    for (int v = 0; v < rim.order(); ++v) {
        auto nb = rim.nbrs(v);
        if (nb.size() == 2 && rim.adjacent_idx(nb[0], nb[1])) candidates |= bit(v);
    }
    int c = popcount(candidates);
    if (c > 16) {
        if (auto r = rim_with_tips(rim, candidates)) return r;
        return rim_with_tips(rim, 0);
    }
    std::optional<RingDecomposition> found;
    for (int k = c; k >= 0 && !found; --k)
        visit_subsets(candidates, k, [&](Mask tips) {
            found = rim_with_tips(rim, tips);
            return found.has_value();
        });
    return found;
}

namespace {

std::optional<WheelWitness> wheel_around(const Graph& x, const VertexSet& centre) {
    auto ring = recognize_wheel_rim(remove_vertices(x, centre));
    if (!ring) return std::nullopt;
    return WheelWitness{centre, *ring};
}

}  // namespace

std::optional<WheelWitness> generalised_double_wheel_with_centre(const Graph& x, Vertex u, Vertex v) {
    if (u == v || !x.has_vertex(u) || !x.has_vertex(v) || !is_k_connected(x, 4)) return std::nullopt;
    return wheel_around(x, {std::min(u, v), std::max(u, v)});
}

std::optional<WheelWitness> recognize_generalised_double_wheel(const Graph& x) {
    if (!is_k_connected(x, 4)) return std::nullopt;
    for (int i = 0; i < x.order(); ++i)
        for (int j = i + 1; j < x.order(); ++j)
            if (auto w = wheel_around(x, {x.label(i), x.label(j)})) return w;
    return std::nullopt;
}

std::optional<WheelWitness> generalised_wheel_with_centre(const Graph& x, Vertex v) {
    if (!x.has_vertex(v) || !is_k_connected(x, 3)) return std::nullopt;
    return wheel_around(x, {v});
}

std::optional<WheelWitness> recognize_generalised_wheel(const Graph& x) {
    if (!is_k_connected(x, 3)) return std::nullopt;
    for (Vertex v : x.vertices())
        if (auto w = wheel_around(x, {v})) return w;
    return std::nullopt;
}

std::optional<KmWitness> km_with_left(const Graph& x, const VertexSet& left) {
    x.require_mask("km_with_left");
    for (Vertex v : left)
        if (!x.has_vertex(v)) return std::nullopt;
    Mask z = x.mask_of(left);
    if (popcount(z) != static_cast<int>(left.size())) return std::nullopt;
    bool ok = true;
    for_each_bit(x.all() & ~z, [&](int v) { ok = ok && x.adj(v) == z; });
    if (!ok) return std::nullopt;
    return KmWitness{is_clique(x, z), x.labels_of(z), x.order() - popcount(z)};
}

std::optional<KmWitness> recognize_km(const Graph& x, int k) {
    x.require_mask("recognize_km");
    std::optional<KmWitness> found;
    visit_subsets(x.all(), k, [&](Mask z) {
        found = km_with_left(x, x.labels_of(z));
        return found.has_value();
    });
    return found;
}

bool recognize_quasi_5_connected(const Graph& x) { return is_quasi_k_connected(x, 5); }

namespace {

class RingSearcher {
public:
    RingSearcher(const Graph& g, const RingSearch& s) : g_(g), s_(s), cover_(g.order(), 0) {}

    std::optional<RingDecomposition> run() {
        std::optional<RingDecomposition> found;
        visit_subsets(g_.all(), s_.adhesion, [&](Mask xs) {
            xs_ = xs;
            used_ = 0;
            returned_ = 0;
            parts_.clear();
            adh_.clear();
            std::fill(cover_.begin(), cover_.end(), 0);
            if (extend(xs, 0)) found = result_;
            return found.has_value();
        });
        return found;
    }

private:
    bool extend(Mask xin, Mask prev) {
        bool first = parts_.empty();
        Mask candidates = xin | (g_.all() & ~used_) | (first ? 0 : xs_);
        bool done = false;
        visit_subsets(candidates, s_.adhesion, [&](Mask xout) {
            done = try_out(xin, prev, xout);
            return done;
        });
        return done;
    }

    bool try_out(Mask xin, Mask prev, Mask xout) {
        if (xout == xin) return false;
        bool closing = xout == xs_;
        if (!closing && xout < xs_) return false;
        if (closing && parts_.size() + 1 < 3) return false;
        Mask newReturns = (xout & xs_ & ~xin & used_);
        if (parts_.empty()) newReturns = 0;
        Mask returned = returned_ | newReturns;
        if (returned & ~xout) return false;
        Mask base = xin | xout;
        if (popcount(base) > s_.maxPart) return false;

        Mask freeRest = g_.all() & ~used_ & ~base;
        std::vector<Mask> eligible;
        for (Mask c : components_within(g_, g_.all() & ~base))
            if (!(c & used_)) eligible.push_back(c);
        int room = s_.maxPart - popcount(base);

        if (closing) {
            Mask all = 0;
            for (Mask c : eligible) all |= c;
            if (all != freeRest || popcount(all) > room) return false;
            return place(xin, prev, xout, base | all, true, returned);
        }
        int e = static_cast<int>(eligible.size());
        std::vector<int> idx;
        std::function<bool(int, Mask)> choose = [&](int from, Mask interior) {
            if (place(xin, prev, xout, base | interior, false, returned)) return true;
            for (int i = from; i < e; ++i)
                if (popcount(interior | eligible[i]) <= room && choose(i + 1, interior | eligible[i])) return true;
            return false;
        };
        return choose(0, 0);
    }

    bool place(Mask xin, Mask prev, Mask xout, Mask part, bool closing, Mask returned) {
        if (!parts_.empty() && (part & prev) != xin) return false;
        if (closing && (part & parts_.front()) != xs_) return false;
        if (s_.torsoOk && !s_.torsoOk(torso_of_part(g_, part, xin, xout))) return false;

        // Vertices leaving for good must already see all their neighbours.
        std::vector<Mask> saved = cover_;
        for_each_bit(part, [&](int v) { cover_[v] |= part; });
        bool ok = true;
        for_each_bit(part & ~xout & ~xs_, [&](int v) { ok = ok && (g_.adj(v) & ~cover_[v]) == 0; });
        if (ok) {
            Mask savedUsed = used_, savedReturned = returned_;
            parts_.push_back(part);
            adh_.push_back(xout);
            used_ |= part;
            returned_ = returned;
            if (closing) ok = finish();
            else ok = extend(xout, part);
            if (!ok) {
                parts_.pop_back();
                adh_.pop_back();
                used_ = savedUsed;
                returned_ = savedReturned;
            }
        }
        if (!ok) cover_ = saved;
        return ok;
    }

    bool finish() {
        if (used_ != g_.all()) return false;
        RingDecomposition r;
        r.adhesionSize = s_.adhesion;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            r.parts.push_back(g_.labels_of(parts_[i]));
            r.adhesions.push_back(g_.labels_of(adh_[i]));
        }
        if (!is_ring_decomposition(g_, r)) return false;
        if (s_.torsoOk)
            for (int i = 0; i < r.length(); ++i)
                if (!s_.torsoOk(ring_torso(g_, r, i))) return false;
        if (s_.accept && !s_.accept(r)) return false;
        result_ = r;
        return true;
    }

    const Graph& g_;
    const RingSearch& s_;
    Mask xs_ = 0, used_ = 0, returned_ = 0;
    std::vector<Mask> parts_, adh_, cover_;
    RingDecomposition result_;
};

}  // namespace

std::optional<RingDecomposition> find_ring_decomposition(const Graph& x, const RingSearch& search) {
    if (x.order() > search.bound)
        throw CapabilityError("ring search: graph has " + std::to_string(x.order()) +
                              " vertices, above the bound " + std::to_string(search.bound));
    if (search.adhesion < 1 || search.adhesion > 2) throw InputError("ring search: adhesion must be 1 or 2");
    if (x.order() < 3) return std::nullopt;
    return RingSearcher(x, search).run();
}

bool satisfies_triangle_adhesion_rule(const Graph& g, const RingDecomposition& r) {
    int m = r.length();
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        if (torso_shape(ring_torso(g, r, i)) != TorsoShape::Triangle) continue;
        if (torso_shape(ring_torso(g, r, j)) != TorsoShape::Triangle) continue;
        const auto& a = r.adhesions[i];
        if (a.size() != 2 || !g.has_edge(a[0], a[1])) return false;
    }
    return true;
}

namespace {

std::vector<TorsoShape> shapes_of(const Graph& g, const RingDecomposition& r) {
    std::vector<TorsoShape> out;
    for (int i = 0; i < r.length(); ++i) out.push_back(torso_shape(ring_torso(g, r, i)));
    return out;
}

}  // namespace

bool good_torso(const Graph& g, const RingDecomposition& r, int index) {
    auto sh = shapes_of(g, r);
    int m = r.length();
    if (sh[index] != TorsoShape::ThreeConnected) return false;
    int size = static_cast<int>(r.parts[index].size());
    TorsoShape left = sh[(index + m - 1) % m], right = sh[(index + 1) % m];
    if (size >= 6) return true;
    if (left == TorsoShape::FourCycle || right == TorsoShape::FourCycle) return true;
    if (left == TorsoShape::Triangle && right == TorsoShape::Triangle) return true;
    return size == 5 && (left == TorsoShape::Triangle || right == TorsoShape::Triangle);
}

int alpha_factor(const Graph& g, const RingDecomposition& r) {
    auto sh = shapes_of(g, r);
    int m = r.length();
    int alpha = 0;
    for (int i = 0; i < m; ++i) {
        if (sh[i] == TorsoShape::FourCycle) ++alpha;
        if (sh[i] == TorsoShape::ThreeConnected && sh[(i + 1) % m] == TorsoShape::ThreeConnected) ++alpha;
    }
    auto strip = [](int len) { return (2 * len + 2) / 3; };
    if (std::all_of(sh.begin(), sh.end(), [](TorsoShape s) { return s == TorsoShape::Triangle; }))
        return alpha + strip(m);
    int start = 0;
    while (sh[start] == TorsoShape::Triangle) ++start;
    int run = 0;
    for (int k = 1; k <= m; ++k) {
        int i = (start + k) % m;
        if (sh[i] == TorsoShape::Triangle) {
            ++run;
        } else {
            if (run) alpha += strip(run);
            run = 0;
        }
    }
    return alpha;
}

std::optional<RingDecomposition> recognize_small_torso_cycle(const Graph& x, int bound) {
    if (!is_k_connected(x, 4)) return std::nullopt;
    RingSearch s;
    s.bound = bound;
    s.torsoOk = [](const Graph& t) {
        auto sh = torso_shape(t);
        return sh == TorsoShape::Triangle || (sh == TorsoShape::ThreeConnected && t.order() <= 5);
    };
    return find_ring_decomposition(x, s);
}

std::optional<RingDecomposition> recognize_angry_bagel(const Graph& x, int bound) {
    if (x.order() == 5 && x.size() == 10) return std::nullopt;
    if (!is_k_connected(x, 4)) return std::nullopt;
    RingSearch s;
    s.bound = bound;
    s.torsoOk = [](const Graph& t) {
        auto sh = torso_shape(t);
        return sh == TorsoShape::Triangle || sh == TorsoShape::FourCycle ||
               (sh == TorsoShape::ThreeConnected && t.order() <= 5);
    };
    s.accept = [&](const RingDecomposition& r) {
        if (!satisfies_triangle_adhesion_rule(x, r)) return false;
        for (int i = 0; i < r.length(); ++i)
            if (good_torso(x, r, i)) return false;
        return alpha_factor(x, r) >= 4;
    };
    return find_ring_decomposition(x, s);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Quasi5Connected: return "Quasi5Connected";
        case Verdict::CycleOfSmallTorsos: return "CycleOfSmallTorsos";
        case Verdict::GeneralisedDoubleWheel: return "GeneralisedDoubleWheel";
        case Verdict::ThickenedK4m: return "ThickenedK4m";
        case Verdict::SprinkledK4m: return "SprinkledK4m";
    }
    return "Unknown";
}

bool verify_torso_class(const Graph& g, const Graph& torso, const TorsoClass& c) {
    switch (c.verdict) {
        case Verdict::Quasi5Connected:
            // K4 torsos are admitted here as well.
            return recognize_quasi_5_connected(torso) || (torso.order() == 4 && torso.size() == 6);
        case Verdict::CycleOfSmallTorsos: {
            if (!c.ring || c.ring->adhesionSize != 2 || !is_ring_decomposition(torso, *c.ring)) return false;
            if (!is_k_connected(torso, 4)) return false;
            for (int i = 0; i < c.ring->length(); ++i) {
                Graph t = ring_torso(torso, *c.ring, i);
                auto sh = torso_shape(t);
                if (!(sh == TorsoShape::Triangle || (sh == TorsoShape::ThreeConnected && t.order() <= 5))) return false;
            }
            return true;
        }
        case Verdict::GeneralisedDoubleWheel:
            return c.centre.size() == 2 && generalised_double_wheel_with_centre(torso, c.centre[0], c.centre[1]);
        case Verdict::ThickenedK4m: {
            auto w = km_with_left(torso, c.centre);
            return c.centre.size() == 4 && w && w->thickened && w->m == c.m;
        }
        case Verdict::SprinkledK4m: {
            auto w = km_with_left(g, c.centre);
            return c.centre.size() == 4 && w && w->m == c.m && c.m >= 4;
        }
    }
    return false;
}

TorsoClass classify_torso(const Graph& g, const Star& star, const std::vector<Sep>& all,
                          const ClassifyOptions& options) {
    auto tr = compressed_torso(g, star);
    const Graph& torso = tr.torso;
    TorsoClass c;
    auto inter = std::find_if(all.begin(), all.end(), [&](Sep s) { return interlaces(s, star); });
    if (inter == all.end()) {
        c.verdict = Verdict::Quasi5Connected;
    } else {
        Sep s = *inter;
        auto part = std::find_if(all.begin(), all.end(), [&](Sep t) { return !is_nested(s, t); });
        if (part == all.end()) throw InvariantError("interlacing tetra-separation is not crossed");
        c.interlacer = s;
        c.partner = *part;
        Mask z = s.cut() & part->cut();
        int zs = popcount(z);
        VertexSet centre;
        for (Vertex v : g.labels_of(z)) centre.push_back(tr.representative(v));
        std::sort(centre.begin(), centre.end());
        centre.erase(std::unique(centre.begin(), centre.end()), centre.end());
        if (zs == 0) {
            c.verdict = Verdict::CycleOfSmallTorsos;
            c.ring = recognize_small_torso_cycle(torso, options.ringBound);
        } else if (zs == 2) {
            c.verdict = Verdict::GeneralisedDoubleWheel;
            c.centre = centre;
            if (centre.size() == 2)
                if (auto w = generalised_double_wheel_with_centre(torso, centre[0], centre[1])) c.ring = w->ring;
        } else if (zs == 4) {
            if (!star.empty()) {
                c.verdict = Verdict::ThickenedK4m;
                c.centre = centre;
                if (auto w = km_with_left(torso, centre)) c.m = w->m;
            } else {
                c.verdict = Verdict::SprinkledK4m;
                c.centre = g.labels_of(z);
                if (auto w = km_with_left(g, c.centre)) c.m = w->m;
            }
        } else {
            throw InvariantError("vertex-centre of a crossing pair has size " + std::to_string(zs));
        }
    }
    if (!verify_torso_class(g, torso, c))
        throw InvariantError("torso does not match the dispatched class " + to_string(c.verdict));
    return c;
}

AngryReport classify_4_angry(const Graph& g, const EnumerationBound& bound, int ringBound) {
    if (g.order() < 8) throw InputError("classify-angry needs at least 8 vertices");
    if (!is_k_connected(g, 4)) throw InputError("classify-angry needs a 4-connected graph");
    AngryReport rep;
    auto nested = totally_nested_set(g, NestedMethod::Characterization, bound);
    rep.angry = nested.nested.empty();
    if (!rep.angry) {
        rep.nestedWitness = nested.nested.front();
        return rep;
    }
    if (recognize_quasi_5_connected(g)) rep.shapes.push_back(1);
    if (g.order() <= ringBound) {
        rep.bagel = recognize_angry_bagel(g, ringBound);
        if (rep.bagel) rep.shapes.push_back(2);
    }
    for (int i = 0; i < g.order() && !rep.wheel; ++i)
        for (int j = i + 1; j < g.order() && !rep.wheel; ++j) {
            auto w = wheel_around(g, {g.label(i), g.label(j)});
            if (w && (w->all_k2() || w->all_triangles()) && w->ring.length() >= 4) rep.wheel = w;
        }
    if (rep.wheel) rep.shapes.push_back(3);
    rep.km = recognize_k4m(g);
    if (rep.km && rep.km->m >= 4) rep.shapes.push_back(4);
    else rep.km.reset();
    if (rep.shapes.empty()) throw InvariantError("4-angry graph matches none of the four shapes");
    return rep;
}

}  // namespace tetra
