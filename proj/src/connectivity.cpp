#include "tetra/connectivity.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace tetra {

namespace {

constexpr int kInf = INT_MAX / 4;

// Unit-augmenting max-flow on the vertex-split network of an independent-path
// problem. Node 2v is the entry of vertex v, 2v+1 its exit.
class PathNetwork {
public:
    PathNetwork(const Graph& g, const std::vector<char>& inX, const std::vector<char>& inY,
                const std::vector<char>& allowed)
        : g_(g), n_(g.order()), inX_(inX), inY_(inY), head_(2 * n_ + 2, -1) {
        src_ = 2 * n_;
        snk_ = 2 * n_ + 1;
        for (int v = 0; v < n_; ++v) {
            if (!allowed[v]) continue;
            if (inX[v]) add(src_, out(v), kInf);
            else if (inY[v]) add(in(v), snk_, kInf);
            else add(in(v), out(v), 1);
        }
        for (auto [a, b] : g.edges()) {
            int u = g.index(a), v = g.index(b);
            if (!allowed[u] || !allowed[v]) continue;
            arc(u, v);
            arc(v, u);
        }
    }

    int run(int cap) {
        int flow = 0;
        while (flow < cap && augment()) ++flow;
        return flow;
    }

    std::vector<VertexSet> paths() {
        std::vector<int> rem(cap_.size());
        for (std::size_t e = 0; e < cap_.size(); ++e) rem[e] = flowOn(static_cast<int>(e));
        std::vector<VertexSet> out;
        while (true) {
            int e0 = -1;
            for (int e = head_[src_]; e != -1; e = next_[e])
                if (rem[e] > 0 && !(e & 1)) { e0 = e; break; }
            if (e0 == -1) break;
            std::vector<int> seq;
            int node = src_;
            int e = e0;
            while (true) {
                --rem[e];
                node = to_[e];
                if (node == snk_) break;
                int v = node / 2;
                if (seq.empty() || seq.back() != v) {
                    auto it = std::find(seq.begin(), seq.end(), v);
                    if (it != seq.end()) seq.erase(it + 1, seq.end());
                    else seq.push_back(v);
                }
                e = -1;
                for (int f = head_[node]; f != -1; f = next_[f])
                    if (!(f & 1) && rem[f] > 0) { e = f; break; }
                if (e == -1) break;
            }
            VertexSet p;
            for (int v : seq) p.push_back(g_.label(v));
            out.push_back(p);
        }
        return out;
    }

    // Vertices reachable from the source in the residual network: side codes
    // 0 = strict A side, 1 = cut vertex, 2 = strict B side.
    std::vector<int> cut_sides() {
        std::vector<char> seen(head_.size(), 0);
        std::vector<int> stack{src_};
        seen[src_] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e = head_[u]; e != -1; e = next_[e])
                if (cap_[e] > 0 && !seen[to_[e]]) {
                    seen[to_[e]] = 1;
                    stack.push_back(to_[e]);
                }
        }
        std::vector<int> side(n_, 2);
        for (int v = 0; v < n_; ++v) {
            if (inX_[v]) side[v] = 0;
            else if (inY_[v]) side[v] = 2;
            else if (seen[out(v)]) side[v] = 0;
            else if (seen[in(v)]) side[v] = 1;
        }
        return side;
    }

private:
    int in(int v) const { return 2 * v; }
    int out(int v) const { return 2 * v + 1; }

    void arc(int u, int v) {
        if (inX_[v] || inY_[u]) return;
        if (inX_[u] && inY_[v]) add(out(u), in(v), 1);
        else add(out(u), in(v), kInf);
    }

    void add(int a, int b, int c) {
        to_.push_back(b); cap_.push_back(c); orig_.push_back(c); next_.push_back(head_[a]); head_[a] = static_cast<int>(to_.size()) - 1;
        to_.push_back(a); cap_.push_back(0); orig_.push_back(0); next_.push_back(head_[b]); head_[b] = static_cast<int>(to_.size()) - 1;
    }

    int flowOn(int e) const { return (e & 1) ? 0 : orig_[e] - cap_[e]; }

    bool augment() {
        std::vector<int> pred(head_.size(), -1);
        std::vector<int> queue{src_};
        pred[src_] = -2;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int e = head_[u]; e != -1; e = next_[e]) {
                int w = to_[e];
                if (cap_[e] > 0 && pred[w] == -1) {
                    pred[w] = e;
                    if (w == snk_) {
                        for (int x = snk_; x != src_; x = to_[pred[x] ^ 1]) {
                            cap_[pred[x]] -= 1;
                            cap_[pred[x] ^ 1] += 1;
                        }
                        return true;
                    }
                    queue.push_back(w);
                }
            }
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<char> inX_, inY_;
    std::vector<int> head_, to_, cap_, orig_, next_;
    int src_ = 0, snk_ = 0;
};

struct Prepared {
    std::vector<char> inX, inY, allowed;
};

Prepared prepare(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.empty() || y.empty()) throw InputError("independent paths: x and y must be nonempty");
    Prepared p{std::vector<char>(g.order(), 0), std::vector<char>(g.order(), 0),
               std::vector<char>(g.order(), 1)};
    for (Vertex v : x) p.inX[g.index(v)] = 1;
    for (Vertex v : y) {
        int i = g.index(v);
        if (p.inX[i]) throw InputError("independent paths: x and y overlap");
        p.inY[i] = 1;
    }
    return p;
}

}  // namespace

PathFamily max_independent_paths(const Graph& g, const VertexSet& x, const VertexSet& y) {
    auto p = prepare(g, x, y);
    PathNetwork net(g, p.inX, p.inY, p.allowed);
    PathFamily pf;
    pf.count = net.run(kInf);
    pf.paths = net.paths();
    if (static_cast<int>(pf.paths.size()) != pf.count)
        throw InvariantError("path decomposition does not match flow value");
    return pf;
}

StrongSeparation min_strong_separation(const Graph& g, const VertexSet& x, const VertexSet& y) {
    auto p = prepare(g, x, y);
    PathNetwork net(g, p.inX, p.inY, p.allowed);
    int flow = net.run(kInf);
    auto side = net.cut_sides();
    StrongSeparation s;
    int cutVertices = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (side[v] <= 1) s.sideA.push_back(g.label(v));
        if (side[v] >= 1) s.sideB.push_back(g.label(v));
        if (side[v] == 1) ++cutVertices;
    }
    int crossEdges = 0;
    for (auto [a, b] : g.edges()) {
        int sa = side[g.index(a)], sb = side[g.index(b)];
        if ((sa == 0 && sb == 2) || (sa == 2 && sb == 0)) ++crossEdges;
    }
    s.order = cutVertices + crossEdges;
    if (s.order != flow) throw InvariantError("Menger duality violated: cut order differs from path count");
    return s;
}

int min_strong_separation_order(const Graph& g, const VertexSet& x, const VertexSet& y) {
    return min_strong_separation(g, x, y).order;
}

int independent_path_count(const Graph& g, Mask x, Mask y, Mask allowed, int cap) {
    if (!x || !y) return 0;
    int n = g.order();
    std::vector<char> inX(n, 0), inY(n, 0), al(n, 0);
    for (int v = 0; v < n; ++v) {
        inX[v] = has(x, v);
        inY[v] = has(y, v);
        al[v] = has(allowed | x | y, v);
    }
    PathNetwork net(g, inX, inY, al);
    return net.run(cap);
}

namespace {

// Calls f on every k-subset of `pool` (as a mask); stops when f returns true.
bool any_subset(Mask pool, int k, const std::function<bool(Mask)>& f) {
    std::vector<int> items;
    for_each_bit(pool, [&](int i) { items.push_back(i); });
    int n = static_cast<int>(items.size());
    if (k > n) return false;
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

}  // namespace

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) return true;
    if (g.order() <= k) return false;
    if (g.fits_mask()) {
        Mask all = g.all();
        return !any_subset(all, k - 1, [&](Mask s) { return !connected_within(g, all & ~s); });
    }
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.adjacent_idx(u, v)) continue;
            auto pf = max_independent_paths(g, {g.label(u)}, {g.label(v)});
            if (pf.count < k) return false;
        }
    return true;
}

int vertex_connectivity(const Graph& g) {
    int k = 0;
    while (is_k_connected(g, k + 1)) ++k;
    return k;
}

std::vector<VertexSet> k_separators(const Graph& g, int k) {
    g.require_mask("k_separators");
    std::vector<VertexSet> out;
    Mask all = g.all();
    any_subset(all, k, [&](Mask s) {
        if (!connected_within(g, all & ~s)) out.push_back(g.labels_of(s));
        return false;
    });
    return out;
}

bool is_quasi_k_connected(const Graph& g, int k) {
    if (!is_k_connected(g, k - 1)) return false;
    g.require_mask("is_quasi_k_connected");
    Mask all = g.all();
    return !any_subset(all, k - 1, [&](Mask s) {
        auto comps = components_within(g, all & ~s);
        if (comps.size() < 2) return false;
        if (comps.size() == 2)
            return std::min(popcount(comps[0]), popcount(comps[1])) >= 2;
        if (comps.size() == 3)
            return !(popcount(comps[0]) == 1 && popcount(comps[1]) == 1 && popcount(comps[2]) == 1);
        return true;
    });
}

}  // namespace tetra
