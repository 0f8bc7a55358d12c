#include "tetra/io.hpp"

#include <set>
#include <sstream>

namespace tetra::io {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "edgelist") return Format::EdgeList;
    if (name == "json") return Format::Json;
    throw InputError("unknown graph format '" + name + "'");
}

namespace {

Vertex parse_label(const std::string& tok, int line) {
    std::size_t used = 0;
    long long v = -1;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || v < 0 || v > 1'000'000'000)
        throw InputError("line " + std::to_string(line) + ": '" + tok + "' is not a non-negative integer");
    return static_cast<Vertex>(v);
}

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::set<Vertex> verts;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    int lineNo = 0;
    bool sawHeader = false, sawEdge = false;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0] == "p") {
            if (toks.size() != 2 || sawHeader || sawEdge)
                throw InputError("line " + std::to_string(lineNo) + ": malformed header");
            sawHeader = true;
            int n = parse_label(toks[1], lineNo);
            for (int v = 0; v < n; ++v) verts.insert(v);
            continue;
        }
        if (toks.size() != 2) throw InputError("line " + std::to_string(lineNo) + ": expected 'u v'");
        Vertex u = parse_label(toks[0], lineNo), v = parse_label(toks[1], lineNo);
        if (u == v) throw InputError("line " + std::to_string(lineNo) + ": loop at vertex " + toks[0]);
        if (sawHeader && (!verts.count(u) || !verts.count(v)))
            throw InputError("line " + std::to_string(lineNo) + ": vertex outside the declared range");
        if (!seen.insert(normalised(u, v)).second)
            throw InputError("line " + std::to_string(lineNo) + ": repeated edge " + toks[0] + " " + toks[1]);
        verts.insert(u);
        verts.insert(v);
        edges.push_back({u, v});
        sawEdge = true;
    }
    return Graph(VertexSet(verts.begin(), verts.end()), edges);
}

Graph parse_json_graph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("edges")) throw InputError("JSON graph needs an \"edges\" array");
    try {
        std::set<Vertex> verts;
        if (j.contains("vertices"))
            for (const auto& v : j.at("vertices")) {
                if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("vertex labels must be non-negative integers");
                verts.insert(v.get<Vertex>());
            }
        std::vector<Edge> edges;
        std::set<Edge> seen;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw InputError("each edge must be a pair of integers");
            Vertex u = e[0].get<Vertex>(), v = e[1].get<Vertex>();
            if (u < 0 || v < 0) throw InputError("vertex labels must be non-negative integers");
            if (j.contains("vertices") && (!verts.count(u) || !verts.count(v)))
                throw InputError("edge endpoint missing from the vertex list");
            if (u == v) throw InputError("loop at vertex " + std::to_string(u));
            if (!seen.insert(normalised(u, v)).second) throw InputError("repeated edge");
            verts.insert(u);
            verts.insert(v);
            edges.push_back({u, v});
        }
        return Graph(VertexSet(verts.begin(), verts.end()), edges);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON graph: ") + e.what());
    }
}

}  // namespace

Graph parse_graph(const std::string& text, Format f) {
    return f == Format::EdgeList ? parse_edgelist(text) : parse_json_graph(text);
}

json graph_json(const Graph& g) {
    json es = json::array();
    for (auto [u, v] : g.edges()) es.push_back({u, v});
    return {{"vertices", g.vertices()}, {"edges", es}};
}

std::string serialize_graph(const Graph& g, Format f) {
    if (f == Format::Json) return graph_json(g).dump() + "\n";
    std::ostringstream out;
    bool isolated = false;
    for (Vertex v : g.vertices()) isolated = isolated || g.degree(v) == 0;
    bool dense = g.order() == 0 || g.max_label() + 1 == g.order();
    if (isolated && !dense) {
        // Labels with gaps and isolated vertices cannot be expressed in this format.
        throw CapabilityError("edge list cannot express isolated vertices with non-contiguous labels");
    }
    if (isolated || g.size() == 0) out << "p " << g.order() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

json separation_json(const Graph& g, Sep s) {
    auto sep = separator_of(g, s);
    json edges = json::array();
    for (auto e : sep.edges) edges.push_back({g.label(e.u), g.label(e.v)});
    return {{"sideA", g.labels_of(s.a)},
            {"sideB", g.labels_of(s.b)},
            {"separatorVertices", g.labels_of(sep.vertices)},
            {"separatorEdges", edges}};
}

json decomposition_json(const Graph& g, const MixedTreeDecomposition& d, const std::vector<NodeReport>& nodes) {
    json jn = json::array();
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        json node = {{"id", i}, {"bag", g.labels_of(d.bags[i])}};
        if (i < nodes.size()) {
            node["torso"] = graph_json(nodes[i].torso);
            node["class"] = nodes[i].cls;
        }
        jn.push_back(node);
    }
    json je = json::array();
    for (auto [i, j] : d.treeEdges) {
        json s = separation_json(g, d.edgeMap.at({i, j}));
        je.push_back({{"from", i},
                      {"to", j},
                      {"separatorVertices", s["separatorVertices"]},
                      {"separatorEdges", s["separatorEdges"]}});
    }
    return {{"nodes", jn}, {"edges", je}};
}

namespace {

std::string class_label(const json& c) {
    if (!c.is_object() || !c.contains("verdict")) return "";
    std::string s = c["verdict"].get<std::string>();
    if (c.contains("m")) s += " m=" + std::to_string(c["m"].get<int>());
    return s;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

}  // namespace

std::string decomposition_dot(const Graph& g, const MixedTreeDecomposition& d, const std::vector<NodeReport>& nodes) {
    std::ostringstream out;
    out << "graph decomposition {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        std::string label = "bag " + std::to_string(popcount(d.bags[i]));
        if (i < nodes.size()) {
            std::string c = class_label(nodes[i].cls);
            if (!c.empty()) label += "\\n" + c;
        }
        out << "  n" << i << " [label=\"" << dot_escape(label) << "\"];\n";
    }
    for (auto [i, j] : d.treeEdges) {
        auto sep = separator_of(g, d.edgeMap.at({i, j}));
        out << "  n" << i << " -- n" << j << " [label=\"" << sep.order() << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

json ring_json(const RingDecomposition& r) {
    return {{"parts", r.parts}, {"adhesions", r.adhesions}, {"adhesionSize", r.adhesionSize}};
}

json torso_class_json(const TorsoClass& c) {
    json j = {{"verdict", to_string(c.verdict)}};
    if (!c.centre.empty()) j["centre"] = c.centre;
    if (c.verdict == Verdict::ThickenedK4m || c.verdict == Verdict::SprinkledK4m) j["m"] = c.m;
    if (c.ring) j["ring"] = ring_json(*c.ring);
    return j;
}

json tri_class_json(const TriClass& c) {
    json j = {{"verdict", to_string(c.verdict)}};
    if (!c.centre.empty()) j["centre"] = c.centre;
    if (c.verdict == TriVerdict::ThickenedK3m || c.verdict == TriVerdict::SprinkledK3m) j["m"] = c.m;
    return j;
}

json pipeline_json(const PipelineReport& r) {
    json nodes = json::array();
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        const auto& n = r.nodes[i];
        nodes.push_back({{"id", i},
                         {"stage", n.stage},
                         {"verdict", n.verdict},
                         {"parent", n.parent},
                         {"children", n.children},
                         {"graph", graph_json(n.graph)}});
    }
    return {{"nodes", nodes}};
}

std::string pipeline_dot(const PipelineReport& r) {
    std::ostringstream out;
    out << "digraph pipeline {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        const auto& n = r.nodes[i];
        std::string label = n.stage + " |V|=" + std::to_string(n.graph.order());
        if (!n.verdict.empty()) label += "\\n" + n.verdict;
        out << "  n" << i << " [label=\"" << dot_escape(label) << "\"];\n";
        if (n.parent >= 0) out << "  n" << n.parent << " -> n" << i << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace tetra::io
