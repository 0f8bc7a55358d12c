#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "tetra/connectivity.hpp"
#include "tetra/generators.hpp"
#include "tetra/io.hpp"
#include "tetra/pipeline.hpp"

using namespace tetra;
using nlohmann::json;

namespace {

struct Options {
    std::string format = "edgelist";
    std::string out = "text";
    int bound = 0;
    std::string method = "characterization";
    std::uint64_t seed = 1;
    int threads = 1;
    std::string input = "-";
};

EnumerationBound bound_of(const Options& o) {
    if (o.bound <= 0) return {};
    return {o.bound, 5 * o.bound};
}

NestedMethod method_of(const Options& o) {
    if (o.method == "oracle") return NestedMethod::Oracle;
    if (o.method == "characterization") return NestedMethod::Characterization;
    if (o.method == "both") return NestedMethod::Both;
    throw InputError("unknown method '" + o.method + "'");
}

Graph read_input(const Options& o) {
    std::string text;
    if (o.input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(o.input);
        if (!in) throw InputError("cannot open '" + o.input + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return io::parse_graph(text, io::parse_format(o.format));
}

std::string set_text(const VertexSet& s) {
    std::string r = "{";
    for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
    return r + "}";
}

std::string sep_text(const Graph& g, Sep s) {
    auto sep = separator_of(g, s);
    std::string edges;
    for (auto e : sep.edges) edges += " " + std::to_string(g.label(e.u)) + "-" + std::to_string(g.label(e.v));
    return "A=" + set_text(g.labels_of(s.a)) + " B=" + set_text(g.labels_of(s.b)) +
           " cut=" + set_text(g.labels_of(sep.vertices)) + " edges=[" + (edges.empty() ? "" : edges.substr(1)) + "]";
}

void require_out(const Options& o, std::initializer_list<const char*> allowed) {
    for (auto a : allowed)
        if (o.out == a) return;
    throw InputError("output '" + o.out + "' is not available for this command");
}

void print_seps(const Options& o, const Graph& g, const std::vector<Sep>& seps, const std::string& noun) {
    require_out(o, {"text", "json"});
    if (o.out == "json") {
        json arr = json::array();
        for (auto s : seps) arr.push_back(io::separation_json(g, s));
        std::cout << json{{"count", seps.size()}, {"separations", arr}}.dump(2) << "\n";
        return;
    }
    std::cout << seps.size() << " " << noun << "\n";
    for (auto s : seps) std::cout << sep_text(g, s) << "\n";
}

std::string class_text(const json& c) {
    std::string s = c["verdict"].get<std::string>();
    if (c.contains("m")) s += " m=" + std::to_string(c["m"].get<int>());
    if (c.contains("centre")) s += " centre=" + set_text(c["centre"].get<VertexSet>());
    return s;
}

void print_decomposition(const Options& o, const Graph& g, const MixedTreeDecomposition& tree,
                         const std::vector<io::NodeReport>& nodes) {
    if (o.out == "json") {
        std::cout << io::decomposition_json(g, tree, nodes).dump(2) << "\n";
    } else if (o.out == "dot") {
        std::cout << io::decomposition_dot(g, tree, nodes);
    } else if (o.out == "text") {
        std::cout << tree.nodes.size() << (tree.nodes.size() == 1 ? " node" : " nodes") << "\n";
        for (std::size_t i = 0; i < nodes.size(); ++i)
            std::cout << "node " << i << ": bag=" << set_text(g.labels_of(tree.bags[i]))
                      << " torso |V|=" << nodes[i].torso.order() << " |E|=" << nodes[i].torso.size()
                      << " verdict " << class_text(nodes[i].cls) << "\n";
        for (auto [i, j] : tree.treeEdges)
            std::cout << "edge " << i << "-" << j << ": " << sep_text(g, tree.edgeMap.at({i, j})) << "\n";
    } else {
        throw InputError("unknown output '" + o.out + "'");
    }
}

int cmd_enumerate(const Options& o) {
    Graph g = read_input(o);
    print_seps(o, g, enumerate_tetra_separations(g, bound_of(o), o.threads), "tetra-separations");
    return 0;
}

int cmd_nested(const Options& o) {
    Graph g = read_input(o);
    auto r = totally_nested_set(g, method_of(o), bound_of(o), o.threads);
    print_seps(o, g, r.nested, "totally-nested tetra-separations");
    return 0;
}

int cmd_decompose(const Options& o) {
    Graph g = read_input(o);
    auto d = tetra_decompose(g, method_of(o), bound_of(o), o.threads);
    std::vector<io::NodeReport> nodes;
    for (std::size_t i = 0; i < d.torsos.size(); ++i)
        nodes.push_back({d.torsos[i].torso, io::torso_class_json(d.classes[i])});
    print_decomposition(o, g, d.tree, nodes);
    return 0;
}

int cmd_tri_decompose(const Options& o) {
    Graph g = read_input(o);
    auto d = tri_decompose(g, method_of(o), bound_of(o));
    std::vector<io::NodeReport> nodes;
    for (std::size_t i = 0; i < d.torsos.size(); ++i)
        nodes.push_back({d.torsos[i].torso, io::tri_class_json(d.classes[i])});
    print_decomposition(o, g, d.tree, nodes);
    return 0;
}

int cmd_pipeline(const Options& o) {
    Graph g = read_input(o);
    auto r = full_pipeline(g, bound_of(o));
    if (o.out == "json") {
        std::cout << io::pipeline_json(r).dump(2) << "\n";
    } else if (o.out == "dot") {
        std::cout << io::pipeline_dot(r);
    } else {
        require_out(o, {"text"});
        std::function<void(int, int)> show = [&](int id, int depth) {
            const auto& n = r.nodes[id];
            std::cout << std::string(2 * depth, ' ') << n.stage << " |V|=" << n.graph.order()
                      << " |E|=" << n.graph.size();
            if (!n.verdict.empty()) std::cout << " " << n.verdict;
            std::cout << "\n";
            for (int c : n.children) show(c, depth + 1);
        };
        show(0, 0);
    }
    return 0;
}

int cmd_classify_angry(const Options& o) {
    Graph g = read_input(o);
    auto r = classify_4_angry(g, bound_of(o));
    require_out(o, {"text", "json"});
    if (o.out == "json") {
        json j = {{"angry", r.angry}, {"shapes", r.shapes}};
        if (r.bagel) j["bagel"] = io::ring_json(*r.bagel);
        if (r.wheel) j["wheelCentre"] = r.wheel->centre;
        if (r.km) j["k4m"] = {{"left", r.km->left}, {"m", r.km->m}};
        if (r.nestedWitness) j["nestedWitness"] = io::separation_json(g, *r.nestedWitness);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    if (!r.angry) {
        std::cout << "not 4-angry\n";
        if (r.nestedWitness) std::cout << "totally-nested " << sep_text(g, *r.nestedWitness) << "\n";
        return 0;
    }
    std::cout << "4-angry\n";
    for (int s : r.shapes) std::cout << "shape " << s << "\n";
    return 0;
}

int cmd_ydelta(const Options& o) {
    Graph g = read_input(o);
    auto y = ydelta(g);
    if (o.out == "json") {
        std::cout << json{{"degreeThree", y.degreeThree}, {"result", io::graph_json(y.result)}}.dump(2) << "\n";
        return 0;
    }
    require_out(o, {"text"});
    std::cout << io::serialize_graph(y.result, io::parse_format(o.format));
    return 0;
}

int to_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw InputError("'" + s + "' is not an integer");
    return v;
}

Graph generate(const std::string& family, const std::vector<std::string>& p, bool hubEdge, std::uint64_t seed) {
    auto need = [&](std::size_t lo, std::size_t hi, const char* usage) {
        if (p.size() < lo || p.size() > hi) throw InputError(std::string("usage: gen ") + family + " " + usage);
    };
    if (family == "saw") {
        need(2, 2, "<n> <k>");
        return gen::circular_saw(to_int(p[0]), to_int(p[1]));
    }
    if (family == "double-wheel") {
        need(1, 1, "<rim>");
        return gen::double_wheel(to_int(p[0]), hubEdge);
    }
    if (family == "double-wheel-of-triangles") {
        need(1, 1, "<rim>");
        return gen::double_wheel_of_triangles(to_int(p[0]), hubEdge);
    }
    if (family == "generalised-double-wheel") {
        need(1, 1, "<pattern of K and T>");
        return gen::generalised_double_wheel(p[0], hubEdge);
    }
    if (family == "k4m" || family == "k3m") {
        need(2, 64, "pure|thickened|sprinkled <m> [u-v ...]");
        gen::KmKind kind;
        if (p[0] == "pure") kind = gen::KmKind::Pure;
        else if (p[0] == "thickened") kind = gen::KmKind::Thickened;
        else if (p[0] == "sprinkled") kind = gen::KmKind::Sprinkled;
        else throw InputError("unknown K_{k,m} kind '" + p[0] + "'");
        std::vector<Edge> sprinkle;
        for (std::size_t i = 2; i < p.size(); ++i) {
            auto dash = p[i].find('-');
            if (dash == std::string::npos) throw InputError("sprinkle edges are written u-v");
            sprinkle.push_back({to_int(p[i].substr(0, dash)), to_int(p[i].substr(dash + 1))});
        }
        if (kind != gen::KmKind::Sprinkled && !sprinkle.empty())
            throw InputError("only sprinkled K_{k,m} takes extra edges");
        return gen::kkm(family == "k4m" ? 4 : 3, kind, to_int(p[1]), sprinkle);
    }
    if (family == "cycle-of-cliques") {
        need(2, 2, "<count> <size>");
        return gen::cycle_of_cliques(to_int(p[0]), to_int(p[1])).graph;
    }
    if (family == "complete") {
        need(1, 1, "<n>");
        return gen::complete(to_int(p[0]));
    }
    if (family == "cycle") {
        need(1, 1, "<n>");
        return gen::cycle(to_int(p[0]));
    }
    if (family == "wheel") {
        need(1, 1, "<rim>");
        return gen::wheel(to_int(p[0]));
    }
    if (family == "prism") {
        need(0, 0, "");
        return gen::prism();
    }
    if (family == "random") {
        need(2, 3, "<n> <k> [sparse]");
        bool sparse = p.size() == 3;
        if (sparse && p[2] != "sparse") throw InputError("third argument must be 'sparse'");
        return gen::random_k_connected(to_int(p[0]), to_int(p[1]), seed, sparse);
    }
    throw InputError("unknown family '" + family + "'");
}

struct Checker {
    int failures = 0;
    void report(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "ok   " : "FAIL ") << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    }
    void skip(const std::string& name, const std::string& why) { std::cout << "skip " << name << " (" << why << ")\n"; }
};

int cmd_check(const Options& o) {
    Graph g = read_input(o);
    auto bound = bound_of(o);
    Checker c;
    c.report("round-trip edgelist",
             io::parse_graph(io::serialize_graph(g, io::Format::EdgeList), io::Format::EdgeList) == g);
    c.report("round-trip json", io::parse_graph(io::serialize_graph(g, io::Format::Json), io::Format::Json) == g);
    bool four = is_k_connected(g, 4);
    bool three = is_k_connected(g, 3);
    if (four) {
        auto all = enumerate_tetra_separations(g, bound, o.threads);
        if (g.order() <= 12) {
            std::vector<Sep> brute;
            for (auto s : all_mixed_separations(g, 4))
                if (is_tetra_separation(g, s)) brute.push_back(s);
            c.report("enumeration matches exhaustive search", brute == all, std::to_string(all.size()) + " found");
        } else {
            c.skip("enumeration matches exhaustive search", "more than 12 vertices");
        }
        if (g.order() <= 10) {
            int count = 0;
            bool ok = true;
            for (auto s : all_mixed_separations(g, 4)) {
                ++count;
                try {
                    reduction_characterization(g, s);
                } catch (const InvariantError&) {
                    ok = false;
                }
            }
            c.report("reduction characterization", ok, std::to_string(count) + " mixed separations");
        } else {
            c.skip("reduction characterization", "more than 10 vertices");
        }
        auto oracle = totally_nested_among(g, all, NestedMethod::Oracle);
        auto ext = totally_nested_among(g, all, NestedMethod::Characterization);
        c.report("totally-nested oracle equals characterization", oracle == ext,
                 std::to_string(oracle.size()) + " nested");
        bool crossingOk = true;
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j)
                if (!is_nested(all[i], all[j])) {
                    auto r = crossing_report(g, corner_diagram(g, all[i], all[j]));
                    crossingOk = crossingOk && r.holds;
                }
        c.report("crossing lemma", crossingOk);
        if (g.order() >= 8)
            c.report("no tetra-separation iff quasi-5-connected", all.empty() == is_quasi_k_connected(g, 5));
        try {
            auto d = tetra_decompose(g, NestedMethod::Characterization, bound, o.threads);
            bool ok = true;
            for (std::size_t i = 0; i < d.torsos.size(); ++i)
                ok = ok && verify_torso_class(g, d.torsos[i].torso, d.classes[i]);
            c.report("torso classification", ok, std::to_string(d.torsos.size()) + " torsos");
        } catch (const InvariantError& e) {
            c.report("torso classification", false, e.what());
        }
        if (g.order() >= 8) {
            try {
                auto r = classify_4_angry(g, bound);
                c.report("angry theorem", !r.angry || !r.shapes.empty(), r.angry ? "4-angry" : "not 4-angry");
            } catch (const InvariantError& e) {
                c.report("angry theorem", false, e.what());
            }
        }
    } else {
        c.skip("tetra checks", "graph is not 4-connected");
    }
    if (three) {
        try {
            auto d = tri_decompose(g, NestedMethod::Both, bound);
            bool ok = true;
            for (std::size_t i = 0; i < d.torsos.size(); ++i)
                ok = ok && verify_tri_class(g, d.torsos[i].torso, d.classes[i]);
            c.report("3-connected corollary", ok, std::to_string(d.torsos.size()) + " torsos");
        } catch (const InvariantError& e) {
            c.report("3-connected corollary", false, e.what());
        } catch (const CapabilityError& e) {
            c.skip("3-connected corollary", e.what());
        }
        if (is_quasi_k_connected(g, 4) && g.order() >= 7)
            c.report("Y-Delta gives a 4-connected graph", is_k_connected(ydelta(g).result, 4));
    } else {
        c.skip("3-connected checks", "graph is not 3-connected");
    }
    if (c.failures) throw InvariantError(std::to_string(c.failures) + " check(s) failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decompositions of 4-connected and 3-connected graphs along totally-nested separations"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "graph format: edgelist or json")
        ->check(CLI::IsMember({"edgelist", "json"}));
    app.add_option("--out", o.out, "report format: text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--bound", o.bound, "enumeration cap on the number of vertices");
    app.add_option("--method", o.method, "nestedness test: oracle, characterization or both")
        ->check(CLI::IsMember({"oracle", "characterization", "both"}));
    app.add_option("--seed", o.seed, "seed for random generators");
    app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);

    std::function<int()> action;
    auto with_input = [&](CLI::App* sub, std::function<int(const Options&)> f) {
        sub->add_option("input", o.input, "graph file, '-' for stdin");
        sub->callback([&, f] { action = [&, f] { return f(o); }; });
    };

    auto* tetraCmd = app.add_subcommand("tetra", "tetra-separations of a 4-connected graph");
    tetraCmd->require_subcommand(1);
    with_input(tetraCmd->add_subcommand("enumerate", "list all tetra-separations"), cmd_enumerate);
    with_input(tetraCmd->add_subcommand("nested", "list the totally-nested tetra-separations"), cmd_nested);
    with_input(app.add_subcommand("decompose", "decompose a 4-connected graph"), cmd_decompose);
    with_input(app.add_subcommand("tri-decompose", "decompose a 3-connected graph"), cmd_tri_decompose);
    with_input(app.add_subcommand("pipeline", "run the full decomposition pipeline"), cmd_pipeline);
    with_input(app.add_subcommand("classify-angry", "classify a 4-angry graph"), cmd_classify_angry);
    with_input(app.add_subcommand("ydelta", "apply the Y-Delta operation"), cmd_ydelta);
    with_input(app.add_subcommand("check", "run the invariant suite on a graph"), cmd_check);

    auto* genCmd = app.add_subcommand("gen", "generate a named graph");
    std::string family;
    std::vector<std::string> params;
    bool hubEdge = false;
    genCmd->add_option("family", family, "saw, double-wheel, double-wheel-of-triangles, generalised-double-wheel, "
                                         "k4m, k3m, cycle-of-cliques, complete, cycle, wheel, prism, random")
        ->required();
    genCmd->add_option("params", params, "family parameters");
    genCmd->add_flag("--hub-edge", hubEdge, "join the two hubs of a double-wheel");
    genCmd->callback([&] {
        action = [&] {
            std::cout << io::serialize_graph(generate(family, params, hubEdge, o.seed), io::parse_format(o.format));
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const CapabilityError& e) {
        std::cerr << "capability bound: " << e.what() << "\n";
        return 3;
    } catch (const InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return 4;
    }
}
