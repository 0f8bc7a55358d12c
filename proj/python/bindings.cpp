#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tetra/connectivity.hpp"
#include "tetra/generators.hpp"
#include "tetra/io.hpp"
#include "tetra/pipeline.hpp"
#include "tetra/recognizers.hpp"
#include "tetra/tetra_engine.hpp"

namespace py = pybind11;
using namespace tetra;

namespace {

EnumerationBound bound_of(int maxVertices) { return {maxVertices, 5 * maxVertices}; }

NestedMethod method_of(const std::string& name) {
    if (name == "oracle") return NestedMethod::Oracle;
    if (name == "characterization") return NestedMethod::Characterization;
    if (name == "both") return NestedMethod::Both;
    throw InputError("unknown method " + name);
}

std::vector<std::pair<VertexSet, VertexSet>> as_pairs(const Graph& g, const std::vector<Sep>& seps) {
    std::vector<std::pair<VertexSet, VertexSet>> out;
    for (Sep s : seps) {
        auto m = to_labels(g, s);
        out.emplace_back(m.sideA, m.sideB);
    }
    return out;
}

std::string decompose_json(const Graph& g, const std::string& method, int maxVertices) {
    auto d = tetra_decompose(g, method_of(method), bound_of(maxVertices));
    std::vector<io::NodeReport> nodes;
    for (std::size_t i = 0; i < d.torsos.size(); ++i)
        nodes.push_back({d.torsos[i].torso, io::torso_class_json(d.classes[i])});
    return io::decomposition_json(g, d.tree, nodes).dump();
}

std::string tri_decompose_json(const Graph& g, const std::string& method, int maxVertices) {
    auto d = tri_decompose(g, method_of(method), bound_of(maxVertices));
    std::vector<io::NodeReport> nodes;
    for (std::size_t i = 0; i < d.torsos.size(); ++i)
        nodes.push_back({d.torsos[i].torso, io::tri_class_json(d.classes[i])});
    return io::decomposition_json(g, d.tree, nodes).dump();
}

std::string angry_json(const Graph& g, int maxVertices) {
    auto r = classify_4_angry(g, bound_of(maxVertices));
    nlohmann::json j = {{"angry", r.angry}, {"shapes", r.shapes}};
    if (r.bagel) j["bagel"] = io::ring_json(*r.bagel);
    if (r.wheel) j["wheelCentre"] = r.wheel->centre;
    if (r.km) j["kmLeft"] = r.km->left;
    if (r.nestedWitness) j["nestedWitness"] = io::separation_json(g, *r.nestedWitness);
    return j.dump();
}

gen::KmKind km_kind(const std::string& name) {
    if (name == "pure") return gen::KmKind::Pure;
    if (name == "thickened") return gen::KmKind::Thickened;
    if (name == "sprinkled") return gen::KmKind::Sprinkled;
    throw InputError("unknown K_{k,m} kind " + name);
}

}  // namespace

PYBIND11_MODULE(_tetradecomp, m) {
    m.doc() = "Tetra-separations and the decomposition of 4-connected graphs";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_AssertionError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<VertexSet, std::vector<Edge>>(), py::arg("vertices"), py::arg("edges"))
        .def_static("from_edges", [](const std::vector<Edge>& edges) { return Graph::from_edges(edges); },
                    py::arg("edges"))
        .def_static("parse", [](const std::string& text, const std::string& format) {
            return io::parse_graph(text, io::parse_format(format));
        }, py::arg("text"), py::arg("format") = "edgelist")
        .def("serialize", [](const Graph& g, const std::string& format) {
            return io::serialize_graph(g, io::parse_format(format));
        }, py::arg("format") = "edgelist")
        .def("vertices", &Graph::vertices)
        .def("edges", &Graph::edges)
        .def("degree", &Graph::degree)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph |V|=" + std::to_string(g.order()) + " |E|=" + std::to_string(g.size()) + ">";
        });

    m.def("is_k_connected", &is_k_connected, py::arg("graph"), py::arg("k"));
    m.def("is_quasi_k_connected", &is_quasi_k_connected, py::arg("graph"), py::arg("k"));
    m.def("is_isomorphic", &is_isomorphic, py::arg("g"), py::arg("h"), py::arg("bound") = 12);

    m.def("tetra_separations", [](const Graph& g, int maxVertices) {
        return as_pairs(g, enumerate_tetra_separations(g, bound_of(maxVertices)));
    }, py::arg("graph"), py::arg("max_vertices") = 24);
    m.def("totally_nested", [](const Graph& g, const std::string& method, int maxVertices) {
        return as_pairs(g, totally_nested_set(g, method_of(method), bound_of(maxVertices)).nested);
    }, py::arg("graph"), py::arg("method") = "characterization", py::arg("max_vertices") = 24);
    m.def("is_4_angry", [](const Graph& g, int maxVertices) { return is_4_angry(g, bound_of(maxVertices)); },
          py::arg("graph"), py::arg("max_vertices") = 24);

    m.def("_decompose", &decompose_json);
    m.def("_tri_decompose", &tri_decompose_json);
    m.def("_classify_4_angry", &angry_json);
    m.def("_pipeline", [](const Graph& g, int maxVertices) {
        return io::pipeline_json(full_pipeline(g, bound_of(maxVertices))).dump();
    });
    m.def("ydelta", [](const Graph& g) { return ydelta(g).result; }, py::arg("graph"));

    m.def("complete", &gen::complete, py::arg("n"));
    m.def("cycle", &gen::cycle, py::arg("n"));
    m.def("wheel", &gen::wheel, py::arg("n"));
    m.def("prism", &gen::prism);
    m.def("circular_saw", &gen::circular_saw, py::arg("n"), py::arg("k"));
    m.def("double_wheel", &gen::double_wheel, py::arg("rim"), py::arg("hub_edge") = false);
    m.def("double_wheel_of_triangles", &gen::double_wheel_of_triangles, py::arg("rim"),
          py::arg("hub_edge") = false);
    m.def("generalised_double_wheel", &gen::generalised_double_wheel, py::arg("pattern"),
          py::arg("hub_edge") = false);
    m.def("kkm", [](int k, const std::string& kind, int mm, const std::vector<Edge>& sprinkle) {
        return gen::kkm(k, km_kind(kind), mm, sprinkle);
    }, py::arg("k"), py::arg("kind"), py::arg("m"), py::arg("sprinkle") = std::vector<Edge>{});
    m.def("cycle_of_cliques", [](int count, int size) { return gen::cycle_of_cliques(count, size).graph; },
          py::arg("count"), py::arg("size"));
    m.def("random_k_connected", &gen::random_k_connected, py::arg("n"), py::arg("k"), py::arg("seed"),
          py::arg("sparse") = false);
}
