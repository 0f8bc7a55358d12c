#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tetra/pipeline.hpp"

namespace tetra::io {

enum class Format { EdgeList, Json };

Format parse_format(const std::string& name);

// Edge list: optional header `p <n>` declaring vertices 0..n-1, then `u v`
// lines; `#` starts a comment. JSON: {"vertices":[...],"edges":[[u,v],...]}.
Graph parse_graph(const std::string& text, Format f);
std::string serialize_graph(const Graph& g, Format f);

nlohmann::json graph_json(const Graph& g);
nlohmann::json separation_json(const Graph& g, Sep s);

struct NodeReport {
    Graph torso;
    nlohmann::json cls;
};

nlohmann::json decomposition_json(const Graph& g, const MixedTreeDecomposition& d,
                                  const std::vector<NodeReport>& nodes);
std::string decomposition_dot(const Graph& g, const MixedTreeDecomposition& d,
                              const std::vector<NodeReport>& nodes);

nlohmann::json torso_class_json(const TorsoClass& c);
nlohmann::json tri_class_json(const TriClass& c);
nlohmann::json ring_json(const RingDecomposition& r);
nlohmann::json pipeline_json(const PipelineReport& r);
std::string pipeline_dot(const PipelineReport& r);

}  // namespace tetra::io
