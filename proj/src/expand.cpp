#include "hyperview/expand.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace hyperview {

std::string view_kind_name(ViewKind kind) {
  return kind == ViewKind::Clique ? "clique" : "extra_node";
}

ViewKind view_kind_from_name(const std::string& name) {
  if (name == "clique") return ViewKind::Clique;
  if (name == "extra_node") return ViewKind::ExtraNode;
  throw std::runtime_error("unknown view kind \"" + name + "\"");
}

int ExpandedGraph::real_node_count() const {
  return static_cast<int>(std::count_if(nodes.begin(), nodes.end(),
                                        [](const Node& n) { return !n.extra; }));
}

int ExpandedGraph::extra_node_count() const {
  return static_cast<int>(nodes.size()) - real_node_count();
}

ExpandedGraph clique_expansion(const Hypergraph& h) {
  ExpandedGraph g;
  g.view_kind = ViewKind::Clique;
  g.provenance = h.provenance();
  g.nodes.reserve(h.nodes.size());
  for (const auto& label : h.nodes) g.nodes.push_back({label, false, -1});

  std::map<std::pair<int, int>, double> pair_weight;
  for (const auto& edge : h.hyperedges) {
    for (std::size_t p = 0; p < edge.members.size(); ++p) {
      for (std::size_t q = p + 1; q < edge.members.size(); ++q) {
        pair_weight[{edge.members[p], edge.members[q]}] += static_cast<double>(edge.weight);
      }
    }
  }
  g.edges.reserve(pair_weight.size());
  for (const auto& [pair, weight] : pair_weight) {
    g.edges.push_back({pair.first, pair.second, weight});
  }
  return g;
}

ExpandedGraph extra_node_expansion(const Hypergraph& h) {
  ExpandedGraph g;
  g.view_kind = ViewKind::ExtraNode;
  g.provenance = h.provenance();
  for (const auto& label : h.nodes) g.nodes.push_back({label, false, -1});

  std::map<std::pair<int, int>, double> direct_weight;  // merged size-2 edges
  for (int j = 0; j < h.edge_count(); ++j) {
    const auto& edge = h.hyperedges[j];
    if (edge.members.size() == 1) continue;
    if (edge.members.size() == 2) {
      direct_weight[{edge.members[0], edge.members[1]}] += static_cast<double>(edge.weight);
      continue;
    }
    int center = static_cast<int>(g.nodes.size());
    g.nodes.push_back({h.attr_type + "#edge" + std::to_string(j), true, j});
    for (int member : edge.members) {
      g.edges.push_back({std::min(member, center), std::max(member, center),
                         static_cast<double>(edge.weight)});
    }
  }
  for (const auto& [pair, weight] : direct_weight) {
    g.edges.push_back({pair.first, pair.second, weight});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& lhs, const auto& rhs) {
    return std::pair(lhs.a, lhs.b) < std::pair(rhs.a, rhs.b);
  });
  return g;
}

std::optional<double> edge_gain(const ExpandedGraph& clique, const ExpandedGraph& extra) {
  if (clique.provenance != extra.provenance) {
    throw std::runtime_error("edge_gain: views derive from different hypergraphs");
  }
  if (extra.edges.empty()) return std::nullopt;
  return static_cast<double>(clique.edges.size()) / static_cast<double>(extra.edges.size());
}

std::string expanded_graph_to_json(const ExpandedGraph& g, std::optional<std::uint64_t> seed) {
  nlohmann::json j;
  j["view_kind"] = view_kind_name(g.view_kind);
  j["provenance"] = g.provenance;
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& node : g.nodes) {
    nlohmann::json n;
    n["label"] = node.label;
    n["kind"] = node.extra ? "extra" : "real";
    if (node.extra) n["source"] = node.source_edge;
    nodes.push_back(n);
  }
  j["nodes"] = nodes;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& edge : g.edges) {
    edges.push_back({{"a", edge.a}, {"b", edge.b}, {"w", edge.weight}});
  }
  j["edges"] = edges;
  if (seed) j["seed"] = *seed;
  return j.dump(2) + "\n";
}

ExpandedGraph expanded_graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ExpandedGraph g;
  g.view_kind = view_kind_from_name(j.at("view_kind").get<std::string>());
  g.provenance = j.value("provenance", "");
  for (const auto& n : j.at("nodes")) {
    ExpandedGraph::Node node;
    node.label = n.at("label").get<std::string>();
    node.extra = n.at("kind").get<std::string>() == "extra";
    node.source_edge = n.value("source", -1);
    g.nodes.push_back(std::move(node));
  }
  for (const auto& e : j.at("edges")) {
    ExpandedGraph::Edge edge;
    edge.a = e.at("a").get<int>();
    edge.b = e.at("b").get<int>();
    edge.weight = e.at("w").get<double>();
    if (edge.a < 0 || edge.b < 0 || edge.a >= static_cast<int>(g.nodes.size()) ||
        edge.b >= static_cast<int>(g.nodes.size())) {
      throw std::runtime_error("expanded graph JSON: edge endpoint out of range");
    }
    g.edges.push_back(edge);
  }
  return g;
}

}  // namespace hyperview
