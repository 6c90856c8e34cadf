#include "hyperview/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hyperview {

std::string Hypergraph::provenance() const {
  // FNV-1a over attr_type, node labels and member sets. Weights are part
  // of the content; source ids are not (two builds from reordered corpora
  // still describe the same hypergraph).
  std::uint64_t hash = 1469598103934665603ULL;
  auto mix = [&hash](const std::string& s) {
    for (unsigned char c : s) {
      hash ^= c;
      hash *= 1099511628211ULL;
    }
    hash ^= 0xff;
    hash *= 1099511628211ULL;
  };
  mix(attr_type);
  for (const auto& node : nodes) mix(node);
  for (const auto& edge : hyperedges) {
    mix("e" + std::to_string(edge.weight));
    for (int m : edge.members) mix(std::to_string(m));
  }
  std::ostringstream out;
  out << attr_type << "/" << nodes.size() << "n" << hyperedges.size() << "e/" << std::hex << hash;
  return out.str();
}

Hypergraph build_hypergraph(
    const std::vector<std::pair<std::string, std::set<std::string>>>& entries,
    const std::string& attr_type) {
  Hypergraph h;
  h.attr_type = attr_type;

  std::set<std::string> labels;
  for (const auto& [id, values] : entries) {
    if (values.empty()) throw std::runtime_error("build_hypergraph: empty attribute set");
    labels.insert(values.begin(), values.end());
  }
  h.nodes.assign(labels.begin(), labels.end());

  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(h.nodes.size()); ++i) index[h.nodes[i]] = i;

  // Merge identical member sets; map keeps hyperedges ordered by their
  // member index sequence.
  std::map<std::vector<int>, Hypergraph::Hyperedge> merged;
  for (const auto& [id, values] : entries) {
    std::vector<int> members;
    members.reserve(values.size());
    for (const auto& v : values) members.push_back(index.at(v));
    std::sort(members.begin(), members.end());
    auto [it, inserted] = merged.try_emplace(members);
    if (inserted) {
      it->second.members = members;
      it->second.weight = 0;
    }
    it->second.weight += 1;
    it->second.sources.push_back(id);
  }
  h.hyperedges.reserve(merged.size());
  for (auto& [members, edge] : merged) h.hyperedges.push_back(std::move(edge));
  return h;
}

IncidenceMatrix incidence_matrix(const Hypergraph& h) {
  IncidenceMatrix m;
  m.rows = h.order();
  m.cols = h.edge_count();
  m.data.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
  for (int j = 0; j < m.cols; ++j) {
    for (int i : h.hyperedges[j].members) {
      m.data[static_cast<std::size_t>(i) * m.cols + j] = 1;
    }
  }
  return m;
}

AdjacencyMatrix adjacency_matrix(const Hypergraph& h) {
  AdjacencyMatrix a;
  a.n = h.order();
  a.data.assign(static_cast<std::size_t>(a.n) * a.n, 0);
  for (const auto& edge : h.hyperedges) {
    for (std::size_t p = 0; p < edge.members.size(); ++p) {
      for (std::size_t q = p + 1; q < edge.members.size(); ++q) {
        a.at(edge.members[p], edge.members[q]) += 1;
        a.at(edge.members[q], edge.members[p]) += 1;
      }
    }
  }
  return a;
}

std::vector<long long> degree_vector(const Hypergraph& h) {
  std::vector<long long> degrees(h.order(), 0);
  for (const auto& edge : h.hyperedges) {
    for (int i : edge.members) degrees[i] += 1;
  }
  return degrees;
}

HypergraphStats summary_stats(const Hypergraph& h) {
  HypergraphStats stats;
  stats.order = h.order();
  stats.hyperedge_count = h.edge_count();
  if (!h.hyperedges.empty()) {
    int rank = 0;
    int anti_rank = static_cast<int>(h.hyperedges.front().members.size());
    long long weighted_size = 0;
    for (const auto& edge : h.hyperedges) {
      int size = static_cast<int>(edge.members.size());
      rank = std::max(rank, size);
      anti_rank = std::min(anti_rank, size);
      stats.total_weight += edge.weight;
      weighted_size += edge.weight * size;
    }
    stats.rank = rank;
    stats.anti_rank = anti_rank;
    stats.average_size = static_cast<double>(weighted_size) / static_cast<double>(stats.total_weight);
  }
  return stats;
}

std::optional<int> node_distance(const Hypergraph& h, const std::string& u,
                                 const std::string& v) {
  auto find_index = [&h](const std::string& label) {
    auto it = std::lower_bound(h.nodes.begin(), h.nodes.end(), label);
    if (it == h.nodes.end() || *it != label) {
      throw std::runtime_error("node_distance: unknown node \"" + label + "\"");
    }
    return static_cast<int>(it - h.nodes.begin());
  };
  int start = find_index(u);
  int goal = find_index(v);
  if (start == goal) return 0;

  std::vector<std::vector<int>> node_edges(h.order());
  for (int j = 0; j < h.edge_count(); ++j) {
    for (int i : h.hyperedges[j].members) node_edges[i].push_back(j);
  }

  // BFS where one step crosses one hyperedge.
  std::vector<int> dist(h.order(), -1);
  std::vector<bool> edge_seen(h.edge_count(), false);
  dist[start] = 0;
  std::deque<int> frontier{start};
  while (!frontier.empty()) {
    int node = frontier.front();
    frontier.pop_front();
    for (int j : node_edges[node]) {
      if (edge_seen[j]) continue;
      edge_seen[j] = true;
      for (int next : h.hyperedges[j].members) {
        if (dist[next] >= 0) continue;
        dist[next] = dist[node] + 1;
        if (next == goal) return dist[next];
        frontier.push_back(next);
      }
    }
  }
  return std::nullopt;
}

std::string hypergraph_to_json(const Hypergraph& h, std::optional<std::uint64_t> seed) {
  nlohmann::json j;
  j["attr_type"] = h.attr_type;
  j["nodes"] = h.nodes;
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& edge : h.hyperedges) {
    edges.push_back({{"members", edge.members}, {"weight", edge.weight}, {"sources", edge.sources}});
  }
  j["hyperedges"] = edges;
  if (seed) j["seed"] = *seed;
  return j.dump(2) + "\n";
}

Hypergraph hypergraph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Hypergraph h;
  h.attr_type = j.at("attr_type").get<std::string>();
  h.nodes = j.at("nodes").get<std::vector<std::string>>();
  for (const auto& e : j.at("hyperedges")) {
    Hypergraph::Hyperedge edge;
    edge.members = e.at("members").get<std::vector<int>>();
    edge.weight = e.at("weight").get<long long>();
    if (e.contains("sources")) edge.sources = e.at("sources").get<std::vector<std::string>>();
    if (edge.members.empty()) throw std::runtime_error("hypergraph JSON: empty hyperedge");
    for (int m : edge.members) {
      if (m < 0 || m >= static_cast<int>(h.nodes.size())) {
        throw std::runtime_error("hypergraph JSON: member index out of range");
      }
    }
    h.hyperedges.push_back(std::move(edge));
  }
  return h;
}

}  // namespace hyperview
