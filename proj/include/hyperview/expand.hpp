#ifndef HYPERVIEW_EXPAND_HPP_
#define HYPERVIEW_EXPAND_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperview/hypergraph.hpp"

namespace hyperview {

enum class ViewKind { Clique, ExtraNode };

std::string view_kind_name(ViewKind kind);
ViewKind view_kind_from_name(const std::string& name);

/// Simple weighted graph produced by expanding a hypergraph. Real nodes
/// come first in hypergraph node order; extra nodes follow in hyperedge
/// order and record their source hyperedge index.
struct ExpandedGraph {
  struct Node {
    std::string label;
    bool extra = false;
    int source_edge = -1;  // hyperedge index for extra nodes
  };
  struct Edge {
    int a = 0;
    int b = 0;
    double weight = 1.0;
  };

  ViewKind view_kind = ViewKind::Clique;
  std::string provenance;
  std::vector<Node> nodes;
  std::vector<Edge> edges;  // a < b, unique pairs, no self-loops

  int real_node_count() const;
  int extra_node_count() const;
};

/// Every size-k hyperedge (k >= 2) becomes its k(k-1)/2 pairwise edges;
/// pairs shared by several hyperedges merge into one edge with summed
/// weight. Size-1 hyperedges contribute the node only.
ExpandedGraph clique_expansion(const Hypergraph& h);

/// Size-1 hyperedge: node only. Size-2: one direct real-real edge.
/// Size k >= 3: one extra node named "<attr_type>#edge<index>" plus one
/// spoke per member, each spoke carrying the hyperedge weight.
ExpandedGraph extra_node_expansion(const Hypergraph& h);

/// |E_clique| / |E_extra-node| on deduplicated edge counts. The realized
/// gain can fall below 1. nullopt when the extra view has no edges.
std::optional<double> edge_gain(const ExpandedGraph& clique, const ExpandedGraph& extra);

std::string expanded_graph_to_json(const ExpandedGraph& g,
                                   std::optional<std::uint64_t> seed = std::nullopt);
ExpandedGraph expanded_graph_from_json(const std::string& text);

}  // namespace hyperview

#endif  // HYPERVIEW_EXPAND_HPP_
