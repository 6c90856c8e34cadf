#ifndef HYPERVIEW_LAYOUT_HPP_
#define HYPERVIEW_LAYOUT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hyperview/expand.hpp"

namespace hyperview {

/// Louvain community detection result on one expanded view.
struct LouvainResult {
  std::vector<int> community;             // per graph node index, ids 0..k-1
  double modularity = 0.0;                // weighted Q of the final partition
  std::vector<double> phase_modularity;   // Q after each aggregation phase
};

/// Two-phase Louvain on the weighted simple graph. Local moves run until no
/// move gains more than 1e-7, then communities aggregate; repeats until
/// stable. Visit order is shuffled by `seed`; ties break toward the lowest
/// community id. A graph with no edges yields singleton communities, Q = 0.
LouvainResult louvain(const ExpandedGraph& g, std::uint64_t seed);

/// Weighted modularity of an arbitrary partition of g (test/inspection
/// helper; louvain() reports the final value itself).
double modularity(const ExpandedGraph& g, const std::vector<int>& community);

struct LayoutParams {
  int iterations = 1000;
  double repulsion_k = 10.0;          // k_r
  double gravity = 1.0;               // k_g
  double edge_weight_exponent = 1.0;  // delta, attraction ~ w^delta * dist
  double tolerance = 1.0;             // global speed tolerance (jitter)
  double speed_factor = 0.1;          // per-node speed scale
  double max_displacement = 10.0;     // per-iteration step clamp
  double initial_extent = 200.0;      // side of the seeded start square
  std::uint64_t seed = 0;
};

/// Node positions and cluster ids for one view. Nodes are kept in sorted
/// label order so the result is independent of graph node order.
struct LayoutState {
  ViewKind computed_on = ViewKind::Clique;
  bool transferred = false;
  std::uint64_t seed = 0;
  std::vector<std::string> labels;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<int> cluster;

  std::size_t size() const { return labels.size(); }
  std::unordered_map<std::string, std::size_t> label_index() const;
};

/// Degree-weighted force-directed layout: attraction along edges
/// proportional to distance and w^delta, repulsion k_r(d_i+1)(d_j+1)/dist,
/// constant-magnitude gravity k_g(d_i+1) toward the origin, adaptive
/// per-node speed with global swing damping. Deterministic given (graph,
/// params, seed); initial positions default to a seeded uniform square.
/// Throws naming the iteration if a position becomes non-finite.
LayoutState force_atlas2(const ExpandedGraph& g, const LayoutParams& params,
                         const std::vector<int>& clusters,
                         const LayoutState* initial = nullptr);

/// Moves coordinates between the two views of one hypergraph.
/// clique -> extra-node: real nodes copy their positions and an extra node
/// sits at the isobarycenter of its hyperedge members. extra-node ->
/// clique: extra nodes drop. Cluster ids copy for real nodes; an extra node
/// inherits the majority cluster of its members (ties toward the lowest
/// id). Throws on mismatched provenance.
LayoutState transfer_coordinates(const LayoutState& source, const ExpandedGraph& from_view,
                                 const ExpandedGraph& to_view);

std::string layout_to_json(const LayoutState& layout);
LayoutState layout_from_json(const std::string& text);

}  // namespace hyperview

#endif  // HYPERVIEW_LAYOUT_HPP_
