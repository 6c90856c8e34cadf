#ifndef HYPERVIEW_HYPERGRAPH_HPP_
#define HYPERVIEW_HYPERGRAPH_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hyperview {

/// Weighted attribute hypergraph. Nodes are attribute-value labels in
/// lexicographic order; hyperedges are distinct member sets (duplicates
/// merged with summed weight), ordered by their member index sequence.
/// Values are immutable after construction and safe to share.
struct Hypergraph {
  struct Hyperedge {
    std::vector<int> members;          // sorted node indices, nonempty
    long long weight = 1;              // number of contributing records
    std::vector<std::string> sources;  // record ids, corpus order
  };

  std::string attr_type;
  std::vector<std::string> nodes;
  std::vector<Hyperedge> hyperedges;

  int order() const { return static_cast<int>(nodes.size()); }
  int edge_count() const { return static_cast<int>(hyperedges.size()); }

  /// Content fingerprint used to check that two expanded views derive from
  /// the same hypergraph.
  std::string provenance() const;
};

/// 0/1 node-by-hyperedge membership matrix (weights ignored).
struct IncidenceMatrix {
  int rows = 0;  // nodes
  int cols = 0;  // hyperedges
  std::vector<std::uint8_t> data;  // row-major

  std::uint8_t at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

/// Symmetric co-membership counts with zero diagonal: entry (i,j) is the
/// number of distinct hyperedges containing both nodes.
struct AdjacencyMatrix {
  int n = 0;
  std::vector<long long> data;  // row-major

  long long at(int i, int j) const { return data[static_cast<std::size_t>(i) * n + j]; }
  long long& at(int i, int j) { return data[static_cast<std::size_t>(i) * n + j]; }
};

struct HypergraphStats {
  int order = 0;
  std::optional<int> rank;       // max |E_i|, absent when no hyperedges
  std::optional<int> anti_rank;  // min |E_i|
  int hyperedge_count = 0;
  long long total_weight = 0;
  std::optional<double> average_size;  // weighted by hyperedge weight
  bool is_simple = true;               // guaranteed by the merge rule
};

/// Builds the hypergraph from (record id, attribute set) entries. Node list
/// is the sorted union of all values; identical member sets merge with
/// summed weight. An empty entry list yields the empty hypergraph.
Hypergraph build_hypergraph(
    const std::vector<std::pair<std::string, std::set<std::string>>>& entries,
    const std::string& attr_type);

IncidenceMatrix incidence_matrix(const Hypergraph& h);
AdjacencyMatrix adjacency_matrix(const Hypergraph& h);

/// degree(i) = number of distinct hyperedges containing node i.
std::vector<long long> degree_vector(const Hypergraph& h);

HypergraphStats summary_stats(const Hypergraph& h);

/// Minimal number of hyperedges connecting two nodes; 0 for u == v,
/// nullopt when unreachable. Throws on an unknown label.
std::optional<int> node_distance(const Hypergraph& h, const std::string& u,
                                 const std::string& v);

/// JSON (de)serialization; the interchange unit between CLI stages.
std::string hypergraph_to_json(const Hypergraph& h,
                               std::optional<std::uint64_t> seed = std::nullopt);
Hypergraph hypergraph_from_json(const std::string& text);

}  // namespace hyperview

#endif  // HYPERVIEW_HYPERGRAPH_HPP_
