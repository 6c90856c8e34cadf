#ifndef HYPERVIEW_ANALYSIS_HPP_
#define HYPERVIEW_ANALYSIS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperview/hypergraph.hpp"

namespace hyperview {

/// Full real eigendecomposition of a symmetric matrix, eigenvalues
/// descending, columns of `eigenvectors` the matching unit eigenvectors.
/// Sign convention: the largest-magnitude component of each vector is
/// positive (first such index on ties).
struct SpectralDecomposition {
  int n = 0;
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;  // row-major, column j = vector j

  double vec(int i, int j) const { return eigenvectors[static_cast<std::size_t>(i) * n + j]; }
};

/// Cyclic Jacobi sweep, off-diagonal norm tolerance 1e-10, max 100 sweeps.
/// Throws if the input is not symmetric.
SpectralDecomposition eigendecompose(const AdjacencyMatrix& a);

/// Sub-hypergraph centrality per node: C_SH(i) = sum_j u_ij^2 * exp(lambda_j).
std::vector<double> subhypergraph_centrality(const Hypergraph& h);

/// 6 * hyper-triangles / 2-paths. A hyper-triangle is an ordered sequence
/// v_i E_p v_j E_q v_k E_r v_i with three distinct vertices and three
/// distinct hyperedges, counted once per 6 orderings. A 2-path
/// v_i E_p v_j E_q v_k needs distinct vertices only; set
/// `require_distinct_path_edges` to also demand E_p != E_q.
/// Returns nullopt when there are no 2-paths.
std::optional<double> clustering_coefficient(const Hypergraph& h,
                                             bool require_distinct_path_edges = false);

/// Weight-expanded size distribution: bin k = sum of weights of hyperedges
/// with |E_i| = k, so a merged duplicate counts per occurrence.
struct SizeHistogram {
  std::map<int, long long> bins;

  long long total() const;
};

SizeHistogram size_histogram(const Hypergraph& h);

struct PowerLawFit {
  double intercept = 0.0;  // a, log10 units
  double exponent = 0.0;   // b
  double r_squared = 0.0;
  int k_min = 0;
  int k_max = 0;
};

/// Ordinary least squares of log10(count) on log10(size) over the binned
/// points inside fit_range. Default range runs from the histogram's modal
/// size (lowest on ties) to the largest size with count >= 2. Throws when
/// fewer than 3 distinct sizes fall in range.
PowerLawFit fit_power_law(const SizeHistogram& hist,
                          std::optional<std::pair<int, int>> fit_range = std::nullopt);

/// One row of the potential-gain table. `k_max` < 0 means an open range.
/// Edge cells are absent for the k = 1 row (printed as "x").
struct GainTableRow {
  int k_min = 0;
  int k_max = 0;
  long long count = 0;
  std::optional<long long> clique_edges;
  std::optional<long long> extra_node_edges;
  std::optional<double> gain;
};

struct GainTable {
  std::vector<GainTableRow> rows;
  GainTableRow total;  // count over all rows, edges over k >= 2
};

/// Number of spoke edges the extra-node view spends on one size-k
/// hyperedge: 0 for k = 1, 1 for k = 2 (drawn as a direct edge), k for
/// k >= 3.
long long spoke_count(int k);

/// Potential edge counts per size range: clique edges count(k)*k(k-1)/2,
/// extra-node edges count(k)*spoke(k), gain their ratio.
GainTable potential_gain_table(const SizeHistogram& hist,
                               const std::vector<std::pair<int, int>>& bin_spec);

/// The size ranges used for the reference tables: 1..5 individually, then
/// 6-10, 11-15, 16-20, 21-50, 51-100, >100.
std::vector<std::pair<int, int>> default_bin_spec();

std::string gain_table_to_text(const GainTable& table);
std::string gain_table_to_csv(const GainTable& table);

}  // namespace hyperview

#endif  // HYPERVIEW_ANALYSIS_HPP_
