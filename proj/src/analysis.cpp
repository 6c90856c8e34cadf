#include "hyperview/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hyperview {

SpectralDecomposition eigendecompose(const AdjacencyMatrix& a) {
  const int n = a.n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (a.at(i, j) != a.at(j, i)) {
        throw std::runtime_error("eigendecompose: matrix is not symmetric");
      }
    }
  }

  std::vector<double> m(static_cast<std::size_t>(n) * n);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<double>(a.data[i]);
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  auto at = [n](std::vector<double>& mat, int i, int j) -> double& {
    return mat[static_cast<std::size_t>(i) * n + j];
  };

  // Cyclic Jacobi: sweep (p,q) pairs in fixed row order until the
  // off-diagonal norm drops below 1e-10, at most 100 sweeps.
  const double kTolerance = 1e-10;
  const int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(m, i, j) * at(m, i, j);
    }
    if (std::sqrt(off) < kTolerance) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(m, p, q);
        if (apq == 0.0) continue;
        double app = at(m, p, p);
        double aqq = at(m, q, q);
        double theta = (aqq - app) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (int k = 0; k < n; ++k) {
          double mkp = at(m, k, p);
          double mkq = at(m, k, q);
          at(m, k, p) = c * mkp - s * mkq;
          at(m, k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          double mpk = at(m, p, k);
          double mqk = at(m, q, k);
          at(m, p, k) = c * mpk - s * mqk;
          at(m, q, k) = s * mpk + c * mqk;
        }
        for (int k = 0; k < n; ++k) {
          double vkp = at(v, k, p);
          double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  SpectralDecomposition result;
  result.n = n;
  result.eigenvalues.resize(n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = at(m, i, i);
  std::stable_sort(order.begin(), order.end(),
                   [&diag](int lhs, int rhs) { return diag[lhs] > diag[rhs]; });

  result.eigenvectors.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    int src = order[j];
    result.eigenvalues[j] = diag[src];
    // sign convention: largest-magnitude component positive
    int pivot = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      double mag = std::abs(at(v, i, src));
      if (mag > best + 1e-15) {
        best = mag;
        pivot = i;
      }
    }
    double flip = at(v, pivot, src) < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i) {
      result.eigenvectors[static_cast<std::size_t>(i) * n + j] = flip * at(v, i, src);
    }
  }
  return result;
}

std::vector<double> subhypergraph_centrality(const Hypergraph& h) {
  const int n = h.order();
  if (n == 0) return {};
  SpectralDecomposition spectral = eigendecompose(adjacency_matrix(h));
  std::vector<double> centrality(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      double u = spectral.vec(i, j);
      sum += u * u * std::exp(spectral.eigenvalues[j]);
    }
    centrality[i] = sum;
  }
  return centrality;
}

std::optional<double> clustering_coefficient(const Hypergraph& h,
                                             bool require_distinct_path_edges) {
  const int n = h.order();
  const int m = h.edge_count();
  if (n == 0 || m == 0) return std::nullopt;

  AdjacencyMatrix a = adjacency_matrix(h);

  // triple_count[(i,j,k)] = hyperedges containing all three (i < j < k)
  std::map<std::array<int, 3>, long long> triple_count;
  for (const auto& edge : h.hyperedges) {
    const auto& mem = edge.members;
    for (std::size_t p = 0; p < mem.size(); ++p) {
      for (std::size_t q = p + 1; q < mem.size(); ++q) {
        for (std::size_t r = q + 1; r < mem.size(); ++r) {
          triple_count[{mem[p], mem[q], mem[r]}] += 1;
        }
      }
    }
  }
  auto triples_through = [&triple_count](int i, int j, int k) -> long long {
    std::array<int, 3> key{i, j, k};
    std::sort(key.begin(), key.end());
    auto it = triple_count.find(key);
    return it == triple_count.end() ? 0 : it->second;
  };

  std::vector<std::vector<int>> neighbors(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j) > 0) neighbors[i].push_back(j);
    }
  }

  // Ordered sequences counted through co-membership products. For a fixed
  // vertex triple the hyperedge choices (E_p, E_q, E_r), all distinct, come
  // out by inclusion-exclusion: any two of the pair sets intersect exactly
  // in the hyperedges containing all three vertices.
  long long paths = 0;
  long long triangle_sequences = 0;
  for (int vj = 0; vj < n; ++vj) {
    for (int vi : neighbors[vj]) {
      for (int vk : neighbors[vj]) {
        if (vk == vi || vi == vj || vk == vj) continue;
        long long ab = a.at(vi, vj);
        long long bc = a.at(vj, vk);
        long long t = triples_through(vi, vj, vk);
        paths += require_distinct_path_edges ? ab * bc - t : ab * bc;
        long long ca = a.at(vk, vi);
        if (ca > 0) {
          triangle_sequences += ab * bc * ca - t * (ab + bc + ca) + 2 * t;
        }
      }
    }
  }
  if (paths == 0) return std::nullopt;
  double triangles = static_cast<double>(triangle_sequences) / 6.0;
  return 6.0 * triangles / static_cast<double>(paths);
}

long long SizeHistogram::total() const {
  long long sum = 0;
  for (const auto& [k, count] : bins) sum += count;
  return sum;
}

SizeHistogram size_histogram(const Hypergraph& h) {
  SizeHistogram hist;
  for (const auto& edge : h.hyperedges) {
    hist.bins[static_cast<int>(edge.members.size())] += edge.weight;
  }
  return hist;
}

PowerLawFit fit_power_law(const SizeHistogram& hist,
                          std::optional<std::pair<int, int>> fit_range) {
  int k_min, k_max;
  if (fit_range) {
    k_min = fit_range->first;
    k_max = fit_range->second;
  } else {
    // default "linear part": modal size (lowest on ties) up to the largest
    // size with count >= 2
    long long best = 0;
    k_min = 0;
    for (const auto& [k, count] : hist.bins) {
      if (count > best) {
        best = count;
        k_min = k;
      }
    }
    k_max = k_min;
    for (const auto& [k, count] : hist.bins) {
      if (count >= 2) k_max = std::max(k_max, k);
    }
  }

  std::vector<double> xs, ys;
  for (const auto& [k, count] : hist.bins) {
    if (k < k_min || k > k_max || count <= 0) continue;
    xs.push_back(std::log10(static_cast<double>(k)));
    ys.push_back(std::log10(static_cast<double>(count)));
  }
  if (xs.size() < 3) {
    throw std::runtime_error("fit_power_law: fewer than 3 sizes in fit range [" +
                             std::to_string(k_min) + ", " + std::to_string(k_max) + "]");
  }

  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
    syy += ys[i] * ys[i];
  }
  double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::runtime_error("fit_power_law: degenerate abscissae");
  double slope = (n * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / n;

  double ss_res = 0, ss_tot = 0;
  double mean_y = sy / n;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double fit = intercept + slope * xs[i];
    ss_res += (ys[i] - fit) * (ys[i] - fit);
    ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
  }

  PowerLawFit result;
  result.intercept = intercept;
  result.exponent = slope;
  result.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  result.k_min = k_min;
  result.k_max = k_max;
  return result;
}

long long spoke_count(int k) {
  if (k <= 1) return 0;
  if (k == 2) return 1;
  return k;
}

GainTable potential_gain_table(const SizeHistogram& hist,
                               const std::vector<std::pair<int, int>>& bin_spec) {
  GainTable table;
  long long total_count = 0, total_clique = 0, total_extra = 0;
  int max_k = hist.bins.empty() ? 0 : hist.bins.rbegin()->first;

  for (const auto& [lo, hi_spec] : bin_spec) {
    GainTableRow row;
    row.k_min = lo;
    row.k_max = hi_spec;
    int hi = hi_spec < 0 ? max_k : hi_spec;
    long long clique = 0, extra = 0;
    for (const auto& [k, count] : hist.bins) {
      if (k < lo || k > hi) continue;
      row.count += count;
      clique += count * (static_cast<long long>(k) * (k - 1) / 2);
      extra += count * spoke_count(k);
    }
    total_count += row.count;
    if (!(lo == 1 && hi_spec == 1)) {  // the k=1 row prints "x"
      row.clique_edges = clique;
      row.extra_node_edges = extra;
      if (extra > 0) row.gain = static_cast<double>(clique) / static_cast<double>(extra);
      total_clique += clique;
      total_extra += extra;
    }
    table.rows.push_back(row);
  }

  table.total.k_min = bin_spec.empty() ? 0 : bin_spec.front().first;
  table.total.k_max = bin_spec.empty() ? 0 : bin_spec.back().second;
  table.total.count = total_count;
  table.total.clique_edges = total_clique;
  table.total.extra_node_edges = total_extra;
  if (total_extra > 0) {
    table.total.gain = static_cast<double>(total_clique) / static_cast<double>(total_extra);
  }
  return table;
}

std::vector<std::pair<int, int>> default_bin_spec() {
  return {{1, 1},   {2, 2},   {3, 3},   {4, 4},    {5, 5},    {6, 10},
          {11, 15}, {16, 20}, {21, 50}, {51, 100}, {101, -1}};
}

namespace {

std::string row_label(const GainTableRow& row) {
  if (row.k_max < 0) return "k>" + std::to_string(row.k_min - 1);
  if (row.k_min == row.k_max) return "k=" + std::to_string(row.k_min);
  return std::to_string(row.k_min) + "-" + std::to_string(row.k_max);
}

std::string cell(std::optional<long long> v) { return v ? std::to_string(*v) : "x"; }

std::string gain_cell(std::optional<double> v) {
  if (!v) return "x";
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << *v;
  return out.str();
}

}  // namespace

std::string gain_table_to_text(const GainTable& table) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "size" << std::right << std::setw(14) << "count"
      << std::setw(16) << "clique" << std::setw(16) << "extra-node" << std::setw(10) << "gain"
      << "\n";
  auto line = [&out](const std::string& label, const GainTableRow& row) {
    out << std::left << std::setw(10) << label << std::right << std::setw(14) << row.count
        << std::setw(16) << cell(row.clique_edges) << std::setw(16) << cell(row.extra_node_edges)
        << std::setw(10) << gain_cell(row.gain) << "\n";
  };
  for (const auto& row : table.rows) line(row_label(row), row);
  line("sum", table.total);
  return out.str();
}

std::string gain_table_to_csv(const GainTable& table) {
  std::ostringstream out;
  out << "size,count,clique_edges,extra_node_edges,gain\n";
  auto line = [&out](const std::string& label, const GainTableRow& row) {
    out << label << "," << row.count << "," << cell(row.clique_edges) << ","
        << cell(row.extra_node_edges) << "," << gain_cell(row.gain) << "\n";
  };
  for (const auto& row : table.rows) line(row_label(row), row);
  line("sum", table.total);
  return out.str();
}

}  // namespace hyperview
