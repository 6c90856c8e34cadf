#ifndef HYPERVIEW_PIPELINE_HPP_
#define HYPERVIEW_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperview/layout.hpp"
#include "hyperview/render.hpp"

namespace hyperview {

/// Per-protocol image metrics. "fa_on" names the view ForceAtlas2 ran on;
/// the other view received the transferred coordinates.
struct ProtocolMetrics {
  ViewKind fa_on = ViewKind::Clique;
  double clarity_clique = 0.0;
  double clarity_extra = 0.0;
  std::optional<double> clarity_gain;  // C_extra / C_clique
  double entropy_clique = 0.0;
  double entropy_extra = 0.0;
};

/// Comparison record for one search and attribute type.
struct ViewReport {
  std::string search_id;
  std::string attr_type;
  std::uint64_t seed = 0;
  long long collaborations = 0;           // distinct hyperedges
  long long publications = 0;             // contributing records (weight sum)
  double average_collaboration_size = 0;  // weight-expanded
  long long clique_nodes = 0;
  long long clique_edges = 0;
  long long extra_nodes = 0;
  long long extra_edges = 0;
  std::optional<double> g_edge;
  ProtocolMetrics fa_on_clique;
  ProtocolMetrics fa_on_extra;
  bool images_rendered = false;
};

struct RunConfig {
  std::string corpus_path;
  std::string query;
  std::string search_id;  // defaults to the query text
  std::vector<std::string> attr_types;
  std::string out_dir;
  std::uint64_t seed = 0;
  LayoutParams layout;
  RenderStyle style;
  bool write_artifacts = true;
};

/// Runs the full comparison for every attribute type: ingest + filter,
/// hypergraph build, both expansions, Louvain + ForceAtlas2 on each view
/// with coordinate transfer to the other, rendering and image metrics.
/// Writes per-type artifacts (hypergraph/view/layout JSON, 4 PPM images,
/// report JSON and text) under out_dir/<attr_type>/ when configured.
/// An empty search yields a zero-collaboration report and no images.
std::vector<ViewReport> run_pipeline(const RunConfig& config);

/// Summary statistics across searches: mean, population standard
/// deviation, quartiles by linear interpolation between order statistics.
struct MetricSummary {
  double mean = 0, stddev = 0, q1 = 0, q2 = 0, q3 = 0;
};

struct AggregateSummary {
  std::size_t report_count = 0;
  MetricSummary g_edge;
  MetricSummary clarity_clique_fa_clique, clarity_extra_fa_clique, gain_fa_clique;
  MetricSummary clarity_clique_fa_extra, clarity_extra_fa_extra, gain_fa_extra;
  MetricSummary entropy_clique_fa_clique, entropy_extra_fa_clique;
  MetricSummary entropy_clique_fa_extra, entropy_extra_fa_extra;
  double g_edge_below_one_pct = 0.0;
};

MetricSummary summarize(std::vector<double> values);
AggregateSummary aggregate_reports(const std::vector<ViewReport>& reports);

/// CSV of (average hyperedge size, G_edge), one row per report; reports
/// with an undefined gain are skipped with a warning on stderr.
std::string emit_gain_scatter(const std::vector<ViewReport>& reports);

std::string report_to_json(const ViewReport& report);
ViewReport report_from_json(const std::string& text);
std::string report_to_text(const ViewReport& report);
std::string aggregate_to_csv(const AggregateSummary& summary);

}  // namespace hyperview

#endif  // HYPERVIEW_PIPELINE_HPP_
