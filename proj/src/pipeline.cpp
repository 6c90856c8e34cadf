#include "hyperview/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "hyperview/analysis.hpp"
#include "hyperview/corpus.hpp"
#include "hyperview/query.hpp"

namespace hyperview {

namespace {

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file.is_open()) throw std::runtime_error("cannot open output file: " + path.string());
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
}

nlohmann::json protocol_json(const ProtocolMetrics& p) {
  nlohmann::json j;
  j["fa_on"] = view_kind_name(p.fa_on);
  j["clarity_clique"] = p.clarity_clique;
  j["clarity_extra"] = p.clarity_extra;
  if (p.clarity_gain) {
    j["clarity_gain"] = *p.clarity_gain;
  } else {
    j["clarity_gain"] = nullptr;
  }
  j["entropy_clique"] = p.entropy_clique;
  j["entropy_extra"] = p.entropy_extra;
  return j;
}

ProtocolMetrics protocol_from_json(const nlohmann::json& j) {
  ProtocolMetrics p;
  p.fa_on = view_kind_from_name(j.at("fa_on").get<std::string>());
  p.clarity_clique = j.at("clarity_clique").get<double>();
  p.clarity_extra = j.at("clarity_extra").get<double>();
  if (!j.at("clarity_gain").is_null()) p.clarity_gain = j.at("clarity_gain").get<double>();
  p.entropy_clique = j.at("entropy_clique").get<double>();
  p.entropy_extra = j.at("entropy_extra").get<double>();
  return p;
}

ProtocolMetrics measure_protocol(ViewKind fa_on, const RasterImage& clique_img,
                                 const RasterImage& extra_img) {
  ProtocolMetrics metrics;
  metrics.fa_on = fa_on;
  metrics.clarity_clique = clarity(clique_img);
  metrics.clarity_extra = clarity(extra_img);
  metrics.clarity_gain = clarity_gain(extra_img, clique_img);
  metrics.entropy_clique = entropy(metrics.clarity_clique);
  metrics.entropy_extra = entropy(metrics.clarity_extra);
  return metrics;
}

}  // namespace

std::vector<ViewReport> run_pipeline(const RunConfig& config) {
  auto records = parse_corpus_file(config.corpus_path);
  auto query = SearchQuery::parse(config.query);
  auto matched = filter_records(records, query);
  std::string search_id = config.search_id.empty() ? config.query : config.search_id;

  std::filesystem::path out_dir(config.out_dir);
  if (config.write_artifacts) {
    std::filesystem::create_directories(out_dir);
    nlohmann::json cfg;
    cfg["corpus"] = config.corpus_path;
    cfg["query"] = config.query;
    cfg["search_id"] = search_id;
    cfg["attr_types"] = config.attr_types;
    cfg["seed"] = config.seed;
    cfg["layout"] = {{"iterations", config.layout.iterations},
                     {"repulsion_k", config.layout.repulsion_k},
                     {"gravity", config.layout.gravity},
                     {"edge_weight_exponent", config.layout.edge_weight_exponent}};
    cfg["style"] = {{"width", config.style.width},
                    {"height", config.style.height},
                    {"node_radius_real", config.style.node_radius_real},
                    {"node_radius_extra", config.style.node_radius_extra}};
    cfg["matched_records"] = matched.size();
    write_text_file(out_dir / "run_config.json", cfg.dump(2) + "\n");
  }

  std::vector<ViewReport> reports;
  for (const auto& attr_type : config.attr_types) {
    ViewReport report;
    report.search_id = search_id;
    report.attr_type = attr_type;
    report.seed = config.seed;

    std::filesystem::path attr_dir = out_dir / attr_type;
    if (config.write_artifacts) std::filesystem::create_directories(attr_dir);

    auto entries = extract_attribute_sets(matched, attr_type);
    Hypergraph h = build_hypergraph(entries, attr_type);
    HypergraphStats stats = summary_stats(h);
    report.collaborations = stats.hyperedge_count;
    report.publications = stats.total_weight;
    report.average_collaboration_size = stats.average_size.value_or(0.0);

    if (h.edge_count() == 0) {
      // empty search: report only, no views and no images
      if (config.write_artifacts) {
        write_text_file(attr_dir / "hypergraph.json", hypergraph_to_json(h, config.seed));
        write_text_file(attr_dir / "report.json", report_to_json(report));
        write_text_file(attr_dir / "report.txt", report_to_text(report));
      }
      reports.push_back(report);
      continue;
    }

    ExpandedGraph clique = clique_expansion(h);
    ExpandedGraph extra = extra_node_expansion(h);
    report.clique_nodes = static_cast<long long>(clique.nodes.size());
    report.clique_edges = static_cast<long long>(clique.edges.size());
    report.extra_nodes = static_cast<long long>(extra.nodes.size());
    report.extra_edges = static_cast<long long>(extra.edges.size());
    report.g_edge = edge_gain(clique, extra);

    LayoutParams params = config.layout;
    params.seed = config.seed;

    // protocol (i): layout on the clique view, transfer to extra-node
    LouvainResult clusters_clique = louvain(clique, config.seed);
    LayoutState on_clique = force_atlas2(clique, params, clusters_clique.community);
    LayoutState extra_from_clique = transfer_coordinates(on_clique, clique, extra);

    // protocol (ii): layout on the extra-node view, transfer to clique
    LouvainResult clusters_extra = louvain(extra, config.seed);
    LayoutState on_extra = force_atlas2(extra, params, clusters_extra.community);
    LayoutState clique_from_extra = transfer_coordinates(on_extra, extra, clique);

    RasterImage img_clique_fa_clique = render_view(clique, on_clique, config.style);
    RasterImage img_extra_fa_clique = render_view(extra, extra_from_clique, config.style);
    RasterImage img_extra_fa_extra = render_view(extra, on_extra, config.style);
    RasterImage img_clique_fa_extra = render_view(clique, clique_from_extra, config.style);

    report.fa_on_clique =
        measure_protocol(ViewKind::Clique, img_clique_fa_clique, img_extra_fa_clique);
    report.fa_on_extra =
        measure_protocol(ViewKind::ExtraNode, img_clique_fa_extra, img_extra_fa_extra);
    report.images_rendered = true;

    if (config.write_artifacts) {
      write_text_file(attr_dir / "hypergraph.json", hypergraph_to_json(h, config.seed));
      write_text_file(attr_dir / "view_clique.json", expanded_graph_to_json(clique, config.seed));
      write_text_file(attr_dir / "view_extra.json", expanded_graph_to_json(extra, config.seed));
      write_text_file(attr_dir / "layout_on_clique.json", layout_to_json(on_clique));
      write_text_file(attr_dir / "layout_on_extra.json", layout_to_json(on_extra));
      write_ppm(img_clique_fa_clique, (attr_dir / "clique_view_fa_clique.ppm").string());
      write_ppm(img_extra_fa_clique, (attr_dir / "extra_view_fa_clique.ppm").string());
      write_ppm(img_extra_fa_extra, (attr_dir / "extra_view_fa_extra.ppm").string());
      write_ppm(img_clique_fa_extra, (attr_dir / "clique_view_fa_extra.ppm").string());
      write_text_file(attr_dir / "report.json", report_to_json(report));
      write_text_file(attr_dir / "report.txt", report_to_text(report));
    }
    reports.push_back(report);
  }

  if (config.write_artifacts && !reports.empty()) {
    write_text_file(out_dir / "aggregate.csv", aggregate_to_csv(aggregate_reports(reports)));
    write_text_file(out_dir / "gain_scatter.csv", emit_gain_scatter(reports));
  }
  return reports;
}

MetricSummary summarize(std::vector<double> values) {
  MetricSummary s;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  for (double v : values) s.mean += v;
  s.mean /= n;
  for (double v : values) s.stddev += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(s.stddev / n);  // population deviation

  std::sort(values.begin(), values.end());
  auto quantile = [&values](double p) {
    double pos = p * (static_cast<double>(values.size()) - 1.0);
    std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
    double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
  };
  s.q1 = quantile(0.25);
  s.q2 = quantile(0.50);
  s.q3 = quantile(0.75);
  return s;
}

AggregateSummary aggregate_reports(const std::vector<ViewReport>& reports) {
  if (reports.empty()) throw std::runtime_error("aggregate_reports: no reports");
  AggregateSummary out;
  out.report_count = reports.size();

  std::vector<double> gains;
  int below_one = 0;
  for (const auto& r : reports) {
    if (!r.g_edge) continue;
    gains.push_back(*r.g_edge);
    if (*r.g_edge < 1.0) ++below_one;
  }
  out.g_edge = summarize(gains);
  out.g_edge_below_one_pct =
      gains.empty() ? 0.0 : 100.0 * static_cast<double>(below_one) / static_cast<double>(gains.size());

  auto collect = [&reports](auto getter) {
    std::vector<double> values;
    for (const auto& r : reports) {
      if (!r.images_rendered) continue;
      auto v = getter(r);
      if (v) values.push_back(*v);
    }
    return summarize(values);
  };
  using R = const ViewReport&;
  out.clarity_clique_fa_clique =
      collect([](R r) { return std::optional<double>(r.fa_on_clique.clarity_clique); });
  out.clarity_extra_fa_clique =
      collect([](R r) { return std::optional<double>(r.fa_on_clique.clarity_extra); });
  out.gain_fa_clique = collect([](R r) { return r.fa_on_clique.clarity_gain; });
  out.clarity_clique_fa_extra =
      collect([](R r) { return std::optional<double>(r.fa_on_extra.clarity_clique); });
  out.clarity_extra_fa_extra =
      collect([](R r) { return std::optional<double>(r.fa_on_extra.clarity_extra); });
  out.gain_fa_extra = collect([](R r) { return r.fa_on_extra.clarity_gain; });
  out.entropy_clique_fa_clique =
      collect([](R r) { return std::optional<double>(r.fa_on_clique.entropy_clique); });
  out.entropy_extra_fa_clique =
      collect([](R r) { return std::optional<double>(r.fa_on_clique.entropy_extra); });
  out.entropy_clique_fa_extra =
      collect([](R r) { return std::optional<double>(r.fa_on_extra.entropy_clique); });
  out.entropy_extra_fa_extra =
      collect([](R r) { return std::optional<double>(r.fa_on_extra.entropy_extra); });
  return out;
}

std::string emit_gain_scatter(const std::vector<ViewReport>& reports) {
  std::ostringstream out;
  out << "average_hyperedge_size,g_edge\n";
  for (const auto& r : reports) {
    if (!r.g_edge) {
      std::cerr << "gain scatter: skipping \"" << r.search_id << "\" (" << r.attr_type
                << "): no extra-node edges\n";
      continue;
    }
    out << r.average_collaboration_size << "," << *r.g_edge << "\n";
  }
  return out.str();
}

std::string report_to_json(const ViewReport& report) {
  nlohmann::json j;
  j["search_id"] = report.search_id;
  j["attr_type"] = report.attr_type;
  j["seed"] = report.seed;
  j["collaborations"] = report.collaborations;
  j["publications"] = report.publications;
  j["average_collaboration_size"] = report.average_collaboration_size;
  j["clique"] = {{"nodes", report.clique_nodes}, {"edges", report.clique_edges}};
  j["extra_node"] = {{"nodes", report.extra_nodes}, {"edges", report.extra_edges}};
  if (report.g_edge) {
    j["g_edge"] = *report.g_edge;
  } else {
    j["g_edge"] = nullptr;
  }
  j["images_rendered"] = report.images_rendered;
  if (report.images_rendered) {
    j["fa_on_clique"] = protocol_json(report.fa_on_clique);
    j["fa_on_extra"] = protocol_json(report.fa_on_extra);
  }
  return j.dump(2) + "\n";
}

ViewReport report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ViewReport r;
  r.search_id = j.at("search_id").get<std::string>();
  r.attr_type = j.at("attr_type").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.collaborations = j.at("collaborations").get<long long>();
  r.publications = j.at("publications").get<long long>();
  r.average_collaboration_size = j.at("average_collaboration_size").get<double>();
  r.clique_nodes = j.at("clique").at("nodes").get<long long>();
  r.clique_edges = j.at("clique").at("edges").get<long long>();
  r.extra_nodes = j.at("extra_node").at("nodes").get<long long>();
  r.extra_edges = j.at("extra_node").at("edges").get<long long>();
  if (!j.at("g_edge").is_null()) r.g_edge = j.at("g_edge").get<double>();
  r.images_rendered = j.at("images_rendered").get<bool>();
  if (r.images_rendered) {
    r.fa_on_clique = protocol_from_json(j.at("fa_on_clique"));
    r.fa_on_extra = protocol_from_json(j.at("fa_on_extra"));
  }
  return r;
}

std::string report_to_text(const ViewReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "search: " << report.search_id << "\n";
  out << "attribute type: " << report.attr_type << "  (seed " << report.seed << ")\n";
  out << "collaborations: " << report.collaborations << "  from " << report.publications
      << " publications\n";
  out << "average size of collaborations: " << report.average_collaboration_size << "\n";
  out << std::left << std::setw(22) << "" << std::right << std::setw(14) << "clique view"
      << std::setw(18) << "extra-node view" << "\n";
  out << std::left << std::setw(22) << "number of nodes" << std::right << std::setw(14)
      << report.clique_nodes << std::setw(18) << report.extra_nodes << "\n";
  out << std::left << std::setw(22) << "number of edges" << std::right << std::setw(14)
      << report.clique_edges << std::setw(18) << report.extra_edges << "\n";
  out << "gain in edges: ";
  if (report.g_edge) {
    out << *report.g_edge << "\n";
  } else {
    out << "x\n";
  }
  if (report.images_rendered) {
    auto block = [&out](const char* title, const ProtocolMetrics& p) {
      out << title << "\n";
      out << "  clarity      clique " << p.clarity_clique << "   extra " << p.clarity_extra
          << "   gain ";
      if (p.clarity_gain) {
        out << *p.clarity_gain;
      } else {
        out << "x";
      }
      out << "\n";
      out << "  entropy      clique " << p.entropy_clique << "   extra " << p.entropy_extra
          << "\n";
    };
    block("ForceAtlas2 on clique view:", report.fa_on_clique);
    block("ForceAtlas2 on extra-node view:", report.fa_on_extra);
  }
  return out.str();
}

std::string aggregate_to_csv(const AggregateSummary& summary) {
  std::ostringstream out;
  out << "metric,mean,stddev,q1,q2,q3\n";
  auto line = [&out](const char* name, const MetricSummary& m) {
    out << name << "," << m.mean << "," << m.stddev << "," << m.q1 << "," << m.q2 << "," << m.q3
        << "\n";
  };
  line("g_edge", summary.g_edge);
  line("clarity_clique_fa_clique", summary.clarity_clique_fa_clique);
  line("clarity_extra_fa_clique", summary.clarity_extra_fa_clique);
  line("clarity_gain_fa_clique", summary.gain_fa_clique);
  line("clarity_clique_fa_extra", summary.clarity_clique_fa_extra);
  line("clarity_extra_fa_extra", summary.clarity_extra_fa_extra);
  line("clarity_gain_fa_extra", summary.gain_fa_extra);
  line("entropy_clique_fa_clique", summary.entropy_clique_fa_clique);
  line("entropy_extra_fa_clique", summary.entropy_extra_fa_clique);
  line("entropy_clique_fa_extra", summary.entropy_clique_fa_extra);
  line("entropy_extra_fa_extra", summary.entropy_extra_fa_extra);
  out << "g_edge_below_one_pct," << summary.g_edge_below_one_pct << ",,,,\n";
  out << "report_count," << summary.report_count << ",,,,\n";
  return out.str();
}

}  // namespace hyperview
