#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperview/analysis.hpp"
#include "hyperview/corpus.hpp"
#include "hyperview/expand.hpp"
#include "hyperview/hypergraph.hpp"
#include "hyperview/layout.hpp"
#include "hyperview/pipeline.hpp"
#include "hyperview/query.hpp"
#include "hyperview/render.hpp"
#include "hyperview/synth.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file.is_open()) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream out;
  out << file.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file.is_open()) throw std::runtime_error("cannot open file for writing: " + path);
  file.write(text.data(), static_cast<std::streamsize>(text.size()));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

std::vector<hyperview::Rgb> parse_palette(const std::string& spec) {
  std::vector<hyperview::Rgb> palette;
  for (const auto& item : split_list(spec)) {
    if (item.size() != 6) throw std::runtime_error("palette entries must be RRGGBB hex: " + item);
    auto byte_at = [&item](std::size_t pos) {
      return static_cast<std::uint8_t>(std::stoi(item.substr(pos, 2), nullptr, 16));
    };
    palette.push_back({byte_at(0), byte_at(2), byte_at(4)});
  }
  return palette;
}

std::vector<std::pair<int, int>> parse_bins(const std::string& spec) {
  std::vector<std::pair<int, int>> bins;
  for (const auto& item : split_list(spec)) {
    if (item.size() > 1 && item.back() == '+') {
      bins.emplace_back(std::stoi(item.substr(0, item.size() - 1)), -1);
    } else if (auto dash = item.find('-'); dash != std::string::npos) {
      bins.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } else {
      int k = std::stoi(item);
      bins.emplace_back(k, k);
    }
  }
  return bins;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperview: hypergraph views of publication collaborations"};
  app.require_subcommand(1);

  try {
    // ---- ingest ----------------------------------------------------------
    std::string corpus_path, query_text, out_path;
    auto* ingest = app.add_subcommand("ingest", "filter a corpus with a boolean query");
    ingest->add_option("--corpus", corpus_path, "line-delimited JSON corpus")->required();
    ingest->add_option("--query", query_text, "boolean query, e.g. \"title:(bgo AND cryst*)\"")
        ->required();
    ingest->add_option("--out", out_path, "filtered corpus output path")->required();
    ingest->callback([&] {
      auto records = hyperview::parse_corpus_file(corpus_path);
      auto matched =
          hyperview::filter_records(records, hyperview::SearchQuery::parse(query_text));
      hyperview::write_corpus(matched, out_path);
      std::cout << "matched " << matched.size() << " of " << records.size() << " records\n";
    });

    // ---- build -----------------------------------------------------------
    std::string attr_type = "organisation";
    std::string build_query;
    auto* build = app.add_subcommand("build", "build the attribute hypergraph of a corpus");
    build->add_option("--corpus", corpus_path, "corpus path")->required();
    build->add_option("--query", build_query, "optional filter query");
    build->add_option("--attr", attr_type, "attribute type (default organisation)");
    build->add_option("--out", out_path, "hypergraph JSON output")->required();
    build->callback([&] {
      auto records = hyperview::parse_corpus_file(corpus_path);
      if (!build_query.empty()) {
        records = hyperview::filter_records(records, hyperview::SearchQuery::parse(build_query));
      }
      auto h = hyperview::build_hypergraph(
          hyperview::extract_attribute_sets(records, attr_type), attr_type);
      write_file(out_path, hyperview::hypergraph_to_json(h));
      auto stats = hyperview::summary_stats(h);
      std::cout << "hypergraph: " << stats.order << " nodes, " << stats.hyperedge_count
                << " hyperedges\n";
    });

    // ---- expand ----------------------------------------------------------
    std::string hypergraph_path, view_name = "clique";
    auto* expand = app.add_subcommand("expand", "produce the clique or extra-node view");
    expand->add_option("--hypergraph", hypergraph_path, "hypergraph JSON")->required();
    expand->add_option("--view", view_name, "clique | extra_node")->required();
    expand->add_option("--out", out_path, "view JSON output")->required();
    expand->callback([&] {
      auto h = hyperview::hypergraph_from_json(read_file(hypergraph_path));
      auto view = hyperview::view_kind_from_name(view_name) == hyperview::ViewKind::Clique
                      ? hyperview::clique_expansion(h)
                      : hyperview::extra_node_expansion(h);
      write_file(out_path, hyperview::expanded_graph_to_json(view));
      std::cout << hyperview::view_kind_name(view.view_kind) << " view: " << view.nodes.size()
                << " nodes, " << view.edges.size() << " edges\n";
    });

    // ---- layout ----------------------------------------------------------
    std::string clique_path, extra_path, layout_on = "clique", transfer_to = "none", out_dir = ".";
    hyperview::LayoutParams layout_params;
    auto* layout = app.add_subcommand("layout", "cluster and position one view");
    layout->add_option("--clique", clique_path, "clique view JSON");
    layout->add_option("--extra", extra_path, "extra-node view JSON");
    layout->add_option("--layout-on", layout_on, "clique | extra")->required();
    layout->add_option("--transfer-to", transfer_to, "clique | extra | none");
    layout->add_option("--iterations", layout_params.iterations, "layout iterations");
    layout->add_option("--seed", layout_params.seed, "deterministic seed");
    layout->add_option("--kr", layout_params.repulsion_k, "repulsion scaling");
    layout->add_option("--gravity", layout_params.gravity, "gravity scaling");
    layout->add_option("--delta", layout_params.edge_weight_exponent, "edge weight exponent");
    layout->add_option("--out", out_dir, "output directory");
    layout->callback([&] {
      bool on_clique = layout_on == "clique";
      const std::string& main_path = on_clique ? clique_path : extra_path;
      if (main_path.empty()) {
        throw std::runtime_error("layout: missing --" + layout_on + " view file");
      }
      auto main_view = hyperview::expanded_graph_from_json(read_file(main_path));
      auto clusters = hyperview::louvain(main_view, layout_params.seed);
      auto state = hyperview::force_atlas2(main_view, layout_params, clusters.community);
      std::filesystem::create_directories(out_dir);
      std::string name = on_clique ? "layout_on_clique.json" : "layout_on_extra.json";
      write_file((std::filesystem::path(out_dir) / name).string(),
                 hyperview::layout_to_json(state));
      std::cout << "layout on " << layout_on << ": modularity " << clusters.modularity << "\n";
      if (transfer_to != "none" && !transfer_to.empty()) {
        const std::string& other_path = transfer_to == "clique" ? clique_path : extra_path;
        if (other_path.empty()) {
          throw std::runtime_error("layout: missing --" + transfer_to + " view file");
        }
        auto other_view = hyperview::expanded_graph_from_json(read_file(other_path));
        auto moved = hyperview::transfer_coordinates(state, main_view, other_view);
        std::string moved_name = "layout_transfer_" + transfer_to + ".json";
        write_file((std::filesystem::path(out_dir) / moved_name).string(),
                   hyperview::layout_to_json(moved));
      }
    });

    // ---- render ----------------------------------------------------------
    std::string layout_path, palette_spec;
    hyperview::RenderStyle style;
    auto* render = app.add_subcommand("render", "rasterize a positioned view to PPM");
    render->add_option("--view", clique_path, "view JSON")->required();
    render->add_option("--layout", layout_path, "layout JSON")->required();
    render->add_option("--out", out_path, "PPM output path")->required();
    render->add_option("--width", style.width, "canvas width");
    render->add_option("--height", style.height, "canvas height");
    render->add_option("--node-radius", style.node_radius_real, "real node radius");
    render->add_option("--extra-radius", style.node_radius_extra, "extra node radius");
    render->add_option("--palette", palette_spec, "comma-separated RRGGBB cluster colors");
    render->callback([&] {
      auto view = hyperview::expanded_graph_from_json(read_file(clique_path));
      auto state = hyperview::layout_from_json(read_file(layout_path));
      if (!palette_spec.empty()) style.palette = parse_palette(palette_spec);
      auto img = hyperview::render_view(view, state, style);
      hyperview::write_ppm(img, out_path);
      std::cout << "clarity " << hyperview::clarity(img) << "\n";
    });

    // ---- report ----------------------------------------------------------
    auto* report = app.add_subcommand("report", "statistics and aggregation");
    report->require_subcommand(1);

    std::string bins_spec, out_csv, out_text;
    int fit_min = 0, fit_max = 0;
    auto* stats_cmd = report->add_subcommand("stats", "histogram, power-law fit, gain table");
    stats_cmd->add_option("--hypergraph", hypergraph_path, "hypergraph JSON")->required();
    stats_cmd->add_option("--bins", bins_spec, "size bins, e.g. 1,2,3,4,5,6-10,11-15,100+");
    stats_cmd->add_option("--fit-min", fit_min, "power-law fit range lower bound");
    stats_cmd->add_option("--fit-max", fit_max, "power-law fit range upper bound");
    stats_cmd->add_option("--out-csv", out_csv, "gain table CSV output");
    stats_cmd->add_option("--out-text", out_text, "gain table text output");
    stats_cmd->callback([&] {
      auto h = hyperview::hypergraph_from_json(read_file(hypergraph_path));
      auto hist = hyperview::size_histogram(h);
      auto stats = hyperview::summary_stats(h);
      std::cout << "order " << stats.order << ", " << stats.hyperedge_count << " hyperedges";
      if (stats.average_size) std::cout << ", average size " << *stats.average_size;
      std::cout << "\n\nsize histogram (weight-expanded):\n";
      for (const auto& [k, count] : hist.bins) std::cout << "  " << k << ": " << count << "\n";
      try {
        std::optional<std::pair<int, int>> range;
        if (fit_min > 0 && fit_max > 0) range = {fit_min, fit_max};
        auto fit = hyperview::fit_power_law(hist, range);
        std::cout << "\npower law over [" << fit.k_min << ", " << fit.k_max
                  << "]: count ~ 10^" << fit.intercept << " * k^" << fit.exponent
                  << "  (r^2 = " << fit.r_squared << ")\n";
      } catch (const std::exception& e) {
        std::cout << "\npower law: " << e.what() << "\n";
      }
      auto bins = bins_spec.empty() ? hyperview::default_bin_spec() : parse_bins(bins_spec);
      auto table = hyperview::potential_gain_table(hist, bins);
      std::cout << "\n" << hyperview::gain_table_to_text(table);
      if (!out_csv.empty()) write_file(out_csv, hyperview::gain_table_to_csv(table));
      if (!out_text.empty()) write_file(out_text, hyperview::gain_table_to_text(table));
    });

    std::vector<std::string> report_inputs;
    std::string out_scatter;
    auto* agg_cmd = report->add_subcommand("aggregate", "summarize reports across searches");
    agg_cmd->add_option("--inputs", report_inputs, "report JSON files")->required();
    agg_cmd->add_option("--out-csv", out_csv, "aggregate CSV output");
    agg_cmd->add_option("--out-scatter", out_scatter, "gain-vs-size scatter CSV output");
    agg_cmd->callback([&] {
      std::vector<hyperview::ViewReport> reports;
      for (const auto& path : report_inputs) {
        reports.push_back(hyperview::report_from_json(read_file(path)));
      }
      auto summary = hyperview::aggregate_reports(reports);
      std::string csv = hyperview::aggregate_to_csv(summary);
      std::cout << csv;
      if (!out_csv.empty()) write_file(out_csv, csv);
      if (!out_scatter.empty()) write_file(out_scatter, hyperview::emit_gain_scatter(reports));
    });

    // ---- all -------------------------------------------------------------
    hyperview::RunConfig config;
    std::string attr_list = "organisation,keyword";
    auto* all = app.add_subcommand("all", "full pipeline: ingest to reports and images");
    all->add_option("--corpus", config.corpus_path, "corpus path")->required();
    all->add_option("--query", config.query, "boolean search query")->required();
    all->add_option("--attr", attr_list, "comma-separated attribute types");
    all->add_option("--out", config.out_dir, "output directory")->required();
    all->add_option("--seed", config.seed, "deterministic seed");
    all->add_option("--search-id", config.search_id, "identifier for the report");
    all->add_option("--iterations", config.layout.iterations, "layout iterations");
    all->add_option("--kr", config.layout.repulsion_k, "repulsion scaling");
    all->add_option("--gravity", config.layout.gravity, "gravity scaling");
    all->add_option("--delta", config.layout.edge_weight_exponent, "edge weight exponent");
    all->add_option("--width", config.style.width, "canvas width");
    all->add_option("--height", config.style.height, "canvas height");
    all->callback([&] {
      config.attr_types = split_list(attr_list);
      auto reports = hyperview::run_pipeline(config);
      for (const auto& r : reports) {
        std::cout << hyperview::report_to_text(r) << "\n";
      }
      std::cout << "artifacts written to " << config.out_dir << "\n";
    });

    // ---- gen -------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate bundled corpora");
    gen->require_subcommand(1);

    int gen_records = 200;
    std::uint64_t gen_seed = 7;
    auto* gen_syn = gen->add_subcommand("synthetic", "seeded synthetic corpus");
    gen_syn->add_option("--records", gen_records, "record count");
    gen_syn->add_option("--seed", gen_seed, "generator seed");
    gen_syn->add_option("--out", out_path, "corpus output path")->required();
    gen_syn->callback([&] {
      hyperview::write_corpus(hyperview::make_synthetic_corpus(gen_records, gen_seed), out_path);
      std::cout << "wrote " << gen_records << " records to " << out_path << "\n";
    });

    auto* gen_demo = gen->add_subcommand("demo", "calibrated bgo demo corpus");
    gen_demo->add_option("--out", out_path, "corpus output path")->required();
    gen_demo->callback([&] {
      auto records = hyperview::make_bgo_demo_corpus();
      hyperview::write_corpus(records, out_path);
      std::cout << "wrote " << records.size() << " records to " << out_path << "\n";
    });

    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
