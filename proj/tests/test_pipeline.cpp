#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "hyperview/analysis.hpp"
#include "hyperview/corpus.hpp"
#include "hyperview/expand.hpp"
#include "hyperview/pipeline.hpp"
#include "hyperview/query.hpp"
#include "hyperview/synth.hpp"

using namespace hyperview;

namespace {

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  REQUIRE(f.is_open());
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

RunConfig fast_config(const std::string& corpus, const std::string& out) {
  RunConfig config;
  config.corpus_path = corpus;
  config.query = "title:(study)";
  config.attr_types = {"organisation"};
  config.out_dir = out;
  config.seed = 11;
  config.layout.iterations = 60;
  config.style.width = 300;
  config.style.height = 300;
  return config;
}

}  // namespace

TEST_CASE("demo corpus reproduces the reference search statistics") {
  auto records = make_bgo_demo_corpus();
  REQUIRE(records.size() == 197);

  auto query = SearchQuery::parse(
      "title:((bgo AND cryst*) OR (bgo AND calor*)) abstract:((bgo AND cryst*) OR (bgo AND calor*))");
  auto matched = filter_records(records, query);
  CHECK(matched.size() == records.size());

  auto org = build_hypergraph(extract_attribute_sets(matched, "organisation"), "organisation");
  auto org_stats = summary_stats(org);
  CHECK(org_stats.hyperedge_count == 169);
  CHECK(org_stats.order == 349);
  CHECK(*org_stats.average_size == doctest::Approx(3.83).epsilon(0.002));

  auto org_clique = clique_expansion(org);
  auto org_extra = extra_node_expansion(org);
  CHECK(org_clique.nodes.size() == 349);
  CHECK(org_clique.edges.size() == 2639);
  CHECK(org_extra.nodes.size() == 439);
  CHECK(org_extra.edges.size() == 647);
  CHECK(*edge_gain(org_clique, org_extra) == doctest::Approx(2639.0 / 647.0).epsilon(1e-12));

  auto kw = build_hypergraph(extract_attribute_sets(matched, "keyword"), "keyword");
  auto kw_stats = summary_stats(kw);
  CHECK(kw_stats.hyperedge_count == 193);
  CHECK(kw_stats.order == 597);
  CHECK(*kw_stats.average_size == doctest::Approx(4.48).epsilon(0.002));

  auto kw_clique = clique_expansion(kw);
  auto kw_extra = extra_node_expansion(kw);
  CHECK(kw_clique.edges.size() == 1699);
  CHECK(kw_extra.nodes.size() == 783);
  CHECK(kw_extra.edges.size() == 864);
  CHECK(*edge_gain(kw_clique, kw_extra) == doctest::Approx(1699.0 / 864.0).epsilon(1e-12));
}

TEST_CASE("synthetic corpus is deterministic with mean hyperedge size >= 4") {
  auto a = make_synthetic_corpus(200, 7);
  auto b = make_synthetic_corpus(200, 7);
  REQUIRE(a.size() == 200);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].id == b[i].id);
    CHECK(a[i].attributes == b[i].attributes);
  }
  for (const auto& attr : {"organisation", "keyword"}) {
    auto h = build_hypergraph(extract_attribute_sets(a, attr), attr);
    auto stats = summary_stats(h);
    CHECK(*stats.average_size >= 4.0);
  }
  // a different seed gives a different corpus
  auto c = make_synthetic_corpus(200, 8);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].attributes != c[i].attributes) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("run_pipeline writes the full artifact set") {
  TempDir dir("hyperview_pipeline_test");
  auto corpus_path = (dir.path / "corpus.jsonl").string();
  write_corpus(make_synthetic_corpus(40, 3), corpus_path);

  auto config = fast_config(corpus_path, (dir.path / "out").string());
  config.attr_types = {"organisation", "keyword"};
  auto reports = run_pipeline(config);
  REQUIRE(reports.size() == 2);

  for (const auto& attr : config.attr_types) {
    auto base = dir.path / "out" / attr;
    for (const char* name :
         {"hypergraph.json", "view_clique.json", "view_extra.json", "layout_on_clique.json",
          "layout_on_extra.json", "clique_view_fa_clique.ppm", "extra_view_fa_clique.ppm",
          "extra_view_fa_extra.ppm", "clique_view_fa_extra.ppm", "report.json", "report.txt"}) {
      CHECK(std::filesystem::exists(base / name));
    }
  }
  CHECK(std::filesystem::exists(dir.path / "out" / "aggregate.csv"));
  CHECK(std::filesystem::exists(dir.path / "out" / "gain_scatter.csv"));
  CHECK(std::filesystem::exists(dir.path / "out" / "run_config.json"));

  // the serialized report matches what the pipeline returned
  auto report = report_from_json(slurp(dir.path / "out" / "organisation" / "report.json"));
  CHECK(report.collaborations == reports[0].collaborations);
  CHECK(report.clique_edges == reports[0].clique_edges);
  REQUIRE(report.g_edge.has_value());
  CHECK(*report.g_edge ==
        doctest::Approx(static_cast<double>(report.clique_edges) / report.extra_edges));

  // G_edge agrees with a recomputation from the serialized graphs
  auto clique =
      expanded_graph_from_json(slurp(dir.path / "out" / "organisation" / "view_clique.json"));
  auto extra =
      expanded_graph_from_json(slurp(dir.path / "out" / "organisation" / "view_extra.json"));
  CHECK(*report.g_edge == doctest::Approx(*edge_gain(clique, extra)));
}

TEST_CASE("run_pipeline is byte-deterministic") {
  TempDir dir("hyperview_determinism_test");
  auto corpus_path = (dir.path / "corpus.jsonl").string();
  write_corpus(make_synthetic_corpus(30, 5), corpus_path);

  auto c1 = fast_config(corpus_path, (dir.path / "a").string());
  auto c2 = fast_config(corpus_path, (dir.path / "b").string());
  run_pipeline(c1);
  run_pipeline(c2);

  for (const char* name :
       {"organisation/hypergraph.json", "organisation/view_clique.json",
        "organisation/view_extra.json", "organisation/layout_on_clique.json",
        "organisation/layout_on_extra.json", "organisation/clique_view_fa_clique.ppm",
        "organisation/extra_view_fa_clique.ppm", "organisation/extra_view_fa_extra.ppm",
        "organisation/clique_view_fa_extra.ppm", "organisation/report.json", "aggregate.csv",
        "gain_scatter.csv"}) {
    CHECK_MESSAGE(slurp(dir.path / "a" / name) == slurp(dir.path / "b" / name), name);
  }
}

TEST_CASE("run_pipeline on an empty search yields a zero report and no images") {
  TempDir dir("hyperview_empty_test");
  auto corpus_path = (dir.path / "corpus.jsonl").string();
  write_corpus(make_synthetic_corpus(10, 2), corpus_path);

  auto config = fast_config(corpus_path, (dir.path / "out").string());
  config.query = "title:(zzzznope)";
  auto reports = run_pipeline(config);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].collaborations == 0);
  CHECK(!reports[0].images_rendered);
  CHECK(!reports[0].g_edge.has_value());
  CHECK(std::filesystem::exists(dir.path / "out" / "organisation" / "report.json"));
  CHECK(!std::filesystem::exists(dir.path / "out" / "organisation" / "clique_view_fa_clique.ppm"));
}

TEST_CASE("summarize: single value and interpolated quartiles") {
  auto single = summarize({4.2});
  CHECK(single.mean == doctest::Approx(4.2));
  CHECK(single.stddev == doctest::Approx(0.0));
  CHECK(single.q1 == doctest::Approx(4.2));
  CHECK(single.q2 == doctest::Approx(4.2));
  CHECK(single.q3 == doctest::Approx(4.2));

  auto four = summarize({1, 2, 3, 4});
  CHECK(four.q1 == doctest::Approx(1.75));
  CHECK(four.q2 == doctest::Approx(2.5));
  CHECK(four.q3 == doctest::Approx(3.25));
}

TEST_CASE("aggregate_reports is permutation-invariant and counts gains below 1") {
  auto make_report = [](double gain) {
    ViewReport r;
    r.search_id = "s";
    r.attr_type = "organisation";
    r.g_edge = gain;
    r.average_collaboration_size = 3.0;
    return r;
  };
  std::vector<ViewReport> reports{make_report(0.9), make_report(1.5), make_report(2.0),
                                  make_report(0.7)};
  auto summary = aggregate_reports(reports);
  CHECK(summary.g_edge_below_one_pct == doctest::Approx(50.0));
  CHECK(summary.g_edge.mean == doctest::Approx((0.9 + 1.5 + 2.0 + 0.7) / 4.0));

  std::swap(reports[0], reports[3]);
  std::swap(reports[1], reports[2]);
  auto again = aggregate_reports(reports);
  CHECK(again.g_edge.mean == summary.g_edge.mean);
  CHECK(again.g_edge.stddev == summary.g_edge.stddev);
  CHECK(again.g_edge.q1 == summary.g_edge.q1);
  CHECK(again.g_edge.q3 == summary.g_edge.q3);
}

TEST_CASE("gain scatter emits one row per defined report") {
  ViewReport with_gain;
  with_gain.search_id = "a";
  with_gain.average_collaboration_size = 3.5;
  with_gain.g_edge = 1.4;
  ViewReport no_gain;
  no_gain.search_id = "b";
  auto csv = emit_gain_scatter({with_gain, no_gain, with_gain});
  CHECK(csv == "average_hyperedge_size,g_edge\n3.5,1.4\n3.5,1.4\n");
}

TEST_CASE("report text mentions the core counts") {
  ViewReport r;
  r.search_id = "q";
  r.attr_type = "organisation";
  r.collaborations = 169;
  r.publications = 197;
  r.average_collaboration_size = 3.83;
  r.clique_nodes = 349;
  r.clique_edges = 2639;
  r.extra_nodes = 439;
  r.extra_edges = 647;
  r.g_edge = 2639.0 / 647.0;
  auto text = report_to_text(r);
  CHECK(text.find("169") != std::string::npos);
  CHECK(text.find("2639") != std::string::npos);
  CHECK(text.find("647") != std::string::npos);
  CHECK(text.find("4.08") != std::string::npos);
}
