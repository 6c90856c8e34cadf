#include "doctest.h"

#include <algorithm>

#include "hyperview/hypergraph.hpp"
#include "hyperview/rng.hpp"
#include "support/oracles.hpp"

using namespace hyperview;

namespace {

using Entry = std::pair<std::string, std::set<std::string>>;

Hypergraph from_sets(const std::vector<std::set<std::string>>& sets) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    entries.emplace_back("r" + std::to_string(i), sets[i]);
  }
  return build_hypergraph(entries, "organisation");
}

}  // namespace

TEST_CASE("build_hypergraph merges identical member sets with summed weight") {
  auto h = from_sets({{"A", "B"}, {"A", "B"}, {"B", "C"}});
  CHECK(h.order() == 3);
  REQUIRE(h.edge_count() == 2);
  CHECK(h.nodes == std::vector<std::string>{"A", "B", "C"});
  // hyperedges ordered by member indices: {A,B} then {B,C}
  CHECK(h.hyperedges[0].members == std::vector<int>{0, 1});
  CHECK(h.hyperedges[0].weight == 2);
  CHECK(h.hyperedges[0].sources == std::vector<std::string>{"r0", "r1"});
  CHECK(h.hyperedges[1].weight == 1);
}

TEST_CASE("build_hypergraph keeps singleton hyperedges") {
  auto h = from_sets({{"A"}});
  CHECK(h.order() == 1);
  REQUIRE(h.edge_count() == 1);
  CHECK(h.hyperedges[0].members.size() == 1);
  CHECK(h.hyperedges[0].weight == 1);
}

TEST_CASE("build_hypergraph on an empty entry list") {
  auto h = build_hypergraph({}, "keyword");
  CHECK(h.order() == 0);
  CHECK(h.edge_count() == 0);
}

TEST_CASE("build_hypergraph matches the brute-force set oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    auto entries = oracle::random_entries(rng, 6, 10);
    auto h = build_hypergraph(entries, "organisation");

    std::set<std::string> union_labels;
    std::map<std::set<std::string>, long long> multiset;
    for (const auto& [id, values] : entries) {
      union_labels.insert(values.begin(), values.end());
      multiset[values] += 1;
    }
    CHECK(h.order() == static_cast<int>(union_labels.size()));
    CHECK(h.edge_count() == static_cast<int>(multiset.size()));
    long long total = 0;
    for (const auto& edge : h.hyperedges) {
      std::set<std::string> labels;
      for (int m : edge.members) labels.insert(h.nodes[m]);
      CHECK(multiset.at(labels) == edge.weight);
      total += edge.weight;
    }
    CHECK(total == static_cast<long long>(entries.size()));
  }
}

TEST_CASE("build_hypergraph is permutation-invariant") {
  Rng rng(55);
  auto entries = oracle::random_entries(rng, 6, 12);
  auto h1 = build_hypergraph(entries, "organisation");
  std::reverse(entries.begin(), entries.end());
  auto h2 = build_hypergraph(entries, "organisation");
  CHECK(h1.nodes == h2.nodes);
  REQUIRE(h1.edge_count() == h2.edge_count());
  for (int j = 0; j < h1.edge_count(); ++j) {
    CHECK(h1.hyperedges[j].members == h2.hyperedges[j].members);
    CHECK(h1.hyperedges[j].weight == h2.hyperedges[j].weight);
  }
  CHECK(h1.provenance() == h2.provenance());
}

TEST_CASE("incidence matrix of a single hyperedge") {
  auto h = from_sets({{"A", "B", "C"}});
  auto e = incidence_matrix(h);
  CHECK(e.rows == 3);
  CHECK(e.cols == 1);
  for (int i = 0; i < 3; ++i) CHECK(e.at(i, 0) == 1);
}

TEST_CASE("incidence matrix row and column sums") {
  auto h = from_sets({{"A", "B"}, {"B", "C"}});
  auto e = incidence_matrix(h);
  REQUIRE(e.rows == 3);
  REQUIRE(e.cols == 2);
  int col0 = e.at(0, 0) + e.at(1, 0) + e.at(2, 0);
  int col1 = e.at(0, 1) + e.at(1, 1) + e.at(2, 1);
  CHECK(col0 == 2);
  CHECK(col1 == 2);
  CHECK(e.at(0, 0) + e.at(0, 1) == 1);
  CHECK(e.at(1, 0) + e.at(1, 1) == 2);
  CHECK(e.at(2, 0) + e.at(2, 1) == 1);
}

TEST_CASE("incidence column sums equal hyperedge sizes on random hypergraphs") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    auto h = oracle::random_hypergraph(rng, 8, 10);
    auto e = incidence_matrix(h);
    for (int j = 0; j < e.cols; ++j) {
      long long sum = 0;
      for (int i = 0; i < e.rows; ++i) sum += e.at(i, j);
      CHECK(sum == static_cast<long long>(h.hyperedges[j].members.size()));
    }
  }
}

TEST_CASE("adjacency matrix counts co-memberships") {
  auto h = from_sets({{"A", "B", "C"}});
  auto a = adjacency_matrix(h);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) CHECK(a.at(i, j) == (i == j ? 0 : 1));
  }

  auto h2 = from_sets({{"A", "B", "C"}, {"A", "B"}});
  auto a2 = adjacency_matrix(h2);
  CHECK(a2.at(0, 1) == 2);  // A,B
  CHECK(a2.at(0, 2) == 1);  // A,C
}

TEST_CASE("adjacency equals incidence * incidence^T minus degrees") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto h = oracle::random_hypergraph(rng, 8, 12);
    auto a = adjacency_matrix(h);
    auto reference = oracle::incidence_product_minus_degrees(h);
    REQUIRE(a.data.size() == reference.size());
    for (std::size_t i = 0; i < reference.size(); ++i) CHECK(a.data[i] == reference[i]);
  }
}

TEST_CASE("adjacency is symmetric with zero diagonal") {
  Rng rng(11);
  auto h = oracle::random_hypergraph(rng, 10, 14);
  auto a = adjacency_matrix(h);
  for (int i = 0; i < a.n; ++i) {
    CHECK(a.at(i, i) == 0);
    for (int j = 0; j < a.n; ++j) CHECK(a.at(i, j) == a.at(j, i));
  }
}

TEST_CASE("degree vector") {
  auto h = from_sets({{"A", "B"}, {"A", "C"}, {"A", "D"}, {"E"}});
  auto degrees = degree_vector(h);
  // nodes sorted: A B C D E
  CHECK(degrees == std::vector<long long>{3, 1, 1, 1, 1});
}

TEST_CASE("degree vector equals incidence row sums on random hypergraphs") {
  Rng rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    auto h = oracle::random_hypergraph(rng, 9, 12);
    auto degrees = degree_vector(h);
    auto e = incidence_matrix(h);
    for (int i = 0; i < e.rows; ++i) {
      long long sum = 0;
      for (int j = 0; j < e.cols; ++j) sum += e.at(i, j);
      CHECK(sum == degrees[i]);
    }
  }
}

TEST_CASE("summary stats: rank, anti-rank, weighted average") {
  auto h = from_sets({{"A"}, {"A", "B", "C"}});
  auto stats = summary_stats(h);
  CHECK(stats.order == 3);
  CHECK(stats.rank == 3);
  CHECK(stats.anti_rank == 1);
  CHECK(stats.hyperedge_count == 2);
  CHECK(stats.average_size == doctest::Approx(2.0));

  auto merged = from_sets({{"A", "B"}, {"A", "B"}, {"B", "C", "D"}});
  auto stats2 = summary_stats(merged);
  // weight-expanded: (2*2 + 1*3) / 3
  CHECK(stats2.average_size == doctest::Approx(7.0 / 3.0));
}

TEST_CASE("summary stats absent on the empty hypergraph") {
  auto stats = summary_stats(build_hypergraph({}, "x"));
  CHECK(!stats.rank.has_value());
  CHECK(!stats.anti_rank.has_value());
  CHECK(!stats.average_size.has_value());
}

TEST_CASE("summary stats average matches direct recomputation on random hypergraphs") {
  Rng rng(321);
  for (int trial = 0; trial < 10; ++trial) {
    auto h = oracle::random_hypergraph(rng, 8, 10);
    auto stats = summary_stats(h);
    long long weight = 0, weighted_size = 0;
    for (const auto& edge : h.hyperedges) {
      weight += edge.weight;
      weighted_size += edge.weight * static_cast<long long>(edge.members.size());
    }
    CHECK(*stats.average_size ==
          doctest::Approx(static_cast<double>(weighted_size) / static_cast<double>(weight)));
  }
}

TEST_CASE("node distance basics") {
  auto h = from_sets({{"A", "B"}, {"B", "C"}, {"D"}});
  CHECK(node_distance(h, "A", "A") == 0);
  CHECK(node_distance(h, "A", "B") == 1);
  CHECK(node_distance(h, "A", "C") == 2);
  CHECK(!node_distance(h, "A", "D").has_value());
  CHECK_THROWS_AS(node_distance(h, "A", "Z"), std::runtime_error);
}

TEST_CASE("node distance agrees with bipartite BFS halving") {
  Rng rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    auto h = oracle::random_hypergraph(rng, 8, 6);
    for (int start = 0; start < h.order(); ++start) {
      auto expected = oracle::bipartite_distances(h, start);
      for (int goal = 0; goal < h.order(); ++goal) {
        auto got = node_distance(h, h.nodes[start], h.nodes[goal]);
        if (expected[goal] < 0) {
          CHECK(!got.has_value());
        } else {
          REQUIRE(got.has_value());
          CHECK(*got == expected[goal]);
        }
      }
    }
  }
}

TEST_CASE("node distance is symmetric and satisfies the triangle inequality") {
  Rng rng(31);
  auto h = oracle::random_hypergraph(rng, 7, 8);
  const int n = h.order();
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      auto duv = node_distance(h, h.nodes[u], h.nodes[v]);
      auto dvu = node_distance(h, h.nodes[v], h.nodes[u]);
      CHECK(duv == dvu);
      if (!duv) continue;
      for (int w = 0; w < n; ++w) {
        auto duw = node_distance(h, h.nodes[u], h.nodes[w]);
        auto dwv = node_distance(h, h.nodes[w], h.nodes[v]);
        if (duw && dwv) CHECK(*duv <= *duw + *dwv);
      }
    }
  }
}

TEST_CASE("hypergraph JSON round-trip") {
  auto h = from_sets({{"A", "B"}, {"A", "B"}, {"B", "C"}, {"D"}});
  auto again = hypergraph_from_json(hypergraph_to_json(h));
  CHECK(again.attr_type == h.attr_type);
  CHECK(again.nodes == h.nodes);
  REQUIRE(again.edge_count() == h.edge_count());
  for (int j = 0; j < h.edge_count(); ++j) {
    CHECK(again.hyperedges[j].members == h.hyperedges[j].members);
    CHECK(again.hyperedges[j].weight == h.hyperedges[j].weight);
    CHECK(again.hyperedges[j].sources == h.hyperedges[j].sources);
  }
  CHECK(again.provenance() == h.provenance());
}
