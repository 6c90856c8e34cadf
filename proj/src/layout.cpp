#include "hyperview/layout.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

#include "hyperview/rng.hpp"

namespace hyperview {

namespace {

// One Louvain level: adjacency lists plus self-loop weights accumulated by
// aggregation. Convention: A_ii = 2 * self_weight[i], k_i includes it.
struct LevelGraph {
  int n = 0;
  std::vector<std::vector<std::pair<int, double>>> neighbors;
  std::vector<double> self_weight;
  std::vector<double> degree;  // k_i
  double two_m = 0.0;          // sum of k_i

  static LevelGraph from_expanded(const ExpandedGraph& g) {
    LevelGraph lg;
    lg.n = static_cast<int>(g.nodes.size());
    lg.neighbors.resize(lg.n);
    lg.self_weight.assign(lg.n, 0.0);
    for (const auto& edge : g.edges) {
      lg.neighbors[edge.a].emplace_back(edge.b, edge.weight);
      lg.neighbors[edge.b].emplace_back(edge.a, edge.weight);
    }
    lg.finish();
    return lg;
  }

  void finish() {
    degree.assign(n, 0.0);
    two_m = 0.0;
    for (int i = 0; i < n; ++i) {
      double k = 2.0 * self_weight[i];
      for (const auto& [j, w] : neighbors[i]) k += w;
      degree[i] = k;
      two_m += k;
    }
  }
};

double level_modularity(const LevelGraph& g, const std::vector<int>& community) {
  if (g.two_m <= 0.0) return 0.0;
  std::map<int, double> in, tot;
  for (int i = 0; i < g.n; ++i) {
    tot[community[i]] += g.degree[i];
    in[community[i]] += 2.0 * g.self_weight[i];
    for (const auto& [j, w] : g.neighbors[i]) {
      if (community[j] == community[i]) in[community[i]] += w;
    }
  }
  double q = 0.0;
  for (const auto& [c, w_in] : in) {
    double w_tot = tot[c];
    q += w_in / g.two_m - (w_tot / g.two_m) * (w_tot / g.two_m);
  }
  return q;
}

// Local-moving phase. Returns true when at least one node moved.
bool one_level(const LevelGraph& g, std::vector<int>& community, Rng& rng) {
  const double kMinGain = 1e-7;
  std::vector<double> tot(g.n, 0.0), in(g.n, 0.0);
  for (int i = 0; i < g.n; ++i) {
    tot[community[i]] += g.degree[i];
    in[community[i]] += 2.0 * g.self_weight[i];
    for (const auto& [j, w] : g.neighbors[i]) {
      if (community[j] == community[i]) in[community[i]] += w;
    }
  }

  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = g.n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(order[i], order[j]);
  }

  const double m = g.two_m / 2.0;
  bool any_move = false;
  bool improved = true;
  std::vector<double> neigh_weight(g.n, -1.0);
  std::vector<int> neigh_comm;
  while (improved) {
    improved = false;
    for (int node : order) {
      int old_comm = community[node];

      neigh_comm.clear();
      neigh_comm.push_back(old_comm);
      neigh_weight[old_comm] = 0.0;
      for (const auto& [j, w] : g.neighbors[node]) {
        int c = community[j];
        if (neigh_weight[c] < 0.0) {
          neigh_weight[c] = 0.0;
          neigh_comm.push_back(c);
        }
        neigh_weight[c] += w;
      }

      tot[old_comm] -= g.degree[node];
      in[old_comm] -= 2.0 * neigh_weight[old_comm] + 2.0 * g.self_weight[node];

      // delta-Q of joining community c, up to the constant removal term
      auto gain_of = [&](int c) {
        return (neigh_weight[c] - tot[c] * g.degree[node] / g.two_m) / m;
      };
      const double kTieEps = 1e-12;
      int best_comm = old_comm;
      double base = gain_of(old_comm);
      double best_gain = base;
      for (int c : neigh_comm) {
        if (c == old_comm) continue;
        double gain = gain_of(c);
        if (gain <= base + kMinGain) continue;  // must beat staying
        if (gain > best_gain + kTieEps ||
            (std::abs(gain - best_gain) <= kTieEps && c < best_comm)) {
          best_gain = gain;
          best_comm = c;
        }
      }

      tot[best_comm] += g.degree[node];
      in[best_comm] += 2.0 * neigh_weight[best_comm] + 2.0 * g.self_weight[node];
      community[node] = best_comm;
      if (best_comm != old_comm) {
        improved = true;
        any_move = true;
      }

      for (int c : neigh_comm) neigh_weight[c] = -1.0;
    }
  }
  return any_move;
}

// Renumbers communities to 0..k-1 in order of first appearance.
int compact_communities(std::vector<int>& community) {
  std::map<int, int> renumber;
  for (int& c : community) {
    auto [it, inserted] = renumber.try_emplace(c, static_cast<int>(renumber.size()));
    c = it->second;
  }
  return static_cast<int>(renumber.size());
}

LevelGraph aggregate(const LevelGraph& g, const std::vector<int>& community, int n_comm) {
  LevelGraph next;
  next.n = n_comm;
  next.neighbors.resize(n_comm);
  next.self_weight.assign(n_comm, 0.0);
  std::map<std::pair<int, int>, double> between;
  for (int i = 0; i < g.n; ++i) {
    int ci = community[i];
    next.self_weight[ci] += g.self_weight[i];
    for (const auto& [j, w] : g.neighbors[i]) {
      int cj = community[j];
      if (ci == cj) {
        if (i < j) next.self_weight[ci] += w;
      } else if (ci < cj) {
        between[{ci, cj}] += w;
      }
    }
  }
  for (const auto& [pair, w] : between) {
    next.neighbors[pair.first].emplace_back(pair.second, w);
    next.neighbors[pair.second].emplace_back(pair.first, w);
  }
  next.finish();
  return next;
}

}  // namespace

double modularity(const ExpandedGraph& g, const std::vector<int>& community) {
  if (community.size() != g.nodes.size()) {
    throw std::runtime_error("modularity: partition size mismatch");
  }
  return level_modularity(LevelGraph::from_expanded(g), community);
}

LouvainResult louvain(const ExpandedGraph& g, std::uint64_t seed) {
  if (g.nodes.empty()) throw std::runtime_error("louvain: graph has no nodes");

  LouvainResult result;
  result.community.resize(g.nodes.size());
  std::iota(result.community.begin(), result.community.end(), 0);

  LevelGraph level = LevelGraph::from_expanded(g);
  if (g.edges.empty()) {
    result.modularity = 0.0;
    result.phase_modularity.push_back(0.0);
    return result;
  }

  Rng rng(seed);
  std::vector<int> node_to_final(g.nodes.size());
  std::iota(node_to_final.begin(), node_to_final.end(), 0);

  while (true) {
    std::vector<int> community(level.n);
    std::iota(community.begin(), community.end(), 0);
    bool moved = one_level(level, community, rng);
    int n_comm = compact_communities(community);
    for (int& c : node_to_final) c = community[c];
    result.phase_modularity.push_back(level_modularity(level, community));
    if (!moved || n_comm == level.n) break;
    level = aggregate(level, community, n_comm);
  }

  result.community = node_to_final;
  compact_communities(result.community);
  result.modularity = result.phase_modularity.back();
  return result;
}

std::unordered_map<std::string, std::size_t> LayoutState::label_index() const {
  std::unordered_map<std::string, std::size_t> index;
  index.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = i;
  return index;
}

LayoutState force_atlas2(const ExpandedGraph& g, const LayoutParams& params,
                         const std::vector<int>& clusters, const LayoutState* initial) {
  const int n = static_cast<int>(g.nodes.size());
  if (n == 0) throw std::runtime_error("force_atlas2: graph has no nodes");
  if (!clusters.empty() && clusters.size() != g.nodes.size()) {
    throw std::runtime_error("force_atlas2: cluster vector size mismatch");
  }

  // Normalize to sorted label order before seeding so the result does not
  // depend on the graph's node ordering.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&g](int a, int b) { return g.nodes[a].label < g.nodes[b].label; });
  std::vector<int> rank(n);
  for (int r = 0; r < n; ++r) rank[order[r]] = r;

  std::vector<double> x(n), y(n);
  if (initial != nullptr) {
    auto index = initial->label_index();
    for (int r = 0; r < n; ++r) {
      auto it = index.find(g.nodes[order[r]].label);
      if (it == index.end()) {
        throw std::runtime_error("force_atlas2: initial layout misses node \"" +
                                 g.nodes[order[r]].label + "\"");
      }
      x[r] = initial->x[it->second];
      y[r] = initial->y[it->second];
    }
  } else {
    Rng rng(params.seed);
    for (int r = 0; r < n; ++r) {
      x[r] = (rng.next_double() - 0.5) * params.initial_extent;
      y[r] = (rng.next_double() - 0.5) * params.initial_extent;
    }
  }

  std::vector<double> mass(n, 1.0);  // degree + 1
  struct RankedEdge {
    int a, b;
    double w;
  };
  std::vector<RankedEdge> edges;
  edges.reserve(g.edges.size());
  for (const auto& edge : g.edges) {
    int a = rank[edge.a], b = rank[edge.b];
    edges.push_back({std::min(a, b), std::max(a, b), edge.weight});
    mass[rank[edge.a]] += 1.0;
    mass[rank[edge.b]] += 1.0;
  }
  std::sort(edges.begin(), edges.end(), [](const RankedEdge& lhs, const RankedEdge& rhs) {
    return std::tuple(lhs.a, lhs.b, lhs.w) < std::tuple(rhs.a, rhs.b, rhs.w);
  });

  std::vector<double> fx(n), fy(n), prev_fx(n, 0.0), prev_fy(n, 0.0);
  double global_speed = 1.0;
  const double kEps = 1e-9;

  for (int iteration = 0; iteration < params.iterations; ++iteration) {
    std::fill(fx.begin(), fx.end(), 0.0);
    std::fill(fy.begin(), fy.end(), 0.0);

    // pairwise degree-weighted repulsion
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double dx = x[i] - x[j];
        double dy = y[i] - y[j];
        double dist = std::sqrt(dx * dx + dy * dy);
        if (dist < kEps) {
          // coincident nodes: push apart along a fixed axis
          dx = 1.0;
          dy = 0.0;
          dist = 1.0;
        }
        double f = params.repulsion_k * mass[i] * mass[j] / dist;
        double ux = dx / dist, uy = dy / dist;
        fx[i] += f * ux;
        fy[i] += f * uy;
        fx[j] -= f * ux;
        fy[j] -= f * uy;
      }
    }

    // constant-magnitude gravity toward the origin
    for (int i = 0; i < n; ++i) {
      double dist = std::sqrt(x[i] * x[i] + y[i] * y[i]);
      if (dist < kEps) continue;
      double f = params.gravity * mass[i];
      fx[i] -= f * x[i] / dist;
      fy[i] -= f * y[i] / dist;
    }

    // linear attraction along edges, scaled by w^delta
    for (const auto& edge : edges) {
      double dx = x[edge.a] - x[edge.b];
      double dy = y[edge.a] - y[edge.b];
      double scale = std::pow(edge.w, params.edge_weight_exponent);
      fx[edge.a] -= scale * dx;
      fy[edge.a] -= scale * dy;
      fx[edge.b] += scale * dx;
      fy[edge.b] += scale * dy;
    }

    // adaptive speed (global swing damping)
    double global_swing = 0.0, global_traction = 0.0;
    for (int i = 0; i < n; ++i) {
      double sdx = fx[i] - prev_fx[i], sdy = fy[i] - prev_fy[i];
      double tdx = fx[i] + prev_fx[i], tdy = fy[i] + prev_fy[i];
      global_swing += mass[i] * std::sqrt(sdx * sdx + sdy * sdy);
      global_traction += mass[i] * 0.5 * std::sqrt(tdx * tdx + tdy * tdy);
    }
    double target = params.tolerance * global_traction / std::max(global_swing, kEps);
    global_speed = std::min(target, 1.5 * global_speed);

    for (int i = 0; i < n; ++i) {
      double sdx = fx[i] - prev_fx[i], sdy = fy[i] - prev_fy[i];
      double swing = std::sqrt(sdx * sdx + sdy * sdy);
      double speed = params.speed_factor * global_speed / (1.0 + global_speed * std::sqrt(swing));
      double dx = fx[i] * speed, dy = fy[i] * speed;
      double step = std::sqrt(dx * dx + dy * dy);
      if (step > params.max_displacement) {
        dx *= params.max_displacement / step;
        dy *= params.max_displacement / step;
      }
      x[i] += dx;
      y[i] += dy;
      if (!std::isfinite(x[i]) || !std::isfinite(y[i])) {
        throw std::runtime_error("force_atlas2: non-finite position at iteration " +
                                 std::to_string(iteration));
      }
    }
    prev_fx = fx;
    prev_fy = fy;
  }

  LayoutState state;
  state.computed_on = g.view_kind;
  state.transferred = false;
  state.seed = params.seed;
  state.labels.resize(n);
  state.x = std::move(x);
  state.y = std::move(y);
  state.cluster.resize(n);
  for (int r = 0; r < n; ++r) {
    state.labels[r] = g.nodes[order[r]].label;
    state.cluster[r] = clusters.empty() ? 0 : clusters[order[r]];
  }
  return state;
}

LayoutState transfer_coordinates(const LayoutState& source, const ExpandedGraph& from_view,
                                 const ExpandedGraph& to_view) {
  if (from_view.provenance != to_view.provenance) {
    throw std::runtime_error("transfer_coordinates: views derive from different hypergraphs");
  }
  if (source.computed_on != from_view.view_kind) {
    throw std::runtime_error("transfer_coordinates: layout was not computed on the source view");
  }

  auto src_index = source.label_index();
  auto src_of = [&](const std::string& label) {
    auto it = src_index.find(label);
    if (it == src_index.end()) {
      throw std::runtime_error("transfer_coordinates: source layout misses node \"" + label +
                               "\"");
    }
    return it->second;
  };

  const int n = static_cast<int>(to_view.nodes.size());
  std::vector<std::vector<int>> spokes(n);  // extra node -> member node indices
  for (const auto& edge : to_view.edges) {
    if (to_view.nodes[edge.a].extra) spokes[edge.a].push_back(edge.b);
    if (to_view.nodes[edge.b].extra) spokes[edge.b].push_back(edge.a);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&to_view](int a, int b) {
    return to_view.nodes[a].label < to_view.nodes[b].label;
  });

  LayoutState out;
  out.computed_on = source.computed_on;
  out.transferred = true;
  out.seed = source.seed;
  out.labels.resize(n);
  out.x.resize(n);
  out.y.resize(n);
  out.cluster.resize(n);
  for (int r = 0; r < n; ++r) {
    const auto& node = to_view.nodes[order[r]];
    out.labels[r] = node.label;
    if (!node.extra) {
      std::size_t s = src_of(node.label);
      out.x[r] = source.x[s];
      out.y[r] = source.y[s];
      out.cluster[r] = source.cluster[s];
      continue;
    }
    // isobarycenter of the hyperedge members, majority cluster (lowest id
    // on ties)
    const auto& members = spokes[order[r]];
    if (members.empty()) {
      throw std::runtime_error("transfer_coordinates: extra node \"" + node.label +
                               "\" has no spokes");
    }
    double sx = 0.0, sy = 0.0;
    std::map<int, int> votes;
    for (int member : members) {
      std::size_t s = src_of(to_view.nodes[member].label);
      sx += source.x[s];
      sy += source.y[s];
      votes[source.cluster[s]] += 1;
    }
    out.x[r] = sx / static_cast<double>(members.size());
    out.y[r] = sy / static_cast<double>(members.size());
    int best_cluster = votes.begin()->first;
    int best_votes = votes.begin()->second;
    for (const auto& [cluster, count] : votes) {
      if (count > best_votes) {
        best_votes = count;
        best_cluster = cluster;
      }
    }
    out.cluster[r] = best_cluster;
  }
  return out;
}

std::string layout_to_json(const LayoutState& layout) {
  nlohmann::json j;
  j["computed_on"] = view_kind_name(layout.computed_on);
  j["transferred"] = layout.transferred;
  j["seed"] = layout.seed;
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < layout.labels.size(); ++i) {
    nodes.push_back({{"label", layout.labels[i]},
                     {"x", layout.x[i]},
                     {"y", layout.y[i]},
                     {"cluster", layout.cluster[i]}});
  }
  j["nodes"] = nodes;
  return j.dump(2) + "\n";
}

LayoutState layout_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LayoutState layout;
  layout.computed_on = view_kind_from_name(j.at("computed_on").get<std::string>());
  layout.transferred = j.at("transferred").get<bool>();
  layout.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& node : j.at("nodes")) {
    layout.labels.push_back(node.at("label").get<std::string>());
    layout.x.push_back(node.at("x").get<double>());
    layout.y.push_back(node.at("y").get<double>());
    layout.cluster.push_back(node.at("cluster").get<int>());
  }
  return layout;
}

}  // namespace hyperview
