#include "rrtd/alt_models.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <string>

#include "rrtd/error.hpp"
#include "rrtd/graph6.hpp"

namespace rrtd {

namespace {

void require_connected(const Graph& g) {
  if (!g.connected()) throw DomainError("graph is not connected");
}

PredictionVector make_prediction(const Graph& g, std::string model, std::vector<double> values) {
  return PredictionVector{graph_label(g), std::move(model), std::move(values), false};
}

// Shortest-path counts from s, stored as doubles so 128-node grids don't overflow.
std::vector<double> path_counts(const Graph& g, Node s, const std::vector<int>& dist) {
  const int n = g.size();
  std::vector<Node> order(static_cast<std::size_t>(n));
  for (Node v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) { return dist[a] < dist[b]; });
  std::vector<double> sigma(static_cast<std::size_t>(n), 0.0);
  sigma[s] = 1.0;
  for (Node v : order) {
    if (v == s || dist[v] == kUnreachable) continue;
    for (Node w : g.neighbors(v)) {
      if (dist[w] == dist[v] - 1) sigma[v] += sigma[w];
    }
  }
  return sigma;
}

}  // namespace

PredictionVector degree_predictions(const Graph& g) {
  const int n = g.size();
  if (n < 2) throw DomainError("degree centrality needs at least two nodes");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (Node v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d == 0) throw DomainError("isolated node " + std::to_string(v));
    out[v] = std::log(static_cast<double>(d) / (n - 1));
  }
  return make_prediction(g, "Degree", std::move(out));
}

std::vector<double> betweenness(const Graph& g) {
  require_connected(g);
  const int n = g.size();
  if (n < 2) throw DomainError("betweenness needs at least two nodes");
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n));
  std::vector<std::vector<double>> sigma(static_cast<std::size_t>(n));
  for (Node s = 0; s < n; ++s) {
    dist[s] = distances_from(g, s);
    sigma[s] = path_counts(g, s, dist[s]);
  }
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (Node s = 0; s < n; ++s) {
    for (Node t = s + 1; t < n; ++t) {
      const double total = sigma[s][t];
      for (Node v = 0; v < n; ++v) {
        if (dist[s][v] + dist[v][t] == dist[s][t]) out[v] += sigma[s][v] * sigma[v][t] / total;
      }
    }
  }
  const double pairs = n * (n - 1) / 2.0;
  for (double& b : out) b /= pairs;
  return out;
}

PredictionVector betweenness_predictions(const Graph& g) {
  auto b = betweenness(g);
  for (double& x : b) x = std::log(x);
  return make_prediction(g, "Betweenness", std::move(b));
}

const std::vector<Partition>& cached_partitions(int n) {
  static std::array<std::vector<Partition>, kMaxPartitionNodes + 1> cache;
  static std::array<std::once_flag, kMaxPartitionNodes + 1> once;
  if (n < 1 || n > kMaxPartitionNodes) {
    throw UnsupportedSize("partition models support 1 <= n <= 10, got " + std::to_string(n));
  }
  std::call_once(once[n], [n] { cache[n] = enumerate_partitions(n); });
  return cache[n];
}

std::vector<Partition> admissible_partitions(const Graph& g) {
  require_connected(g);
  const auto& all = cached_partitions(g.size());
  std::vector<Partition> strict, relaxed;
  for (const auto& p : all) {
    if (p.region_count() < 2) continue;
    relaxed.push_back(p);
    const auto boundary = p.boundary_states(g);
    std::vector<bool> witnessed(static_cast<std::size_t>(p.region_count()), false);
    for (Node v = 0; v < g.size(); ++v) {
      if (!boundary[v]) witnessed[p.region(v)] = true;
    }
    if (std::all_of(witnessed.begin(), witnessed.end(), [](bool b) { return b; })) strict.push_back(p);
  }
  return strict.empty() ? relaxed : strict;
}

PartitionScorer cut_balance_scorer() {
  return PartitionScorer{[](const Graph& g, const Partition& p, Rng&) {
                           double balance = 1.0;
                           for (int size : p.region_sizes()) balance *= size;
                           // Products of region sizes stay below 100 for n <= 10.
                           return -1000.0 * p.cut_size(g) + balance;
                         },
                         false};
}

PredictionVector solway_predictions(const Graph& g, const PartitionScorer& scorer, int noise_draws,
                                    std::uint64_t seed) {
  if (noise_draws < 1) throw DomainError("noise_draws must be at least 1");
  const int n = g.size();
  const auto candidates = n >= 2 ? admissible_partitions(g) : std::vector<Partition>{};
  if (candidates.empty()) {
    auto out = make_prediction(g, "Solway", std::vector<double>(static_cast<std::size_t>(n), 0.0));
    out.degenerate = true;
    return out;
  }
  const int draws = scorer.uses_noise ? noise_draws : 1;
  std::vector<double> score(candidates.size(), 0.0);
  for (int d = 0; d < draws; ++d) {
    const auto draw_seed = derive_seed({seed, static_cast<std::uint64_t>(d)});
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      Rng rng(draw_seed);
      score[i] += scorer.score(g, candidates[i], rng);
    }
  }
  const double best = *std::max_element(score.begin(), score.end());
  const double tol = 1e-9 * std::max(1.0, std::abs(best));
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  int winners = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (score[i] < best - tol) continue;
    ++winners;
    const auto boundary = candidates[i].boundary_states(g);
    for (Node v = 0; v < n; ++v) out[v] += boundary[v] ? 1.0 : 0.0;
  }
  for (double& x : out) x /= winners;
  return make_prediction(g, "Solway", std::move(out));
}

void TomovParams::validate() const {
  if (!(alpha > 0) || !std::isfinite(alpha)) throw DomainError("alpha must be positive");
  if (!(p_within > 0 && p_within < 1) || !(p_across > 0 && p_across < 1)) {
    throw DomainError("edge probabilities must lie in (0, 1)");
  }
  if (!(p_within > p_across)) throw DomainError("p_within must exceed p_across");
  if (participants < 1 || subgoals_per_participant < 1) throw DomainError("participant counts must be positive");
  if (!(epsilon >= 0 && epsilon <= 1)) throw DomainError("epsilon must lie in [0, 1]");
}

double tomov_log_weight(const Graph& g, const Partition& p, const TomovParams& params) {
  double w = p.region_count() * std::log(params.alpha);
  for (int size : p.region_sizes()) w += std::lgamma(static_cast<double>(size));
  const double in1 = std::log(params.p_within), in0 = std::log1p(-params.p_within);
  const double out1 = std::log(params.p_across), out0 = std::log1p(-params.p_across);
  for (Node i = 0; i < g.size(); ++i) {
    for (Node j = i + 1; j < g.size(); ++j) {
      const bool same = p.region(i) == p.region(j);
      const bool edge = g.adjacent(i, j);
      w += same ? (edge ? in1 : in0) : (edge ? out1 : out0);
    }
  }
  return w;
}

PredictionVector tomov_predictions(const Graph& g, const TomovParams& params, std::uint64_t seed) {
  params.validate();
  require_connected(g);
  const int n = g.size();
  const auto& parts = cached_partitions(n);

  std::vector<double> cumulative(parts.size());
  double top = -INFINITY;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    cumulative[i] = tomov_log_weight(g, parts[i], params);
    top = std::max(top, cumulative[i]);
  }
  double total = 0;
  for (double& c : cumulative) {
    total += std::exp(c - top);
    c = total;
  }

  const auto edges = g.edges();
  std::vector<double> counts(static_cast<std::size_t>(n), 0.0);
  Rng rng(seed);
  for (int person = 0; person < params.participants; ++person) {
    const double u = uniform01(rng) * total;
    const auto pick = std::min<std::size_t>(
        static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin()),
        parts.size() - 1);
    const Partition& p = parts[pick];

    // One bridge per connected region pair, chosen uniformly among its cross edges.
    const int k = p.region_count();
    std::vector<std::vector<Edge>> crossing(static_cast<std::size_t>(k * k));
    for (const auto& e : edges) {
      int a = p.region(e.first), b = p.region(e.second);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      crossing[static_cast<std::size_t>(a * k + b)].push_back(e);
    }
    std::vector<bool> endpoint(static_cast<std::size_t>(n), false);
    for (const auto& cands : crossing) {
      if (cands.empty()) continue;
      const Edge& bridge = cands[uniform_index(rng, cands.size())];
      endpoint[bridge.first] = endpoint[bridge.second] = true;
    }
    std::vector<Node> pool;
    for (Node v = 0; v < n; ++v) {
      if (endpoint[v]) pool.push_back(v);
    }
    if (pool.empty()) continue;
    for (int i = 0; i < params.subgoals_per_participant; ++i) {
      const bool from_bridge = params.epsilon >= 1.0 || uniform01(rng) < params.epsilon;
      const Node s = from_bridge ? pool[uniform_index(rng, pool.size())]
                                 : static_cast<Node>(uniform_index(rng, static_cast<std::uint64_t>(n)));
      counts[s] += 1;
    }
  }
  for (double& c : counts) c = std::log1p(c);
  return make_prediction(g, "Tomov", std::move(counts));
}

}  // namespace rrtd
