#include "rrtd/search.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "rrtd/enumerate.hpp"
#include "rrtd/error.hpp"

namespace rrtd {

std::string_view to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::kRandomWalk: return "RW";
    case Algorithm::kDfs: return "DFS";
    case Algorithm::kBfs: return "BFS";
    case Algorithm::kIddfs: return "IDDFS";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view name) {
  std::string upper(name);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Algorithm alg : kAllAlgorithms) {
    if (upper == to_string(alg)) return alg;
  }
  throw UsageError("unknown algorithm '" + std::string(name) + "' (expected RW, DFS, BFS or IDDFS)");
}

namespace {

using Visits = std::vector<std::uint64_t>;

void check_nodes(const Graph& g, Node s, Node z) {
  if (s < 0 || z < 0 || s >= g.size() || z >= g.size()) {
    throw DomainError("node id outside 0.." + std::to_string(g.size() - 1));
  }
}

void check_reachable(const Graph& g, Node s, Node z) {
  check_nodes(g, s, z);
  if (distances_from(g, s)[z] == kUnreachable) {
    throw Unreachable("node " + std::to_string(z) + " unreachable from " + std::to_string(s));
  }
}

void tally(Visits* visits, Node v) {
  if (visits) ++(*visits)[v];
}

// Shuffled copy of a neighbor list in a fixed-capacity buffer.
struct NeighborOrder {
  std::array<Node, kMaxNodes> items;
  std::size_t count = 0;

  NeighborOrder(const Graph& g, Node u, Rng& rng) {
    const auto& nb = g.neighbors(u);
    count = nb.size();
    std::copy(nb.begin(), nb.end(), items.begin());
    shuffle(std::span<Node>(items.data(), count), rng);
  }
  const Node* begin() const { return items.data(); }
  const Node* end() const { return items.data() + count; }
};

SearchOutcome random_walk_impl(const Graph& g, Node s, Node z, Rng& rng, std::uint64_t step_cap,
                               Visits* visits) {
  SearchOutcome out;
  out.plan.push_back(s);
  tally(visits, s);
  Node u = s;
  std::uint64_t steps = 0;
  while (u != z) {
    if (++steps > step_cap) {
      throw NumericError("random walk from " + std::to_string(s) + " to " + std::to_string(z) +
                         " exceeded the step cap of " + std::to_string(step_cap));
    }
    const auto& nb = g.neighbors(u);
    u = nb[uniform_index(rng, nb.size())];
    out.plan.push_back(u);
    tally(visits, u);
  }
  out.runtime = out.plan.size();
  return out;
}

SearchOutcome bfs_impl(const Graph& g, Node s, Node z, Rng& rng, Visits* visits) {
  std::vector<Node> parent(static_cast<std::size_t>(g.size()), -1);
  Graph::Row seen;
  seen.set(static_cast<std::size_t>(s));
  std::deque<Node> queue{s};
  SearchOutcome out;
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop_front();
    ++out.runtime;
    tally(visits, u);
    if (u == z) break;
    for (Node v : NeighborOrder(g, u, rng)) {
      if (seen.test(static_cast<std::size_t>(v))) continue;
      seen.set(static_cast<std::size_t>(v));
      parent[v] = u;
      queue.push_back(v);
    }
  }
  for (Node v = z; v != -1; v = parent[v]) out.plan.push_back(v);
  std::reverse(out.plan.begin(), out.plan.end());
  return out;
}

// Recursive DFS that only refuses states already on the current plan. With
// depth_limit >= 0 a state at that depth (in edges) is goal-tested but not
// expanded. Returns true once z is entered.
struct DepthFirst {
  const Graph& g;
  Node z;
  Rng& rng;
  Visits* visits;
  int depth_limit;
  std::uint64_t calls = 0;
  Path plan;
  Graph::Row on_plan;

  bool visit(Node u) {
    ++calls;
    tally(visits, u);
    plan.push_back(u);
    on_plan.set(static_cast<std::size_t>(u));
    if (u == z) return true;
    const int depth = static_cast<int>(plan.size()) - 1;
    if (depth_limit < 0 || depth < depth_limit) {
      for (Node v : NeighborOrder(g, u, rng)) {
        if (on_plan.test(static_cast<std::size_t>(v))) continue;
        if (visit(v)) return true;
      }
    }
    plan.pop_back();
    on_plan.reset(static_cast<std::size_t>(u));
    return false;
  }
};

SearchOutcome dfs_impl(const Graph& g, Node s, Node z, Rng& rng, Visits* visits) {
  DepthFirst dfs{g, z, rng, visits, -1, 0, {}, {}};
  dfs.visit(s);
  return {std::move(dfs.plan), dfs.calls};
}

SearchOutcome iddfs_impl(const Graph& g, Node s, Node z, Rng& rng, Visits* visits) {
  if (s == z) {
    tally(visits, s);
    return {{s}, 1};
  }
  std::uint64_t total = 0;
  for (int limit = 1;; ++limit) {
    DepthFirst dfs{g, z, rng, visits, limit, 0, {}, {}};
    const bool found = dfs.visit(s);
    total += dfs.calls;
    if (found) return {std::move(dfs.plan), total};
  }
}

SearchOutcome dispatch(Algorithm alg, const Graph& g, Node s, Node z, Rng& rng, Visits* visits) {
  switch (alg) {
    case Algorithm::kRandomWalk: return random_walk_impl(g, s, z, rng, kDefaultWalkStepCap, visits);
    case Algorithm::kDfs: return dfs_impl(g, s, z, rng, visits);
    case Algorithm::kBfs: return bfs_impl(g, s, z, rng, visits);
    case Algorithm::kIddfs: return iddfs_impl(g, s, z, rng, visits);
  }
  throw DomainError("unknown algorithm");
}

}  // namespace

SearchOutcome run_random_walk(const Graph& g, Node s, Node z, Rng& rng, std::uint64_t step_cap) {
  check_reachable(g, s, z);
  return random_walk_impl(g, s, z, rng, step_cap, nullptr);
}
SearchOutcome run_bfs(const Graph& g, Node s, Node z, Rng& rng) {
  check_reachable(g, s, z);
  return bfs_impl(g, s, z, rng, nullptr);
}
SearchOutcome run_dfs(const Graph& g, Node s, Node z, Rng& rng) {
  check_reachable(g, s, z);
  return dfs_impl(g, s, z, rng, nullptr);
}
SearchOutcome run_iddfs(const Graph& g, Node s, Node z, Rng& rng) {
  check_reachable(g, s, z);
  return iddfs_impl(g, s, z, rng, nullptr);
}

SearchOutcome run_search(Algorithm alg, const Graph& g, Node s, Node z, Rng& rng) {
  check_reachable(g, s, z);
  return dispatch(alg, g, s, z, rng, nullptr);
}

std::vector<std::uint64_t> expansion_counts(Algorithm alg, const Graph& g, Node s, Node z, Rng& rng) {
  check_reachable(g, s, z);
  Visits visits(static_cast<std::size_t>(g.size()), 0);
  dispatch(alg, g, s, z, rng, &visits);
  return visits;
}

std::vector<double> hitting_times_to(const Graph& g, Node z) {
  const int n = g.size();
  if (z < 0 || z >= n) throw DomainError("target node outside graph");
  if (!g.connected()) throw DomainError("infinite hitting time: graph is disconnected");
  std::vector<double> h(static_cast<std::size_t>(n), 0.0);
  if (n == 1) return h;
  // Unknowns are H(s, z) for s != z, packed by skipping z.
  auto index = [z](Node s) { return static_cast<std::size_t>(s < z ? s : s - 1); };
  const auto m = static_cast<std::size_t>(n - 1);
  Matrix a(m, m);
  std::vector<double> b(m, 1.0);
  for (Node s = 0; s < n; ++s) {
    if (s == z) continue;
    const double w = 1.0 / g.degree(s);
    a(index(s), index(s)) += 1.0;
    for (Node t : g.neighbors(s)) {
      if (t != z) a(index(s), index(t)) -= w;
    }
  }
  const auto x = solve_linear(std::move(a), std::move(b));
  for (Node s = 0; s < n; ++s) {
    if (s != z) h[s] = x[index(s)];
  }
  return h;
}

HittingTimeTable hitting_times(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  Matrix h(n, n);
  for (std::size_t z = 0; z < n; ++z) {
    const auto col = hitting_times_to(g, static_cast<Node>(z));
    for (std::size_t s = 0; s < n; ++s) h(s, z) = col[s];
  }
  return HittingTimeTable(std::move(h));
}

double expected_alg_reward(const Graph& g, Algorithm alg, Node s, Node z, int samples, std::uint64_t seed) {
  check_nodes(g, s, z);
  if (s == z) throw DomainError("expected_alg_reward: start equals subgoal");
  check_reachable(g, s, z);
  if (alg == Algorithm::kRandomWalk) return -hitting_times_to(g, z)[s];
  if (samples < 1) throw DomainError("expected_alg_reward: samples must be positive");
  Rng rng(seed);
  double total = 0.0;
  for (int i = 0; i < samples; ++i) {
    const auto outcome = dispatch(alg, g, s, z, rng, nullptr);
    total += static_cast<double>(outcome.plan.size() + outcome.runtime);
  }
  return -total / samples;
}

double table_cell_reward(const Graph& g, Algorithm alg, Node s, Node z, int samples, std::uint64_t global_seed) {
  if (alg == Algorithm::kRandomWalk || s == z || g.size() > kMaxCanonicalNodes) {
    const std::uint64_t seed = derive_seed({global_seed, content_hash(g), static_cast<std::uint64_t>(alg),
                                            static_cast<std::uint64_t>(s), static_cast<std::uint64_t>(z)});
    return expected_alg_reward(g, alg, s, z, samples, seed);
  }
  const auto rooted = canonical_rooted(g, s, z);
  const std::uint64_t seed = derive_seed({global_seed, static_cast<std::uint64_t>(g.size()), rooted.code,
                                          static_cast<std::uint64_t>(alg)});
  return expected_alg_reward(rooted.graph, alg, 0, 1, samples, seed);
}

AlgCostTable alg_cost_table(const Graph& g, Algorithm alg, int samples, std::uint64_t seed) {
  if (!g.connected()) throw DomainError("alg_cost_table: graph is disconnected");
  const int n = g.size();
  AlgCostTable table;
  table.alg = alg;
  table.n = n;
  table.seed = seed;
  table.samples = alg == Algorithm::kRandomWalk ? 0 : samples;
  table.reward.assign(static_cast<std::size_t>(n * n), std::numeric_limits<double>::quiet_NaN());
  if (alg == Algorithm::kRandomWalk) {
    const auto h = hitting_times(g);
    for (Node s = 0; s < n; ++s) {
      for (Node z = 0; z < n; ++z) {
        if (s != z) table.reward[static_cast<std::size_t>(s * n + z)] = -h(s, z);
      }
    }
    return table;
  }
  if (samples < 1) throw DomainError("alg_cost_table: samples must be positive");
  for (Node s = 0; s < n; ++s) {
    for (Node z = 0; z < n; ++z) {
      if (s == z) continue;
      table.reward[static_cast<std::size_t>(s * n + z)] = table_cell_reward(g, alg, s, z, samples, seed);
    }
  }
  return table;
}

}  // namespace rrtd
