#include "rrtd/rrtd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rrtd/error.hpp"
#include "rrtd/graph6.hpp"

namespace rrtd {

std::string_view to_string(TaskDistributionKind kind) {
  switch (kind) {
    case TaskDistributionKind::kAllPairs: return "all";
    case TaskDistributionKind::kDistinctPairs: return "distinct";
    case TaskDistributionKind::kNonadjacentPairs: return "nonadjacent";
  }
  return "?";
}

TaskDistributionKind parse_distribution(std::string_view name) {
  for (auto kind : {TaskDistributionKind::kAllPairs, TaskDistributionKind::kDistinctPairs,
                    TaskDistributionKind::kNonadjacentPairs}) {
    if (name == to_string(kind)) return kind;
  }
  throw UsageError("unknown task distribution '" + std::string(name) + "' (expected all, distinct or nonadjacent)");
}

std::vector<Task> TaskDistribution::support(const Graph& g) const {
  std::vector<Task> out;
  for (Node s = 0; s < g.size(); ++s) {
    for (Node t = 0; t < g.size(); ++t) {
      if (kind != TaskDistributionKind::kAllPairs && s == t) continue;
      if (kind == TaskDistributionKind::kNonadjacentPairs && g.adjacent(s, t)) continue;
      out.push_back({s, t});
    }
  }
  return out;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_subgoals(const SubgoalSet& subgoals, int n) {
  for (std::size_t i = 0; i < subgoals.size(); ++i) {
    if (subgoals[i] < 0 || subgoals[i] >= n) throw DomainError("subgoal outside graph");
    if (i > 0 && subgoals[i] <= subgoals[i - 1]) throw DomainError("subgoal set must be sorted and unique");
  }
}

// Hitting time recovered from an RW cost table (zero on the diagonal).
double hit(const AlgCostTable& t, Node s, Node z) { return s == z ? 0.0 : -t(s, z); }

SubtaskValueTable random_walk_values(const AlgCostTable& table, const SubgoalSet& subgoals, Node goal) {
  if (subgoals.empty()) throw DomainError("random-walk decomposition needs at least one subgoal");
  SubtaskValueTable out{goal, std::vector<double>(static_cast<std::size_t>(table.n), kNegInf),
                        std::vector<Node>(static_cast<std::size_t>(table.n), goal)};
  for (Node s = 0; s < table.n; ++s) {
    for (Node z : subgoals) {
      const double v = -(hit(table, s, z) + hit(table, z, goal));
      if (v > out.values[s]) {
        out.values[s] = v;
        out.next_hop[s] = z;
      }
    }
  }
  return out;
}

}  // namespace

SubtaskValueTable subtask_values(const AlgCostTable& table, const SubgoalSet& subgoals, Node goal) {
  const int n = table.n;
  if (goal < 0 || goal >= n) throw DomainError("goal outside graph");
  check_subgoals(subgoals, n);
  if (table.alg == Algorithm::kRandomWalk) return random_walk_values(table, subgoals, goal);

  // Label-setting over hop targets Z ∪ {g}; costs -R are strictly positive.
  std::vector<Node> targets = subgoals;
  if (!std::binary_search(targets.begin(), targets.end(), goal)) {
    targets.insert(std::upper_bound(targets.begin(), targets.end(), goal), goal);
  }
  std::vector<double> value(static_cast<std::size_t>(n), kNegInf);
  std::vector<Node> hop(static_cast<std::size_t>(n), goal);
  std::vector<bool> settled(static_cast<std::size_t>(n), false);
  value[goal] = 0.0;
  hop[goal] = goal;
  for (std::size_t round = 0; round < targets.size(); ++round) {
    Node best = -1;
    for (Node z : targets) {
      if (!settled[z] && value[z] > kNegInf && (best < 0 || value[z] > value[best])) best = z;
    }
    if (best < 0) break;
    settled[best] = true;
    for (Node z : targets) {
      if (settled[z]) continue;
      const double r = table(z, best);
      if (!std::isfinite(r)) throw NumericError("non-finite cost in table");
      const double cand = r + value[best];
      if (cand > value[z] || (cand == value[z] && best < hop[z])) {
        value[z] = cand;
        hop[z] = best;
      }
    }
  }
  // Non-target states take one hop into the settled target values.
  for (Node s = 0; s < n; ++s) {
    if (std::binary_search(targets.begin(), targets.end(), s)) continue;
    for (Node z : targets) {
      const double r = table(s, z);
      if (!std::isfinite(r)) throw NumericError("non-finite cost in table");
      const double cand = r + value[z];
      if (cand > value[s]) {
        value[s] = cand;
        hop[s] = z;
      }
    }
  }
  return {goal, std::move(value), std::move(hop)};
}

double decomposition_value(const Graph& g, const AlgCostTable& table, const SubgoalSet& subgoals,
                           const TaskDistribution& dist) {
  if (table.n != g.size()) throw DomainError("cost table does not match graph");
  const auto tasks = dist.support(g);
  if (tasks.empty()) throw DomainError("task distribution has empty support on this graph");
  std::vector<SubtaskValueTable> per_goal;
  per_goal.reserve(static_cast<std::size_t>(g.size()));
  for (Node goal = 0; goal < g.size(); ++goal) per_goal.push_back(subtask_values(table, subgoals, goal));
  double total = 0.0;
  for (const auto& task : tasks) total += per_goal[task.goal].values[task.start];
  return total / static_cast<double>(tasks.size());
}

double decomposition_value(const Graph& g, Algorithm alg, const SubgoalSet& subgoals,
                           const TaskDistribution& dist, int samples, std::uint64_t seed) {
  return decomposition_value(g, alg_cost_table(g, alg, samples, seed), subgoals, dist);
}

PredictionVector rrtd_predictions(const Graph& g, const AlgCostTable& table, const TaskDistribution& dist) {
  PredictionVector out;
  out.graph_id = graph_label(g);
  out.model = "RRTD-" + std::string(to_string(table.alg));
  out.values.reserve(static_cast<std::size_t>(g.size()));
  for (Node s = 0; s < g.size(); ++s) out.values.push_back(decomposition_value(g, table, {s}, dist));
  return out;
}

PredictionVector rrtd_predictions(const Graph& g, Algorithm alg, const TaskDistribution& dist, int samples,
                                  std::uint64_t seed) {
  return rrtd_predictions(g, alg_cost_table(g, alg, samples, seed), dist);
}

double direct_goal_value(const Graph& g, Algorithm alg, const Task& task, int samples, std::uint64_t seed) {
  if (task.start == task.goal) throw DomainError("direct_goal_value: start equals goal");
  return table_cell_reward(g, alg, task.start, task.goal, samples, seed);
}

}  // namespace rrtd
