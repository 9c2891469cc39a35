#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "rrtd/graph.hpp"
#include "rrtd/prediction.hpp"
#include "rrtd/search.hpp"

namespace rrtd {

enum class TaskDistributionKind { kAllPairs, kDistinctPairs, kNonadjacentPairs };

/// "all", "distinct", "nonadjacent".
std::string_view to_string(TaskDistributionKind kind);
TaskDistributionKind parse_distribution(std::string_view name);

/// Uniform distribution over an ordered (start, goal) support.
struct TaskDistribution {
  TaskDistributionKind kind = TaskDistributionKind::kDistinctPairs;

  std::vector<Task> support(const Graph& g) const;
};

/// Sorted, duplicate-free set of subgoal states.
using SubgoalSet = std::vector<Node>;

/// V^g_Z(s) for every state s, plus the first hop of an optimal subgoal
/// sequence (ties to the lowest node id).
///
/// For the random walk every policy must route through a subgoal, so the goal
/// entry holds the forced detour max_z -[H(g,z) + H(z,g)] instead of 0.
struct SubtaskValueTable {
  Node goal = 0;
  std::vector<double> values;
  std::vector<Node> next_hop;
};

/// Solves the subtask-level Bellman equation over a cost table. Non-RW costs
/// are strictly negative, so the fixed point is a shortest-path problem over
/// subgoal hops (label-setting). Self-hops are excluded. The random walk uses
/// V(s) = max_{z in Z} -[H(s,z) + H(z,g)] and requires a non-empty Z.
SubtaskValueTable subtask_values(const AlgCostTable& table, const SubgoalSet& subgoals, Node goal);

/// V(Z): subtask values averaged over the task distribution.
double decomposition_value(const Graph& g, const AlgCostTable& table, const SubgoalSet& subgoals,
                           const TaskDistribution& dist);
double decomposition_value(const Graph& g, Algorithm alg, const SubgoalSet& subgoals,
                           const TaskDistribution& dist, int samples, std::uint64_t seed);

/// prediction(s) = V({s}).
PredictionVector rrtd_predictions(const Graph& g, const AlgCostTable& table, const TaskDistribution& dist);
PredictionVector rrtd_predictions(const Graph& g, Algorithm alg, const TaskDistribution& dist, int samples,
                                  std::uint64_t seed);

/// Value of planning straight to the goal with no subgoal: R_Alg(start, goal),
/// sampled with the same per-pair seed as the cost table cell.
double direct_goal_value(const Graph& g, Algorithm alg, const Task& task, int samples, std::uint64_t seed);

}  // namespace rrtd
