#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "rrtd/graph.hpp"
#include "rrtd/random.hpp"

namespace rrtd {

enum class PairOrdering { kOrdered, kUnordered };
std::string_view to_string(PairOrdering ordering);
PairOrdering parse_pair_ordering(std::string_view name);

inline constexpr int kMinProbeDistance = 3;
inline constexpr int kMinProbeTasks = 10;

/// Tasks whose shortest distance is at least min_distance edges. Unordered
/// tasks are reported with start < goal.
std::vector<Task> probe_tasks(const Graph& g, PairOrdering ordering = PairOrdering::kOrdered,
                              int min_distance = kMinProbeDistance);

/// At least kMinProbeTasks probe tasks. Ordered pairs reproduce the 1,676
/// eligible eight-node graphs.
bool eligible_for_experiment(const Graph& g, PairOrdering ordering = PairOrdering::kOrdered);

/// k distinct probe tasks drawn uniformly without replacement. Throws
/// DomainError when the graph has fewer than k.
std::vector<Task> draw_probe_tasks(const Graph& g, int k, Rng& rng, PairOrdering ordering = PairOrdering::kOrdered);

using VisitCounts = std::vector<std::uint64_t>;

/// Distance-1 tasks the adaptive rule samples from.
struct FillerCandidates {
  std::vector<Task> tasks;
  /// Every adjacent task touched a most-visited state, so that filter was dropped.
  bool skipped_exclusion = false;
};

/// Drops ordered adjacent pairs touching a most-visited state, then keeps the
/// pairs with the largest summed visits.
FillerCandidates filler_candidates(const Graph& g, const VisitCounts& counts);
Task adaptive_filler(const Graph& g, const VisitCounts& counts, Rng& rng);
/// Uniform over ordered adjacent pairs, the baseline the adaptive rule is judged against.
Task uniform_filler(const Graph& g, Rng& rng);

/// Number of states tied at the maximal count.
int most_visited_count(const VisitCounts& counts);

/// Chooses the next state from (state, goal). Must return a neighbor of state.
using NavigatorPolicy = std::function<Node(const Graph&, Node, Node, Rng&)>;
/// Uniform among neighbors one step closer to the goal.
Node optimal_step(const Graph& g, Node state, Node goal, Rng& rng);

enum class TrialKind { kLong, kFiller };
enum class FillerRule { kAdaptive, kUniform };

struct ScheduledTrial {
  TrialKind kind = TrialKind::kLong;
  Task task;
  /// States occupied, start and goal included.
  Path path;
};

struct SessionOptions {
  int long_trials = 30;
  int filler_trials = 30;
  FillerRule filler = FillerRule::kAdaptive;
  NavigatorPolicy navigator = optimal_step;
};

struct Session {
  VisitCounts counts;
  /// Alternates long and filler trials, starting with a long one.
  std::vector<ScheduledTrial> schedule;
};

/// Long tasks are uniform over pairs at distance >= 2. Long-task draws,
/// navigation and filler choice use separate streams derived from seed, so the
/// same seed under both filler rules gives paired sessions.
Session simulate_session(const Graph& g, std::uint64_t seed, const SessionOptions& options = {});

}  // namespace rrtd
