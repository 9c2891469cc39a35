#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rrtd/graph.hpp"
#include "rrtd/partition.hpp"
#include "rrtd/prediction.hpp"
#include "rrtd/random.hpp"

namespace rrtd {

/// log(deg(s) / (n-1)). Throws DomainError on an isolated node.
PredictionVector degree_predictions(const Graph& g);

/// Betweenness with endpoints counted, averaged over unordered pairs.
std::vector<double> betweenness(const Graph& g);
/// log of betweenness().
PredictionVector betweenness_predictions(const Graph& g);

/// Every set partition of size n, built once per n and shared.
const std::vector<Partition>& cached_partitions(int n);

/// Partitions with at least two regions where every region keeps a
/// non-boundary state. When none survive, the second condition is dropped.
std::vector<Partition> admissible_partitions(const Graph& g);

/// Scores a partition; higher is better. The Rng carries the edge noise of
/// one draw and is reseeded identically for every partition in that draw.
struct PartitionScorer {
  std::function<double(const Graph&, const Partition&, Rng&)> score;
  /// False means the Rng is ignored and one draw suffices.
  bool uses_noise = false;
};

/// Fewest cross-region edges, ties toward the largest product of region sizes.
PartitionScorer cut_balance_scorer();

inline constexpr int kDefaultNoiseDraws = 10;

/// Mean boundary indicator over the best-scoring admissible partitions.
PredictionVector solway_predictions(const Graph& g, const PartitionScorer& scorer = cut_balance_scorer(),
                                    int noise_draws = kDefaultNoiseDraws, std::uint64_t seed = 0);

struct TomovParams {
  double alpha = 1.0;
  double p_within = 0.8;
  double p_across = 0.2;
  int participants = 40;
  int subgoals_per_participant = 3;
  /// Probability that a subgoal draw comes from bridge endpoints rather than
  /// all states. 1 means bridge endpoints only.
  double epsilon = 1.0;

  /// Throws DomainError on out-of-range values.
  void validate() const;
};

/// Log of CRP prior times edge likelihood for one partition.
double tomov_log_weight(const Graph& g, const Partition& p, const TomovParams& params);

/// log(1 + number of times each state was drawn as a subgoal).
PredictionVector tomov_predictions(const Graph& g, const TomovParams& params = {}, std::uint64_t seed = 0);

}  // namespace rrtd
