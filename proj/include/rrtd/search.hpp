#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrtd/graph.hpp"
#include "rrtd/linalg.hpp"
#include "rrtd/random.hpp"

namespace rrtd {

enum class Algorithm { kRandomWalk, kDfs, kBfs, kIddfs };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kRandomWalk, Algorithm::kDfs,
                                               Algorithm::kBfs, Algorithm::kIddfs};

/// "RW", "DFS", "BFS", "IDDFS".
std::string_view to_string(Algorithm alg);
/// Case-insensitive inverse of to_string. Throws UsageError.
Algorithm parse_algorithm(std::string_view name);

/// A plan and the work the algorithm spent producing it.
///
/// Run-time units: random walk = number of states in the trace; BFS = dequeue
/// iterations up to and including the one that pops the target; DFS and IDDFS =
/// recursive calls including the root (summed over all passes for IDDFS).
struct SearchOutcome {
  Path plan;
  std::uint64_t runtime = 0;
};

inline constexpr std::uint64_t kDefaultWalkStepCap = 10'000'000;

SearchOutcome run_random_walk(const Graph& g, Node s, Node z, Rng& rng,
                              std::uint64_t step_cap = kDefaultWalkStepCap);
SearchOutcome run_bfs(const Graph& g, Node s, Node z, Rng& rng);
SearchOutcome run_dfs(const Graph& g, Node s, Node z, Rng& rng);
SearchOutcome run_iddfs(const Graph& g, Node s, Node z, Rng& rng);
SearchOutcome run_search(Algorithm alg, const Graph& g, Node s, Node z, Rng& rng);

/// Per-state visit tallies for one search run: how often each state was
/// dequeued (BFS), entered by a call (DFS/IDDFS) or occupied (RW).
std::vector<std::uint64_t> expansion_counts(Algorithm alg, const Graph& g, Node s, Node z, Rng& rng);

/// Expected random-walk steps H(s, z) for every ordered pair.
class HittingTimeTable {
 public:
  explicit HittingTimeTable(Matrix h) : h_(std::move(h)) {}
  double operator()(Node s, Node z) const { return h_(static_cast<std::size_t>(s), static_cast<std::size_t>(z)); }
  int size() const noexcept { return static_cast<int>(h_.rows()); }
  const Matrix& matrix() const noexcept { return h_; }

 private:
  Matrix h_;
};

/// Exact hitting times: one linear solve per target. Throws DomainError
/// ("infinite hitting time") for disconnected graphs.
HittingTimeTable hitting_times(const Graph& g);
/// The column H(., z) only.
std::vector<double> hitting_times_to(const Graph& g, Node z);

inline constexpr int kDefaultSamples = 1000;

/// Expected reward E[-|plan| - runtime]. Exact -H(s,z) for the random walk;
/// otherwise the mean over `samples` runs seeded by `seed`.
double expected_alg_reward(const Graph& g, Algorithm alg, Node s, Node z, int samples, std::uint64_t seed);

/// The (s, z) cell of a sampled cost table.
///
/// For graphs small enough to canonicalize (n <= 11) the runs happen on the
/// canonical relabeling of (g, s, z), seeded from the global seed, that
/// relabeling's code and the algorithm. Automorphic pairs, and the same pair in
/// an isomorphic copy of g, therefore receive bit-identical estimates. Larger
/// graphs run on their own labels with a seed derived from (global seed,
/// content hash, algorithm, s, z).
double table_cell_reward(const Graph& g, Algorithm alg, Node s, Node z, int samples, std::uint64_t global_seed);

/// R_Alg(s, z) for every ordered pair of one graph. Diagonal entries are NaN.
struct AlgCostTable {
  Algorithm alg = Algorithm::kRandomWalk;
  int n = 0;
  std::vector<double> reward;
  /// 0 for the exact random-walk table.
  int samples = 0;
  std::uint64_t seed = 0;

  double operator()(Node s, Node z) const { return reward[static_cast<std::size_t>(s * n + z)]; }
};

AlgCostTable alg_cost_table(const Graph& g, Algorithm alg, int samples, std::uint64_t seed);

}  // namespace rrtd
