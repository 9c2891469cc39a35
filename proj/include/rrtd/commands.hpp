#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "rrtd/analysis.hpp"
#include "rrtd/io.hpp"
#include "rrtd/pipeline.hpp"
#include "rrtd/stimuli.hpp"

namespace rrtd {

/// Settings shared by the corpus commands.
struct RunConfig {
  /// A node count (built-in enumeration) or a graph6 file.
  std::string corpus = "8";
  std::vector<std::string> models = default_comparison_models();
  ModelConfig model;
  int workers = 1;
  std::string cache_dir;
  std::string out;
  /// 0 keeps the whole corpus.
  std::size_t subsample = 0;
  CorrelationOptions correlation;

  Json to_json() const;
};

/// Digits select enumerate_connected(n); anything else is a graph6 path.
std::vector<Graph> load_corpus(const std::string& source);
/// load_corpus followed by the configured subsample.
std::vector<Graph> select_corpus(const RunConfig& config);

/// Writes the connected graphs on n nodes as graph6 to `out` (stdout when
/// empty) and returns how many there were.
std::size_t cmd_enumerate(int n, const std::string& out, std::ostream& stdout_sink);

/// Prediction CSV text. Also written to config.out when set (JSON when the
/// path ends in .json).
std::string cmd_predict(const RunConfig& config);

/// Mean correlation matrix. Writes CSV to config.out and JSON beside it.
CorrelationMatrix cmd_compare(const RunConfig& config);

struct SpectralSummary {
  std::string graph_id;
  double lambda2 = 0;
  double gap = 0;
  bool degenerate = false;
  /// corr(Degree, exact all-pairs RRTD-RW); NaN when undefined.
  double degree_rw_correlation = 0;
};

struct RankSweepRow {
  int rank = 0;
  double qcut = 0;
  std::uint64_t qcut_count = 0;
  double degree = 0;
  std::uint64_t degree_count = 0;
};

struct SpectralReport {
  std::vector<SpectralSummary> graphs;
  /// Mean correlation of the rank-k approximation with QCut and Degree, k = 2..n.
  std::vector<RankSweepRow> ranks;
};

/// Writes summaries to config.out and the rank sweep to "<out>.rank.csv".
SpectralReport cmd_spectral(const RunConfig& config);

struct StimuliOptions {
  PairOrdering ordering = PairOrdering::kOrdered;
  /// Graphs drawn from the eligible set; 0 for none.
  std::size_t sample = 30;
  int probes = kMinProbeTasks;
  /// Simulated navigation sessions per sampled graph.
  int sessions = 0;
};

struct StimuliReport {
  std::vector<Graph> eligible;
  std::vector<Graph> sample;
  std::vector<std::vector<Task>> probes;
  std::vector<std::vector<Session>> sessions;
};

/// Eligible graph6 list to config.out; sample, probes and sessions to "<out>.json".
StimuliReport cmd_stimuli(const RunConfig& config, const StimuliOptions& options);

struct GridDemoOptions {
  int width = 9;
  int height = 9;
  /// -1: top-left corner and top-right corner.
  Node start = -1;
  Node goal = -1;
  std::vector<Algorithm> algorithms{Algorithm::kRandomWalk, Algorithm::kBfs, Algorithm::kIddfs};
  int samples = 5000;
  std::uint64_t seed = 0;
  /// Per-state heat data goes to "<out>.heat.csv" when out is set.
  std::string out;
};

struct GridDemoRow {
  Algorithm alg = Algorithm::kRandomWalk;
  double without = 0;
  double with = 0;
  /// Standard errors; zero for the exact random walk.
  double se_without = 0;
  double se_with = 0;
  /// Mean expansions per state without and with the subgoal.
  std::vector<double> heat_without;
  std::vector<double> heat_with;
};

struct GridDemoReport {
  int width = 0;
  int height = 0;
  Task task;
  Node subgoal = 0;
  std::vector<GridDemoRow> rows;
};

/// Path state closest to the middle of the route. Ties go to the state nearer
/// the straight-line midpoint, then the goal side, then the lower id.
Node route_midpoint(int width, int height, Node start, Node goal);

/// Expected cost (plan states plus run-time) of start -> goal against
/// start -> subgoal -> goal. Throws UsageError on a 1x1 grid.
GridDemoReport cmd_grid_demo(const GridDemoOptions& options);
void write_grid_demo(std::ostream& out, const GridDemoReport& report);

struct TwoStageOptions {
  /// Graph the synthetic trials are drawn on.
  Graph graph = grid_graph(5, 5);
  std::string truth_model = "Betweenness";
  TwoStageParams truth{2.0, 3.0};
  int trials = 2000;
  /// JSON array of {"start", "goal", "path"}; replaces the synthetic draw.
  std::string trials_file;
};

/// One fit per config.models, plus the random-choice model (beta1 = 0) under
/// the name "Random". Writes a JSON array to config.out.
std::vector<Json> cmd_two_stage(const RunConfig& config, const TwoStageOptions& options);

}  // namespace rrtd
