#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrtd/alt_models.hpp"
#include "rrtd/analysis.hpp"
#include "rrtd/graph.hpp"
#include "rrtd/prediction.hpp"
#include "rrtd/rrtd.hpp"
#include "rrtd/search.hpp"

namespace rrtd {

/// Every model tag the pipeline understands.
const std::vector<std::string>& model_tags();
/// The comparison set: every tag except RRTD-DFS.
std::vector<std::string> default_comparison_models();
/// Comma-separated tags; "all" expands to model_tags(). Throws UsageError
/// listing the valid tags.
std::vector<std::string> parse_models(std::string_view list);

struct ModelConfig {
  TaskDistribution dist;
  int samples = kDefaultSamples;
  std::uint64_t seed = 0;
  TomovParams tomov;
  int solway_noise_draws = kDefaultNoiseDraws;
};

/// On-disk store of Monte Carlo cost tables, one file per
/// (graph, algorithm, samples, seed). A missing directory disables caching.
class CostTableCache {
 public:
  CostTableCache() = default;
  explicit CostTableCache(std::filesystem::path dir);

  bool enabled() const noexcept { return !dir_.empty(); }
  std::filesystem::path path_for(const Graph& g, Algorithm alg, int samples, std::uint64_t seed) const;
  /// nullopt when absent or unreadable.
  std::optional<AlgCostTable> load(const Graph& g, Algorithm alg, int samples, std::uint64_t seed) const;
  void store(const Graph& g, const AlgCostTable& table) const;
  AlgCostTable get_or_compute(const Graph& g, Algorithm alg, int samples, std::uint64_t seed) const;

 private:
  std::filesystem::path dir_;
};

/// One prediction vector per requested model, in order.
std::vector<PredictionVector> predict_graph(const Graph& g, const std::vector<std::string>& models,
                                            const ModelConfig& config, const CostTableCache& cache = {});

/// predictions[graph][model]; identical for any worker count.
std::vector<std::vector<PredictionVector>> predict_corpus(const std::vector<Graph>& corpus,
                                                          const std::vector<std::string>& models,
                                                          const ModelConfig& config, int workers,
                                                          const CostTableCache& cache = {});

/// k distinct indices drawn uniformly from [0, total), sorted ascending.
std::vector<std::size_t> subsample_indices(std::size_t total, std::size_t k, std::uint64_t seed);

}  // namespace rrtd
