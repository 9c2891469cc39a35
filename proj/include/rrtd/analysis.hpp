#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rrtd/graph.hpp"
#include "rrtd/prediction.hpp"
#include "rrtd/random.hpp"

namespace rrtd {

/// Spread at or below 1e-9 * max(1, |max|) counts as constant.
bool is_uniform(std::span<const double> v);

/// Mean 0, sample SD 1. nullopt when v is constant. Throws DomainError when
/// v has fewer than two entries.
std::optional<std::vector<double>> standardize(std::span<const double> v);

enum class CorrelationKind { kPearson, kSpearman };
std::string_view to_string(CorrelationKind kind);
CorrelationKind parse_correlation(std::string_view name);

/// nullopt when either input is constant. Throws DomainError on length
/// mismatch or fewer than two entries.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);
/// Pearson on average ranks.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);
std::optional<double> correlation(CorrelationKind kind, std::span<const double> x, std::span<const double> y);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x);
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0;
  double carry_ = 0;
};

/// Mean per-graph correlation for every model pair, skipping graphs where the
/// correlation is undefined.
struct CorrelationMatrix {
  std::vector<std::string> models;
  /// Row-major; NaN where no graph contributed.
  std::vector<double> mean;
  std::vector<std::uint64_t> count;

  std::size_t size() const noexcept { return models.size(); }
  double operator()(std::size_t i, std::size_t j) const { return mean[i * size() + j]; }
  std::uint64_t contributors(std::size_t i, std::size_t j) const { return count[i * size() + j]; }
  bool empty(std::size_t i, std::size_t j) const { return contributors(i, j) == 0; }
  std::size_t index_of(std::string_view model) const;
};

struct CorrelationOptions {
  CorrelationKind kind = CorrelationKind::kPearson;
  /// Also skip graphs where either model flagged its output as degenerate.
  bool exclude_degenerate = false;
};

/// Builds the matrix graph by graph. Feed graphs in a fixed order to get
/// bit-identical results.
class CorrelationAccumulator {
 public:
  CorrelationAccumulator(std::vector<std::string> models, CorrelationOptions options = {});

  /// One graph's predictions, in the same model order as the constructor.
  void add(std::span<const PredictionVector> predictions);
  CorrelationMatrix result() const;

 private:
  std::vector<std::string> models_;
  CorrelationOptions options_;
  std::vector<CompensatedSum> sums_;
  std::vector<std::uint64_t> counts_;
};

/// predictions[graph][model], models in the order of model_names.
CorrelationMatrix correlation_matrix(const std::vector<std::vector<PredictionVector>>& predictions,
                                     std::vector<std::string> model_names, CorrelationOptions options = {});

struct TwoStageParams {
  double beta1 = 1.0;
  double beta2 = 1.0;
};

/// A navigation choice among the shortest paths of its task.
struct ChoiceTrial {
  Task task;
  Path chosen;
  std::vector<Path> optimal;
};

/// Log-likelihood of the two-stage model: a subgoal z among all states except
/// start and goal with P(z) proportional to exp(beta1 * pred(z)), then an
/// optimal path with weight exp(beta2) if it contains z and 1 otherwise.
double two_stage_loglik(std::span<const double> predictions, std::span<const ChoiceTrial> trials,
                        TwoStageParams params);

struct TwoStageFit {
  TwoStageParams params;
  double loglik = 0;
  double start_loglik = 0;
  int sweeps = 0;
};

inline constexpr double kMaxBeta = 50.0;

/// Coordinate ascent on [0, kMaxBeta] from (1, 1). Each line search scans a
/// coarse grid, then refines with golden-section search. fix_beta1_zero gives
/// the random-choice model.
TwoStageFit two_stage_fit(std::span<const double> predictions, std::span<const ChoiceTrial> trials,
                          bool fix_beta1_zero = false, double tol = 1e-6);

/// Draws trials from the two-stage model on uniformly chosen tasks.
std::vector<ChoiceTrial> simulate_two_stage(const Graph& g, std::span<const double> predictions,
                                            std::span<const Task> tasks, TwoStageParams params, int trials,
                                            Rng& rng);

}  // namespace rrtd
