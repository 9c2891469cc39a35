#include "rrtd/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>
#include <numeric>

#include "rrtd/error.hpp"

namespace rrtd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw DomainError("correlation inputs differ in length");
  if (x.size() < 2) throw DomainError("correlation needs at least two entries");
}

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> rank(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) rank[order[k]] = r;
    i = j + 1;
  }
  return rank;
}

double log_sum_exp(std::span<const double> v) {
  const double top = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(top)) return top;
  double s = 0;
  for (double x : v) s += std::exp(x - top);
  return top + std::log(s);
}

bool contains(const Path& p, Node z) { return std::find(p.begin(), p.end(), z) != p.end(); }

std::vector<Node> candidate_subgoals(int n, const Task& task) {
  std::vector<Node> out;
  for (Node v = 0; v < n; ++v) {
    if (v != task.start && v != task.goal) out.push_back(v);
  }
  return out;
}

// Per-candidate path counts, enough to evaluate the likelihood at any parameters.
struct PreparedTrial {
  std::vector<Node> candidates;
  std::vector<double> covering;
  std::vector<char> chosen_covers;
  double paths = 0;
  /// Number of identical trials merged into this one.
  double weight = 1;
  std::size_t first_index = 0;
};

PreparedTrial prepare(int n, const ChoiceTrial& trial) {
  if (trial.optimal.empty()) throw DomainError("trial has no optimal paths");
  if (std::find(trial.optimal.begin(), trial.optimal.end(), trial.chosen) == trial.optimal.end()) {
    throw DomainError("chosen path is not among the optimal paths");
  }
  PreparedTrial out;
  out.candidates = candidate_subgoals(n, trial.task);
  if (out.candidates.empty()) throw DomainError("no candidate subgoals besides start and goal");
  out.paths = static_cast<double>(trial.optimal.size());
  for (Node z : out.candidates) {
    double covering = 0;
    for (const auto& p : trial.optimal) covering += contains(p, z);
    out.covering.push_back(covering);
    out.chosen_covers.push_back(contains(trial.chosen, z));
  }
  return out;
}

std::vector<PreparedTrial> prepare_all(std::span<const double> pred, std::span<const ChoiceTrial> trials) {
  // Identical trials share one entry, in order of first appearance.
  std::map<std::tuple<Task, Path, std::vector<Path>>, std::size_t> seen;
  std::vector<PreparedTrial> out;
  for (const auto& t : trials) {
    auto [it, fresh] = seen.try_emplace({t.task, t.chosen, t.optimal}, out.size());
    if (fresh) {
      out.push_back(prepare(static_cast<int>(pred.size()), t));
      out.back().first_index = static_cast<std::size_t>(&t - trials.data());
    } else {
      out[it->second].weight += 1;
    }
  }
  return out;
}

double trial_loglik(std::span<const double> pred, const PreparedTrial& trial, TwoStageParams params) {
  const std::size_t k = trial.candidates.size();
  std::vector<double> prior(k);
  for (std::size_t i = 0; i < k; ++i) prior[i] = params.beta1 * pred[trial.candidates[i]];
  const double prior_norm = log_sum_exp(prior);
  std::vector<double> joint(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double covering = trial.covering[i];
    const double others = trial.paths - covering;
    // log of the path-stage normalizer: covering * e^beta2 + others.
    const double norm = covering == 0 ? std::log(others)
                        : std::log(covering) + params.beta2 + std::log1p(others / covering * std::exp(-params.beta2));
    joint[i] = prior[i] - prior_norm + (trial.chosen_covers[i] ? params.beta2 : 0.0) - norm;
  }
  return log_sum_exp(joint);
}

double total_loglik(std::span<const double> pred, const std::vector<PreparedTrial>& trials, TwoStageParams params) {
  if (params.beta1 < 0 || params.beta2 < 0) throw DomainError("two-stage parameters must be nonnegative");
  double total = 0;
  for (std::size_t t = 0; t < trials.size(); ++t) {
    const double ll = trial_loglik(pred, trials[t], params);
    if (!std::isfinite(ll)) throw NumericError("non-finite likelihood at trial " + std::to_string(trials[t].first_index));
    total += trials[t].weight * ll;
  }
  return total;
}

// Golden-section maximization of f on [lo, hi].
template <class F>
double golden_max(F f, double lo, double hi, double tol) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2;
}

}  // namespace

bool is_uniform(std::span<const double> v) {
  if (v.empty()) return true;
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo <= 1e-9 * std::max(1.0, std::abs(*hi));
}

std::optional<std::vector<double>> standardize(std::span<const double> v) {
  if (v.size() < 2) throw DomainError("standardize needs at least two entries");
  if (is_uniform(v)) return std::nullopt;
  const double n = static_cast<double>(v.size());
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double ss = 0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / (n - 1));
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = (v[i] - mean) / sd;
  return out;
}

std::string_view to_string(CorrelationKind kind) {
  return kind == CorrelationKind::kPearson ? "pearson" : "spearman";
}

CorrelationKind parse_correlation(std::string_view name) {
  if (name == "pearson") return CorrelationKind::kPearson;
  if (name == "spearman") return CorrelationKind::kSpearman;
  throw UsageError("unknown correlation kind '" + std::string(name) + "'");
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  const auto zx = standardize(x);
  const auto zy = standardize(y);
  if (!zx || !zy) return std::nullopt;
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += (*zx)[i] * (*zy)[i];
  return std::clamp(s / static_cast<double>(x.size() - 1), -1.0, 1.0);
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
  check_pair(x, y);
  if (is_uniform(x) || is_uniform(y)) return std::nullopt;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

std::optional<double> correlation(CorrelationKind kind, std::span<const double> x, std::span<const double> y) {
  return kind == CorrelationKind::kPearson ? pearson(x, y) : spearman(x, y);
}

void CompensatedSum::add(double x) {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = t;
}

std::size_t CorrelationMatrix::index_of(std::string_view model) const {
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (models[i] == model) return i;
  }
  throw UsageError("model '" + std::string(model) + "' is not in the matrix");
}

CorrelationAccumulator::CorrelationAccumulator(std::vector<std::string> models, CorrelationOptions options)
    : models_(std::move(models)),
      options_(options),
      sums_(models_.size() * models_.size()),
      counts_(models_.size() * models_.size(), 0) {}

void CorrelationAccumulator::add(std::span<const PredictionVector> predictions) {
  const std::size_t m = models_.size();
  if (predictions.size() != m) throw DomainError("expected one prediction per model");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const auto& a = predictions[i];
      const auto& b = predictions[j];
      if (options_.exclude_degenerate && (a.degenerate || b.degenerate)) continue;
      const auto r = correlation(options_.kind, a.values, b.values);
      if (!r) continue;
      sums_[i * m + j].add(*r);
      ++counts_[i * m + j];
    }
  }
}

CorrelationMatrix CorrelationAccumulator::result() const {
  const std::size_t m = models_.size();
  CorrelationMatrix out{models_, std::vector<double>(m * m, kNaN), std::vector<std::uint64_t>(m * m, 0)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const auto c = counts_[i * m + j];
      const double mean = c == 0 ? kNaN : i == j ? 1.0 : sums_[i * m + j].value() / static_cast<double>(c);
      out.mean[i * m + j] = out.mean[j * m + i] = mean;
      out.count[i * m + j] = out.count[j * m + i] = c;
    }
  }
  return out;
}

CorrelationMatrix correlation_matrix(const std::vector<std::vector<PredictionVector>>& predictions,
                                     std::vector<std::string> model_names, CorrelationOptions options) {
  CorrelationAccumulator acc(std::move(model_names), options);
  for (const auto& per_graph : predictions) acc.add(per_graph);
  return acc.result();
}

double two_stage_loglik(std::span<const double> predictions, std::span<const ChoiceTrial> trials,
                        TwoStageParams params) {
  return total_loglik(predictions, prepare_all(predictions, trials), params);
}

TwoStageFit two_stage_fit(std::span<const double> predictions, std::span<const ChoiceTrial> trials,
                          bool fix_beta1_zero, double tol) {
  const auto prepared = prepare_all(predictions, trials);
  TwoStageFit fit;
  fit.params = TwoStageParams{fix_beta1_zero ? 0.0 : 1.0, 1.0};
  fit.start_loglik = total_loglik(predictions, prepared, fit.params);
  fit.loglik = fit.start_loglik;

  auto line = [&](double TwoStageParams::*coord) {
    auto f = [&](double x) {
      TwoStageParams p = fit.params;
      p.*coord = x;
      return total_loglik(predictions, prepared, p);
    };
    // The likelihood can flatten into a plateau at large beta, so a coarse
    // scan picks the bracket before the golden-section refinement.
    std::vector<double> grid{0.0};
    for (double x = 0.01; x < kMaxBeta; x *= 1.25) grid.push_back(x);
    grid.push_back(kMaxBeta);
    std::size_t top = 0;
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      vals[i] = f(grid[i]);
      if (vals[i] > vals[top]) top = i;
    }
    const double lo = grid[top == 0 ? 0 : top - 1];
    const double hi = grid[std::min(top + 1, grid.size() - 1)];
    const double x = golden_max(f, lo, hi, tol);
    double best_x = fit.params.*coord, best = fit.loglik;
    for (auto [cand, v] : {std::pair{x, f(x)}, std::pair{grid[top], vals[top]}}) {
      if (v > best) {
        best = v;
        best_x = cand;
      }
    }
    const double moved = std::abs(best_x - fit.params.*coord);
    fit.params.*coord = best_x;
    fit.loglik = best;
    return moved;
  };

  for (fit.sweeps = 1; fit.sweeps <= 200; ++fit.sweeps) {
    double moved = fix_beta1_zero ? 0.0 : line(&TwoStageParams::beta1);
    moved = std::max(moved, line(&TwoStageParams::beta2));
    if (moved <= tol) break;
  }
  return fit;
}

std::vector<ChoiceTrial> simulate_two_stage(const Graph& g, std::span<const double> predictions,
                                            std::span<const Task> tasks, TwoStageParams params, int trials,
                                            Rng& rng) {
  if (tasks.empty()) throw DomainError("no tasks to simulate");
  if (static_cast<int>(predictions.size()) != g.size()) throw DomainError("prediction length differs from graph size");
  auto draw = [&](const std::vector<double>& logw) {
    const double norm = log_sum_exp(logw);
    double u = uniform01(rng);
    for (std::size_t i = 0; i < logw.size(); ++i) {
      u -= std::exp(logw[i] - norm);
      if (u < 0) return i;
    }
    return logw.size() - 1;
  };
  std::vector<ChoiceTrial> out;
  out.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    const Task task = tasks[uniform_index(rng, tasks.size())];
    ChoiceTrial trial{task, {}, all_shortest_paths(g, task.start, task.goal)};
    const auto cands = candidate_subgoals(g.size(), task);
    if (cands.empty()) throw DomainError("no candidate subgoals besides start and goal");
    std::vector<double> prior(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) prior[i] = params.beta1 * predictions[cands[i]];
    const Node z = cands[draw(prior)];
    std::vector<double> path_w(trial.optimal.size());
    for (std::size_t i = 0; i < trial.optimal.size(); ++i) path_w[i] = contains(trial.optimal[i], z) ? params.beta2 : 0.0;
    trial.chosen = trial.optimal[draw(path_w)];
    out.push_back(std::move(trial));
  }
  return out;
}

}  // namespace rrtd
