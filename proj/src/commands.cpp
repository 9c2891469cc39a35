#include "rrtd/commands.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "rrtd/enumerate.hpp"
#include "rrtd/error.hpp"
#include "rrtd/graph6.hpp"
#include "rrtd/parallel.hpp"
#include "rrtd/spectral.hpp"

namespace rrtd {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::filesystem::path with_suffix(const std::string& out, const char* suffix) {
  return std::filesystem::path(out + suffix);
}

void emit(const std::string& out, const std::string& text, const Json& meta) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  write_file(out, text);
  write_metadata(out, meta);
}

struct MeanSe {
  double mean = 0;
  double se = 0;
};

MeanSe summarize(const std::vector<double>& xs) {
  const double n = static_cast<double>(xs.size());
  CompensatedSum sum;
  for (double x : xs) sum.add(x);
  const double mean = sum.value() / n;
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, xs.size() > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0};
}

std::vector<Task> multi_path_tasks(const Graph& g) {
  std::vector<Task> out;
  for (Node s = 0; s < g.size(); ++s) {
    for (Node t = 0; t < g.size(); ++t) {
      if (s != t && count_shortest_paths(g, s, t) >= 2) out.push_back({s, t});
    }
  }
  return out;
}

std::vector<ChoiceTrial> read_trials(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path);
  Json data;
  try {
    data = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path + ": " + e.what());
  }
  if (!data.is_array()) throw DataError(path + ": expected a JSON array of trials");
  std::vector<ChoiceTrial> out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& rec = data[i];
    try {
      ChoiceTrial t{{rec.at("start").get<Node>(), rec.at("goal").get<Node>()}, rec.at("path").get<Path>(), {}};
      if (t.task.start < 0 || t.task.start >= g.size() || t.task.goal < 0 || t.task.goal >= g.size()) {
        throw DataError("trial " + std::to_string(i) + ": state out of range");
      }
      t.optimal = all_shortest_paths(g, t.task.start, t.task.goal);
      out.push_back(std::move(t));
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path + ": trial " + std::to_string(i) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

Json RunConfig::to_json() const {
  return {{"corpus", corpus},
          {"models", models},
          {"dist", std::string(to_string(model.dist.kind))},
          {"samples", model.samples},
          {"seed", model.seed},
          {"workers", workers},
          {"cache_dir", cache_dir},
          {"subsample", subsample},
          {"correlation", std::string(to_string(correlation.kind))},
          {"exclude_degenerate", correlation.exclude_degenerate},
          {"tomov",
           {{"alpha", model.tomov.alpha},
            {"p_within", model.tomov.p_within},
            {"p_across", model.tomov.p_across},
            {"participants", model.tomov.participants},
            {"subgoals_per_participant", model.tomov.subgoals_per_participant},
            {"epsilon", model.tomov.epsilon}}},
          {"solway", {{"scorer", "cut-balance"}, {"noise_draws", model.solway_noise_draws}}}};
}

std::vector<Graph> load_corpus(const std::string& source) {
  if (all_digits(source)) {
    const int n = std::stoi(source);
    if (n < kMinEnumerateNodes || n > kMaxEnumerateNodes) {
      throw UsageError("built-in corpus needs " + std::to_string(kMinEnumerateNodes) + " <= n <= " +
                       std::to_string(kMaxEnumerateNodes));
    }
    return enumerate_connected(n);
  }
  auto graphs = read_graph6_file(source);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (!graphs[i].connected()) throw DataError(source + ": graph " + std::to_string(i + 1) + " is disconnected");
  }
  return graphs;
}

std::vector<Graph> select_corpus(const RunConfig& config) {
  auto corpus = load_corpus(config.corpus);
  if (config.subsample == 0 || config.subsample >= corpus.size()) return corpus;
  std::vector<Graph> out;
  for (auto i : subsample_indices(corpus.size(), config.subsample, config.model.seed)) out.push_back(corpus[i]);
  return out;
}

std::size_t cmd_enumerate(int n, const std::string& out, std::ostream& stdout_sink) {
  if (n < kMinEnumerateNodes || n > kMaxEnumerateNodes) {
    throw UsageError("enumerate needs " + std::to_string(kMinEnumerateNodes) + " <= n <= " +
                     std::to_string(kMaxEnumerateNodes));
  }
  std::string text;
  std::size_t count = 0;
  enumerate_connected(n, [&](const Graph& g) {
    text += write_graph6(g);
    text += '\n';
    ++count;
  });
  if (out.empty()) {
    stdout_sink << text;
  } else {
    write_file(out, text);
  }
  return count;
}

std::string cmd_predict(const RunConfig& config) {
  const auto corpus = select_corpus(config);
  const CostTableCache cache(config.cache_dir);
  const auto preds = predict_corpus(corpus, config.models, config.model, config.workers, cache);
  std::ostringstream csv;
  write_predictions_csv(csv, preds);
  const bool json = config.out.size() >= 5 && config.out.ends_with(".json");
  emit(config.out, json ? predictions_json(preds).dump(2) + "\n" : csv.str(), config.to_json());
  return csv.str();
}

CorrelationMatrix cmd_compare(const RunConfig& config) {
  const auto corpus = select_corpus(config);
  const CostTableCache cache(config.cache_dir);
  const auto preds = predict_corpus(corpus, config.models, config.model, config.workers, cache);
  const auto matrix = correlation_matrix(preds, config.models, config.correlation);
  std::ostringstream csv;
  write_correlation_csv(csv, matrix);
  emit(config.out, csv.str(), config.to_json());
  if (!config.out.empty()) write_file(with_suffix(config.out, ".json"), correlation_json(matrix).dump(2) + "\n");
  return matrix;
}

SpectralReport cmd_spectral(const RunConfig& config) {
  const auto corpus = select_corpus(config);
  struct PerGraph {
    SpectralSummary summary;
    std::vector<std::optional<double>> qcut, degree;
  };
  std::vector<PerGraph> per(corpus.size());
  parallel_for(corpus.size(), config.workers, [&](std::size_t i) {
    const Graph& g = corpus[i];
    const auto sd = spectral_decomposition(g);
    const auto deg = degree_predictions(g).values;
    const auto qcut = qcut_predictions(g, sd);
    auto& p = per[i];
    p.summary = {graph_label(g), sd.eigenvalues[1], 1 - sd.eigenvalues[1], sd.lambda2_degenerate(), kNaN};
    for (int k = 2; k <= g.size(); ++k) {
      const auto rank = rrtd_rw_rank(g, sd, k).values;
      const bool skip_qcut = config.correlation.exclude_degenerate && qcut.degenerate;
      p.qcut.push_back(skip_qcut ? std::nullopt : correlation(config.correlation.kind, rank, qcut.values));
      p.degree.push_back(correlation(config.correlation.kind, rank, deg));
    }
    if (const auto r = p.degree.back()) p.summary.degree_rw_correlation = *r;
  });

  SpectralReport report;
  int max_n = 0;
  for (const auto& g : corpus) max_n = std::max(max_n, g.size());
  for (int k = 2; k <= max_n; ++k) {
    CompensatedSum q, d;
    RankSweepRow row{k, kNaN, 0, kNaN, 0};
    for (const auto& p : per) {
      const auto idx = static_cast<std::size_t>(k - 2);
      if (idx < p.qcut.size() && p.qcut[idx]) {
        q.add(*p.qcut[idx]);
        ++row.qcut_count;
      }
      if (idx < p.degree.size() && p.degree[idx]) {
        d.add(*p.degree[idx]);
        ++row.degree_count;
      }
    }
    if (row.qcut_count) row.qcut = q.value() / static_cast<double>(row.qcut_count);
    if (row.degree_count) row.degree = d.value() / static_cast<double>(row.degree_count);
    report.ranks.push_back(row);
  }
  for (auto& p : per) report.graphs.push_back(std::move(p.summary));

  std::ostringstream summary;
  summary << "graph_id,lambda2,gap,degenerate,degree_rw_correlation\n";
  for (const auto& s : report.graphs) {
    summary << s.graph_id << ',' << format_double(s.lambda2) << ',' << format_double(s.gap) << ','
            << (s.degenerate ? 1 : 0) << ',';
    if (!std::isnan(s.degree_rw_correlation)) summary << format_double(s.degree_rw_correlation);
    summary << '\n';
  }
  std::ostringstream ranks;
  ranks << "rank,qcut_correlation,qcut_graphs,degree_correlation,degree_graphs\n";
  for (const auto& r : report.ranks) {
    ranks << r.rank << ',' << format_double(r.qcut) << ',' << r.qcut_count << ',' << format_double(r.degree) << ','
          << r.degree_count << '\n';
  }
  emit(config.out, summary.str(), config.to_json());
  if (config.out.empty()) {
    std::cout << '\n' << ranks.str();
  } else {
    write_file(with_suffix(config.out, ".rank.csv"), ranks.str());
  }
  return report;
}

StimuliReport cmd_stimuli(const RunConfig& config, const StimuliOptions& options) {
  const auto corpus = load_corpus(config.corpus);
  StimuliReport report;
  for (const auto& g : corpus) {
    if (eligible_for_experiment(g, options.ordering)) report.eligible.push_back(g);
  }
  const std::size_t k = std::min(options.sample, report.eligible.size());
  Rng rng(derive_seed({config.model.seed, 0x57173}));
  for (auto i : subsample_indices(report.eligible.size(), k, config.model.seed)) {
    const Graph& g = report.eligible[i];
    report.sample.push_back(g);
    report.probes.push_back(draw_probe_tasks(g, options.probes, rng, options.ordering));
    std::vector<Session> sessions;
    for (int s = 0; s < options.sessions; ++s) {
      sessions.push_back(simulate_session(g, derive_seed({config.model.seed, content_hash(g), static_cast<std::uint64_t>(s)})));
    }
    report.sessions.push_back(std::move(sessions));
  }

  std::string list;
  for (const auto& g : report.eligible) list += write_graph6(g) + "\n";
  Json detail{{"ordering", std::string(to_string(options.ordering))},
              {"eligible", report.eligible.size()},
              {"graphs", Json::array()}};
  for (std::size_t i = 0; i < report.sample.size(); ++i) {
    Json probes = Json::array();
    for (const auto& t : report.probes[i]) probes.push_back({t.start, t.goal});
    Json sessions = Json::array();
    for (const auto& s : report.sessions[i]) sessions.push_back(session_json(s));
    detail["graphs"].push_back({{"graph6", write_graph6(report.sample[i])}, {"probes", probes}, {"sessions", sessions}});
  }
  if (config.out.empty()) {
    std::cout << detail.dump(2) << '\n';
  } else {
    emit(config.out, list, config.to_json());
    write_file(with_suffix(config.out, ".json"), detail.dump(2) + "\n");
  }
  return report;
}

Node route_midpoint(int width, int height, Node start, Node goal) {
  const Graph g = grid_graph(width, height);
  const auto from_start = distances_from(g, start);
  const auto from_goal = distances_from(g, goal);
  const int total = from_start[goal];
  const double mx = (start % width + goal % width) / 2.0, my = (start / width + goal / width) / 2.0;
  Node best = goal;
  auto key = [&](Node v) {
    const double dx = v % width - mx, dy = v / width - my;
    return std::tuple(std::abs(from_start[v] - from_goal[v]), dx * dx + dy * dy, -from_start[v], v);
  };
  for (Node v = 0; v < g.size(); ++v) {
    if (from_start[v] + from_goal[v] != total) continue;
    if (key(v) < key(best)) best = v;
  }
  return best;
}

GridDemoReport cmd_grid_demo(const GridDemoOptions& options) {
  if (options.width < 1 || options.height < 1) throw UsageError("grid dimensions must be positive");
  if (options.width * options.height < 2) throw UsageError("a 1x1 grid has no route to demonstrate");
  if (options.samples < 2) throw UsageError("grid-demo needs at least 2 samples");
  const Graph g = grid_graph(options.width, options.height);
  const Node start = options.start < 0 ? 0 : options.start;
  const Node goal = options.goal < 0 ? options.width - 1 : options.goal;
  if (start >= g.size() || goal >= g.size()) throw UsageError("start or goal outside the grid");
  if (start == goal) throw UsageError("start and goal coincide");

  GridDemoReport report{options.width, options.height, {start, goal}, route_midpoint(options.width, options.height, start, goal), {}};
  const Node mid = report.subgoal;
  const auto n = static_cast<std::size_t>(g.size());
  for (Algorithm alg : options.algorithms) {
    GridDemoRow row{alg, 0, 0, 0, 0, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
    Rng rng(derive_seed({options.seed, static_cast<std::uint64_t>(alg), content_hash(g)}));
    if (alg == Algorithm::kRandomWalk) {
      const auto h = hitting_times(g);
      row.without = h(start, goal);
      row.with = h(start, mid) + h(mid, goal);
    } else {
      std::vector<double> without, with;
      auto segment = [&](Node a, Node b) -> double {
        if (a == b) return 0.0;
        const auto r = run_search(alg, g, a, b, rng);
        return static_cast<double>(r.plan.size() + r.runtime);
      };
      for (int i = 0; i < options.samples; ++i) {
        without.push_back(segment(start, goal));
        with.push_back(segment(start, mid) + segment(mid, goal));
      }
      const auto a = summarize(without), b = summarize(with);
      row.without = a.mean;
      row.se_without = a.se;
      row.with = b.mean;
      row.se_with = b.se;
    }
    // Heat data: mean per-state expansions over a separate batch of runs.
    const int heat_runs = std::min(options.samples, 1000);
    auto add = [&](std::vector<double>& heat, Node a, Node b) {
      if (a == b) return;
      const auto counts = expansion_counts(alg, g, a, b, rng);
      for (std::size_t v = 0; v < n; ++v) heat[v] += static_cast<double>(counts[v]) / heat_runs;
    };
    for (int i = 0; i < heat_runs; ++i) {
      add(row.heat_without, start, goal);
      add(row.heat_with, start, mid);
      add(row.heat_with, mid, goal);
    }
    report.rows.push_back(std::move(row));
  }

  if (!options.out.empty()) {
    std::ostringstream heat;
    heat << "alg,state,x,y,expansions_without,expansions_with\n";
    for (const auto& row : report.rows) {
      for (std::size_t v = 0; v < n; ++v) {
        heat << to_string(row.alg) << ',' << v << ',' << v % static_cast<std::size_t>(options.width) << ','
             << v / static_cast<std::size_t>(options.width) << ',' << format_double(row.heat_without[v]) << ','
             << format_double(row.heat_with[v]) << '\n';
      }
    }
    std::ostringstream text;
    write_grid_demo(text, report);
    write_file(options.out, text.str());
    write_file(with_suffix(options.out, ".heat.csv"), heat.str());
    write_metadata(options.out, Json{{"width", options.width},
                                     {"height", options.height},
                                     {"start", start},
                                     {"goal", goal},
                                     {"subgoal", mid},
                                     {"samples", options.samples},
                                     {"seed", options.seed}});
  }
  return report;
}

void write_grid_demo(std::ostream& out, const GridDemoReport& report) {
  out << "alg,start,goal,subgoal,cost_without,se_without,cost_with,se_with\n";
  for (const auto& row : report.rows) {
    out << to_string(row.alg) << ',' << report.task.start << ',' << report.task.goal << ',' << report.subgoal << ','
        << format_double(row.without) << ',' << format_double(row.se_without) << ',' << format_double(row.with) << ','
        << format_double(row.se_with) << '\n';
  }
}

std::vector<Json> cmd_two_stage(const RunConfig& config, const TwoStageOptions& options) {
  const Graph& g = options.graph;
  if (!g.connected()) throw DataError("two-stage graph is disconnected");
  std::vector<ChoiceTrial> trials;
  if (!options.trials_file.empty()) {
    trials = read_trials(options.trials_file, g);
  } else {
    const auto truth = predict_graph(g, {options.truth_model}, config.model).front().values;
    const auto tasks = multi_path_tasks(g);
    if (tasks.empty()) throw DomainError("graph has no task with several shortest paths");
    Rng rng(derive_seed({config.model.seed, 0x2574}));
    trials = simulate_two_stage(g, truth, tasks, options.truth, options.trials, rng);
  }
  const auto preds = predict_graph(g, config.models, config.model);
  std::vector<Json> out;
  for (std::size_t m = 0; m < config.models.size(); ++m) {
    out.push_back(two_stage_json(config.models[m], two_stage_fit(preds[m].values, trials), trials.size()));
  }
  // The random-choice model ignores predictions, so any vector serves.
  out.push_back(two_stage_json("Random", two_stage_fit(preds.front().values, trials, true), trials.size()));

  Json arr = out;
  Json meta = config.to_json();
  meta["two_stage"] = {{"graph", graph_label(g)},
                       {"truth_model", options.truth_model},
                       {"truth_beta1", options.truth.beta1},
                       {"truth_beta2", options.truth.beta2},
                       {"trials", trials.size()},
                       {"trials_file", options.trials_file}};
  emit(config.out, arr.dump(2) + "\n", meta);
  return out;
}

}  // namespace rrtd
