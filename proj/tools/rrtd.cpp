// rrtd: subgoal-model pipeline over small connected graphs.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rrtd/commands.hpp"
#include "rrtd/error.hpp"
#include "rrtd/graph6.hpp"
#include "rrtd/parallel.hpp"

using namespace rrtd;

namespace {

struct Flags {
  std::string corpus = "8";
  std::string models;
  std::string dist = "distinct";
  int samples = kDefaultSamples;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int workers = default_workers();
  std::string cache_dir;
  std::string out;
  std::size_t subsample = 0;
  std::string correlation = "pearson";
  bool exclude_degenerate = false;
  TomovParams tomov;
  int noise_draws = kDefaultNoiseDraws;
};

void add_common(CLI::App* cmd, Flags& f, bool with_models) {
  cmd->add_option("--corpus", f.corpus, "Node count for the built-in corpus, or a graph6 file")->capture_default_str();
  if (with_models) {
    cmd->add_option("--models", f.models, "Comma-separated model tags, or 'all'");
    cmd->add_option("--dist", f.dist, "Task distribution")
        ->check(CLI::IsMember({"all", "distinct", "nonadjacent"}))
        ->capture_default_str();
    cmd->add_option("--samples", f.samples, "Monte Carlo runs per (start, goal) pair")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--cache-dir", f.cache_dir, "Directory for cached cost tables");
    cmd->add_option("--tomov-alpha", f.tomov.alpha)->capture_default_str();
    cmd->add_option("--tomov-p-within", f.tomov.p_within)->capture_default_str();
    cmd->add_option("--tomov-p-across", f.tomov.p_across)->capture_default_str();
    cmd->add_option("--tomov-participants", f.tomov.participants)->capture_default_str();
    cmd->add_option("--tomov-subgoals", f.tomov.subgoals_per_participant)->capture_default_str();
    cmd->add_option("--tomov-epsilon", f.tomov.epsilon)->capture_default_str();
    cmd->add_option("--solway-noise-draws", f.noise_draws)->capture_default_str();
  }
  cmd->add_option("--seed", f.seed, "Global seed")->capture_default_str();
  cmd->add_option("--workers", f.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--out", f.out, "Output path (stdout when omitted)");
  cmd->add_option("--subsample", f.subsample, "Uniform subsample of the corpus (0 keeps all)");
}

RunConfig to_config(const Flags& f, std::vector<std::string> default_models) {
  RunConfig c;
  c.corpus = f.corpus;
  c.models = f.models.empty() ? std::move(default_models) : parse_models(f.models);
  c.model.dist = TaskDistribution{parse_distribution(f.dist)};
  c.model.samples = f.samples;
  c.model.seed = f.seed;
  c.model.tomov = f.tomov;
  c.model.tomov.validate();
  c.model.solway_noise_draws = f.noise_draws;
  c.workers = f.workers;
  c.cache_dir = f.cache_dir;
  c.out = f.out;
  c.subsample = f.subsample;
  c.correlation = {parse_correlation(f.correlation), f.exclude_degenerate};
  return c;
}

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_matrix(const CorrelationMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    double best = -2;
    std::string best_name = "-";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i != j && !m.empty(i, j) && m(i, j) > best) {
        best = m(i, j);
        best_name = m.models[j];
      }
    }
    std::cerr << m.models[i] << ": closest " << best_name;
    if (best_name != "-") std::cerr << " (" << best << ")";
    std::cerr << '\n';
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Resource-rational subgoal models on small graphs"};
  app.set_config("--config", "", "TOML/INI file with option defaults");
  app.require_subcommand(1);
  Flags f;

  int enum_n = 8;
  auto* enumerate = app.add_subcommand("enumerate", "Write every connected graph on n nodes as graph6");
  enumerate->add_option("n", enum_n, "Node count (2-8)")->required();
  enumerate->add_option("--out", f.out, "Output graph6 path (stdout when omitted)");

  auto* predict = app.add_subcommand("predict", "Per-state predictions of each model");
  add_common(predict, f, true);

  auto* compare = app.add_subcommand("compare", "Mean correlation matrix between models");
  add_common(compare, f, true);
  compare->add_option("--correlation", f.correlation)->check(CLI::IsMember({"pearson", "spearman"}))->capture_default_str();
  compare->add_flag("--exclude-degenerate", f.exclude_degenerate, "Skip graphs with degenerate model output");

  auto* spectral = app.add_subcommand("spectral", "Spectral gap and rank-k random-walk approximations");
  add_common(spectral, f, false);
  spectral->add_option("--correlation", f.correlation)->check(CLI::IsMember({"pearson", "spearman"}))->capture_default_str();
  spectral->add_flag("--exclude-degenerate", f.exclude_degenerate, "Skip QCut on degenerate lambda_2");

  StimuliOptions stim;
  std::string ordering = "ordered";
  auto* stimuli = app.add_subcommand("stimuli", "Eligible graphs, probe tasks and simulated sessions");
  add_common(stimuli, f, false);
  stimuli->add_option("--ordering", ordering)->check(CLI::IsMember({"ordered", "unordered"}))->capture_default_str();
  stimuli->add_option("--sample", stim.sample, "Eligible graphs to draw")->capture_default_str();
  stimuli->add_option("--probes", stim.probes, "Probe tasks per sampled graph")->capture_default_str();
  stimuli->add_option("--sessions", stim.sessions, "Simulated sessions per sampled graph")->capture_default_str();

  GridDemoOptions grid;
  std::string algs = "RW,BFS,IDDFS";
  auto* demo = app.add_subcommand("grid-demo", "Search cost with and without a midpoint subgoal on a grid");
  demo->add_option("--width", grid.width)->capture_default_str();
  demo->add_option("--height", grid.height)->capture_default_str();
  demo->add_option("--start", grid.start, "Start state (default: top-left corner)");
  demo->add_option("--goal", grid.goal, "Goal state (default: top-right corner)");
  demo->add_option("--algs", algs, "Comma-separated algorithms")->capture_default_str();
  demo->add_option("--samples", grid.samples)->capture_default_str();
  demo->add_option("--seed", grid.seed)->capture_default_str();
  demo->add_option("--out", grid.out, "Report CSV; heat data goes to <out>.heat.csv");

  TwoStageOptions two;
  std::string grid_spec;
  auto* two_stage = app.add_subcommand("two-stage", "Fit the two-stage path-choice model");
  add_common(two_stage, f, true);
  two_stage->add_option("--grid", grid_spec, "Use a WxH grid instead of the first corpus graph");
  two_stage->add_option("--truth", two.truth_model, "Model generating synthetic trials")->capture_default_str();
  two_stage->add_option("--beta1", two.truth.beta1)->capture_default_str();
  two_stage->add_option("--beta2", two.truth.beta2)->capture_default_str();
  two_stage->add_option("--trials", two.trials, "Synthetic trial count")->capture_default_str();
  two_stage->add_option("--trials-file", two.trials_file, "JSON trials to fit instead of synthetic ones");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*enumerate) {
    const auto count = cmd_enumerate(enum_n, f.out, std::cout);
    std::cerr << count << " graphs\n";
  } else if (*predict) {
    cmd_predict(to_config(f, model_tags()));
  } else if (*compare) {
    const auto m = cmd_compare(to_config(f, default_comparison_models()));
    print_matrix(m);
  } else if (*spectral) {
    const auto report = cmd_spectral(to_config(f, {}));
    std::cerr << report.graphs.size() << " graphs\n";
  } else if (*stimuli) {
    stim.ordering = parse_pair_ordering(ordering);
    const auto report = cmd_stimuli(to_config(f, {}), stim);
    std::cerr << report.eligible.size() << " eligible graphs\n";
  } else if (*demo) {
    grid.algorithms.clear();
    for (const auto& name : split(algs)) grid.algorithms.push_back(parse_algorithm(name));
    const auto report = cmd_grid_demo(grid);
    if (grid.out.empty()) write_grid_demo(std::cout, report);
  } else if (*two_stage) {
    if (!grid_spec.empty()) {
      const auto x = grid_spec.find('x');
      if (x == std::string::npos) throw UsageError("--grid expects WxH");
      two.graph = grid_graph(std::stoi(grid_spec.substr(0, x)), std::stoi(grid_spec.substr(x + 1)));
    } else {
      const auto corpus = load_corpus(f.corpus);
      if (corpus.empty()) throw DataError("corpus is empty");
      two.graph = corpus.front();
    }
    parse_models(two.truth_model);
    cmd_two_stage(to_config(f, {"RRTD-RW", "RRTD-BFS", "RRTD-IDDFS", "Degree", "Betweenness", "QCut"}), two);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }
}
