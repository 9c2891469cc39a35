#include "rrtd/stimuli.hpp"

#include <algorithm>
#include <string>

#include "rrtd/error.hpp"

namespace rrtd {

namespace {

std::vector<Task> adjacent_tasks(const Graph& g) {
  std::vector<Task> out;
  for (Node s = 0; s < g.size(); ++s) {
    for (Node t : g.neighbors(s)) out.push_back({s, t});
  }
  return out;
}

std::vector<Task> long_tasks(const Graph& g) {
  const auto dist = distance_matrix(g);
  const int n = g.size();
  std::vector<Task> out;
  for (Node s = 0; s < n; ++s) {
    for (Node t = 0; t < n; ++t) {
      if (dist[s * n + t] >= 2) out.push_back({s, t});
    }
  }
  return out;
}

Path navigate(const Graph& g, const Task& task, const NavigatorPolicy& policy, Rng& rng) {
  Path path{task.start};
  const int cap = 100 * g.size();
  for (Node at = task.start; at != task.goal;) {
    if (static_cast<int>(path.size()) > cap) throw DomainError("navigator did not reach the goal");
    const Node next = policy(g, at, task.goal, rng);
    if (next < 0 || next >= g.size() || !g.adjacent(at, next)) throw DomainError("navigator left the graph's edges");
    path.push_back(next);
    at = next;
  }
  return path;
}

}  // namespace

std::string_view to_string(PairOrdering ordering) {
  return ordering == PairOrdering::kOrdered ? "ordered" : "unordered";
}

PairOrdering parse_pair_ordering(std::string_view name) {
  if (name == "ordered") return PairOrdering::kOrdered;
  if (name == "unordered") return PairOrdering::kUnordered;
  throw UsageError("unknown pair ordering '" + std::string(name) + "'");
}

std::vector<Task> probe_tasks(const Graph& g, PairOrdering ordering, int min_distance) {
  if (!g.connected()) throw DomainError("graph is not connected");
  const auto dist = distance_matrix(g);
  const int n = g.size();
  std::vector<Task> out;
  for (Node s = 0; s < n; ++s) {
    for (Node t = ordering == PairOrdering::kOrdered ? 0 : s + 1; t < n; ++t) {
      if (s != t && dist[s * n + t] >= min_distance) out.push_back({s, t});
    }
  }
  return out;
}

bool eligible_for_experiment(const Graph& g, PairOrdering ordering) {
  return static_cast<int>(probe_tasks(g, ordering).size()) >= kMinProbeTasks;
}

std::vector<Task> draw_probe_tasks(const Graph& g, int k, Rng& rng, PairOrdering ordering) {
  auto tasks = probe_tasks(g, ordering);
  if (k < 0 || static_cast<std::size_t>(k) > tasks.size()) {
    throw DomainError("graph is ineligible: " + std::to_string(tasks.size()) + " probe tasks, " + std::to_string(k) +
                      " requested");
  }
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    const auto j = i + static_cast<std::size_t>(uniform_index(rng, tasks.size() - i));
    std::swap(tasks[i], tasks[j]);
  }
  tasks.resize(static_cast<std::size_t>(k));
  return tasks;
}

FillerCandidates filler_candidates(const Graph& g, const VisitCounts& counts) {
  if (static_cast<int>(counts.size()) != g.size()) throw DomainError("visit counts differ from graph size");
  auto all = adjacent_tasks(g);
  if (all.empty()) throw DomainError("graph has no edges");
  const auto top = *std::max_element(counts.begin(), counts.end());
  std::vector<Task> kept;
  for (const auto& t : all) {
    if (counts[t.start] != top && counts[t.goal] != top) kept.push_back(t);
  }
  FillerCandidates out;
  out.skipped_exclusion = kept.empty();
  const auto& pool = kept.empty() ? all : kept;
  std::uint64_t best = 0;
  for (const auto& t : pool) best = std::max(best, counts[t.start] + counts[t.goal]);
  for (const auto& t : pool) {
    if (counts[t.start] + counts[t.goal] == best) out.tasks.push_back(t);
  }
  return out;
}

Task adaptive_filler(const Graph& g, const VisitCounts& counts, Rng& rng) {
  const auto cands = filler_candidates(g, counts);
  return cands.tasks[uniform_index(rng, cands.tasks.size())];
}

Task uniform_filler(const Graph& g, Rng& rng) {
  const auto all = adjacent_tasks(g);
  if (all.empty()) throw DomainError("graph has no edges");
  return all[uniform_index(rng, all.size())];
}

int most_visited_count(const VisitCounts& counts) {
  if (counts.empty()) return 0;
  const auto top = *std::max_element(counts.begin(), counts.end());
  return static_cast<int>(std::count(counts.begin(), counts.end(), top));
}

Node optimal_step(const Graph& g, Node state, Node goal, Rng& rng) {
  const auto dist = distances_from(g, goal);
  if (dist[state] == kUnreachable) throw Unreachable("goal unreachable from state " + std::to_string(state));
  std::vector<Node> closer;
  for (Node w : g.neighbors(state)) {
    if (dist[w] == dist[state] - 1) closer.push_back(w);
  }
  return closer[uniform_index(rng, closer.size())];
}

Session simulate_session(const Graph& g, std::uint64_t seed, const SessionOptions& options) {
  if (options.long_trials < 0 || options.filler_trials < 0) throw DomainError("trial counts must be nonnegative");
  const auto longs = long_tasks(g);
  if (longs.empty() && options.long_trials > 0) throw DomainError("graph has no tasks needing more than one action");
  Rng long_rng(derive_seed({seed, 1}));
  Rng nav_rng(derive_seed({seed, 2}));
  Rng filler_rng(derive_seed({seed, 3}));

  Session session{VisitCounts(static_cast<std::size_t>(g.size()), 0), {}};
  auto run = [&](TrialKind kind, const Task& task) {
    ScheduledTrial trial{kind, task, navigate(g, task, options.navigator, nav_rng)};
    for (Node v : trial.path) ++session.counts[v];
    session.schedule.push_back(std::move(trial));
  };
  int done_long = 0, done_filler = 0;
  while (done_long < options.long_trials || done_filler < options.filler_trials) {
    if (done_long < options.long_trials) {
      run(TrialKind::kLong, longs[uniform_index(long_rng, longs.size())]);
      ++done_long;
    }
    if (done_filler < options.filler_trials) {
      const Task t = options.filler == FillerRule::kAdaptive ? adaptive_filler(g, session.counts, filler_rng)
                                                             : uniform_filler(g, filler_rng);
      run(TrialKind::kFiller, t);
      ++done_filler;
    }
  }
  return session;
}

}  // namespace rrtd
