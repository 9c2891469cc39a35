#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "rrtd/enumerate.hpp"
#include "rrtd/error.hpp"
#include "rrtd/rrtd.hpp"

using namespace rrtd;

namespace {

const TaskDistribution kAll{TaskDistributionKind::kAllPairs};
const TaskDistribution kDistinct{TaskDistributionKind::kDistinctPairs};

// Best value over every ordered sequence of distinct subgoals (excluding the
// current state) followed by the goal.
double best_sequence_value(const AlgCostTable& t, const SubgoalSet& z, Node s, Node g) {
  if (s == g) return 0.0;
  double best = t(s, g);
  std::vector<Node> pool;
  for (Node x : z) {
    if (x != s && x != g) pool.push_back(x);
  }
  const auto k = pool.size();
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    std::vector<Node> chosen;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1u) chosen.push_back(pool[i]);
    }
    std::sort(chosen.begin(), chosen.end());
    do {
      double v = 0;
      Node at = s;
      for (Node x : chosen) {
        v += t(at, x);
        at = x;
      }
      v += t(at, g);
      best = std::max(best, v);
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
  return best;
}

bool is_uniform(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo <= 1e-9 * std::max(1.0, std::abs(*hi));
}

}  // namespace

TEST_CASE("task distribution supports") {
  const Graph p3 = path_graph(3);
  CHECK(kAll.support(p3).size() == 9);
  CHECK(kDistinct.support(p3).size() == 6);
  const auto nonadj = TaskDistribution{TaskDistributionKind::kNonadjacentPairs}.support(p3);
  CHECK(nonadj == std::vector<Task>{{0, 2}, {2, 0}});
  CHECK(parse_distribution("nonadjacent") == TaskDistributionKind::kNonadjacentPairs);
  CHECK_THROWS_AS(parse_distribution("uniform"), UsageError);
  CHECK_THROWS_AS(decomposition_value(complete_graph(3), Algorithm::kBfs, {}, TaskDistribution{TaskDistributionKind::kNonadjacentPairs}, 10, 1),
                  DomainError);
}

TEST_CASE("subtask values: reference cases") {
  const Graph p3 = path_graph(3);
  const auto bfs = alg_cost_table(p3, Algorithm::kBfs, 400, 1);
  const auto direct = subtask_values(bfs, {}, 2);
  for (Node s = 0; s < 2; ++s) CHECK(direct.values[s] == bfs(s, 2));
  CHECK(direct.values[2] == 0.0);

  const auto rw = alg_cost_table(p3, Algorithm::kRandomWalk, 0, 0);
  CHECK(subtask_values(rw, {1}, 2).values[0] == doctest::Approx(-4.0));

  // The direct BFS run costs exactly 6; the detour through node 1 costs 4 + 4.5.
  const auto via = subtask_values(bfs, {1}, 2);
  CHECK(via.values[0] == doctest::Approx(-6.0));
  CHECK(via.next_hop[0] == 2);

  CHECK_THROWS_AS(subtask_values(rw, {}, 2), DomainError);
  CHECK_THROWS_AS(subtask_values(bfs, {1}, 3), DomainError);
  CHECK_THROWS_AS(subtask_values(bfs, {1, 1}, 2), DomainError);
}

TEST_CASE("subtask values equal exhaustive subgoal-sequence search") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      for (Algorithm alg : {Algorithm::kBfs, Algorithm::kDfs, Algorithm::kIddfs}) {
        const auto table = alg_cost_table(g, alg, 8, 99);
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
          SubgoalSet z;
          for (int i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) z.push_back(i);
          }
          for (Node goal = 0; goal < n; ++goal) {
            const auto values = subtask_values(table, z, goal);
            for (Node s = 0; s < n; ++s) {
              CHECK(values.values[s] == doctest::Approx(best_sequence_value(table, z, s, goal)).epsilon(1e-12));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("adding a subgoal never lowers non-RW values") {
  for (const auto& g : enumerate_connected(5)) {
    const auto table = alg_cost_table(g, Algorithm::kIddfs, 10, 5);
    for (Node goal = 0; goal < 5; ++goal) {
      const auto base = subtask_values(table, {1, 3}, goal);
      for (Node u : {0, 2, 4}) {
        SubgoalSet z{1, 3, u};
        std::sort(z.begin(), z.end());
        const auto more = subtask_values(table, z, goal);
        for (Node s = 0; s < 5; ++s) CHECK(more.values[s] >= base.values[s]);
      }
    }
  }
}

TEST_CASE("decomposition values on P3") {
  const Graph p3 = path_graph(3);
  CHECK(decomposition_value(p3, Algorithm::kRandomWalk, {1}, kAll, 0, 0) == doctest::Approx(-8.0 / 3.0));
  CHECK(decomposition_value(p3, Algorithm::kRandomWalk, {0}, kAll, 0, 0) == doctest::Approx(-4.0));

  const auto bfs = alg_cost_table(p3, Algorithm::kBfs, 100, 3);
  double mean_direct = 0;
  for (const auto& t : kDistinct.support(p3)) mean_direct += bfs(t.start, t.goal);
  mean_direct /= 6;
  CHECK(decomposition_value(p3, bfs, {}, kDistinct) == doctest::Approx(mean_direct));
}

TEST_CASE("rrtd predictions") {
  const auto p3 = rrtd_predictions(path_graph(3), Algorithm::kRandomWalk, kAll, 0, 0);
  CHECK(p3.model == "RRTD-RW");
  CHECK(p3.graph_id == "Bg");
  REQUIRE(p3.values.size() == 3);
  CHECK(p3.values[0] == doctest::Approx(-4.0));
  CHECK(p3.values[1] == doctest::Approx(-8.0 / 3.0));
  CHECK(p3.values[2] == doctest::Approx(-4.0));
  // The distinct-pair distribution happens to give the same vector on P3.
  const auto p3d = rrtd_predictions(path_graph(3), Algorithm::kRandomWalk, kDistinct, 0, 0);
  CHECK(p3d.values[1] == doctest::Approx(-8.0 / 3.0));

  CHECK(is_uniform(rrtd_predictions(complete_graph(3), Algorithm::kRandomWalk, kAll, 0, 0).values));
  for (Algorithm alg : kAllAlgorithms) {
    CHECK(is_uniform(rrtd_predictions(cycle_graph(4), alg, kDistinct, 200, 11).values));
    CHECK(is_uniform(rrtd_predictions(cycle_graph(8), alg, kDistinct, 50, 11).values));
    CHECK(is_uniform(rrtd_predictions(complete_graph(6), alg, kDistinct, 50, 11).values));
  }
}

TEST_CASE("sampled predictions are equivariant under relabeling") {
  const auto graphs = enumerate_connected(6);
  for (std::size_t i = 0; i < graphs.size(); i += 7) {
    const Graph& g = graphs[i];
    const std::vector<int> perm{3, 5, 0, 1, 4, 2};
    const Graph h = permuted(g, perm);
    const auto a = rrtd_predictions(g, Algorithm::kIddfs, kDistinct, 20, 4);
    const auto b = rrtd_predictions(h, Algorithm::kIddfs, kDistinct, 20, 4);
    for (int v = 0; v < 6; ++v) CHECK(b.values[perm[v]] == doctest::Approx(a.values[v]).epsilon(1e-12));
  }
}

TEST_CASE("random-walk detours never beat the direct walk") {
  for (const auto& g : enumerate_connected(6)) {
    const auto table = alg_cost_table(g, Algorithm::kRandomWalk, 0, 0);
    double mean_direct = 0;
    const auto tasks = kDistinct.support(g);
    for (const auto& t : tasks) mean_direct += table(t.start, t.goal);
    mean_direct /= static_cast<double>(tasks.size());
    const auto preds = rrtd_predictions(g, table, kDistinct);
    for (Node z = 0; z < g.size(); ++z) CHECK(preds.values[z] <= mean_direct + 1e-9);
  }
  // The center of P3 lies on every walk between distinct states.
  const Graph p3 = path_graph(3);
  const auto t = alg_cost_table(p3, Algorithm::kRandomWalk, 0, 0);
  double mean_direct = 0;
  for (const auto& task : kDistinct.support(p3)) mean_direct += t(task.start, task.goal);
  CHECK(rrtd_predictions(p3, t, kDistinct).values[1] == doctest::Approx(mean_direct / 6));
}

TEST_CASE("direct goal value") {
  const Graph p3 = path_graph(3);
  CHECK(direct_goal_value(p3, Algorithm::kBfs, {0, 2}, 50, 1) == doctest::Approx(-6.0));
  CHECK(direct_goal_value(complete_graph(2), Algorithm::kRandomWalk, {0, 1}, 1, 1) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(direct_goal_value(p3, Algorithm::kBfs, {1, 1}, 50, 1), DomainError);
  const Graph g = cycle_graph(6);
  for (Algorithm alg : {Algorithm::kBfs, Algorithm::kDfs, Algorithm::kIddfs}) {
    const auto table = alg_cost_table(g, alg, 30, 8);
    const auto v = subtask_values(table, {}, 3);
    CHECK(direct_goal_value(g, alg, {0, 3}, 30, 8) == v.values[0]);
  }
}

TEST_CASE("midpoint subgoal on an open grid helps BFS and IDDFS but not RW") {
  // Corners joined along the bottom edge of a 7x7 grid.
  const Graph grid = grid_graph(7, 7);
  const Node start = 0, goal = 6, mid = 3;
  for (Algorithm alg : {Algorithm::kBfs, Algorithm::kIddfs}) {
    const double without = -direct_goal_value(grid, alg, {start, goal}, 500, 2);
    const double with = -(direct_goal_value(grid, alg, {start, mid}, 500, 2) +
                          direct_goal_value(grid, alg, {mid, goal}, 500, 2));
    CAPTURE(to_string(alg));
    CHECK(with < without);
  }
  const auto h = hitting_times(grid);
  CHECK(h(start, mid) + h(mid, goal) > h(start, goal));
}
