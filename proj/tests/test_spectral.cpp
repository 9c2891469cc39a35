#include <algorithm>
#include <cmath>
#include <limits>

#include "doctest.h"
#include "rrtd/enumerate.hpp"
#include "rrtd/error.hpp"
#include "rrtd/rrtd.hpp"
#include "rrtd/spectral.hpp"

using namespace rrtd;

namespace {

Graph two_triangles() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}); }

double ncut(const Graph& g, const std::vector<int>& side) {
  double cut = 0, vol0 = 0, vol1 = 0;
  for (auto [u, v] : g.edges()) cut += side[u] != side[v];
  for (Node v = 0; v < g.size(); ++v) (side[v] ? vol1 : vol0) += g.degree(v);
  return cut / vol0 + cut / vol1;
}

bool is_regular(const Graph& g) {
  for (Node v = 1; v < g.size(); ++v) {
    if (g.degree(v) != g.degree(0)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("normalized operators") {
  const auto lsym = normalized_laplacian(complete_graph(2));
  CHECK(lsym(0, 0) == doctest::Approx(1.0));
  CHECK(lsym(0, 1) == doctest::Approx(-1.0));
  const auto eig = eig_sym(lsym);
  CHECK(eig.values[0] == doctest::Approx(2.0));
  CHECK(eig.values[1] == doctest::Approx(0.0));
  const auto p3 = spectral_decomposition(path_graph(3));
  CHECK(p3.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(p3.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p3.eigenvalues[2] == doctest::Approx(-1.0));
  CHECK_THROWS_AS(spectral_decomposition(Graph(3, {{0, 1}})), DomainError);
}

TEST_CASE("spectral decomposition invariants over all 6-node graphs") {
  for (const auto& g : enumerate_connected(6)) {
    const auto sd = spectral_decomposition(g);
    const int n = g.size();
    CHECK(sd.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sd.eigenvalues[n - 1] >= -1 - 1e-12);
    double two_m = 2.0 * g.edge_count();
    for (Node s = 0; s < n; ++s) {
      CHECK(sd.vector_entry(0, s) == doctest::Approx(std::sqrt(g.degree(s) / two_m)).epsilon(1e-10));
    }
    const auto nmat = normalized_adjacency(g);
    double recon = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double r = 0;
        for (int k = 0; k < n; ++k) r += sd.eigenvalues[k] * sd.vector_entry(k, i) * sd.vector_entry(k, j);
        recon = std::max(recon, std::abs(r - nmat(i, j)));
      }
    }
    CHECK(recon <= 1e-8);
    for (int k = 1; k < n; ++k) {
      double dot = 0, plain = 0;
      for (Node s = 0; s < n; ++s) {
        dot += sd.vector_entry(k, s) * std::sqrt(static_cast<double>(g.degree(s)));
        plain += sd.vector_entry(k, s);
      }
      CHECK(std::abs(dot) <= 1e-9);
      if (is_regular(g)) CHECK(std::abs(plain) <= 1e-9);
    }
  }
}

TEST_CASE("qcut predictions") {
  const auto p3 = qcut_predictions(path_graph(3));
  CHECK(p3.model == "QCut");
  CHECK(p3.values[0] == doctest::Approx(-0.5));
  CHECK(p3.values[1] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(p3.values[2] == doctest::Approx(-0.5));
  CHECK_FALSE(p3.degenerate);
  const auto k2 = qcut_predictions(complete_graph(2));
  CHECK(k2.values[0] == doctest::Approx(-0.5));
  CHECK(k2.values[1] == doctest::Approx(-0.5));
  CHECK(qcut_predictions(cycle_graph(4)).degenerate);
}

TEST_CASE("qcut partition") {
  const auto p3 = qcut_partition(path_graph(3));
  CHECK(p3.partition.labels() == std::vector<int>{0, 0, 1});
  CHECK(qcut_partition(complete_graph(2)).partition.labels() == std::vector<int>{0, 1});

  const Graph g = two_triangles();
  const auto split = qcut_partition(g);
  CHECK(split.partition.labels() == std::vector<int>{0, 0, 0, 1, 1, 1});
  // Brute-force normalized cut agrees.
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_side;
  for (int mask = 1; mask < (1 << 6) - 1; ++mask) {
    std::vector<int> side(6);
    for (int v = 0; v < 6; ++v) side[v] = (mask >> v) & 1;
    const double c = ncut(g, side);
    if (c < best - 1e-12) {
      best = c;
      best_side = side;
    }
  }
  CHECK(Partition(best_side) == split.partition);
}

TEST_CASE("spectral commute times match hitting times") {
  const Graph p3 = path_graph(3);
  CHECK(spectral_commute(p3, 0, 1) == doctest::Approx(4.0));
  CHECK(spectral_commute(p3, 0, 2) == doctest::Approx(8.0));
  CHECK(spectral_commute(p3, 1, 1) == 0.0);
  for (const auto& g : enumerate_connected(5)) {
    const auto sd = spectral_decomposition(g);
    const auto h = hitting_times(g);
    for (Node s = 0; s < g.size(); ++s) {
      for (Node z = 0; z < g.size(); ++z) CHECK(std::abs(spectral_commute(sd, s, z) - h(s, z) - h(z, s)) <= 1e-8);
    }
  }
}

TEST_CASE("full-rank spectral value equals the all-pairs random-walk prediction") {
  const auto p3 = rrtd_rw_rank(path_graph(3), 3);
  CHECK(p3.values[0] == doctest::Approx(-4.0));
  CHECK(p3.values[1] == doctest::Approx(-8.0 / 3.0));
  CHECK(p3.values[2] == doctest::Approx(-4.0));
  // lambda_2 = 0 for P3 with v_2 = (1, 0, -1)/sqrt(2), so the single term is
  // -(2m/n) sum_s (v_z/sqrt(d_z) - v_s/sqrt(d_s))^2.
  const double a = 1 / std::sqrt(2.0);
  const double end = (a - 0) * (a - 0) + (a + a) * (a + a);
  const double mid = a * a + a * a;
  const auto rank2 = rrtd_rw_rank(path_graph(3), 2);
  CHECK(rank2.values[0] == doctest::Approx(-4.0 / 3.0 * end));
  CHECK(rank2.values[1] == doctest::Approx(-4.0 / 3.0 * mid));
  CHECK_THROWS_AS(rrtd_rw_rank(path_graph(3), 1), DomainError);
  CHECK_THROWS_AS(rrtd_rw_rank(path_graph(3), 4), DomainError);

  const TaskDistribution all{TaskDistributionKind::kAllPairs};
  for (const auto& g : enumerate_connected(5)) {
    const auto exact = rrtd_predictions(g, Algorithm::kRandomWalk, all, 0, 0);
    const auto spectral = rrtd_rw_rank(g, g.size());
    for (Node z = 0; z < g.size(); ++z) CHECK(std::abs(exact.values[z] - spectral.values[z]) <= 1e-8);
  }
}

TEST_CASE("rank-2 value and QCut pick the same subgoals on regular graphs") {
  int checked = 0;
  for (int n = 4; n <= 8; ++n) {
    for (const auto& g : enumerate_connected(n)) {
      if (!is_regular(g)) continue;
      const auto sd = spectral_decomposition(g);
      if (sd.lambda2_degenerate()) continue;
      const auto rank2 = rrtd_rw_rank(g, sd, 2);
      const auto qcut = qcut_predictions(g, sd);
      const auto a = std::max_element(rank2.values.begin(), rank2.values.end()) - rank2.values.begin();
      const double qbest = *std::max_element(qcut.values.begin(), qcut.values.end());
      CHECK(qcut.values[a] == doctest::Approx(qbest).epsilon(1e-9));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("spectral gap") {
  CHECK(spectral_gap(complete_graph(3)) == doctest::Approx(1.5));
  CHECK(spectral_gap(path_graph(3)) == doctest::Approx(1.0));
  CHECK(spectral_gap(complete_graph(2)) == doctest::Approx(2.0));
  for (const auto& g : enumerate_connected(6)) {
    const double gap = spectral_gap(g);
    CHECK(gap > 0);
    CHECK(gap <= 2 + 1e-12);
  }
}
