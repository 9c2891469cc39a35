#include "rrtd/spectral.hpp"

#include <cmath>
#include <string>

#include "rrtd/error.hpp"
#include "rrtd/graph6.hpp"

namespace rrtd {

bool SpectralDecomposition::lambda2_degenerate() const {
  return eigenvalues.size() > 2 && std::abs(eigenvalues[1] - eigenvalues[2]) <= kDegeneracyTol;
}

Matrix normalized_adjacency(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  Matrix m(n, n);
  for (auto [u, v] : g.edges()) {
    const double w = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
    m(u, v) = w;
    m(v, u) = w;
  }
  return m;
}

Matrix normalized_laplacian(const Graph& g) {
  Matrix m = normalized_adjacency(g);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = (i == j ? 1.0 : 0.0) - m(i, j);
  }
  return m;
}

SpectralDecomposition spectral_decomposition(const Graph& g) {
  if (g.size() < 2 || !g.connected()) throw DomainError("spectral analysis needs a connected graph with n >= 2");
  auto eig = eig_sym(normalized_adjacency(g));
  return {std::move(eig.values), std::move(eig.vectors), g.degrees(), g.edge_count()};
}

PredictionVector qcut_predictions(const Graph& g, const SpectralDecomposition& sd) {
  PredictionVector out;
  out.graph_id = graph_label(g);
  out.model = "QCut";
  out.degenerate = sd.lambda2_degenerate();
  for (Node s = 0; s < g.size(); ++s) {
    const double v = sd.vector_entry(1, s);
    out.values.push_back(-v * v);
  }
  return out;
}

PredictionVector qcut_predictions(const Graph& g) { return qcut_predictions(g, spectral_decomposition(g)); }

QcutSplit qcut_partition(const Graph& g) {
  const auto sd = spectral_decomposition(g);
  std::vector<int> side(static_cast<std::size_t>(g.size()));
  // The eigensolver makes the first non-negligible entry positive, so node 0
  // is always on the nonnegative side and that side becomes region 0.
  for (Node s = 0; s < g.size(); ++s) side[s] = sd.vector_entry(1, s) >= -1e-9 ? 0 : 1;
  return {Partition(std::move(side)), sd.lambda2_degenerate()};
}

double spectral_commute(const SpectralDecomposition& sd, Node s, Node z) {
  const int n = static_cast<int>(sd.eigenvalues.size());
  if (s < 0 || z < 0 || s >= n || z >= n) throw DomainError("node outside graph");
  if (s == z) return 0.0;
  const double rs = 1.0 / std::sqrt(static_cast<double>(sd.degrees[s]));
  const double rz = 1.0 / std::sqrt(static_cast<double>(sd.degrees[z]));
  double total = 0.0;
  for (int k = 1; k < n; ++k) {
    const double diff = sd.vector_entry(k, z) * rz - sd.vector_entry(k, s) * rs;
    total += diff * diff / (1.0 - sd.eigenvalues[k]);
  }
  return 2.0 * sd.edge_count * total;
}

double spectral_commute(const Graph& g, Node s, Node z) { return spectral_commute(spectral_decomposition(g), s, z); }

PredictionVector rrtd_rw_rank(const Graph& g, const SpectralDecomposition& sd, int k_max) {
  const int n = g.size();
  if (k_max < 2 || k_max > n) {
    throw DomainError("rank must lie in 2.." + std::to_string(n) + ", got " + std::to_string(k_max));
  }
  std::vector<double> inv_sqrt_deg(static_cast<std::size_t>(n));
  for (Node s = 0; s < n; ++s) inv_sqrt_deg[s] = 1.0 / std::sqrt(static_cast<double>(sd.degrees[s]));
  PredictionVector out;
  out.graph_id = graph_label(g);
  out.model = "RRTD-RW-rank" + std::to_string(k_max);
  out.values.assign(static_cast<std::size_t>(n), 0.0);
  for (Node z = 0; z < n; ++z) {
    double total = 0.0;
    for (int k = 1; k < k_max; ++k) {
      const double weight = 1.0 / (1.0 - sd.eigenvalues[k]);
      const double vz = sd.vector_entry(k, z) * inv_sqrt_deg[z];
      double inner = 0.0;
      for (Node s = 0; s < n; ++s) {
        const double diff = vz - sd.vector_entry(k, s) * inv_sqrt_deg[s];
        inner += diff * diff;
      }
      total += weight * inner;
    }
    out.values[z] = -2.0 * sd.edge_count / n * total;
  }
  return out;
}

PredictionVector rrtd_rw_rank(const Graph& g, int k_max) { return rrtd_rw_rank(g, spectral_decomposition(g), k_max); }

double spectral_gap(const Graph& g) { return 1.0 - spectral_decomposition(g).eigenvalues[1]; }

}  // namespace rrtd
