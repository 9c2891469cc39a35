#pragma once

#include "rrtd/graph.hpp"
#include "rrtd/linalg.hpp"
#include "rrtd/partition.hpp"
#include "rrtd/prediction.hpp"

namespace rrtd {

/// Eigenpairs of N = D^{-1/2} A D^{-1/2}, eigenvalues descending (so
/// eigenvalue k of the normalized Laplacian I - N is 1 - lambda_k).
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  /// Column k holds the unit eigenvector for eigenvalues[k].
  Matrix eigenvectors;
  std::vector<int> degrees;
  int edge_count = 0;

  /// lambda_2 is repeated, so v_2 is one arbitrary vector of its eigenspace.
  bool lambda2_degenerate() const;
  double vector_entry(int k, Node s) const { return eigenvectors(static_cast<std::size_t>(s), static_cast<std::size_t>(k)); }
};

/// Multiplicity test tolerance for lambda_2.
inline constexpr double kDegeneracyTol = 1e-9;

Matrix normalized_adjacency(const Graph& g);
/// I - D^{-1/2} A D^{-1/2}.
Matrix normalized_laplacian(const Graph& g);

/// Throws DomainError for disconnected graphs (an isolated node included).
SpectralDecomposition spectral_decomposition(const Graph& g);

/// -v_2(s)^2 from the second eigenvector. Flags degenerate lambda_2.
PredictionVector qcut_predictions(const Graph& g);
PredictionVector qcut_predictions(const Graph& g, const SpectralDecomposition& sd);

/// Sign split of v_2 at 0; entries within 1e-9 of zero join the nonnegative side,
/// which is region 0.
struct QcutSplit {
  Partition partition;
  bool degenerate = false;
};
QcutSplit qcut_partition(const Graph& g);

/// H(s,z) + H(z,s) from the spectrum.
double spectral_commute(const SpectralDecomposition& sd, Node s, Node z);
double spectral_commute(const Graph& g, Node s, Node z);

/// Rank-k' approximation of the all-pairs random-walk decomposition value of
/// each single subgoal, using eigenpairs 2..k_max. k_max = n is exact.
PredictionVector rrtd_rw_rank(const Graph& g, int k_max);
PredictionVector rrtd_rw_rank(const Graph& g, const SpectralDecomposition& sd, int k_max);

/// 1 - lambda_2, in (0, 2] for connected graphs.
double spectral_gap(const Graph& g);

}  // namespace rrtd
