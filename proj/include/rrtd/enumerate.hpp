#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rrtd/graph.hpp"

namespace rrtd {

/// Canonical labeling is implemented for graphs up to this order (the
/// upper-triangle code must fit in 64 bits).
inline constexpr int kMaxCanonicalNodes = 11;
inline constexpr int kMinEnumerateNodes = 2;
inline constexpr int kMaxEnumerateNodes = 8;

/// Upper-triangle adjacency bits in graph6 column order, first pair most
/// significant. Identifies a labeled graph of known order.
std::uint64_t adjacency_code(const Graph& g);
Graph graph_from_code(int n, std::uint64_t code);

/// Largest adjacency_code over the leaves of an individualization-refinement
/// search tree. The tree is built from isomorphism-invariant choices only, so
/// two graphs share a code iff they are isomorphic.
std::uint64_t canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Canonical relabeling of g with two distinguished nodes, which land on
/// positions 0 (start) and 1 (target). Pairs related by an automorphism, or by
/// an isomorphism between two graphs, produce the same result.
struct RootedCanonical {
  Graph graph;
  std::uint64_t code = 0;
};
RootedCanonical canonical_rooted(const Graph& g, Node start, Node target);

/// One representative per isomorphism class of connected graphs on n nodes,
/// in canonical labeling, ordered by ascending canonical code.
/// Throws UnsupportedSize outside 2..8.
std::vector<Graph> enumerate_connected(int n);
void enumerate_connected(int n, const std::function<void(const Graph&)>& visit);

}  // namespace rrtd
