#pragma once

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace rrtd {

using Node = int;

/// Largest graph the library represents. graph6 interchange is limited further
/// (see kMaxGraph6Nodes); larger graphs exist for grid demonstrations.
inline constexpr int kMaxNodes = 128;

using Edge = std::pair<Node, Node>;

/// Immutable simple undirected graph on nodes 0..n-1.
///
/// Adjacency is stored both as a symmetric bit matrix (for O(1) tests and
/// cheap hashing/encoding) and as sorted neighbor lists (for search).
class Graph {
 public:
  using Row = std::bitset<kMaxNodes>;

  /// Edgeless graph on n nodes.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);
  /// Builds from adjacency rows; rows must be symmetric with empty diagonal.
  static Graph from_rows(std::vector<Row> rows);

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  int edge_count() const noexcept { return edge_count_; }

  bool adjacent(Node u, Node v) const { return rows_[u].test(static_cast<std::size_t>(v)); }
  const Row& row(Node u) const { return rows_[u]; }
  const std::vector<Node>& neighbors(Node u) const { return neighbors_[u]; }
  int degree(Node u) const { return static_cast<int>(neighbors_[u].size()); }
  std::vector<int> degrees() const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool connected() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  Graph() = default;
  void finalize();

  std::vector<Row> rows_;
  std::vector<std::vector<Node>> neighbors_;
  int edge_count_ = 0;
};

struct Task {
  Node start = 0;
  Node goal = 0;
  friend bool operator==(const Task&, const Task&) = default;
  friend auto operator<=>(const Task&, const Task&) = default;
};

/// Ordered node sequence; consecutive nodes are adjacent in the owning graph.
using Path = std::vector<Node>;

/// Marker for an unreachable node in distance vectors.
inline constexpr int kUnreachable = -1;

/// Breadth-first distances (edge counts) from s; kUnreachable where no path exists.
std::vector<int> distances_from(const Graph& g, Node s);

/// All-pairs distance matrix, row-major n*n.
std::vector<int> distance_matrix(const Graph& g);

/// Length in edges of a shortest s-t path. Throws Unreachable.
int shortest_distance(const Graph& g, Node s, Node t);

/// Every minimum-length s-t path exactly once, in lexicographic order.
/// Throws Unreachable.
std::vector<Path> all_shortest_paths(const Graph& g, Node s, Node t);

/// Number of shortest s-t paths without materializing them.
std::uint64_t count_shortest_paths(const Graph& g, Node s, Node t);

/// True iff every consecutive pair in p is an edge of g.
bool is_walk(const Graph& g, const Path& p);
/// True iff p is a walk with no repeated node.
bool is_simple_path(const Graph& g, const Path& p);

/// 4-neighborhood lattice, nodes indexed row-major (node = y * width + x).
Graph grid_graph(int width, int height);

// Named graphs used throughout tests and demos.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Star with center 0 and leaves 1..n-1.
Graph star_graph(int n);

/// Relabels g so node v becomes perm[v].
Graph permuted(const Graph& g, std::span<const int> perm);

}  // namespace rrtd

namespace rrtd {

/// Stable 64-bit hash of the labeled graph (order and adjacency bits). Used to
/// key caches and derive per-graph seeds independently of corpus position.
std::uint64_t content_hash(const Graph& g);

}  // namespace rrtd
