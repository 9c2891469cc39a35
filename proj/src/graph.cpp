#include "rrtd/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "rrtd/error.hpp"

namespace rrtd {

namespace {

void check_size(int n) {
  if (n < 1 || n > kMaxNodes) {
    throw UnsupportedSize("graph size " + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxNodes));
  }
}

}  // namespace

Graph::Graph(int n) {
  check_size(n);
  rows_.assign(static_cast<std::size_t>(n), Row{});
  finalize();
}

Graph::Graph(int n, std::span<const Edge> edges) {
  check_size(n);
  rows_.assign(static_cast<std::size_t>(n), Row{});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") references a node outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw DomainError("self-loop on node " + std::to_string(u));
    rows_[u].set(static_cast<std::size_t>(v));
    rows_[v].set(static_cast<std::size_t>(u));
  }
  finalize();
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_rows(std::vector<Row> rows) {
  const int n = static_cast<int>(rows.size());
  check_size(n);
  for (int u = 0; u < n; ++u) {
    if (rows[u].test(static_cast<std::size_t>(u))) {
      throw DomainError("self-loop on node " + std::to_string(u));
    }
    for (int v = n; v < kMaxNodes; ++v) {
      if (rows[u].test(static_cast<std::size_t>(v))) throw DomainError("adjacency row out of range");
    }
    for (int v = 0; v < n; ++v) {
      if (rows[u].test(static_cast<std::size_t>(v)) != rows[v].test(static_cast<std::size_t>(u))) {
        throw DomainError("adjacency is not symmetric");
      }
    }
  }
  Graph g;
  g.rows_ = std::move(rows);
  g.finalize();
  return g;
}

void Graph::finalize() {
  const int n = size();
  neighbors_.assign(static_cast<std::size_t>(n), {});
  std::size_t twice_m = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (rows_[u].test(static_cast<std::size_t>(v))) neighbors_[u].push_back(v);
    }
    twice_m += neighbors_[u].size();
  }
  edge_count_ = static_cast<int>(twice_m / 2);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(size()));
  for (int u = 0; u < size(); ++u) d[u] = degree(u);
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < size(); ++u) {
    for (Node v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::connected() const {
  const auto d = distances_from(*this, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == kUnreachable; });
}

std::vector<int> distances_from(const Graph& g, Node s) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), kUnreachable);
  std::deque<Node> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop_front();
    for (Node v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::vector<int> distance_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<int> out(n * n);
  for (std::size_t s = 0; s < n; ++s) {
    const auto d = distances_from(g, static_cast<Node>(s));
    std::copy(d.begin(), d.end(), out.begin() + static_cast<std::ptrdiff_t>(s * n));
  }
  return out;
}

int shortest_distance(const Graph& g, Node s, Node t) {
  const int d = distances_from(g, s)[t];
  if (d == kUnreachable) {
    throw Unreachable("node " + std::to_string(t) + " unreachable from " + std::to_string(s));
  }
  return d;
}

std::vector<Path> all_shortest_paths(const Graph& g, Node s, Node t) {
  const auto to_target = distances_from(g, t);
  if (to_target[s] == kUnreachable) {
    throw Unreachable("node " + std::to_string(t) + " unreachable from " + std::to_string(s));
  }
  std::vector<Path> out;
  Path current{s};
  // Walk down the distance-to-target gradient; neighbor lists are sorted so
  // output is lexicographic.
  auto extend = [&](auto&& self, Node u) -> void {
    if (u == t) {
      out.push_back(current);
      return;
    }
    for (Node v : g.neighbors(u)) {
      if (to_target[v] == to_target[u] - 1) {
        current.push_back(v);
        self(self, v);
        current.pop_back();
      }
    }
  };
  extend(extend, s);
  return out;
}

std::uint64_t count_shortest_paths(const Graph& g, Node s, Node t) {
  const auto dist = distances_from(g, s);
  if (dist[t] == kUnreachable) {
    throw Unreachable("node " + std::to_string(t) + " unreachable from " + std::to_string(s));
  }
  std::vector<Node> order(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Node a, Node b) { return dist[a] < dist[b]; });
  std::vector<std::uint64_t> sigma(static_cast<std::size_t>(g.size()), 0);
  sigma[s] = 1;
  for (Node u : order) {
    if (dist[u] == kUnreachable || u == s) continue;
    for (Node v : g.neighbors(u)) {
      if (dist[v] == dist[u] - 1) sigma[u] += sigma[v];
    }
  }
  return sigma[t];
}

bool is_walk(const Graph& g, const Path& p) {
  if (p.empty()) return false;
  for (Node v : p) {
    if (v < 0 || v >= g.size()) return false;
  }
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (!g.adjacent(p[i - 1], p[i])) return false;
  }
  return true;
}

bool is_simple_path(const Graph& g, const Path& p) {
  if (!is_walk(g, p)) return false;
  Graph::Row seen;
  for (Node v : p) {
    if (seen.test(static_cast<std::size_t>(v))) return false;
    seen.set(static_cast<std::size_t>(v));
  }
  return true;
}

Graph grid_graph(int width, int height) {
  if (width < 1 || height < 1) throw DomainError("grid dimensions must be positive");
  if (width * height > kMaxNodes) {
    throw UnsupportedSize("grid " + std::to_string(width) + "x" + std::to_string(height) +
                          " exceeds " + std::to_string(kMaxNodes) + " nodes");
  }
  std::vector<Edge> edges;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const int u = y * width + x;
      if (x + 1 < width) edges.emplace_back(u, u + 1);
      if (y + 1 < height) edges.emplace_back(u, u + width);
    }
  }
  return Graph(width * height, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 nodes");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, edges);
}

Graph permuted(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.size()) throw DomainError("permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.size(), edges);
}

}  // namespace rrtd

#include "rrtd/random.hpp"

namespace rrtd {

std::uint64_t content_hash(const Graph& g) {
  std::string bytes;
  bytes.push_back(static_cast<char>(g.size()));
  unsigned char acc = 0;
  int filled = 0;
  for (int j = 1; j < g.size(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = static_cast<unsigned char>((acc << 1) | (g.adjacent(i, j) ? 1 : 0));
      if (++filled == 8) {
        bytes.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) bytes.push_back(static_cast<char>(acc << (8 - filled)));
  return fnv1a(bytes);
}

}  // namespace rrtd
