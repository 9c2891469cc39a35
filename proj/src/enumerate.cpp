#include "rrtd/enumerate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "rrtd/error.hpp"

namespace rrtd {

namespace {

using Cells = std::vector<std::vector<Node>>;

int triangle_bits(int n) { return n * (n - 1) / 2; }

// Splits cells by neighbor counts into every current cell until stable. The
// split order depends only on the ordered partition, so the result is
// isomorphism-invariant.
void refine(const Graph& g, Cells& cells) {
  const int n = g.size();
  std::vector<int> cell_of(static_cast<std::size_t>(n));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (Node v : cells[c]) cell_of[v] = static_cast<int>(c);
    }
    Cells next;
    next.reserve(static_cast<std::size_t>(n));
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, Node>> keyed;
      keyed.reserve(cell.size());
      for (Node v : cell) {
        std::vector<int> sig(cells.size(), 0);
        for (Node w : g.neighbors(v)) ++sig[cell_of[w]];
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = 0;
      for (std::size_t i = 1; i <= keyed.size(); ++i) {
        if (i == keyed.size() || keyed[i].first != keyed[start].first) {
          std::vector<Node> part;
          for (std::size_t k = start; k < i; ++k) part.push_back(keyed[k].second);
          next.push_back(std::move(part));
          start = i;
        }
      }
      if (keyed.front().first != keyed.back().first) changed = true;
    }
    cells = std::move(next);
  }
}

std::uint64_t code_under(const Graph& g, const Cells& discrete) {
  const int n = g.size();
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      code = (code << 1) | (g.adjacent(discrete[i][0], discrete[j][0]) ? 1u : 0u);
    }
  }
  return code;
}

struct CanonSearch {
  const Graph& g;
  std::uint64_t best = 0;
  std::vector<Node> best_order;
  bool found = false;

  void run(Cells cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      const std::uint64_t code = code_under(g, cells);
      if (!found || code > best) {
        best = code;
        found = true;
        best_order.clear();
        for (const auto& c : cells) best_order.push_back(c[0]);
      }
      return;
    }
    const auto idx = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Node> members = *target;
    for (Node v : members) {
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(idx));
      child.push_back({v});
      std::vector<Node> rest;
      for (Node w : members) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(idx) + 1, cells.end());
      run(std::move(child));
    }
  }
};

CanonSearch canonicalize(const Graph& g, Cells initial) {
  if (g.size() > kMaxCanonicalNodes) {
    throw UnsupportedSize("canonical labeling supports at most " +
                          std::to_string(kMaxCanonicalNodes) + " nodes");
  }
  CanonSearch search{g, 0, {}, false};
  search.run(std::move(initial));
  return search;
}

CanonSearch canonicalize(const Graph& g) {
  Cells all(1);
  for (Node v = 0; v < g.size(); ++v) all[0].push_back(v);
  return canonicalize(g, std::move(all));
}

Graph relabel(const Graph& g, const std::vector<Node>& order) {
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) perm[order[i]] = i;
  return permuted(g, perm);
}

}  // namespace

std::uint64_t adjacency_code(const Graph& g) {
  if (g.size() > kMaxCanonicalNodes) throw UnsupportedSize("adjacency code needs n <= 11");
  std::uint64_t code = 0;
  for (int j = 1; j < g.size(); ++j) {
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(i, j) ? 1u : 0u);
  }
  return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
  if (n < 1 || n > kMaxCanonicalNodes) throw UnsupportedSize("adjacency code needs 1 <= n <= 11");
  std::vector<Edge> edges;
  int bit = triangle_bits(n) - 1;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, --bit) {
      if ((code >> bit) & 1u) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::uint64_t canonical_code(const Graph& g) { return canonicalize(g).best; }

Graph canonical_form(const Graph& g) { return relabel(g, canonicalize(g).best_order); }

RootedCanonical canonical_rooted(const Graph& g, Node start, Node target) {
  if (start == target || start < 0 || target < 0 || start >= g.size() || target >= g.size()) {
    throw DomainError("canonical_rooted needs two distinct nodes of the graph");
  }
  Cells cells{{start}, {target}, {}};
  for (Node v = 0; v < g.size(); ++v) {
    if (v != start && v != target) cells[2].push_back(v);
  }
  if (cells[2].empty()) cells.pop_back();
  const auto search = canonicalize(g, std::move(cells));
  return {relabel(g, search.best_order), search.best};
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.size() == b.size() && a.edge_count() == b.edge_count() &&
         canonical_code(a) == canonical_code(b);
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& visit) {
  for (const auto& g : enumerate_connected(n)) visit(g);
}

std::vector<Graph> enumerate_connected(int n) {
  if (n < kMinEnumerateNodes || n > kMaxEnumerateNodes) {
    throw UnsupportedSize("enumeration supports 2 <= n <= 8, got " + std::to_string(n));
  }
  // Every connected graph has a vertex whose removal leaves it connected (a
  // spanning-tree leaf), so extending each connected class on k-1 nodes by a
  // new vertex with a nonempty neighborhood reaches every class on k nodes.
  std::vector<std::uint64_t> level{0};  // the single-node graph
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t parent_code : level) {
      const Graph parent = graph_from_code(k - 1, parent_code);
      std::vector<Graph::Row> base(static_cast<std::size_t>(k));
      for (int u = 0; u < k - 1; ++u) base[u] = parent.row(u);
      for (std::uint32_t mask = 1; mask < (1u << (k - 1)); ++mask) {
        auto rows = base;
        for (int u = 0; u < k - 1; ++u) {
          if ((mask >> u) & 1u) {
            rows[u].set(static_cast<std::size_t>(k - 1));
            rows[k - 1].set(static_cast<std::size_t>(u));
          }
        }
        seen.insert(canonical_code(Graph::from_rows(std::move(rows))));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(graph_from_code(n, code));
  return out;
}

}  // namespace rrtd
