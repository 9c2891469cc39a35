#include "rrtd/partition.hpp"

#include <string>

#include "rrtd/error.hpp"

namespace rrtd {

Partition::Partition(std::vector<int> region_of) : region_of_(std::move(region_of)) {
  if (region_of_.empty()) throw DomainError("partition of an empty set");
  std::vector<int> remap;
  for (int& r : region_of_) {
    if (r < 0) throw DomainError("negative region label");
    if (static_cast<std::size_t>(r) >= remap.size()) remap.resize(static_cast<std::size_t>(r) + 1, -1);
    if (remap[r] < 0) remap[r] = regions_++;
    r = remap[r];
  }
}

std::vector<std::vector<Node>> Partition::regions() const {
  std::vector<std::vector<Node>> out(static_cast<std::size_t>(regions_));
  for (Node v = 0; v < size(); ++v) out[region_of_[v]].push_back(v);
  return out;
}

std::vector<int> Partition::region_sizes() const {
  std::vector<int> out(static_cast<std::size_t>(regions_), 0);
  for (int r : region_of_) ++out[r];
  return out;
}

std::vector<bool> Partition::boundary_states(const Graph& g) const {
  if (g.size() != size()) throw DomainError("partition does not match graph size");
  std::vector<bool> out(static_cast<std::size_t>(size()), false);
  for (Node v = 0; v < size(); ++v) {
    for (Node w : g.neighbors(v)) {
      if (region_of_[w] != region_of_[v]) {
        out[v] = true;
        break;
      }
    }
  }
  return out;
}

int Partition::cut_size(const Graph& g) const {
  if (g.size() != size()) throw DomainError("partition does not match graph size");
  int cut = 0;
  for (auto [u, v] : g.edges()) cut += region_of_[u] != region_of_[v];
  return cut;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
  if (n < 1 || n > kMaxPartitionNodes) {
    throw UnsupportedSize("partition enumeration supports 1 <= n <= 10, got " + std::to_string(n));
  }
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(Partition(a));
    int i = n - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (int j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

}  // namespace rrtd
