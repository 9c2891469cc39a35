#pragma once

#include <functional>
#include <vector>

#include "rrtd/graph.hpp"

namespace rrtd {

/// Assignment of states to regions 0..K-1, every region nonempty.
class Partition {
 public:
  /// Region labels are renumbered in order of first appearance.
  explicit Partition(std::vector<int> region_of);

  int size() const noexcept { return static_cast<int>(region_of_.size()); }
  int region_count() const noexcept { return regions_; }
  int region(Node v) const { return region_of_[v]; }
  const std::vector<int>& labels() const noexcept { return region_of_; }
  std::vector<std::vector<Node>> regions() const;
  std::vector<int> region_sizes() const;

  /// States with at least one neighbor in a different region.
  std::vector<bool> boundary_states(const Graph& g) const;
  /// Edges whose endpoints lie in different regions.
  int cut_size(const Graph& g) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> region_of_;
  int regions_ = 0;
};

/// Every set partition of {0..n-1} once (restricted growth strings), Bell(n)
/// in total. Throws UnsupportedSize for n outside 1..10.
std::vector<Partition> enumerate_partitions(int n);
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

inline constexpr int kMaxPartitionNodes = 10;

}  // namespace rrtd
