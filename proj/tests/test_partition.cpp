#include "doctest.h"
#include "rrtd/error.hpp"
#include "rrtd/graph.hpp"
#include "rrtd/partition.hpp"

using namespace rrtd;

namespace {

// Bell numbers via the Bell triangle.
long long bell(int n) {
  std::vector<long long> row{1};
  for (int i = 1; i < n; ++i) {
    std::vector<long long> next{row.back()};
    for (long long x : row) next.push_back(next.back() + x);
    row = next;
  }
  return row.back();
}

}  // namespace

TEST_CASE("partition labels are normalized") {
  const Partition p({2, 2, 0, 5});
  CHECK(p.labels() == std::vector<int>{0, 0, 1, 2});
  CHECK(p.region_count() == 3);
  CHECK(p.region_sizes() == std::vector<int>{2, 1, 1});
  CHECK_THROWS_AS(Partition({}), DomainError);
}

TEST_CASE("boundary states and cut size") {
  const Graph p3 = path_graph(3);
  const Partition p({0, 1, 1});
  CHECK(p.boundary_states(p3) == std::vector<bool>{true, true, false});
  CHECK(p.cut_size(p3) == 1);
}

TEST_CASE("partition enumeration counts match Bell numbers") {
  CHECK(bell(3) == 5);
  CHECK(bell(4) == 15);
  CHECK(bell(8) == 4140);
  for (int n = 1; n <= 8; ++n) {
    const auto parts = enumerate_partitions(n);
    CHECK(static_cast<long long>(parts.size()) == bell(n));
    for (std::size_t i = 1; i < parts.size(); ++i) CHECK_FALSE(parts[i] == parts[i - 1]);
  }
  CHECK(enumerate_partitions(3).size() == 5);
  CHECK(enumerate_partitions(8).size() == 4140);
  CHECK_THROWS_AS(enumerate_partitions(11), UnsupportedSize);
  CHECK_THROWS_AS(enumerate_partitions(0), UnsupportedSize);
}
