#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "rrtd/enumerate.hpp"
#include "rrtd/error.hpp"
#include "rrtd/graph.hpp"
#include "rrtd/graph6.hpp"

using namespace rrtd;

TEST_CASE("graph construction keeps adjacency symmetric") {
  Graph g(4, {{0, 1}, {2, 1}, {3, 0}});
  CHECK(g.size() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 0));
  CHECK(g.neighbors(0) == std::vector<Node>{1, 3});
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
  CHECK_THROWS_AS(Graph(0), UnsupportedSize);
}

TEST_CASE("parse_graph6 decodes the reference strings") {
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.size() == 2);
  CHECK(k2.adjacent(0, 1));

  const Graph empty2 = parse_graph6("A?");
  CHECK(empty2.size() == 2);
  CHECK(empty2.edge_count() == 0);

  CHECK(parse_graph6("Bw") == complete_graph(3));
}

TEST_CASE("write_graph6 encodes the reference graphs") {
  CHECK(write_graph6(complete_graph(2)) == "A_");
  CHECK(write_graph6(path_graph(3)) == "Bg");
  CHECK(write_graph6(Graph(3, {{0, 1}, {0, 2}})) == "Bo");
  CHECK_THROWS_AS(write_graph6(Graph(63)), UnsupportedSize);
}

TEST_CASE("parse_graph6 reports malformed input with offsets") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  try {
    parse_graph6("B!");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  try {
    parse_graph6("A_x");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);        // truncated
  CHECK_THROWS_AS(parse_graph6("A@"), ParseError);       // padding bit set
  CHECK_THROWS_AS(parse_graph6("~"), UnsupportedSize);   // multi-byte size
  CHECK_THROWS_AS(parse_graph6("?"), ParseError);        // zero nodes
}

TEST_CASE("graph6 round-trips random labeled graphs up to 62 nodes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 62);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (rng() % 3 == 0) edges.emplace_back(i, j);
      }
    }
    const Graph g(n, edges);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("graph6 stream reader skips header and blank lines") {
  std::istringstream in(">>graph6<<A_\n\nBw\r\nBg\n");
  const auto graphs = read_graph6_stream(in);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[1] == complete_graph(3));
  std::istringstream bad("A_\nB!\n");
  CHECK_THROWS_WITH_AS(read_graph6_stream(bad), doctest::Contains("line 2"), DataError);
}

TEST_CASE("enumerate_connected matches the brute-force class count") {
  CHECK(enumerate_connected(2).size() == 1);
  CHECK(write_graph6(enumerate_connected(2).front()) == "A_");
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(enumerate_connected(n).size() == oracle::count_connected_classes(n));
  }
  CHECK(enumerate_connected(3).size() == 2);
  CHECK(enumerate_connected(4).size() == 6);
  CHECK(enumerate_connected(7).size() == 853);
  CHECK_THROWS_AS(enumerate_connected(1), UnsupportedSize);
  CHECK_THROWS_AS(enumerate_connected(9), UnsupportedSize);
}

TEST_CASE("enumerated graphs are connected and pairwise non-isomorphic") {
  for (int n = 2; n <= 6; ++n) {
    std::set<std::uint64_t> codes;
    for (const auto& g : enumerate_connected(n)) {
      CHECK(g.connected());
      codes.insert(oracle::brute_canonical_code(g));
    }
    CHECK(codes.size() == enumerate_connected(n).size());
  }
}

TEST_CASE("enumeration output is deterministic") {
  const auto a = enumerate_connected(6);
  const auto b = enumerate_connected(6);
  CHECK(a == b);
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937_64 rng(11);
  for (const auto& g : enumerate_connected(6)) {
    std::vector<int> perm{0, 1, 2, 3, 4, 5};
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = permuted(g, perm);
    CHECK(canonical_code(h) == canonical_code(g));
    CHECK(canonical_form(h) == canonical_form(g));
    CHECK(isomorphic(g, h));
  }
  CHECK_FALSE(isomorphic(path_graph(4), star_graph(4)));
}

TEST_CASE("shortest_distance") {
  CHECK(shortest_distance(complete_graph(2), 0, 1) == 1);
  CHECK(shortest_distance(path_graph(3), 0, 2) == 2);
  CHECK(shortest_distance(cycle_graph(8), 0, 4) == 4);
  CHECK(shortest_distance(path_graph(3), 1, 1) == 0);
  CHECK_THROWS_AS(shortest_distance(Graph(3, {{0, 1}}), 0, 2), Unreachable);
}

TEST_CASE("all_shortest_paths") {
  CHECK(all_shortest_paths(path_graph(3), 0, 2) == std::vector<Path>{{0, 1, 2}});
  CHECK(all_shortest_paths(cycle_graph(4), 0, 2) == std::vector<Path>{{0, 1, 2}, {0, 3, 2}});
  CHECK(all_shortest_paths(complete_graph(3), 0, 1) == std::vector<Path>{{0, 1}});
  CHECK_THROWS_AS(all_shortest_paths(Graph(3, {{0, 1}}), 0, 2), Unreachable);
}

TEST_CASE("all_shortest_paths agrees with exhaustive enumeration and path counting") {
  for (const auto& g : enumerate_connected(5)) {
    for (int s = 0; s < g.size(); ++s) {
      for (int t = 0; t < g.size(); ++t) {
        const auto paths = all_shortest_paths(g, s, t);
        CHECK(paths == oracle::brute_shortest_paths(g, s, t));
        CHECK(paths.size() == count_shortest_paths(g, s, t));
        for (const auto& p : paths) {
          CHECK(static_cast<int>(p.size()) == shortest_distance(g, s, t) + 1);
        }
      }
    }
  }
}

TEST_CASE("grid_graph") {
  CHECK(grid_graph(1, 2) == complete_graph(2));
  CHECK(isomorphic(grid_graph(2, 2), cycle_graph(4)));
  const Graph g = grid_graph(3, 3);
  CHECK(g.size() == 9);
  CHECK(g.edge_count() == 12);
  CHECK(grid_graph(9, 9).edge_count() == 2 * 81 - 9 - 9);
  CHECK_THROWS_AS(grid_graph(12, 12), UnsupportedSize);
  CHECK_THROWS_AS(grid_graph(0, 3), DomainError);
}
