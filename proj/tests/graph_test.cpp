#include <doctest.h>

#include "axial/graph.hpp"

using namespace axial;

namespace {

TruncGraph path_graph(int n) {
  TruncGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex("p" + std::to_string(i), 0);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

TruncGraph cycle_graph(int n) {
  TruncGraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

TruncGraph star_graph(int leaves) {
  TruncGraph g;
  g.add_vertex("c", 0);
  for (int i = 0; i < leaves; ++i) {
    g.add_edge(0, g.add_vertex("l" + std::to_string(i), 0));
  }
  return g;
}

}  // namespace

TEST_CASE("graph basics: dedup edges, bfs, connectivity") {
  TruncGraph g = path_graph(4);
  g.add_edge(0, 1);  // duplicate
  CHECK(g.edge_count() == 3);
  CHECK(g.vertex("p2") == 2);
  CHECK(g.vertex("nope") == -1);

  auto d = bfs_distances(g, 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3});
  CHECK(is_connected(g));

  g.add_vertex("island", 1);
  CHECK_FALSE(is_connected(g));
  CHECK(bfs_distances(g, 0).back() == -1);
}

TEST_CASE("all pairs distances: serial equals parallel") {
  TruncGraph g = cycle_graph(9);
  auto s = all_pairs_distances(g, false);
  auto p = all_pairs_distances(g, true);
  CHECK(s == p);
  CHECK(s[0][4] == 4);
  CHECK(s[0][5] == 4);
}

TEST_CASE("four point delta: trees are 0, C6 is 1") {
  TruncGraph tree = star_graph(5);
  CHECK(hyperbolicity_delta(tree) == 0.0);
  CHECK(hyperbolicity_delta_serial(tree) == 0.0);

  TruncGraph c6 = cycle_graph(6);
  CHECK(hyperbolicity_delta(c6) == 1.0);
  CHECK(hyperbolicity_delta(c6) == hyperbolicity_delta_serial(c6));
}

TEST_CASE("bottleneck: passes on a path, fails across a large cycle") {
  BottleneckResult ok = bottleneck_check(path_graph(8), 0);
  CHECK(ok.ok);

  BottleneckResult bad = bottleneck_check(cycle_graph(12), 1);
  CHECK_FALSE(bad.ok);
  CHECK(bad.worst_u >= 0);
  CHECK(bad.worst_v >= 0);
}

TEST_CASE("dot export lists vertices and edges") {
  TruncGraph g = path_graph(3);
  std::string dot = dot_export(g);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("p0") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}
