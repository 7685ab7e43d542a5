#include "axial/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace axial {

int TruncGraph::add_vertex(const std::string& label, int coset) {
  int id = static_cast<int>(adj.size());
  labels.push_back(label);
  coset_of.push_back(coset);
  adj.emplace_back();
  index.emplace(label, id);
  return id;
}

void TruncGraph::add_edge(int u, int v) {
  if (u == v) return;
  auto& au = adj[u];
  if (std::find(au.begin(), au.end(), v) != au.end()) return;
  au.insert(std::upper_bound(au.begin(), au.end(), v), v);
  auto& av = adj[v];
  av.insert(std::upper_bound(av.begin(), av.end(), u), u);
}

std::size_t TruncGraph::edge_count() const {
  std::size_t s = 0;
  for (const auto& a : adj) s += a.size();
  return s / 2;
}

int TruncGraph::vertex(const std::string& label) const {
  auto it = index.find(label);
  return it == index.end() ? -1 : it->second;
}

std::vector<int> bfs_distances(const TruncGraph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool is_connected(const TruncGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::find(d.begin(), d.end(), -1) == d.end();
}

std::vector<std::vector<int>> all_pairs_distances(const TruncGraph& g,
                                                  bool parallel) {
  const long n = static_cast<long>(g.vertex_count());
  std::vector<std::vector<int>> dist(n);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (long i = 0; i < n; ++i) dist[i] = bfs_distances(g, static_cast<int>(i));
  return dist;
}

namespace {

double delta_scan(const TruncGraph& g, std::size_t capacity, bool parallel) {
  if (g.vertex_count() > capacity) {
    throw CapacityExceeded("hyperbolicity_delta: graph too large (" +
                           std::to_string(g.vertex_count()) + " vertices)");
  }
  if (!is_connected(g)) {
    throw Disconnected("hyperbolicity_delta: graph is disconnected");
  }
  auto d = all_pairs_distances(g, parallel);
  const long n = static_cast<long>(g.vertex_count());
  long twice_delta = 0;
#pragma omp parallel for schedule(dynamic) reduction(max : twice_delta) if (parallel)
  for (long x = 0; x < n; ++x) {
    for (long y = x + 1; y < n; ++y) {
      for (long z = y + 1; z < n; ++z) {
        for (long w = z + 1; w < n; ++w) {
          long s1 = d[x][y] + d[z][w];
          long s2 = d[x][z] + d[y][w];
          long s3 = d[x][w] + d[y][z];
          long hi = std::max({s1, s2, s3});
          long mid = s1 + s2 + s3 - hi - std::min({s1, s2, s3});
          twice_delta = std::max(twice_delta, hi - mid);
        }
      }
    }
  }
  return static_cast<double>(twice_delta) / 2.0;
}

}  // namespace

double hyperbolicity_delta(const TruncGraph& g, std::size_t capacity) {
  return delta_scan(g, capacity, true);
}

double hyperbolicity_delta_serial(const TruncGraph& g, std::size_t capacity) {
  return delta_scan(g, capacity, false);
}

BottleneckResult bottleneck_check(const TruncGraph& g, int delta,
                                  std::size_t capacity) {
  if (g.vertex_count() > capacity) {
    throw CapacityExceeded("bottleneck_check: graph too large");
  }
  if (!is_connected(g)) {
    throw Disconnected("bottleneck_check: graph is disconnected");
  }
  const int n = static_cast<int>(g.vertex_count());
  BottleneckResult res;

  for (int u = 0; u < n; ++u) {
    // BFS parents with smallest-index tie break for a fixed midpoint choice.
    std::vector<int> dist(n, -1), parent(n, -1);
    std::deque<int> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b : g.adj[a]) {
        if (dist[b] < 0) {
          dist[b] = dist[a] + 1;
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    for (int v = u + 1; v < n; ++v) {
      // Walk the BFS path v -> u; midpoint at distance floor(d/2) from u.
      int m = v;
      while (dist[m] > dist[v] / 2) m = parent[m];

      auto ball = bfs_distances(g, m);
      auto inside = [&](int x) { return ball[x] <= delta; };
      if (inside(u) || inside(v)) continue;

      // u and v must be separated once B(m, delta) is removed.
      std::vector<char> seen(n, 0);
      std::deque<int> q2{u};
      seen[u] = 1;
      bool reached = false;
      while (!q2.empty() && !reached) {
        int a = q2.front();
        q2.pop_front();
        for (int b : g.adj[a]) {
          if (seen[b] || inside(b)) continue;
          if (b == v) {
            reached = true;
            break;
          }
          seen[b] = 1;
          q2.push_back(b);
        }
      }
      if (reached) {
        res.ok = false;
        res.worst_u = u;
        res.worst_v = v;
        return res;
      }
    }
  }
  return res;
}

std::string dot_export(const TruncGraph& g) {
  static const char* palette[] = {"lightblue",  "lightsalmon", "palegreen",
                                  "plum",       "khaki",       "lightpink",
                                  "powderblue", "wheat",       "lightgray",
                                  "aquamarine"};
  std::ostringstream out;
  out << "graph trunc {\n  node [style=filled];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << g.labels[v] << "\" fillcolor=\""
        << palette[g.coset_of[v] % 10] << "\"];\n";
  }
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (int v : g.adj[u]) {
      if (static_cast<int>(u) < v) {
        out << "  v" << u << " -- v" << v << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace axial
