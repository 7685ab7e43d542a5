#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "axial/errors.hpp"

namespace axial {

struct AxiomsFailed : Error { using Error::Error; };

// Finite truncation of the projection complex or quasi-tree of spaces.
struct TruncGraph {
  enum class Kind { ProjectionComplex, QuasiTreeOfSpaces };

  Kind kind = Kind::ProjectionComplex;
  long K = 1;
  std::vector<std::string> labels;
  std::vector<int> coset_of;            // vertex -> coset index
  std::vector<std::vector<int>> adj;    // sorted, no loops, no duplicates
  std::unordered_map<std::string, int> index;  // label -> vertex

  int add_vertex(const std::string& label, int coset);
  void add_edge(int u, int v);
  std::size_t vertex_count() const { return adj.size(); }
  std::size_t edge_count() const;
  int vertex(const std::string& label) const;  // -1 if absent
};

std::vector<int> bfs_distances(const TruncGraph& g, int src);
bool is_connected(const TruncGraph& g);
std::vector<std::vector<int>> all_pairs_distances(const TruncGraph& g,
                                                  bool parallel = true);

// Least delta (half-integer) such that the four-point condition
// d(x,y)+d(z,w) <= max(d(x,z)+d(y,w), d(x,w)+d(y,z)) + 2*delta holds.
double hyperbolicity_delta(const TruncGraph& g, std::size_t capacity = 400);
double hyperbolicity_delta_serial(const TruncGraph& g,
                                  std::size_t capacity = 400);

struct BottleneckResult {
  bool ok = true;
  int worst_u = -1;
  int worst_v = -1;
};

// Bottleneck criterion: every u-v path must meet the ball of radius delta
// around a fixed BFS midpoint of u and v.
BottleneckResult bottleneck_check(const TruncGraph& g, int delta,
                                  std::size_t capacity = 400);

std::string dot_export(const TruncGraph& g);

}  // namespace axial
