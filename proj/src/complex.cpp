#include "axial/complex.hpp"

#include <algorithm>

namespace axial {

long default_edge_threshold(const AxiomReport& axioms) {
  return std::max(1L, 4 * axioms.p1_max + 1);
}

namespace {

void require_axioms(const AxiomReport& axioms) {
  if (axioms.p1_violations > 0) {
    throw AxiomsFailed("projection axioms failed: " +
                       std::to_string(axioms.p1_violations) +
                       " P1 violations");
  }
}

}  // namespace

TruncGraph build_projection_complex(ProjectionSystem& ps, long K,
                                    const AxiomReport& axioms) {
  require_axioms(axioms);
  TruncGraph g;
  g.kind = TruncGraph::Kind::ProjectionComplex;
  g.K = K;

  const std::size_t n = ps.cosets().size();
  for (std::size_t i = 0; i < n; ++i) {
    g.add_vertex(to_string(ps.cosets()[i].rep) + "T", static_cast<int>(i));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = x + 1; z < n; ++z) {
      bool edge = true;
      for (std::size_t y = 0; y < n && edge; ++y) {
        if (y == x || y == z) continue;
        if (ps.proj_distance(y, x, z) > K) edge = false;
      }
      if (edge) g.add_edge(static_cast<int>(x), static_cast<int>(z));
    }
  }
  return g;
}

TruncGraph build_quasi_tree_of_spaces(ProjectionSystem& ps, long K, int depth,
                                      const AxiomReport& axioms) {
  require_axioms(axioms);
  TruncGraph skeleton = build_projection_complex(ps, K, axioms);

  TruncGraph g;
  g.kind = TruncGraph::Kind::QuasiTreeOfSpaces;
  g.K = K;

  // Depth-truncated copy of T, shared shape for every coset.
  std::vector<GroupElement> patch;
  {
    // BFS over T up to the depth, via the system's T-metric.
    std::vector<GroupElement> frontier{identity(ps.engine().action().group)};
    std::vector<GroupElement> all = frontier;
    std::vector<GroupElement> gens;
    gens.push_back(ps.engine().action().g);
    gens.push_back(invert(ps.engine().action().g));
    for (const auto& f : ps.proj_alphabet()) {
      if (!is_identity(f)) {
        gens.push_back(f);
        gens.push_back(invert(f));
      }
    }
    for (int r = 0; r < depth; ++r) {
      std::vector<GroupElement> next;
      for (const auto& x : frontier) {
        for (const auto& s : gens) {
          GroupElement y = multiply(x, s);
          bool fresh = true;
          for (const auto& z : all) {
            if (equal(z, y)) {
              fresh = false;
              break;
            }
          }
          if (fresh) {
            all.push_back(y);
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), shortlex_less);
    patch = std::move(all);
  }

  const std::size_t n = ps.cosets().size();
  for (std::size_t y = 0; y < n; ++y) {
    const GroupElement& rep = ps.cosets()[y].rep;
    std::vector<int> ids;
    for (const auto& t : patch) {
      ids.push_back(g.add_vertex(to_string(multiply(rep, t)),
                                 static_cast<int>(y)));
    }
    // Intra-coset unit edges of the T word metric.
    for (std::size_t i = 0; i < patch.size(); ++i) {
      for (std::size_t j = i + 1; j < patch.size(); ++j) {
        if (ps.t_distance(patch[i], patch[j]) == 1) {
          g.add_edge(ids[i], ids[j]);
        }
      }
    }
  }

  for (std::size_t x = 0; x < n; ++x) {
    for (int z : skeleton.adj[x]) {
      if (static_cast<int>(x) > z) continue;
      auto px = ps.coset_projection(ps.cosets()[x], ps.cosets()[z]);
      auto pz = ps.coset_projection(ps.cosets()[z], ps.cosets()[x]);
      for (const auto& p : px) {
        int u = g.vertex(to_string(p));
        if (u < 0) continue;  // projection point beyond the depth truncation
        for (const auto& q : pz) {
          int v = g.vertex(to_string(q));
          if (v >= 0) g.add_edge(u, v);
        }
      }
    }
  }
  return g;
}

std::vector<long> translation_growth(const TruncGraph& g, ProjectionSystem& ps,
                                     int n_max) {
  const GroupElement e = identity(ps.engine().action().group);
  std::vector<long> out;
  if (g.kind == TruncGraph::Kind::QuasiTreeOfSpaces) {
    int src = g.vertex(to_string(e));
    if (src < 0) throw PointMissing("translation_growth: base point missing");
    auto dist = bfs_distances(g, src);
    GroupElement p = e;
    for (int i = 1; i <= n_max; ++i) {
      p = multiply(p, ps.engine().action().g);
      int v = g.vertex(to_string(p));
      if (v < 0 || dist[v] < 0) {
        throw PointMissing("translation_growth: g^" + std::to_string(i) +
                           " beyond the truncation depth");
      }
      out.push_back(dist[v]);
    }
  } else {
    // Resolve cosets exactly: x and y share a vertex iff rep^-1 x is tame.
    // (coset_of alone can drift once x g^n leaves the truncated T window.)
    auto locate = [&](const GroupElement& x) {
      for (std::size_t i = 0; i < ps.cosets().size(); ++i) {
        GroupElement q = multiply(invert(ps.cosets()[i].rep), x);
        if (ps.engine().tame_certified(q)) return static_cast<int>(i);
      }
      return -1;
    };
    int src = locate(e);
    if (src < 0) throw PointMissing("translation_growth: coset T missing");
    auto dist = bfs_distances(g, src);
    GroupElement p = e;
    for (int i = 1; i <= n_max; ++i) {
      p = multiply(p, ps.engine().action().g);
      int v = locate(p);
      if (v < 0) throw PointMissing("translation_growth: coset missing");
      out.push_back(dist[v]);
    }
  }
  return out;
}

}  // namespace axial
