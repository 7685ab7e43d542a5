#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "axial/wildness.hpp"

namespace axial {

// A coset hT, identified by its shortlex-minimal representative among the
// certified-tame multiples h*T_hat.
struct CosetId {
  GroupElement rep;
};

struct P1Scan {
  long max = 0;
  long violations = 0;
  std::string worst;
};

struct AxiomReport {
  long theta_hat = 0;  // P0: max projection diameter
  bool theta_stable = false;
  long p1_max = 0;  // max over triples of the crossed minimum
  long p1_bound = 0;  // 5*M_hat + theta_hat
  long p1_violations = 0;
  std::string p1_worst;
  struct CensusEntry {
    std::string pair;
    long count = 0;
    long count_prev = 0;
    bool stable = false;
  };
  std::vector<CensusEntry> p2;
  bool p2_stable = false;
  long p2_threshold = 0;
};

struct CensusRecord {
  GroupElement h;
  long threshold = 0;
  long size = 0;       // at the truncation radius
  long size_prev = 0;  // at radius - 1
  long delta = 0;
  std::vector<GroupElement> members;  // right <g>-coset representatives
};

// Projection map pi: W -> finite subsets of T, coset projections and the
// empirical (P0)/(P1)/(P2) constants. Tables are built single-writer, then
// scanned read-only.
class ProjectionSystem {
 public:
  // Cosets {wT : w in ball(coset_radius)}.
  ProjectionSystem(WildnessEngine& engine, int coset_radius);

  WildnessEngine& engine() { return eng_; }
  const std::vector<CosetId>& cosets() const { return cosets_; }
  const std::vector<GroupElement>& proj_alphabet() const { return F_hat_; }

  CosetId coset_of(const GroupElement& h) const;

  std::vector<GroupElement> pi_hat(const GroupElement& w);  // throws NotWild
  std::vector<GroupElement> pi_hat_at(const GroupElement& w, int radius) const;

  std::vector<GroupElement> coset_projection(const CosetId& to,
                                             const CosetId& from);

  // Word metric on T with generators {g} and F_hat.
  long t_norm(const GroupElement& t);
  long t_distance(const GroupElement& a, const GroupElement& b);
  long set_diameter(const std::vector<GroupElement>& ts);

  // diam of pi_Y(X) union pi_Y(Z) in Y's copy of the T-metric.
  long proj_distance(std::size_t y, std::size_t x, std::size_t z);

  AxiomReport check_axioms(long M_hat, long N_hat);
  P1Scan p1_scan(long bound, bool parallel = true);

  CensusRecord large_projection_census(const GroupElement& h, long threshold);

  std::string projection_table_tsv();

 private:
  struct ProjTables {
    std::vector<GroupElement> points;       // distinct projection points in T
    std::vector<std::vector<int>> sets;     // [y * n + x] -> point indices
    std::vector<std::vector<long>> pdist;   // pairwise T-distances
  };

  WildnessEngine& eng_;
  std::vector<CosetId> cosets_;
  std::vector<GroupElement> T_hat_;
  std::vector<GroupElement> F_hat_;
  std::vector<GroupElement> t_gens_;

  std::unordered_map<GroupElement, long, ElementHash, ElementEq> norms_;
  std::vector<GroupElement> norm_frontier_;
  long norm_radius_ = 0;

  std::unordered_map<GroupElement, std::vector<GroupElement>, ElementHash,
                     ElementEq>
      pi_memo_;
  ProjTables tables_;
  bool tables_built_ = false;

  const ProjTables& tables();
  ProjTables build_tables(int radius);
  long table_distance(const ProjTables& t, std::size_t y, std::size_t x,
                      std::size_t z) const;
  long table_diam(const ProjTables& t, std::size_t y, std::size_t x) const;
};

}  // namespace axial
