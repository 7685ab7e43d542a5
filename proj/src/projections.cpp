#include "axial/projections.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace axial {

namespace {

void sort_unique(std::vector<GroupElement>& v) {
  std::sort(v.begin(), v.end(), shortlex_less);
  v.erase(std::unique(v.begin(), v.end(),
                      [](const GroupElement& a, const GroupElement& b) {
                        return equal(a, b);
                      }),
          v.end());
}

}  // namespace

ProjectionSystem::ProjectionSystem(WildnessEngine& engine, int coset_radius)
    : eng_(engine) {
  auto tame = eng_.tame_subgroup();
  T_hat_ = std::move(tame.T_hat);
  F_hat_ = std::move(tame.F_hat);

  t_gens_.push_back(eng_.action().g);
  t_gens_.push_back(invert(eng_.action().g));
  for (const auto& f : F_hat_) {
    if (is_identity(f)) continue;
    t_gens_.push_back(f);
    t_gens_.push_back(invert(f));
  }
  sort_unique(t_gens_);

  norms_.emplace(identity(eng_.action().group), 0);
  norm_frontier_.push_back(identity(eng_.action().group));

  std::vector<GroupElement> reps;
  for (const auto& w : eng_.cache().get(coset_radius)) {
    reps.push_back(coset_of(w).rep);
  }
  sort_unique(reps);
  for (auto& r : reps) cosets_.push_back(CosetId{std::move(r)});
}

CosetId ProjectionSystem::coset_of(const GroupElement& h) const {
  GroupElement best = h;
  for (const auto& t : T_hat_) {
    GroupElement cand = multiply(h, t);
    if (shortlex_less(cand, best)) best = cand;
  }
  return CosetId{best};
}

std::vector<GroupElement> ProjectionSystem::pi_hat_at(const GroupElement& w,
                                                      int radius) const {
  WildProfile p = eng_.profile_at(w, radius);
  if (p.status != WildStatus::WildWitnessed) {
    throw NotWild("pi_hat: " + to_string(w) + " is not witnessed wild");
  }
  std::vector<GroupElement> out;
  const GroupElement winv = invert(w);
  for (const auto& t : F_hat_) {
    WildProfile q = eng_.profile_at(multiply(winv, t), radius);
    for (long n : q.interval) {
      out.push_back(multiply(t, power(eng_.action().g, n)));
    }
  }
  sort_unique(out);
  return out;
}

std::vector<GroupElement> ProjectionSystem::pi_hat(const GroupElement& w) {
  auto it = pi_memo_.find(w);
  if (it != pi_memo_.end()) return it->second;
  const WildProfile& p = eng_.profile(w);
  if (p.status != WildStatus::WildWitnessed) {
    throw NotWild("pi_hat: " + to_string(w) + " is not witnessed wild");
  }
  std::vector<GroupElement> out;
  const GroupElement winv = invert(w);
  for (const auto& t : F_hat_) {
    const WildProfile& q = eng_.profile(multiply(winv, t));
    for (long n : q.interval) {
      out.push_back(multiply(t, power(eng_.action().g, n)));
    }
  }
  sort_unique(out);
  pi_memo_.emplace(w, out);
  return out;
}

std::vector<GroupElement> ProjectionSystem::coset_projection(
    const CosetId& to, const CosetId& from) {
  GroupElement w = multiply(invert(to.rep), from.rep);
  if (eng_.tame_certified(w)) {
    throw SameCoset("coset_projection: cosets coincide");
  }
  std::vector<GroupElement> out;
  for (const auto& p : pi_hat(w)) out.push_back(multiply(to.rep, p));
  sort_unique(out);
  return out;
}

long ProjectionSystem::t_norm(const GroupElement& t) {
  auto it = norms_.find(t);
  while (it == norms_.end()) {
    if (norm_frontier_.empty() || norm_radius_ > 200) {
      throw Error("t_norm: element not reached in T; is it tame? " +
                  to_string(t));
    }
    std::vector<GroupElement> next;
    ++norm_radius_;
    for (const auto& x : norm_frontier_) {
      for (const auto& s : t_gens_) {
        GroupElement y = multiply(x, s);
        if (norms_.emplace(y, norm_radius_).second) next.push_back(std::move(y));
      }
    }
    norm_frontier_ = std::move(next);
    it = norms_.find(t);
  }
  return it->second;
}

long ProjectionSystem::t_distance(const GroupElement& a,
                                  const GroupElement& b) {
  return t_norm(multiply(invert(a), b));
}

long ProjectionSystem::set_diameter(const std::vector<GroupElement>& ts) {
  long d = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      d = std::max(d, t_distance(ts[i], ts[j]));
    }
  }
  return d;
}

ProjectionSystem::ProjTables ProjectionSystem::build_tables(int radius) {
  ProjTables t;
  const std::size_t n = cosets_.size();
  t.sets.assign(n * n, {});

  std::vector<std::vector<GroupElement>> raw(n * n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y) continue;
      GroupElement w = multiply(invert(cosets_[y].rep), cosets_[x].rep);
      raw[y * n + x] = radius == eng_.trunc().radius ? pi_hat(w)
                                                     : pi_hat_at(w, radius);
      for (const auto& p : raw[y * n + x]) t.points.push_back(p);
    }
  }
  sort_unique(t.points);

  auto point_index = [&](const GroupElement& p) {
    auto it = std::lower_bound(t.points.begin(), t.points.end(), p,
                               shortlex_less);
    return static_cast<int>(it - t.points.begin());
  };
  for (std::size_t k = 0; k < raw.size(); ++k) {
    for (const auto& p : raw[k]) t.sets[k].push_back(point_index(p));
  }

  const std::size_t m = t.points.size();
  t.pdist.assign(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      t.pdist[i][j] = t.pdist[j][i] = t_distance(t.points[i], t.points[j]);
    }
  }
  return t;
}

const ProjectionSystem::ProjTables& ProjectionSystem::tables() {
  if (!tables_built_) {
    tables_ = build_tables(eng_.trunc().radius);
    tables_built_ = true;
  }
  return tables_;
}

long ProjectionSystem::table_diam(const ProjTables& t, std::size_t y,
                                  std::size_t x) const {
  const auto& s = t.sets[y * cosets_.size() + x];
  long d = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      d = std::max(d, t.pdist[s[i]][s[j]]);
    }
  }
  return d;
}

long ProjectionSystem::table_distance(const ProjTables& t, std::size_t y,
                                      std::size_t x, std::size_t z) const {
  const std::size_t n = cosets_.size();
  const auto& a = t.sets[y * n + x];
  const auto& b = t.sets[y * n + z];
  long d = 0;
  for (int i : a) {
    for (int j : b) d = std::max(d, t.pdist[i][j]);
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      d = std::max(d, t.pdist[a[i]][a[j]]);
    }
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      d = std::max(d, t.pdist[b[i]][b[j]]);
    }
  }
  return d;
}

long ProjectionSystem::proj_distance(std::size_t y, std::size_t x,
                                     std::size_t z) {
  if (x == y || z == y) throw SameCoset("proj_distance: coset projects to itself");
  return table_distance(tables(), y, x, z);
}

P1Scan ProjectionSystem::p1_scan(long bound, bool parallel) {
  const ProjTables& t = tables();
  const long n = static_cast<long>(cosets_.size());
  P1Scan best;
  long worst_y1 = -1, worst_y2 = -1, worst_y3 = -1;

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long y1 = 0; y1 < n; ++y1) {
    long local_max = 0, local_viol = 0;
    long l1 = -1, l2 = -1, l3 = -1;
    for (long y2 = y1 + 1; y2 < n; ++y2) {
      for (long y3 = 0; y3 < n; ++y3) {
        if (y3 == y1 || y3 == y2) continue;
        long v = std::min(table_distance(t, y1, y2, y3),
                          table_distance(t, y2, y1, y3));
        if (v > local_max || l1 < 0) {
          local_max = v;
          l1 = y1; l2 = y2; l3 = y3;
        }
        if (v > bound) ++local_viol;
      }
    }
#pragma omp critical
    {
      if (l1 >= 0 &&
          (local_max > best.max || worst_y1 < 0 ||
           (local_max == best.max && l1 < worst_y1))) {
        best.max = local_max;
        worst_y1 = l1; worst_y2 = l2; worst_y3 = l3;
      }
      best.violations += local_viol;
    }
  }
  if (worst_y1 >= 0) {
    best.worst = to_string(cosets_[worst_y1].rep) + "T | " +
                 to_string(cosets_[worst_y2].rep) + "T | " +
                 to_string(cosets_[worst_y3].rep) + "T";
  }
  return best;
}

AxiomReport ProjectionSystem::check_axioms(long M_hat, long N_hat) {
  if (cosets_.size() < 3) {
    throw InsufficientCosets("check_axioms: need at least 3 distinct cosets, have " +
                             std::to_string(cosets_.size()));
  }
  AxiomReport rep;
  const std::size_t n = cosets_.size();
  const ProjTables& cur = tables();
  ProjTables prev = build_tables(eng_.trunc().radius - 1);

  long theta_prev = 0;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y) continue;
      rep.theta_hat = std::max(rep.theta_hat, table_diam(cur, y, x));
      theta_prev = std::max(theta_prev, table_diam(prev, y, x));
    }
  }
  rep.theta_stable = rep.theta_hat == theta_prev;

  rep.p1_bound = 5 * M_hat + rep.theta_hat;
  P1Scan scan = p1_scan(rep.p1_bound);
  rep.p1_max = scan.max;
  rep.p1_violations = scan.violations;
  rep.p1_worst = scan.worst;

  rep.p2_threshold = N_hat;
  rep.p2_stable = true;
  std::size_t sampled = 0;
  for (std::size_t y1 = 0; y1 < n && sampled < 10; ++y1) {
    for (std::size_t y2 = y1 + 1; y2 < n && sampled < 10; ++y2) {
      AxiomReport::CensusEntry entry;
      entry.pair = to_string(cosets_[y1].rep) + "T | " +
                   to_string(cosets_[y2].rep) + "T";
      for (std::size_t y = 0; y < n; ++y) {
        if (y == y1 || y == y2) continue;
        if (table_distance(cur, y, y1, y2) >= N_hat) ++entry.count;
        if (table_distance(prev, y, y1, y2) >= N_hat) ++entry.count_prev;
      }
      entry.stable = entry.count == entry.count_prev;
      rep.p2_stable = rep.p2_stable && entry.stable;
      rep.p2.push_back(std::move(entry));
      ++sampled;
    }
  }
  return rep;
}

CensusRecord ProjectionSystem::large_projection_census(const GroupElement& h,
                                                       long threshold) {
  CensusRecord rec;
  rec.h = h;
  rec.threshold = threshold;

  auto census = [&](int radius, bool keep_members) {
    std::vector<GroupElement> members;
    for (const auto& w : eng_.cache().get(radius)) {
      WildProfile pw = radius == eng_.trunc().radius
                           ? eng_.profile(w)
                           : eng_.profile_at(w, radius);
      if (pw.status != WildStatus::WildWitnessed) continue;
      GroupElement hw = multiply(h, w);
      WildProfile phw = radius == eng_.trunc().radius
                            ? eng_.profile(hw)
                            : eng_.profile_at(hw, radius);
      if (phw.status != WildStatus::WildWitnessed) continue;
      long delta = *phw.center - *pw.center;
      if (std::abs(delta) > threshold) {
        members.push_back(eng_.coset_rep_right(w));
      }
    }
    sort_unique(members);
    if (keep_members) rec.members = members;
    return static_cast<long>(members.size());
  };

  rec.size = census(eng_.trunc().radius, true);
  rec.size_prev = census(eng_.trunc().radius - 1, false);
  rec.delta = rec.size - rec.size_prev;
  return rec;
}

std::string ProjectionSystem::projection_table_tsv() {
  const ProjTables& t = tables();
  const std::size_t n = cosets_.size();
  std::ostringstream out;
  out << "target\tsource\tpoints\tdiam\n";
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (x == y) continue;
      out << to_string(cosets_[y].rep) << "T\t" << to_string(cosets_[x].rep)
          << "T\t";
      const auto& s = t.sets[y * n + x];
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out << ' ';
        out << to_string(multiply(cosets_[y].rep, t.points[s[k]]));
      }
      out << '\t' << table_diam(t, y, x) << '\n';
    }
  }
  return out.str();
}

}  // namespace axial
