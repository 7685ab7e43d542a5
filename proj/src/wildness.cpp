#include "axial/wildness.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace axial {

long floor_div2(long a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

const char* to_string(WildStatus s) {
  switch (s) {
    case WildStatus::TameCertified: return "TameCertified";
    case WildStatus::WildWitnessed: return "WildWitnessed";
    case WildStatus::Unknown: return "Unknown";
  }
  return "Unknown";
}

namespace {

bool all_factors_tame(const GroupModel& m) {
  switch (m.family) {
    case Family::FreeAbelian:
    case Family::CyclicTimesFinite:
      return true;
    case Family::FreeGroup:
      return false;
    case Family::DirectProduct:
      for (const auto& f : m.factors) {
        if (!all_factors_tame(*f)) return false;
      }
      return true;
  }
  return false;
}

}  // namespace

WildnessEngine::WildnessEngine(ActionModel action, BallCache& cache,
                               TruncationParams trunc)
    : action_(std::move(action)), cache_(cache), trunc_(trunc) {}

bool WildnessEngine::tame_certified(const GroupElement& h) const {
  const GroupModel& m = *action_.group;
  switch (m.family) {
    case Family::FreeGroup:
      // T = commensurator of <g> = centralizer of g in a free group.
      return equal(multiply(h, action_.g), multiply(action_.g, h));
    case Family::FreeAbelian:
    case Family::CyclicTimesFinite:
      return true;
    case Family::DirectProduct:
      return all_factors_tame(m);
  }
  return false;
}

WildProfile WildnessEngine::profile_at(const GroupElement& w, int radius) const {
  WildProfile p;
  p.element = w;

  struct Bucket {
    long min = std::numeric_limits<long>::max();
    long max = std::numeric_limits<long>::min();
    GroupElement at_max;
  };
  std::map<long, Bucket> buckets;

  const long win = trunc_.effective_window();
  const GroupElement winv = invert(w);
  for (const auto& y : cache_.get(radius)) {
    long j = action_.block_index(multiply(winv, y));
    if (std::abs(j) > win) continue;
    long t = action_.block_index(y);
    Bucket& b = buckets[j];
    b.min = std::min(b.min, t);
    if (t > b.max || b.max == std::numeric_limits<long>::min()) {
      b.max = t;
      b.at_max = y;
    }
  }

  const long tau = trunc_.tau(radius);
  for (const auto& [j, b] : buckets) {
    if (b.max - b.min >= tau) {
      p.interval.push_back(j);
      p.witnesses.push_back({j, b.at_max, b.min, b.max});
    }
  }

  if (tame_certified(w)) {
    p.status = WildStatus::TameCertified;
  } else if (!p.interval.empty()) {
    p.status = WildStatus::WildWitnessed;
  } else {
    p.status = WildStatus::Unknown;
  }
  if (!p.interval.empty()) {
    p.center = floor_div2(p.interval.front() + p.interval.back());
  }
  return p;
}

const WildProfile& WildnessEngine::profile(const GroupElement& w) {
  auto it = profiles_.find(w);
  if (it == profiles_.end()) {
    it = profiles_.emplace(w, profile_at(w, trunc_.radius)).first;
  }
  return it->second;
}

WildStatus WildnessEngine::classify(const GroupElement& h) {
  if (tame_certified(h)) return WildStatus::TameCertified;
  return profile(h).status;
}

std::vector<long> WildnessEngine::wild_interval(const GroupElement& w) {
  const WildProfile& p = profile(w);
  if (p.status != WildStatus::WildWitnessed) {
    throw NotWild("wild_interval: " + to_string(w) + " is not witnessed wild");
  }
  return p.interval;
}

long WildnessEngine::center(const GroupElement& w) {
  const WildProfile& p = profile(w);
  if (!p.center) {
    throw NotWild("center: " + to_string(w) + " has empty wilderness interval");
  }
  return *p.center;
}

bool WildnessEngine::fast_block0_ok(int radius) const {
  if (!action_.fast_free_basis()) return false;
  long chain_len = 0;
  for (const auto& f : action_.chain) {
    if (f.kind == EquivariantMap::Kind::LeftMult) return false;
    if (f.kind == EquivariantMap::Kind::RightMult) chain_len += f.arg.len;
  }
  // The analytic criterion matches the sweep only once the ball outgrows the
  // pull-back shift.
  return 2 * (radius - chain_len) >= trunc_.tau(radius);
}

bool WildnessEngine::block0_unbounded(const GroupElement& v, int radius) const {
  if (fast_block0_ok(radius)) {
    // vD_0 collects unbounded indices exactly when the reduced word of v ends
    // with a non-<g> letter: then v * v^-1 g^n lands in vD_0 for every n.
    if (v.word.empty()) return false;
    return std::abs(v.word.back()) != std::abs(action_.fast_letter());
  }

  long mn = std::numeric_limits<long>::max();
  long mx = std::numeric_limits<long>::min();
  const GroupElement vinv = invert(v);
  for (const auto& y : cache_.get(radius)) {
    if (action_.block_index(multiply(vinv, y)) != 0) continue;
    long t = action_.block_index(y);
    mn = std::min(mn, t);
    mx = std::max(mx, t);
  }
  return mn <= mx && mx - mn >= trunc_.tau(radius);
}

namespace {

// Signed trailing <g>-exponent of the reduced word (free fast path).
long trail_exp(const GroupElement& x, int32_t letter) {
  long t = 0;
  const int32_t base = std::abs(letter);
  for (auto it = x.word.rbegin(); it != x.word.rend(); ++it) {
    if (*it == base) {
      ++t;
    } else if (*it == -base) {
      --t;
    } else {
      break;
    }
  }
  return letter > 0 ? t : -t;
}

bool is_g_power(const GroupElement& x, int32_t letter) {
  const int32_t base = std::abs(letter);
  for (int32_t l : x.word) {
    if (std::abs(l) != base) return false;
  }
  return true;
}

}  // namespace

bool WildnessEngine::analytic_ok() const {
  if (!action_.fast_free_basis()) return false;
  // Right-multiplication pull-backs preserve every unboundedness statement:
  // (S c^-1) c = S, so the intervals and shifts match the base action.
  for (const auto& f : action_.chain) {
    if (f.kind == EquivariantMap::Kind::LeftMult) return false;
  }
  return true;
}

std::vector<long> WildnessEngine::witnessed_interval(const GroupElement& v,
                                                     int radius) {
  if (analytic_ok()) {
    // vD_i is unbounded exactly for i = -trail(v) when v is not a <g>-power:
    // v * (v g^i)^-1 g^n sits in v g^i D and hits index n - trail(v) - i.
    if (is_g_power(v, action_.fast_letter())) return {};
    return {-trail_exp(v, action_.fast_letter())};
  }
  if (radius == trunc_.radius) return profile(v).interval;
  auto& memo = interval_memo_[radius];
  auto it = memo.find(v);
  if (it == memo.end()) {
    it = memo.emplace(v, profile_at(v, radius).interval).first;
  }
  return it->second;
}

const WildnessEngine::CoverStats& WildnessEngine::cover_stats(
    const GroupElement& w, int radius) {
  auto& memo = cover_memo_[radius];
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;

  std::map<long, std::pair<long, long>> buckets;  // j -> (t_min, t_max)
  const GroupElement winv = invert(w);
  for (const auto& y : cache_.get(radius)) {
    long j = action_.block_index(multiply(winv, y));
    long t = action_.block_index(y);
    auto [bit, fresh] = buckets.emplace(j, std::make_pair(t, t));
    if (!fresh) {
      bit->second.first = std::min(bit->second.first, t);
      bit->second.second = std::max(bit->second.second, t);
    }
  }

  CoverStats cs;
  for (const auto& [j, mm] : buckets) cs.j.push_back(j);
  const std::size_t n = cs.j.size();
  cs.pre_min.assign(n + 1, std::numeric_limits<long>::max());
  cs.pre_max.assign(n + 1, std::numeric_limits<long>::min());
  cs.suf_min.assign(n + 1, std::numeric_limits<long>::max());
  cs.suf_max.assign(n + 1, std::numeric_limits<long>::min());
  std::size_t i = 0;
  for (const auto& [j, mm] : buckets) {
    cs.pre_min[i + 1] = std::min(cs.pre_min[i], mm.first);
    cs.pre_max[i + 1] = std::max(cs.pre_max[i], mm.second);
    ++i;
  }
  i = n;
  for (auto bit = buckets.rbegin(); bit != buckets.rend(); ++bit) {
    --i;
    cs.suf_min[i] = std::min(cs.suf_min[i + 1], bit->second.first);
    cs.suf_max[i] = std::max(cs.suf_max[i + 1], bit->second.second);
  }
  return memo.emplace(w, std::move(cs)).first->second;
}

long WildnessEngine::shift_cover(const GroupElement& w, long j, int radius) {
  const long win = trunc_.effective_window();
  if (analytic_ok() && !is_g_power(w, action_.fast_letter())) {
    // Everything outside wD_[j-m, j+m] lies in blocks t = -trail(w) - i for
    // |i - j| > m together with w's own <g>-axis, so the uncovered t-range
    // collapses once m reaches |trail(w) + j|. (For w a <g>-power the
    // translate is a single block interval; fall through to the sweep.)
    long m = std::labs(trail_exp(w, action_.fast_letter()) + j);
    return m <= win ? m : -1;
  }

  const CoverStats& cs = cover_stats(w, radius);
  const std::size_t n = cs.j.size();
  for (long m = 0; m <= win; ++m) {
    std::size_t lo =
        std::lower_bound(cs.j.begin(), cs.j.end(), j - m) - cs.j.begin();
    std::size_t hi =
        std::upper_bound(cs.j.begin(), cs.j.end(), j + m) - cs.j.begin();
    long mn = std::min(cs.pre_min[lo], cs.suf_min[hi]);
    long mx = std::max(cs.pre_max[lo], cs.suf_max[hi]);
    (void)n;
    if (mn > mx || mx - mn <= 2 * m) return m;
  }
  return -1;
}

MEstimate WildnessEngine::scan_impl(const GroupElement& h, int radius,
                                    bool parallel, const GroupElement* right) {
  const auto& B = cache_.get(radius);
  const long win = trunc_.effective_window();
  const bool analytic = analytic_ok();

  // val[wi]: -2 irrelevant, -1 window exhausted, else the required m for the
  // coset B[wi]<g>.
  std::vector<long> val(B.size(), -2);

  if (analytic) {
    const int32_t letter = action_.fast_letter();
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
    for (long wi = 0; wi < static_cast<long>(B.size()); ++wi) {
      const GroupElement& w = B[wi];
      if (tame_certified(w)) continue;
      if (right != nullptr && tame_certified(multiply(*right, w))) continue;
      GroupElement v = multiply(h, w);
      if (is_g_power(v, letter)) continue;
      long m = std::labs(trail_exp(w, letter) - trail_exp(v, letter));
      val[wi] = m <= win ? m : -1;
    }
  } else {
    for (std::size_t wi = 0; wi < B.size(); ++wi) {
      const GroupElement& w = B[wi];
      if (tame_certified(w)) continue;
      if (right != nullptr && tame_certified(multiply(*right, w))) continue;
      GroupElement v = multiply(h, w);
      long m = -2;
      for (long j : witnessed_interval(v, radius)) {
        long c = shift_cover(w, j, radius);
        if (c < 0) {
          m = -1;
          break;
        }
        m = std::max(m, c);
      }
      val[wi] = m;
    }
  }

  MEstimate res;
  res.vacuous = true;
  for (std::size_t wi = 0; wi < B.size(); ++wi) {
    if (val[wi] == -2) continue;
    res.vacuous = false;
    if (val[wi] == -1) {
      if (!res.window_exhausted) res.exhausted_w = B[wi];
      res.window_exhausted = true;
      continue;
    }
    res.m = std::max(res.m, val[wi]);
  }
  if (!res.vacuous) {
    for (std::size_t wi = 0; wi < B.size(); ++wi) {
      if (val[wi] == res.m) {
        res.worst_w = B[wi];
        break;
      }
    }
  }
  return res;
}

MEstimate WildnessEngine::m_scan(const GroupElement& h, int radius,
                                 bool parallel) {
  return scan_impl(h, radius, parallel, nullptr);
}

MEstimate WildnessEngine::m_estimate_through(const GroupElement& total,
                                             const GroupElement& right,
                                             int radius) {
  return scan_impl(total, radius, false, &right);
}

MEstimate WildnessEngine::m_estimate(const GroupElement& h, int radius) {
  auto& memo = m_memo_[radius];
  auto hit = memo.find(h);
  if (hit != memo.end()) return hit->second;
  MEstimate res = scan_impl(h, radius, true, nullptr);
  memo.emplace(h, res);
  return res;
}

ConstantEstimates WildnessEngine::constants() {
  ConstantEstimates c;
  const int R = trunc_.radius;
  GroupElement e = identity(action_.group);
  for (int r = std::max(2, R - 2); r <= R; ++r) {
    MEstimate est = m_estimate(e, r);
    c.stability[r] = est.m;
    c.window_exhausted |= est.window_exhausted;
  }
  c.M_hat = c.stability.at(R);
  c.stable = c.stability.count(R - 1) && c.stability.at(R - 1) == c.M_hat;

  long max_gen = 0;
  for (int i = 0; i < action_.group->generator_count(); ++i) {
    GroupElement s = generator(action_.group, i);
    MEstimate est = m_estimate(s, R);
    c.m_generators[action_.group->labels[i]] = est.m;
    c.window_exhausted |= est.window_exhausted;
    max_gen = std::max(max_gen, est.m);
  }
  c.L_hat = max_gen + 2 * c.M_hat;
  c.N_hat = 20 * c.M_hat + c.L_hat;
  return c;
}

WildnessEngine::TameSubgroup WildnessEngine::tame_subgroup(int radius) {
  TameSubgroup out;
  const auto& B = cache_.get(radius);

  std::vector<GroupElement> domain;  // D intersected with ball(R)
  for (const auto& x : B) {
    if (action_.block_index(x) == 0) domain.push_back(x);
  }

  for (const auto& t : B) {
    if (!tame_certified(t)) continue;
    out.T_hat.push_back(t);
    for (const auto& d : domain) {
      if (action_.block_index(multiply(t, d)) == 0) {
        out.F_hat.push_back(t);
        break;
      }
    }
  }
  out.covers_ball = out.T_hat.size() == B.size();

  std::vector<GroupElement> reps;
  for (const auto& t : out.T_hat) reps.push_back(coset_rep_left(t));
  std::sort(reps.begin(), reps.end(), shortlex_less);
  reps.erase(std::unique(reps.begin(), reps.end(),
                         [](const GroupElement& a, const GroupElement& b) {
                           return equal(a, b);
                         }),
             reps.end());
  out.coset_reps = std::move(reps);
  return out;
}

namespace {

GroupElement coset_scan(const GroupElement& g, const GroupElement& w,
                        bool left) {
  GroupElement ginv = invert(g);
  GroupElement best = w;
  for (int dir = 0; dir < 2; ++dir) {
    const GroupElement& step = dir == 0 ? g : ginv;
    GroupElement cand = w;
    GroupElement pw = identity(w.model);
    while (true) {
      cand = left ? multiply(step, cand) : multiply(cand, step);
      pw = multiply(pw, step);
      if (shortlex_less(cand, best)) best = cand;
      if (pw.len - w.len > best.len) break;
    }
  }
  return best;
}

}  // namespace

GroupElement WildnessEngine::coset_rep_left(const GroupElement& w) const {
  return coset_scan(action_.g, w, true);
}

GroupElement WildnessEngine::coset_rep_right(const GroupElement& w) const {
  return coset_scan(action_.g, w, false);
}

}  // namespace axial
