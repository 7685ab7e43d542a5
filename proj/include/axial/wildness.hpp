#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "axial/action.hpp"

namespace axial {

// Finite approximation layer: enumeration radius, witness threshold, index
// window.
struct TruncationParams {
  int radius = 6;
  double tau_slope = 0.5;  // tau(R) = ceil(R * slope)
  int window = 0;          // 0 = default 2R

  int effective_window() const { return window > 0 ? window : 2 * radius; }
  long tau(int r) const {
    return std::max(1L, static_cast<long>(std::ceil(r * tau_slope)));
  }
};

enum class WildStatus { TameCertified, WildWitnessed, Unknown };

const char* to_string(WildStatus s);

struct BlockWitness {
  long index = 0;       // i with wD_i witnessed unbounded
  GroupElement point;   // element of wD_i attaining idx_max
  long idx_min = 0;
  long idx_max = 0;
};

struct WildProfile {
  GroupElement element;
  WildStatus status = WildStatus::Unknown;
  std::vector<long> interval;  // I_R(w), sorted
  std::optional<long> center;  // i_R(w) = floor((min+max)/2)
  std::vector<BlockWitness> witnesses;
};

struct MEstimate {
  long m = 0;
  bool window_exhausted = false;
  bool vacuous = false;
  std::optional<GroupElement> worst_w;      // w forcing the maximum
  std::optional<GroupElement> exhausted_w;  // w with no m <= window
};

struct ConstantEstimates {
  long M_hat = 0;
  long L_hat = 0;
  long N_hat = 0;
  std::map<std::string, long> m_generators;
  std::map<int, long> stability;  // radius -> M_hat at that radius
  bool stable = false;            // M_hat equal at radius and radius-1
  bool window_exhausted = false;
};

// Classification, wilderness intervals and the (2') coverage constants, all
// at finite truncation. Caches are not thread safe; fill them from one
// thread, then read-only sharing is fine.
class WildnessEngine {
 public:
  WildnessEngine(ActionModel action, BallCache& cache, TruncationParams trunc);

  const ActionModel& action() const { return action_; }
  BallCache& cache() { return cache_; }
  const TruncationParams& trunc() const { return trunc_; }

  // Exact backend for membership in T (never guesses: families without a
  // backend certify nothing).
  bool tame_certified(const GroupElement& h) const;

  // Bucket sweep over ball(R): collects attained block indices of wD_i.
  WildProfile profile_at(const GroupElement& w, int radius) const;
  const WildProfile& profile(const GroupElement& w);  // memoized, at trunc radius

  WildStatus classify(const GroupElement& h);
  std::vector<long> wild_interval(const GroupElement& w);  // throws NotWild
  long center(const GroupElement& w);                      // throws NotWild

  // Witnessed unboundedness of vD_0 at the given radius.
  bool block0_unbounded(const GroupElement& v, int radius) const;

  // Wilderness interval of v: exact for the analytic fast path, witnessed
  // bucket sweep otherwise. Empty when v is not (known) wild.
  std::vector<long> witnessed_interval(const GroupElement& v, int radius);

  // Least m <= window such that ball(R) is covered by wD_[j-m,j+m] together
  // with one interval g^n D_[-m,m]; -1 if no m <= window works.
  long shift_cover(const GroupElement& w, long j, int radius);

  // m(h) per (2'), quantified over the <g>-saturation of the wild part of
  // ball(R): for every wild w and every j in I(hw), the translate w g^j must
  // satisfy the two-interval cover. The g^j shifts matter: relevance and
  // coverage both factor through the coset w<g>.
  MEstimate m_estimate(const GroupElement& h, int radius);
  MEstimate m_estimate(const GroupElement& h) { return m_estimate(h, trunc_.radius); }

  // Unmemoized scan behind m_estimate; the parallel flag is honored only on
  // the pure analytic fast path. Kept public for tests and benches.
  MEstimate m_scan(const GroupElement& h, int radius, bool parallel);

  // Same scan, restricted to w with `right`*w wild: the domain on which the
  // subadditivity argument actually applies.
  MEstimate m_estimate_through(const GroupElement& total,
                               const GroupElement& right, int radius);

  ConstantEstimates constants();

  struct TameSubgroup {
    std::vector<GroupElement> T_hat;
    std::vector<GroupElement> F_hat;
    std::vector<GroupElement> coset_reps;  // of <g> in T_hat
    bool covers_ball = false;              // T_hat == ball(R): G = T flag
  };
  TameSubgroup tame_subgroup(int radius);
  TameSubgroup tame_subgroup() { return tame_subgroup(trunc_.radius); }

  // Shortlex-minimal representatives of <g>w and w<g>.
  GroupElement coset_rep_left(const GroupElement& w) const;
  GroupElement coset_rep_right(const GroupElement& w) const;

 private:
  ActionModel action_;
  BallCache& cache_;
  TruncationParams trunc_;

  std::unordered_map<GroupElement, WildProfile, ElementHash, ElementEq> profiles_;
  std::map<int, std::unordered_map<GroupElement, MEstimate, ElementHash, ElementEq>>
      m_memo_;
  std::map<int,
           std::unordered_map<GroupElement, std::vector<long>, ElementHash, ElementEq>>
      interval_memo_;

  // Per-w block-index buckets of ball(R): sorted j plus prefix/suffix t ranges,
  // the data behind the generic shift_cover.
  struct CoverStats {
    std::vector<long> j;
    std::vector<long> pre_min, pre_max;  // over entries [0, i)
    std::vector<long> suf_min, suf_max;  // over entries [i, n)
  };
  std::map<int, std::unordered_map<GroupElement, CoverStats, ElementHash, ElementEq>>
      cover_memo_;

  bool fast_block0_ok(int radius) const;
  // Chain-free analytic regime: idx data is exact, so the m scan may run the
  // pure per-w formulas (and in parallel).
  bool analytic_ok() const;
  const CoverStats& cover_stats(const GroupElement& w, int radius);
  MEstimate scan_impl(const GroupElement& h, int radius, bool parallel,
                      const GroupElement* right);
};

long floor_div2(long a);

}  // namespace axial
