#include "axial/action.hpp"

#include <cstdlib>

namespace axial {

GroupElement EquivariantMap::apply(const GroupElement& x) const {
  switch (kind) {
    case Kind::Identity:
      return x;
    case Kind::RightMult:
      return multiply(x, arg);
    case Kind::LeftMult:
      return multiply(arg, x);
  }
  return x;
}

namespace {

bool infinite_order(const GroupElement& g) {
  const GroupModel& m = *g.model;
  switch (m.family) {
    case Family::FreeGroup:
      return !g.word.empty();
    case Family::FreeAbelian:
      return g.len > 0;
    case Family::CyclicTimesFinite:
      return g.word[0] != 0;
    case Family::DirectProduct: {
      GroupElement sq = multiply(g, g);
      // In the supported factor families, finite order forces order <= n
      // within each factor; squaring repeatedly detects growth.
      GroupElement acc = g;
      for (int i = 0; i < 40; ++i) {
        if (acc.len > 2 * g.len + 2) return true;
        if (is_identity(acc)) return false;
        acc = multiply(acc, g);
      }
      return acc.len > g.len;
    }
  }
  return false;
}

}  // namespace

ActionModel ActionModel::left_regular(ModelPtr group, GroupElement g) {
  ActionModel a;
  a.group = std::move(group);
  a.g = std::move(g);
  if (!infinite_order(a.g)) {
    throw Error("axial candidate must have infinite order (free <g>-action)");
  }
  a.detect_fast_paths();
  return a;
}

void ActionModel::detect_fast_paths() {
  fast_letter_ = 0;
  fast_abelian_coord_ = -1;
  if (group->family == Family::FreeGroup && g.word.size() == 1) {
    fast_letter_ = g.word[0];
  }
  if (group->family == Family::FreeAbelian) {
    int nz = -1;
    bool unit = true;
    for (std::size_t i = 0; i < g.word.size(); ++i) {
      if (g.word[i] != 0) {
        if (nz >= 0 || std::abs(g.word[i]) != 1) {
          unit = false;
          break;
        }
        nz = static_cast<int>(i);
      }
    }
    if (unit && nz >= 0) {
      fast_abelian_coord_ = nz;
      fast_abelian_sign_ = g.word[nz];
    }
  }
}

GroupElement ActionModel::act(const GroupElement& h,
                              const GroupElement& x) const {
  return multiply(h, x);
}

GroupElement ActionModel::carrier_point(const GroupElement& x) const {
  GroupElement y = x;
  for (const auto& f : chain) y = f.apply(y);
  return y;
}

long ActionModel::base_index(const GroupElement& x) const {
  if (fast_letter_ != 0) {
    // idx = exponent of the maximal g-power prefix of the normal form.
    const int32_t abs_l = std::abs(fast_letter_);
    long run = 0;
    for (int32_t v : x.word) {
      if (v == abs_l) {
        ++run;
      } else if (v == -abs_l) {
        --run;
      } else {
        break;
      }
      // A reduced run has constant sign, so no early-exit subtlety here.
    }
    return fast_letter_ > 0 ? run : -run;
  }
  if (fast_abelian_coord_ >= 0) {
    return fast_abelian_sign_ * static_cast<long>(x.word[fast_abelian_coord_]);
  }

  // Generic section: idx(x) = the n for which g^-n x is the shortlex-minimal
  // representative of the coset <g>x. |g^-n x| >= |g^n| - |x| makes the scan
  // finite since g has infinite order.
  GroupElement ginv = invert(g);
  GroupElement best = x;
  long best_n = 0;
  for (int dir = 0; dir < 2; ++dir) {
    GroupElement step = dir == 0 ? ginv : g;
    GroupElement cand = x;
    GroupElement pw = identity(group);
    const GroupElement& pstep = dir == 0 ? g : ginv;
    long n = 0;
    while (true) {
      cand = multiply(step, cand);
      pw = multiply(pw, pstep);
      n += dir == 0 ? 1 : -1;
      if (shortlex_less(cand, best)) {
        best = cand;
        best_n = n;
      }
      if (pw.len - x.len > best.len) break;
    }
  }
  return best_n;
}

long ActionModel::block_index(const GroupElement& x) const {
  return base_index(carrier_point(x));
}

bool ActionModel::in_interval(const GroupElement& x, const Interval& iv) const {
  long i = block_index(multiply(invert(iv.base), x));
  return iv.lo <= i && i <= iv.hi;
}

ActionModel pull_back(const ActionModel& target, const EquivariantMap& f) {
  auto sample = ball(target.group, 2, 10'000);
  for (const auto& h : sample) {
    for (const auto& x : sample) {
      GroupElement lhs = f.apply(multiply(h, x));
      GroupElement rhs = multiply(h, f.apply(x));
      if (!equal(lhs, rhs)) {
        throw EquivarianceViolation("point map failed equivariance at h=" +
                                    to_string(h) + " x=" + to_string(x));
      }
    }
  }
  ActionModel out = target;
  out.chain.insert(out.chain.begin(), f);
  return out;
}

}  // namespace axial
