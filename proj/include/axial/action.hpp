#pragma once

#include "axial/group.hpp"

namespace axial {

// Point map between carriers. Only Identity and RightMult are G-equivariant
// for the left regular action; LeftMult exists to exercise the equivariance
// check failure path.
struct EquivariantMap {
  enum class Kind { Identity, RightMult, LeftMult };
  Kind kind = Kind::Identity;
  GroupElement arg;

  GroupElement apply(const GroupElement& x) const;
};

// wD_{[lo,hi]}: translate of a block interval by base.
struct Interval {
  GroupElement base;
  long lo = 0;
  long hi = 0;
};

// A G-set with a <g>-block structure given by the block-index function.
// The carrier is G itself (left regular), possibly pulled back along a chain
// of point maps: idx(x) = idx_base(f_1(f_2(...(x)))).
class ActionModel {
 public:
  ModelPtr group;
  GroupElement g;
  std::vector<EquivariantMap> chain;  // applied front to back

  static ActionModel left_regular(ModelPtr group, GroupElement g);

  GroupElement act(const GroupElement& h, const GroupElement& x) const;
  long block_index(const GroupElement& x) const;
  bool in_interval(const GroupElement& x, const Interval& iv) const;

  GroupElement carrier_point(const GroupElement& x) const;  // apply chain

  // FreeGroup with g a single basis letter admits O(1) block indices.
  bool fast_free_basis() const { return fast_letter_ != 0; }
  int32_t fast_letter() const { return fast_letter_; }

 private:
  int32_t fast_letter_ = 0;       // signed letter value of g, 0 if generic
  int fast_abelian_coord_ = -1;   // coordinate if g = +-unit vector
  int fast_abelian_sign_ = 1;

  long base_index(const GroupElement& x) const;
  void detect_fast_paths();
};

// Lemma-style pull-back: spot-checks equivariance of f on small samples and
// returns the action whose fundamental domain is f^-1(D).
ActionModel pull_back(const ActionModel& target, const EquivariantMap& f);

}  // namespace axial
