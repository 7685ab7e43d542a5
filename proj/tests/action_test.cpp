#include <doctest.h>

#include "axial/action.hpp"

using namespace axial;

TEST_CASE("block index: free group, g a basis letter") {
  ModelPtr f2 = GroupModel::free_group(2);
  ActionModel act = ActionModel::left_regular(f2, parse_word("a", f2));

  CHECK(act.block_index(parse_word("a^3 b A", f2)) == 3);
  CHECK(act.block_index(parse_word("b a^2", f2)) == 0);
  CHECK(act.block_index(parse_word("A^2 b", f2)) == -2);
  CHECK(act.block_index(identity(f2)) == 0);

  // idx is <g>-equivariant on blocks: idx(g^n x) = idx(x) + n on D.
  for (const auto& d : {parse_word("b", f2), parse_word("B a b", f2)}) {
    CHECK(act.block_index(d) == 0);
    CHECK(act.block_index(multiply(power(act.g, 5), d)) == 5);
  }

  Interval iv{parse_word("b", f2), -1, 2};
  CHECK(act.in_interval(parse_word("b a^2", f2), iv));
  CHECK_FALSE(act.in_interval(parse_word("b a^3", f2), iv));
}

TEST_CASE("block index: generic section agrees with the fast path") {
  ModelPtr f2 = GroupModel::free_group(2);
  ActionModel fast = ActionModel::left_regular(f2, parse_word("a", f2));
  // g = b a b^-1: conjugate basis letter, generic code path.
  ActionModel gen = ActionModel::left_regular(f2, parse_word("b a B", f2));
  CHECK_FALSE(gen.fast_free_basis());
  for (const auto& x : ball(f2, 4)) {
    GroupElement y = multiply(parse_word("b", f2), multiply(x, parse_word("B", f2)));
    CHECK(gen.block_index(y) == fast.block_index(x));
  }
}

TEST_CASE("block index: abelian unit vector") {
  ModelPtr z2 = GroupModel::free_abelian(2);
  ActionModel act = ActionModel::left_regular(z2, parse_word("a", z2));
  CHECK(act.block_index(parse_word("a^4 b^2", z2)) == 4);
  CHECK(act.block_index(parse_word("A b", z2)) == -1);
}

TEST_CASE("finite-order candidates are rejected") {
  ModelPtr zn = GroupModel::cyclic_times_finite(4);
  CHECK_THROWS_AS(ActionModel::left_regular(zn, generator(zn, 1)), Error);
}

TEST_CASE("pull-back along right multiplication") {
  ModelPtr f2 = GroupModel::free_group(2);
  ActionModel base = ActionModel::left_regular(f2, parse_word("a", f2));
  EquivariantMap f{EquivariantMap::Kind::RightMult, parse_word("b", f2)};
  ActionModel pulled = pull_back(base, f);

  for (const auto& x : ball(f2, 3)) {
    CHECK(pulled.block_index(x) ==
          base.block_index(multiply(x, parse_word("b", f2))));
  }
  // G-equivariance survives: idx(h x) relative shifts match on g-powers.
  CHECK(pulled.block_index(multiply(power(base.g, 3), parse_word("B", f2))) ==
        3 + pulled.block_index(parse_word("B", f2)));
}

TEST_CASE("pull-back rejects non-equivariant maps") {
  ModelPtr f2 = GroupModel::free_group(2);
  ActionModel base = ActionModel::left_regular(f2, parse_word("a", f2));
  EquivariantMap f{EquivariantMap::Kind::LeftMult, parse_word("b", f2)};
  CHECK_THROWS_AS(pull_back(base, f), EquivarianceViolation);
}
