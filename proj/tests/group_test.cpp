#include <doctest.h>

#include "axial/group.hpp"

using namespace axial;

TEST_CASE("free group normal forms") {
  ModelPtr f2 = GroupModel::free_group(2);
  GroupElement x = parse_word("a b A", f2);
  CHECK(to_string(x) == "a b A");
  CHECK(x.len == 3);

  // Reduction: a b B a -> a^2
  CHECK(equal(parse_word("a b B a", f2), parse_word("a^2", f2)));
  CHECK(equal(parse_word("a A", f2), identity(f2)));
  CHECK(is_identity(multiply(x, invert(x))));

  // Exponent syntax, uppercase inverses.
  CHECK(equal(parse_word("a^3 B", f2), parse_word("a a a B", f2)));
  CHECK(equal(invert(parse_word("a b", f2)), parse_word("B A", f2)));

  CHECK(equal(power(parse_word("a", f2), 4), parse_word("a^4", f2)));
  CHECK(equal(power(parse_word("a b", f2), -1), parse_word("B A", f2)));

  CHECK_THROWS_AS(parse_word("c", f2), UnknownGenerator);
}

TEST_CASE("free group balls: sizes, order, uniqueness") {
  ModelPtr f2 = GroupModel::free_group(2);
  // |ball(r)| = 2*3^r - 1
  CHECK(ball(f2, 0).size() == 1);
  CHECK(ball(f2, 1).size() == 5);
  CHECK(ball(f2, 2).size() == 17);
  CHECK(ball(f2, 5).size() == 485);
  CHECK(ball(f2, 6).size() == 1457);

  auto b2 = ball(f2, 2);
  for (std::size_t i = 1; i < b2.size(); ++i) {
    CHECK(shortlex_less(b2[i - 1], b2[i]));  // strict: sorted and distinct
  }
  CHECK(is_identity(b2.front()));
  CHECK(to_string(b2[1]) == "a");
}

TEST_CASE("abelian and product families") {
  ModelPtr z2 = GroupModel::free_abelian(2);
  CHECK(ball(z2, 5).size() == 61);  // |x|+|y| <= 5
  GroupElement v = parse_word("a^3 b A", z2);
  CHECK(equal(v, parse_word("a^2 b", z2)));
  CHECK(is_identity(multiply(v, invert(v))));

  ModelPtr zn = GroupModel::cyclic_times_finite(3);
  GroupElement t = generator(zn, 1);  // the finite factor
  CHECK(is_identity(power(t, 3)));

  ModelPtr prod = GroupModel::direct_product(
      {GroupModel::free_abelian(1), GroupModel::cyclic_times_finite(2)});
  CHECK(prod->generator_count() == 3);
  GroupElement p = multiply(generator(prod, 0), generator(prod, 2));
  CHECK(equal(multiply(p, p), multiply(power(generator(prod, 0), 2),
                                       power(generator(prod, 2), 2))));
}

TEST_CASE("ball capacity guard") {
  ModelPtr f2 = GroupModel::free_group(2);
  CHECK_THROWS_AS(ball(f2, 6, 100), CapacityExceeded);
}

TEST_CASE("hashing agrees with equality") {
  ModelPtr f2 = GroupModel::free_group(2);
  GroupElement x = parse_word("a b B a", f2);
  GroupElement y = parse_word("a^2", f2);
  CHECK(equal(x, y));
  CHECK(hash_value(x) == hash_value(y));
}
